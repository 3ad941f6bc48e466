#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "series.hpp"

namespace crosscap {

// A derivation of the truncated series algebra, stored by its values on the
// generators. Images must vanish in degree 0 so the derivation preserves the
// filtration.
class DerivationRep {
public:
	DerivationRep(int rank, int order)
	    : rank_(rank), order_(order), images_(static_cast<std::size_t>(rank),
	                                          TruncatedSeries(rank, order)) {
		if (rank < 1 || order < 0)
			throw std::invalid_argument("bad derivation shape");
	}

	int rank() const { return rank_; }
	int order() const { return order_; }

	void set_image(int gen, const TruncatedSeries& s) {
		if (gen < 1 || gen > rank_)
			throw std::invalid_argument("generator out of range");
		if (s.rank() != rank_ || s.order() != order_)
			throw std::invalid_argument("image shape mismatch");
		if (s.constant_term() != 0)
			throw std::invalid_argument("derivation image has nonzero constant term");
		images_[static_cast<std::size_t>(gen - 1)] = s;
	}

	const TruncatedSeries& image(int gen) const {
		if (gen < 1 || gen > rank_)
			throw std::invalid_argument("generator out of range");
		return images_[static_cast<std::size_t>(gen - 1)];
	}

	bool is_zero() const {
		for (const auto& s : images_)
			if (!s.is_zero())
				return false;
		return true;
	}

private:
	int rank_;
	int order_;
	std::vector<TruncatedSeries> images_;
};

// Leibniz extension of the generator images to the whole truncated algebra.
inline TruncatedSeries apply_derivation(const DerivationRep& d, const TruncatedSeries& s) {
	if (d.rank() != s.rank() || d.order() != s.order())
		throw std::invalid_argument("derivation/series shape mismatch");
	TruncatedSeries out(s.rank(), s.order());
	for (const auto& [m, c] : s.terms()) {
		for (std::size_t p = 0; p < m.size(); ++p) {
			const TruncatedSeries& img = d.image(m[p]);
			for (const auto& [mi, ci] : img.terms()) {
				if (m.size() - 1 + mi.size() > static_cast<std::size_t>(s.order()))
					break;  // image terms are degree-sorted
				Monomial repl(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(p));
				repl.insert(repl.end(), mi.begin(), mi.end());
				repl.insert(repl.end(), m.begin() + static_cast<std::ptrdiff_t>(p) + 1,
				            m.end());
				out.add_term(repl, c * ci);
			}
		}
	}
	return out;
}

// sum_{k>=0} D^k(s)/k!, iterated until the term vanishes in truncation.
// Throws when k_max is reached with a nonzero term: the derivation then
// violates the nilpotence contract (its degree-preserving part fails to be
// unipotent-log) and the series does not stabilize.
inline TruncatedSeries exp_derivation(const DerivationRep& d, const TruncatedSeries& s,
                                      int k_max) {
	if (k_max < 0)
		throw std::invalid_argument("negative k_max");
	TruncatedSeries out = s;
	TruncatedSeries term = s;
	for (int k = 1; !term.is_zero(); ++k) {
		if (k > k_max)
			throw std::runtime_error(
			    "exp_derivation: nonzero term after k_max=" + std::to_string(k_max) +
			    " iterations (min degree " + std::to_string(term.min_degree()) + ")");
		term = apply_derivation(d, term).scaled(Rational(1, k));
		out += term;
	}
	return out;
}

}  // namespace crosscap
