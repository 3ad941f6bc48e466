#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "group_ring.hpp"
#include "rational.hpp"

namespace crosscap {

// Monomial in noncommuting variables X_1..X_rank: the sequence of indices.
using Monomial = std::vector<int>;

struct MonomialOrder {
	bool operator()(const Monomial& a, const Monomial& b) const {
		if (a.size() != b.size())
			return a.size() < b.size();
		return a < b;
	}
};

// Noncommutative polynomial with exact rational coefficients, truncated at
// total degree `order`: the working model of the completed group ring.
class TruncatedSeries {
public:
	TruncatedSeries(int rank, int order) : rank_(rank), order_(order) {
		if (rank < 0 || order < 0)
			throw std::invalid_argument("bad series shape");
	}

	static TruncatedSeries constant(int rank, int order, const Rational& c) {
		TruncatedSeries s(rank, order);
		s.add_term(Monomial(), c);
		return s;
	}

	int rank() const { return rank_; }
	int order() const { return order_; }
	const std::map<Monomial, Rational, MonomialOrder>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	// Terms beyond the truncation order are dropped silently: the series is an
	// element of the quotient by total degree > order.
	void add_term(const Monomial& m, const Rational& c) {
		if (static_cast<int>(m.size()) > order_)
			return;
		for (int i : m)
			if (i < 1 || i > rank_)
				throw std::invalid_argument("monomial index out of range");
		Rational cc = rational_canonical(c);
		if (cc == 0)
			return;
		auto it = terms_.find(m);
		if (it == terms_.end()) {
			terms_.emplace(m, cc);
			return;
		}
		it->second += cc;
		if (it->second == 0)
			terms_.erase(it);
	}

	Rational coefficient(const Monomial& m) const {
		auto it = terms_.find(m);
		return it == terms_.end() ? Rational(0) : it->second;
	}

	Rational constant_term() const { return coefficient(Monomial()); }

	// Least total degree carrying a nonzero coefficient; order+1 for the zero
	// series.
	int min_degree() const {
		if (terms_.empty())
			return order_ + 1;
		return static_cast<int>(terms_.begin()->first.size());
	}

	TruncatedSeries& operator+=(const TruncatedSeries& rhs) {
		check_shape(rhs);
		for (const auto& [m, c] : rhs.terms_)
			add_term(m, c);
		return *this;
	}

	TruncatedSeries& operator-=(const TruncatedSeries& rhs) {
		check_shape(rhs);
		for (const auto& [m, c] : rhs.terms_)
			add_term(m, -c);
		return *this;
	}

	TruncatedSeries operator+(const TruncatedSeries& rhs) const {
		TruncatedSeries out = *this;
		out += rhs;
		return out;
	}

	TruncatedSeries operator-(const TruncatedSeries& rhs) const {
		TruncatedSeries out = *this;
		out -= rhs;
		return out;
	}

	TruncatedSeries scaled(const Rational& c) const {
		TruncatedSeries out(rank_, order_);
		Rational cc = rational_canonical(c);
		if (cc == 0)
			return out;
		for (const auto& [m, coeff] : terms_)
			out.terms_.emplace(m, coeff * cc);
		return out;
	}

	TruncatedSeries operator*(const TruncatedSeries& rhs) const {
		check_shape(rhs);
		TruncatedSeries out(rank_, order_);
		for (const auto& [ma, ca] : terms_) {
			if (static_cast<int>(ma.size()) > order_)
				continue;
			for (const auto& [mb, cb] : rhs.terms_) {
				if (static_cast<int>(ma.size() + mb.size()) > order_)
					break;  // rhs terms are degree-sorted
				Monomial m = ma;
				m.insert(m.end(), mb.begin(), mb.end());
				out.add_term(m, ca * cb);
			}
		}
		return out;
	}

	TruncatedSeries pow(int k) const {
		if (k < 0)
			throw std::invalid_argument("negative series power");
		TruncatedSeries out = constant(rank_, order_, 1);
		for (int i = 0; i < k; ++i)
			out = out * *this;
		return out;
	}

	bool operator==(const TruncatedSeries& rhs) const {
		return rank_ == rhs.rank_ && order_ == rhs.order_ && terms_ == rhs.terms_;
	}
	bool operator!=(const TruncatedSeries& rhs) const { return !(*this == rhs); }

	std::string to_text() const {
		if (terms_.empty())
			return "0";
		std::string out;
		for (const auto& [m, c] : terms_) {
			if (!out.empty())
				out += " + ";
			out += "(" + rational_to_string(c) + ")";
			for (int i : m)
				out += " X" + std::to_string(i);
		}
		return out;
	}

private:
	void check_shape(const TruncatedSeries& rhs) const {
		if (rank_ != rhs.rank_ || order_ != rhs.order_)
			throw std::invalid_argument("series shape mismatch");
	}

	int rank_;
	int order_;
	std::map<Monomial, Rational, MonomialOrder> terms_;
};

// Ring homomorphism into truncated series: generator x_i maps to 1 + X_i, its
// inverse to the truncated geometric series.
inline TruncatedSeries magnus_embed(const GroupRingElement& a, int order) {
	TruncatedSeries out(a.rank(), order);
	for (const auto& [w, c] : a.terms()) {
		TruncatedSeries prod = TruncatedSeries::constant(a.rank(), order, 1);
		for (Letter l : w.letters()) {
			TruncatedSeries factor(a.rank(), order);
			if (l > 0) {
				factor.add_term(Monomial(), 1);
				factor.add_term(Monomial{l}, 1);
			} else {
				for (int k = 0; k <= order; ++k)
					factor.add_term(Monomial(static_cast<std::size_t>(k), -l),
					                k % 2 == 0 ? 1 : -1);
			}
			prod = prod * factor;
		}
		out += prod.scaled(c);
	}
	return out;
}

// Augmentation-ideal filtration degree, decided in the order-N truncation:
// returns the least total degree of the Magnus image, or order+1 when the
// truncated image vanishes (reported as "> order" by callers).
inline int ideal_degree(const GroupRingElement& a, int order) {
	return magnus_embed(a, order).min_degree();
}

// log of a series with constant term 1.
inline TruncatedSeries log_series(const TruncatedSeries& s) {
	if (s.constant_term() != 1)
		throw std::invalid_argument("log_series: constant term must be 1");
	TruncatedSeries t = s - TruncatedSeries::constant(s.rank(), s.order(), 1);
	TruncatedSeries out(s.rank(), s.order());
	TruncatedSeries power = TruncatedSeries::constant(s.rank(), s.order(), 1);
	for (int k = 1; k <= s.order(); ++k) {
		power = power * t;
		if (power.is_zero())
			break;
		out += power.scaled(Rational(k % 2 == 1 ? 1 : -1, k));
	}
	return out;
}

// exp of a series with constant term 0.
inline TruncatedSeries exp_series(const TruncatedSeries& s) {
	if (s.constant_term() != 0)
		throw std::invalid_argument("exp_series: constant term must be 0");
	TruncatedSeries out = TruncatedSeries::constant(s.rank(), s.order(), 1);
	TruncatedSeries term = TruncatedSeries::constant(s.rank(), s.order(), 1);
	for (int k = 1; k <= s.order(); ++k) {
		term = term * s;
		term = term.scaled(Rational(1, k));
		if (term.is_zero())
			break;
		out += term;
	}
	return out;
}

}  // namespace crosscap
