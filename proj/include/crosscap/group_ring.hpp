#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "rational.hpp"
#include "word.hpp"

namespace crosscap {

// Element of the rational group ring of a free group: finite sum of words with
// exact rational coefficients. No zero coefficients are stored.
class GroupRingElement {
public:
	explicit GroupRingElement(int rank) : rank_(rank) {
		if (rank < 0)
			throw std::invalid_argument("negative rank");
	}

	static GroupRingElement unit(int rank) {
		GroupRingElement e(rank);
		e.add_term(Word(), 1);
		return e;
	}

	static GroupRingElement of(int rank, const Word& w, const Rational& c = 1) {
		GroupRingElement e(rank);
		e.add_term(w, c);
		return e;
	}

	int rank() const { return rank_; }
	const std::map<Word, Rational>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add_term(const Word& w, const Rational& c) {
		if (w.max_index() > rank_)
			throw std::invalid_argument("word exceeds rank " + std::to_string(rank_));
		Rational cc = rational_canonical(c);
		if (cc == 0)
			return;
		auto it = terms_.find(w);
		if (it == terms_.end()) {
			terms_.emplace(w, cc);
			return;
		}
		it->second += cc;
		if (it->second == 0)
			terms_.erase(it);
	}

	Rational coefficient(const Word& w) const {
		auto it = terms_.find(w);
		return it == terms_.end() ? Rational(0) : it->second;
	}

	GroupRingElement& operator+=(const GroupRingElement& rhs) {
		check_rank(rhs);
		for (const auto& [w, c] : rhs.terms_)
			add_term(w, c);
		return *this;
	}

	GroupRingElement& operator-=(const GroupRingElement& rhs) {
		check_rank(rhs);
		for (const auto& [w, c] : rhs.terms_)
			add_term(w, -c);
		return *this;
	}

	GroupRingElement operator+(const GroupRingElement& rhs) const {
		GroupRingElement out = *this;
		out += rhs;
		return out;
	}

	GroupRingElement operator-(const GroupRingElement& rhs) const {
		GroupRingElement out = *this;
		out -= rhs;
		return out;
	}

	GroupRingElement scaled(const Rational& c) const {
		GroupRingElement out(rank_);
		Rational cc = rational_canonical(c);
		if (cc == 0)
			return out;
		for (const auto& [w, coeff] : terms_)
			out.terms_.emplace(w, coeff * cc);
		return out;
	}

	// Convolution product with free reduction.
	GroupRingElement operator*(const GroupRingElement& rhs) const {
		check_rank(rhs);
		GroupRingElement out(rank_);
		for (const auto& [wa, ca] : terms_)
			for (const auto& [wb, cb] : rhs.terms_)
				out.add_term(wa * wb, ca * cb);
		return out;
	}

	GroupRingElement pow(int k) const {
		if (k < 0)
			throw std::invalid_argument("negative group-ring power");
		GroupRingElement out = unit(rank_);
		for (int i = 0; i < k; ++i)
			out = out * *this;
		return out;
	}

	// Coefficient-sum homomorphism to the rationals.
	Rational augmentation() const {
		Rational s = 0;
		for (const auto& [w, c] : terms_)
			s += c;
		return s;
	}

	bool operator==(const GroupRingElement& rhs) const {
		return rank_ == rhs.rank_ && terms_ == rhs.terms_;
	}
	bool operator!=(const GroupRingElement& rhs) const { return !(*this == rhs); }

	std::string to_text(char prefix = 'x') const {
		if (terms_.empty())
			return "0";
		std::string out;
		for (const auto& [w, c] : terms_) {
			if (!out.empty())
				out += " + ";
			out += "(" + rational_to_string(c) + ") " + word_to_text(w, prefix);
		}
		return out;
	}

private:
	void check_rank(const GroupRingElement& rhs) const {
		if (rank_ != rhs.rank_)
			throw std::invalid_argument("rank mismatch: " + std::to_string(rank_) +
			                            " vs " + std::to_string(rhs.rank_));
	}

	int rank_;
	std::map<Word, Rational> terms_;
};

// Element of the free rational module on conjugacy classes.
class LoopSum {
public:
	explicit LoopSum(int rank) : rank_(rank) {
		if (rank < 0)
			throw std::invalid_argument("negative rank");
	}

	static LoopSum of(int rank, const CyclicWord& w, const Rational& c = 1) {
		LoopSum s(rank);
		s.add_term(w, c);
		return s;
	}

	int rank() const { return rank_; }
	const std::map<CyclicWord, Rational>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	Rational coefficient(const CyclicWord& w) const {
		auto it = terms_.find(w);
		return it == terms_.end() ? Rational(0) : it->second;
	}

	void add_term(const CyclicWord& w, const Rational& c) {
		if (w.max_index() > rank_)
			throw std::invalid_argument("class exceeds rank " + std::to_string(rank_));
		Rational cc = rational_canonical(c);
		if (cc == 0)
			return;
		auto it = terms_.find(w);
		if (it == terms_.end()) {
			terms_.emplace(w, cc);
			return;
		}
		it->second += cc;
		if (it->second == 0)
			terms_.erase(it);
	}

	LoopSum& operator+=(const LoopSum& rhs) {
		check_rank(rhs);
		for (const auto& [w, c] : rhs.terms_)
			add_term(w, c);
		return *this;
	}

	LoopSum& operator-=(const LoopSum& rhs) {
		check_rank(rhs);
		for (const auto& [w, c] : rhs.terms_)
			add_term(w, -c);
		return *this;
	}

	LoopSum operator+(const LoopSum& rhs) const {
		LoopSum out = *this;
		out += rhs;
		return out;
	}

	LoopSum operator-(const LoopSum& rhs) const {
		LoopSum out = *this;
		out -= rhs;
		return out;
	}

	LoopSum scaled(const Rational& c) const {
		LoopSum out(rank_);
		Rational cc = rational_canonical(c);
		if (cc == 0)
			return out;
		for (const auto& [w, coeff] : terms_)
			out.terms_.emplace(w, coeff * cc);
		return out;
	}

	// Drops the empty class (quotient by the span of the trivial loop).
	LoopSum without_trivial_class() const {
		LoopSum out = *this;
		out.terms_.erase(CyclicWord());
		return out;
	}

	bool operator==(const LoopSum& rhs) const {
		return rank_ == rhs.rank_ && terms_ == rhs.terms_;
	}
	bool operator!=(const LoopSum& rhs) const { return !(*this == rhs); }

	std::string to_text(char prefix = 'x') const {
		if (terms_.empty())
			return "0";
		std::string out;
		for (const auto& [w, c] : terms_) {
			if (!out.empty())
				out += " + ";
			out += "(" + rational_to_string(c) + ") <" + word_to_text(w, prefix) + ">";
		}
		return out;
	}

private:
	void check_rank(const LoopSum& rhs) const {
		if (rank_ != rhs.rank_)
			throw std::invalid_argument("rank mismatch: " + std::to_string(rank_) +
			                            " vs " + std::to_string(rhs.rank_));
	}

	int rank_;
	std::map<CyclicWord, Rational> terms_;
};

// Forgets the basepoint: each word maps to its conjugacy class.
inline LoopSum forgetful_c(const GroupRingElement& a) {
	LoopSum out(a.rank());
	for (const auto& [w, c] : a.terms())
		out.add_term(cyclic_canonical(w), c);
	return out;
}

}  // namespace crosscap
