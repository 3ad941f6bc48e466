#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "group_ring.hpp"
#include "series.hpp"
#include "word.hpp"

namespace crosscap {

// Deterministic random inputs for the property suites. All draws go through
// one seeded engine so a run is reproducible from its seed alone.
class Sampler {
public:
	explicit Sampler(std::uint64_t seed) : rng_(seed) {}

	int uniform(int lo, int hi) {
		std::uniform_int_distribution<int> d(lo, hi);
		return d(rng_);
	}

	Letter random_letter(int rank) {
		int idx = uniform(1, rank);
		return uniform(0, 1) == 0 ? idx : -idx;
	}

	// Freely reduced word of exactly `len` letters (no backtracking walk).
	Word random_word_exact(int rank, int len) {
		std::vector<Letter> letters;
		letters.reserve(static_cast<std::size_t>(len));
		for (int i = 0; i < len; ++i) {
			Letter l = random_letter(rank);
			while (!letters.empty() && l == letter_inverse(letters.back()))
				l = random_letter(rank);
			letters.push_back(l);
		}
		return Word(letters);
	}

	Word random_word(int rank, int max_len) {
		return random_word_exact(rank, uniform(0, max_len));
	}

	// Word of even length: with all generators orientation-reversing, length
	// parity is exactly the orientation parity.
	Word random_even_word(int rank, int max_half) {
		return random_word_exact(rank, 2 * uniform(0, max_half));
	}

	CyclicWord random_class(int rank, int max_len) {
		return CyclicWord(random_word(rank, max_len));
	}

	CyclicWord random_class_nonempty(int rank, int max_len) {
		CyclicWord w = CyclicWord(random_word_exact(rank, uniform(1, max_len)));
		while (w.empty())
			w = CyclicWord(random_word_exact(rank, uniform(1, max_len)));
		return w;
	}

	Rational random_rational(int bound) {
		int num = uniform(-bound, bound);
		int den = uniform(1, bound);
		Rational r(num, den);
		r.canonicalize();
		return r;
	}

	GroupRingElement random_element(int rank, int max_terms, int max_len) {
		GroupRingElement out(rank);
		int n = uniform(0, max_terms);
		for (int i = 0; i < n; ++i)
			out.add_term(random_word(rank, max_len), random_rational(6));
		return out;
	}

	TruncatedSeries random_series(int rank, int order, int max_terms) {
		TruncatedSeries out(rank, order);
		int n = uniform(0, max_terms);
		for (int i = 0; i < n; ++i) {
			Monomial m;
			int deg = uniform(0, order);
			for (int j = 0; j < deg; ++j)
				m.push_back(uniform(1, rank));
			out.add_term(m, random_rational(6));
		}
		return out;
	}

private:
	std::mt19937_64 rng_;
};

}  // namespace crosscap
