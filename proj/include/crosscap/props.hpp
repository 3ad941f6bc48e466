#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cover.hpp"
#include "derivation.hpp"
#include "goldman.hpp"
#include "group_ring.hpp"
#include "sampling.hpp"
#include "series.hpp"

namespace crosscap {

// Outcome of one randomized property suite: how many cases ran, how many
// violated the property, and a description of the first violation.
struct SuiteResult {
	std::string name;
	long cases = 0;
	long failures = 0;
	std::string detail;

	bool ok() const { return cases > 0 && failures == 0; }
};

namespace detail {

inline void record(SuiteResult& r, bool pass, const std::string& what) {
	++r.cases;
	if (pass)
		return;
	++r.failures;
	if (r.detail.empty())
		r.detail = what;
}

inline Word word_concat(const Word& a, const Word& b) {
	std::vector<Letter> raw = a.letters();
	for (Letter l : b.letters())
		raw.push_back(l);
	return Word(raw);
}

// Random element of the augmentation-ideal power I^k: product of k factors
// (w - 1) with w random nonempty words.
inline GroupRingElement random_ideal_element(Sampler& rng, int rank, int k, int max_len) {
	GroupRingElement out = GroupRingElement::unit(rank);
	for (int i = 0; i < k; ++i) {
		GroupRingElement f(rank);
		f.add_term(rng.random_word_exact(rank, rng.uniform(1, max_len)), Rational(1));
		f.add_term(Word(), Rational(-1));
		out = out * f;
	}
	return out;
}

inline LoopSum random_loop_sum(Sampler& rng, int rank, int max_terms, int max_len) {
	LoopSum out(rank);
	int n = rng.uniform(1, max_terms);
	for (int i = 0; i < n; ++i)
		out.add_term(rng.random_class(rank, max_len), rng.random_rational(4));
	return out;
}

// Series with every term of degree below `floor` removed.
inline TruncatedSeries series_above(const TruncatedSeries& s, int floor) {
	TruncatedSeries out(s.rank(), s.order());
	for (const auto& [m, c] : s.terms())
		if (static_cast<int>(m.size()) >= floor)
			out.add_term(m, c);
	return out;
}

}  // namespace detail

// Seven exact identities tying the loop action, the deck involution, and the
// averaging projector together. Each gets its own randomized suite.
inline std::vector<SuiteResult> action_identity_suites(std::uint64_t seed, int cases_each = 200) {
	Sampler rng(seed);
	std::vector<CoverPresentation> covers;
	covers.push_back(build_cover(2));
	covers.push_back(build_cover(3));

	std::vector<SuiteResult> out;
	out.push_back({"action-leibniz", 0, 0, ""});
	out.push_back({"action-deck-antisymmetry", 0, 0, ""});
	out.push_back({"deck-bracket-antihomomorphism", 0, 0, ""});
	out.push_back({"projector-idempotent", 0, 0, ""});
	out.push_back({"projector-bracket-compatibility", 0, 0, ""});
	out.push_back({"action-commutator-rule", 0, 0, ""});
	out.push_back({"symmetric-part-module-law", 0, 0, ""});

	for (int i = 0; i < cases_each; ++i) {
		const CoverPresentation& cv = covers[static_cast<std::size_t>(i % 2)];
		const RibbonSurface& s = cv.surface();
		int cr = cv.rank();
		int br = cv.base_rank();

		// Derivation rule on a product of base words.
		{
			CyclicWord y = rng.random_class_nonempty(cr, 4);
			Word x1 = rng.random_word(br, 3);
			Word x2 = rng.random_word(br, 3);
			GroupRingElement lhs = cv.sigma_tilde(y, detail::word_concat(x1, x2));
			GroupRingElement rhs = cv.sigma_tilde(y, x1) * GroupRingElement::of(br, x2) +
			                       GroupRingElement::of(br, x1) * cv.sigma_tilde(y, x2);
			detail::record(out[0], lhs == rhs,
			               "leibniz failed at y=" + word_to_text(y) + " x1=" + word_to_text(x1) +
			                   " x2=" + word_to_text(x2));
		}

		// The action is odd for the deck involution.
		{
			LoopSum y = detail::random_loop_sum(rng, cr, 2, 4);
			Word x = rng.random_word(br, 4);
			GroupRingElement lhs = cv.sigma_tilde(y, x);
			GroupRingElement rhs = cv.sigma_tilde(cv.tau(y), x).scaled(Rational(-1));
			detail::record(out[1], lhs == rhs, "deck antisymmetry failed at x=" + word_to_text(x));
		}

		// The deck involution is an anti-automorphism of the loop bracket.
		{
			CyclicWord u = rng.random_class_nonempty(cr, 4);
			CyclicWord v = rng.random_class_nonempty(cr, 4);
			LoopSum lhs = cv.tau(goldman_bracket(s, u, v));
			LoopSum rhs = goldman_bracket(s, LoopSum::of(cr, cv.tau_class(u)),
			                              LoopSum::of(cr, cv.tau_class(v)))
			                  .scaled(Rational(-1));
			detail::record(out[2], lhs == rhs,
			               "deck bracket rule failed at u=" + word_to_text(u) +
			                   " v=" + word_to_text(v));
		}

		// The averaging projector is idempotent.
		{
			LoopSum a = detail::random_loop_sum(rng, cr, 3, 4);
			detail::record(out[3], cv.theta(cv.theta(a)) == cv.theta(a),
			               "projector not idempotent");
		}

		// Bracketing commutes with the projector once one side is projected.
		{
			LoopSum u = LoopSum::of(cr, rng.random_class_nonempty(cr, 4));
			LoopSum v = LoopSum::of(cr, rng.random_class_nonempty(cr, 4));
			LoopSum a = goldman_bracket(s, cv.theta(u), cv.theta(v));
			LoopSum b = cv.theta(goldman_bracket(s, u, cv.theta(v)));
			LoopSum c = cv.theta(goldman_bracket(s, cv.theta(u), v));
			LoopSum d = cv.theta(a);
			detail::record(out[4], a == b && b == c && c == d,
			               "projector bracket compatibility failed");
		}

		// Commutator of two action operators is the action of a bracket.
		{
			LoopSum a = LoopSum::of(cr, rng.random_class_nonempty(cr, 3));
			LoopSum b = LoopSum::of(cr, rng.random_class_nonempty(cr, 3));
			Word x = rng.random_word(br, 3);
			GroupRingElement com = cv.sigma_tilde(a, cv.sigma_tilde(b, x)) -
			                       cv.sigma_tilde(b, cv.sigma_tilde(a, x));
			GroupRingElement r1 = cv.sigma_tilde(goldman_bracket(s, cv.theta(a), b), x);
			GroupRingElement r2 = cv.sigma_tilde(goldman_bracket(s, a, cv.theta(b)), x);
			GroupRingElement r3 = cv.sigma_tilde(goldman_bracket(s, cv.theta(a), cv.theta(b)), x);
			detail::record(out[5], com == r1 && r1 == r2 && r2 == r3,
			               "commutator rule failed at x=" + word_to_text(x));
		}

		// On projected sums the action is a Lie module: bracket goes to
		// operator commutator.
		{
			LoopSum u = cv.theta(detail::random_loop_sum(rng, cr, 2, 3));
			LoopSum v = cv.theta(detail::random_loop_sum(rng, cr, 2, 3));
			Word x = rng.random_word(br, 3);
			GroupRingElement lhs = cv.sigma_tilde(goldman_bracket(s, u, v), x);
			GroupRingElement rhs = cv.sigma_tilde(u, cv.sigma_tilde(v, x)) -
			                       cv.sigma_tilde(v, cv.sigma_tilde(u, x));
			detail::record(out[6], lhs == rhs, "module law failed at x=" + word_to_text(x));
		}
	}
	return out;
}

// Lie algebra axioms for the loop bracket on the covering surface, plus
// centrality of its boundary classes.
inline SuiteResult goldman_axiom_suite(std::uint64_t seed, int triples = 100, int central = 50) {
	Sampler rng(seed);
	SuiteResult r{"goldman-axioms", 0, 0, ""};
	std::vector<CoverPresentation> covers;
	covers.push_back(build_cover(2));
	covers.push_back(build_cover(3));

	for (int i = 0; i < triples; ++i) {
		const CoverPresentation& cv = covers[static_cast<std::size_t>(i % 2)];
		const RibbonSurface& s = cv.surface();
		int cr = cv.rank();
		LoopSum u = LoopSum::of(cr, rng.random_class_nonempty(cr, 4));
		LoopSum v = LoopSum::of(cr, rng.random_class_nonempty(cr, 4));
		LoopSum w = LoopSum::of(cr, rng.random_class_nonempty(cr, 4));
		bool anti = goldman_bracket(s, u, v) == goldman_bracket(s, v, u).scaled(Rational(-1)) &&
		            goldman_bracket(s, u, u).is_zero();
		LoopSum jac = goldman_bracket(s, u, goldman_bracket(s, v, w)) +
		              goldman_bracket(s, v, goldman_bracket(s, w, u)) +
		              goldman_bracket(s, w, goldman_bracket(s, u, v));
		detail::record(r, anti && jac.is_zero(), "bracket axiom failed on a random triple");
	}

	for (int i = 0; i < central; ++i) {
		const CoverPresentation& cv = covers[static_cast<std::size_t>(i % 2)];
		const RibbonSurface& s = cv.surface();
		int cr = cv.rank();
		CyclicWord bd(cv.lift(cv.boundary_word()).word);
		CyclicWord bd2 = cv.tau_class(bd);
		CyclicWord c = rng.random_class_nonempty(cr, 4);
		bool ok = goldman_bracket(s, bd, c).is_zero() && goldman_bracket(s, bd2, c).is_zero();
		detail::record(r, ok, "boundary class not central against " + word_to_text(c));
	}
	return r;
}

// Degree bound for the action: inputs deep in the augmentation filtration
// land deep in it again, with the expected shift of two.
inline SuiteResult filtration_suite(std::uint64_t seed, int order = 5, int per_pair = 10,
                                    int unit_cases = 20) {
	Sampler rng(seed);
	SuiteResult r{"ideal-filtration", 0, 0, ""};
	CoverPresentation cv = build_cover(2);
	int cr = cv.rank();
	int br = cv.base_rank();

	for (int i = 1; i < order; ++i) {
		for (int j = 1; i + j <= order; ++j) {
			for (int t = 0; t < per_pair; ++t) {
				LoopSum y = forgetful_c(detail::random_ideal_element(rng, cr, i, 2));
				GroupRingElement x = detail::random_ideal_element(rng, br, j, 2);
				int d = ideal_degree(cv.sigma_tilde(y, x), order);
				detail::record(r, d >= i + j - 2,
				               "filtration shift failed at i=" + std::to_string(i) +
				                   " j=" + std::to_string(j) + " degree=" + std::to_string(d));
			}
		}
	}

	for (int t = 0; t < unit_cases; ++t) {
		LoopSum one = forgetful_c(GroupRingElement::unit(cr));
		Word x = rng.random_word(br, 4);
		detail::record(r, cv.sigma_tilde(one, x).is_zero(),
		               "trivial class acted nontrivially on " + word_to_text(x));
	}
	return r;
}

// Calculus of the truncated series model: the embedding is multiplicative,
// log and exp invert each other, derivations satisfy the product rule, and
// exponentials of derivations are ring endomorphisms.
inline SuiteResult magnus_suite(std::uint64_t seed, int cases = 500) {
	Sampler rng(seed);
	SuiteResult r{"series-calculus", 0, 0, ""};
	for (int i = 0; i < cases; ++i) {
		int rank = rng.uniform(2, 3);
		int order = rng.uniform(2, 5);
		switch (i % 4) {
		case 0: {
			GroupRingElement a = rng.random_element(rank, 3, 4);
			GroupRingElement b = rng.random_element(rank, 3, 4);
			bool ok = magnus_embed(a * b, order) == magnus_embed(a, order) * magnus_embed(b, order);
			detail::record(r, ok, "embedding not multiplicative");
			break;
		}
		case 1: {
			TruncatedSeries u = detail::series_above(rng.random_series(rank, order, 4), 1);
			TruncatedSeries one = TruncatedSeries::constant(rank, order, Rational(1));
			bool ok = log_series(exp_series(u)) == u &&
			          exp_series(log_series(one + u)) == one + u;
			detail::record(r, ok, "log and exp failed to invert");
			break;
		}
		case 2: {
			DerivationRep d(rank, order);
			for (int g = 1; g <= rank; ++g)
				d.set_image(g, detail::series_above(rng.random_series(rank, order, 3), 1));
			TruncatedSeries s1 = rng.random_series(rank, order, 3);
			TruncatedSeries s2 = rng.random_series(rank, order, 3);
			bool ok = apply_derivation(d, s1 * s2) ==
			          apply_derivation(d, s1) * s2 + s1 * apply_derivation(d, s2);
			detail::record(r, ok, "derivation product rule failed");
			break;
		}
		default: {
			DerivationRep d(rank, order);
			for (int g = 1; g <= rank; ++g)
				d.set_image(g, detail::series_above(rng.random_series(rank, order, 3), 2));
			TruncatedSeries s1 = rng.random_series(rank, order, 3);
			TruncatedSeries s2 = rng.random_series(rank, order, 3);
			bool ok = exp_derivation(d, s1 * s2, order + 1) ==
			          exp_derivation(d, s1, order + 1) * exp_derivation(d, s2, order + 1);
			detail::record(r, ok, "derivation exponential not multiplicative");
			break;
		}
		}
	}
	return r;
}

// Structural contract of the orientation cover: rank and Euler
// characteristic, the two boundary faces and their projections, and the
// lift/project/deck dictionaries.
inline SuiteResult cover_contract_suite(std::uint64_t seed, int words_per_genus = 100) {
	Sampler rng(seed);
	SuiteResult r{"cover-structure", 0, 0, ""};
	for (int g = 1; g <= 3; ++g) {
		CoverPresentation cv = build_cover(g);
		detail::record(r, cv.rank() == 2 * g - 1 && cv.surface().bands() == cv.rank(),
		               "wrong band count at genus " + std::to_string(g));
		detail::record(r, cv.surface().euler_characteristic() == 2 - 2 * g,
		               "wrong Euler characteristic at genus " + std::to_string(g));

		const auto& faces = cv.surface().faces();
		detail::record(r, faces.size() == 2,
		               "expected two boundary faces at genus " + std::to_string(g));
		if (faces.size() == 2) {
			CyclicWord p0 = cv.project_class(CyclicWord(faces[0].word));
			CyclicWord p1 = cv.project_class(CyclicWord(faces[1].word));
			CyclicWord bd(cv.boundary_word());
			CyclicWord bdi = bd.inverted();
			bool ok = (p0 == bd && p1 == bdi) || (p0 == bdi && p1 == bd);
			detail::record(r, ok, "faces do not project onto the two boundary readings");
		}

		for (int i = 0; i < words_per_genus; ++i) {
			Word w = rng.random_even_word(cv.base_rank(), 4);
			CoverPresentation::Lift l = cv.lift(w);
			detail::record(r, !l.odd && cv.project(l.word, false) == w,
			               "lift then project moved " + word_to_text(w));
		}

		Word y1 = Word::generator(1);
		for (int i = 0; i < words_per_genus / 2; ++i) {
			Word w = rng.random_word(cv.rank(), 4);
			// On based words the deck involution squares to conjugation by
			// the deck translation Y_1; on classes it is an involution.
			detail::record(r, cv.tau_word(cv.tau_word(w)) == y1 * w * y1.inverse(),
			               "deck involution square wrong on " + word_to_text(w, 'y'));
			CyclicWord c(w);
			detail::record(r, cv.tau_class(cv.tau_class(c)) == c,
			               "deck involution not involutive on " + word_to_text(c, 'y'));
			// Based: projection conjugates by the sheet-swapping path.
			Word a1 = Word::generator(1);
			bool based = cv.project(cv.tau_word(w), false) ==
			             a1 * cv.project(w, false) * a1.inverse();
			detail::record(r, based && cv.project_class(cv.tau_class(c)) == cv.project_class(c),
			               "projection not deck invariant on " + word_to_text(w, 'y'));
		}
	}
	return r;
}

// Everything above in one list, in a fixed order.
inline std::vector<SuiteResult> all_property_suites(std::uint64_t seed) {
	std::vector<SuiteResult> out = action_identity_suites(seed);
	out.push_back(goldman_axiom_suite(seed + 1));
	out.push_back(filtration_suite(seed + 2));
	out.push_back(magnus_suite(seed + 3));
	out.push_back(cover_contract_suite(seed + 4));
	return out;
}

}  // namespace crosscap
