#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cover.hpp"
#include "derivation.hpp"
#include "goldman.hpp"
#include "group_ring.hpp"
#include "linking.hpp"
#include "series.hpp"
#include "word.hpp"

namespace crosscap {

// An annulus twist problem: r is a word in the cover letters whose class is a
// simple loop on the cover fatgraph; its projection is the core of an
// embedded annulus in the crosscap surface. All comparisons run in the
// order-`order` Magnus truncation; iterations are capped at k_max.
struct TwistProblem {
	CoverPresentation cover;
	Word r;
	int order = 5;
	int k_max = 36;
};

inline TwistProblem make_problem(int genus, const Word& r, int order, int k_max = -1) {
	if (order < 1)
		throw std::invalid_argument("truncation order must be at least 1");
	if (k_max < 0)
		k_max = (order + 1) * (order + 1);
	return {CoverPresentation(genus), r, order, k_max};
}

// The shipped curve: the lift class of a_1 a_2 (a_1^2 when the rank is 1, a
// degenerate twist fixed by the deck map).
inline TwistProblem twist_preset(int genus, int order, int k_max = -1) {
	return make_problem(genus, Word::generator(genus >= 2 ? 2 : 1), order, k_max);
}

// The twist core upstairs and its deck translate, both checked simple.
inline std::pair<CyclicWord, CyclicWord> twist_curves(const TwistProblem& p) {
	CyclicWord up(p.r);
	CyclicWord down = p.cover.tau_class(up);
	if (!is_simple_class(p.cover.surface(), up))
		throw std::invalid_argument("twist core is not simple on the cover");
	if (!is_simple_class(p.cover.surface(), down))
		throw std::invalid_argument("deck image of the twist core is not simple");
	return {up, down};
}

// L = theta(c((log r)^2)) with log r truncated at order `order`. The empty
// class is dropped: the module quotients by the span of the trivial loop.
inline LoopSum build_L(const TwistProblem& p) {
	int n = p.cover.rank();
	GroupRingElement u = GroupRingElement::of(n, p.r) - GroupRingElement::unit(n);
	GroupRingElement lg(n);
	GroupRingElement acc = GroupRingElement::unit(n);
	for (int k = 1; k <= p.order; ++k) {
		acc = acc * u;
		lg += acc.scaled(Rational(k % 2 == 1 ? 1 : -1, k));
	}
	return p.cover.theta(forgetful_c(lg * lg)).without_trivial_class();
}

// Images of the derivation sigma~(L) on the base generators, Magnus-embedded.
// A nonzero constant term in any image is rejected (it would contradict
// sigma~ vanishing on the trivial class).
inline DerivationRep derivation_of_L(const TwistProblem& p, const LoopSum& L) {
	DerivationRep d(p.cover.base_rank(), p.order);
	for (int i = 1; i <= p.cover.base_rank(); ++i)
		d.set_image(i, magnus_embed(p.cover.sigma_tilde(L, Word::generator(i)), p.order));
	return d;
}

// The annulus twist on the base group: twist along the lifted core and
// inversely along its deck translate (disjoint, so the order is immaterial;
// opposite handedness makes the composite commute with the deck map and
// descend), then project.
inline Word geometric_twist(const TwistProblem& p, const Word& x,
                            InsertionFlip* flip = nullptr) {
	if (p.r.empty())
		return x;  // trivial core: no annulus, the twist is the identity
	auto [up, down] = twist_curves(p);
	const RibbonSurface& s = p.cover.surface();
	CoverPresentation::Lift l = p.cover.lift(x);
	int end = l.odd ? p.cover.down_sector() : p.cover.up_sector();
	Word w1 = twist_insert(s, up, based_route(s, l.word, p.cover.up_sector(), end), +1, flip);
	Word w2 = twist_insert(s, down, based_route(s, w1, p.cover.up_sector(), end), -1, flip);
	return p.cover.project(w2, l.odd);
}

inline GroupRingElement geometric_twist(const TwistProblem& p, const GroupRingElement& x,
                                        InsertionFlip* flip = nullptr) {
	GroupRingElement out(x.rank());
	for (const auto& [w, c] : x.terms())
		out.add_term(geometric_twist(p, w, flip), c);
	return out;
}

// log(t_A)(x) = -sum_{i>=1} (1 - t_A)^i(x)/i in the order-N truncation. The
// iteration stops once (1 - t_A)^i(x) embeds to zero: t_A preserves the
// kernel of the truncated embedding, so later terms stay zero too.
inline TruncatedSeries log_twist_series(const TwistProblem& p, const Word& x) {
	int n = p.cover.base_rank();
	GroupRingElement v = GroupRingElement::of(n, x);
	TruncatedSeries out(n, p.order);
	for (int i = 1; i <= p.k_max; ++i) {
		v -= geometric_twist(p, v);
		TruncatedSeries e = magnus_embed(v, p.order);
		if (e.is_zero())
			return out;
		out -= e.scaled(Rational(1, i));
	}
	throw std::runtime_error(
	    "log_twist_series: no stabilization after k_max=" + std::to_string(p.k_max) +
	    " iterations (residual degree " +
	    std::to_string(magnus_embed(v, p.order).min_degree()) + ")");
}

// Fault injection for the sensitivity harness: flip the sign of one stored
// term of L, or the exponent of one insertion event of the geometric pass.
// At most one of the two indices may be set.
struct TwistMutation {
	long l_term = -1;
	long insertion = -1;
};

struct GeneratorComparison {
	GeneratorComparison(int rank, int order)
	    : exp_image(rank, order), twist_image(rank, order) {}

	int gen = 0;
	TruncatedSeries exp_image;
	TruncatedSeries twist_image;
	// Largest degree through which the two series agree; `order` means full
	// agreement, -1 means they differ already in degree 0.
	int agree_through_degree = -1;
	// Same for log(t_A) vs the derivation image; -2 when the log path was
	// not run (mutation mode).
	int log_agree_through_degree = -2;
};

struct TwistReport {
	int order = 0;
	bool degenerate = false;
	bool verified = false;
	// The sign s for which exp(sigma~(sL)) matches the twist; 0 when neither
	// does. When both match (possible only for a degenerate problem) +1 is
	// reported.
	int verified_sign = 0;
	// Least degree at which the best sign's comparison fails; order+1 when
	// verified.
	int first_disagreement = 0;
	// Per-sign failure degree, same convention (index 0: +1, index 1: -1).
	int sign_first[2] = {0, 0};
	long insertion_events = 0;
	std::vector<GeneratorComparison> per_generator;
};

namespace detail {

inline int agree_degree(const TruncatedSeries& a, const TruncatedSeries& b) {
	TruncatedSeries diff = a - b;
	return diff.is_zero() ? a.order() : diff.min_degree() - 1;
}

}  // namespace detail

// Compares exp(sigma~(L)) with the geometric twist on every base generator,
// and log(t_A) with the derivation images, under both global signs of L.
inline TwistReport verify_main_theorem(const TwistProblem& p,
                                       const TwistMutation* mut = nullptr) {
	if (mut && mut->l_term >= 0 && mut->insertion >= 0)
		throw std::invalid_argument("at most one mutation at a time");
	TwistReport rep;
	rep.order = p.order;
	LoopSum L = build_L(p);
	rep.degenerate = L.is_zero();
	if (mut && mut->l_term >= 0) {
		const auto terms = L.terms();
		if (mut->l_term >= static_cast<long>(terms.size()))
			throw std::invalid_argument("mutation index exceeds term count");
		long idx = 0;
		for (const auto& [c, coeff] : terms)
			if (idx++ == mut->l_term) {
				L.add_term(c, coeff * -2);
				break;
			}
	}

	int g = p.cover.base_rank();
	InsertionFlip flip;
	flip.target = mut ? mut->insertion : -1;
	std::vector<Word> twisted;
	for (int i = 1; i <= g; ++i)
		twisted.push_back(geometric_twist(p, Word::generator(i), &flip));
	rep.insertion_events = flip.seen;
	if (mut && mut->insertion >= flip.seen)
		throw std::invalid_argument("mutation index exceeds insertion count");

	bool log_path = mut == nullptr;
	std::vector<TruncatedSeries> log_images;
	if (log_path)
		for (int i = 1; i <= g; ++i)
			log_images.push_back(log_twist_series(p, Word::generator(i)));

	int best = -1;
	for (int si = 0; si < 2; ++si) {
		int sign = si == 0 ? +1 : -1;
		std::vector<GeneratorComparison> cmp(static_cast<std::size_t>(g),
		                                     GeneratorComparison(g, p.order));
		int first = p.order + 1;
		bool degraded = false;
		DerivationRep d(g, p.order);
		try {
			d = derivation_of_L(p, L.scaled(sign));
		} catch (const std::invalid_argument&) {
			degraded = true;  // constant term in an image: fails from degree 0
		}
		for (int i = 1; i <= g; ++i) {
			GeneratorComparison& c = cmp[static_cast<std::size_t>(i - 1)];
			c.gen = i;
			c.twist_image =
			    magnus_embed(GroupRingElement::of(g, twisted[static_cast<std::size_t>(i - 1)]),
			                 p.order);
			if (degraded) {
				c.exp_image = TruncatedSeries(g, p.order);
				first = 0;
				continue;
			}
			try {
				c.exp_image = exp_derivation(
				    d, magnus_embed(GroupRingElement::of(g, Word::generator(i)), p.order),
				    p.k_max);
			} catch (const std::runtime_error&) {
				// exp does not stabilize: the sign candidate fails outright.
				c.exp_image = TruncatedSeries(g, p.order);
				first = 0;
				continue;
			}
			c.agree_through_degree = detail::agree_degree(c.exp_image, c.twist_image);
			if (c.agree_through_degree < p.order && c.agree_through_degree + 1 < first)
				first = c.agree_through_degree + 1;
			if (log_path) {
				c.log_agree_through_degree =
				    detail::agree_degree(log_images[static_cast<std::size_t>(i - 1)],
				                         d.image(i));
				if (c.log_agree_through_degree < p.order &&
				    c.log_agree_through_degree + 1 < first)
					first = c.log_agree_through_degree + 1;
			}
		}
		rep.sign_first[si] = first;
		bool ok = first == p.order + 1;
		if (ok && !rep.verified) {
			rep.verified = true;
			rep.verified_sign = sign;
			rep.per_generator = cmp;
			rep.first_disagreement = p.order + 1;
		} else if (!rep.verified && first > best) {
			best = first;
			rep.per_generator = cmp;
			rep.first_disagreement = first;
		}
	}
	return rep;
}

}  // namespace crosscap
