#pragma once

#include <stdexcept>
#include <vector>

#include "fatgraph.hpp"
#include "goldman.hpp"
#include "group_ring.hpp"
#include "linking.hpp"
#include "word.hpp"

namespace crosscap {

// Orientation double cover of the crosscap surface with boundary: the base
// group is free on a_1..a_g, every a_i reversing orientation, with boundary
// word a_1^2 ... a_g^2. The index-two subgroup of even words is free of rank
// 2g-1 on
//   Y_i = a_1 a_i            (cover letter i,       1 <= i <= g)
//   Z_i = a_i a_1^{-1}       (cover letter g-1+i,   2 <= i <= g)
// and is realized as a one-vertex ribbon graph whose two boundary circles
// project to the boundary word and its inverse. Sector 0 and sector 1 are the
// two basepoint preimages; an odd base loop lifts to an arc from 0 to 1.
class CoverPresentation {
public:
	struct Lift {
		Word word;
		bool odd = false;
	};

	explicit CoverPresentation(int genus)
	    : genus_(genus), surface_(cover_order(genus), 0, 1) {}

	int genus() const { return genus_; }
	int base_rank() const { return genus_; }
	int rank() const { return 2 * genus_ - 1; }
	const RibbonSurface& surface() const { return surface_; }
	int up_sector() const { return 0; }
	int down_sector() const { return 1; }

	Word boundary_word() const {
		std::vector<Letter> b;
		for (int i = 1; i <= genus_; ++i) {
			b.push_back(i);
			b.push_back(i);
		}
		return Word(b);
	}

	Word base_word(int cover_letter) const {
		if (cover_letter < 1 || cover_letter > rank())
			throw std::invalid_argument("cover letter out of range");
		if (cover_letter <= genus_)
			return Word({1, cover_letter});
		return Word({cover_letter - genus_ + 1, -1});
	}

	// Rewrite a base word along the two-sheet Schreier section: silent steps
	// are a_1 leaving the upper sheet and a_1^{-1} leaving the lower one.
	Lift lift(const Word& base) const {
		std::vector<Letter> out;
		bool odd = false;
		for (Letter l : base.letters()) {
			int i = letter_index(l);
			if (i > genus_)
				throw std::invalid_argument("base letter out of range");
			if (l > 0) {
				if (odd)
					out.push_back(i);
				else if (i != 1)
					out.push_back(genus_ - 1 + i);
			} else {
				if (!odd)
					out.push_back(-i);
				else if (i != 1)
					out.push_back(-(genus_ - 1 + i));
			}
			odd = !odd;
		}
		return {Word(out), odd};
	}

	// Substitute the subgroup generators; an odd arc closes up through a_1.
	Word project(const Word& cover, bool odd) const {
		std::vector<Letter> out;
		for (Letter l : cover.letters()) {
			Word b = base_word(letter_index(l));
			if (l < 0)
				b = b.inverse();
			for (Letter bl : b.letters())
				out.push_back(bl);
		}
		if (odd)
			out.push_back(1);
		return Word(out);
	}

	CyclicWord project_class(const CyclicWord& c) const {
		return CyclicWord(project(c.rotated(0), false));
	}

	// Deck involution: conjugation by the nontrivial coset representative.
	Word tau_word(const Word& w) const {
		Word down = project(w, false);
		std::vector<Letter> conj;
		conj.push_back(1);
		for (Letter l : down.letters())
			conj.push_back(l);
		conj.push_back(-1);
		Lift l = lift(Word(conj));
		return l.word;
	}

	CyclicWord tau_class(const CyclicWord& c) const {
		return CyclicWord(tau_word(c.rotated(0)));
	}

	LoopSum tau(const LoopSum& a) const {
		LoopSum out(rank());
		for (const auto& [c, coeff] : a.terms())
			out.add_term(tau_class(c), coeff);
		return out;
	}

	// Anti-invariant projector for the deck action.
	LoopSum theta(const LoopSum& a) const {
		return (a - tau(a)).scaled(Rational(1, 2));
	}

	Route lift_route(const Word& x) const {
		Lift l = lift(x);
		return based_route(surface_, l.word, up_sector(),
		                   l.odd ? down_sector() : up_sector());
	}

	// Loop action computed upstairs and pushed back down.
	GroupRingElement sigma_cover(const LoopSum& y, const Word& x) const {
		Lift l = lift(x);
		Route rx = based_route(surface_, l.word, up_sector(),
		                       l.odd ? down_sector() : up_sector());
		GroupRingElement act = loop_action(surface_, y, rx);
		GroupRingElement out(base_rank());
		for (const auto& [w, c] : act.terms())
			out.add_term(project(w, l.odd), c);
		return out;
	}

	GroupRingElement sigma_cover(const CyclicWord& y, const Word& x) const {
		LoopSum a(rank());
		a.add_term(y, 1);
		return sigma_cover(a, x);
	}

	// The derivation of the main construction: theta the loop sum, act, push
	// down.
	GroupRingElement sigma_tilde(const LoopSum& y, const Word& x) const {
		return sigma_cover(theta(y), x);
	}

	GroupRingElement sigma_tilde(const CyclicWord& y, const Word& x) const {
		LoopSum a(rank());
		a.add_term(y, 1);
		return sigma_tilde(a, x);
	}

	GroupRingElement sigma_tilde(const LoopSum& y, const GroupRingElement& x) const {
		GroupRingElement out(base_rank());
		for (const auto& [w, c] : x.terms())
			out += sigma_tilde(y, w).scaled(c);
		return out;
	}

private:
	static std::vector<int> cover_order(int g) {
		if (g < 1)
			throw std::invalid_argument("genus must be at least 1");
		std::vector<int> order;
		order.push_back(1);
		for (int i = g; i >= 2; --i) {
			order.push_back(-(g - 1 + i));
			order.push_back(i);
		}
		order.push_back(-1);
		for (int i = 2; i <= g; ++i) {
			order.push_back(g - 1 + i);
			order.push_back(-i);
		}
		return order;
	}

	int genus_;
	RibbonSurface surface_;
};

inline CoverPresentation build_cover(int genus) { return CoverPresentation(genus); }

}  // namespace crosscap
