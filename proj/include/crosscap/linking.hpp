#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fatgraph.hpp"
#include "word.hpp"

namespace crosscap {

// A strand on the surface: a cyclically reduced closed loop, or a reduced arc
// between two boundary sectors of the disk.
struct Route {
	std::vector<Letter> letters;
	bool closed = true;
	int start_sector = -1;
	int end_sector = -1;
};

inline void check_route_letters(const RibbonSurface& s, const std::vector<Letter>& ls) {
	for (Letter l : ls)
		if (letter_index(l) > s.bands())
			throw std::invalid_argument("route letter outside band range");
}

inline Route closed_route(const RibbonSurface& s, const CyclicWord& c) {
	check_route_letters(s, c.letters());
	return Route{c.letters(), true, -1, -1};
}

inline Route based_route(const RibbonSurface& s, const Word& w, int start_sector,
                         int end_sector) {
	check_route_letters(s, w.letters());
	if (start_sector < 0 || start_sector >= s.ends() || end_sector < 0 ||
	    end_sector >= s.ends())
		throw std::invalid_argument("route sector out of range");
	return Route{w.letters(), false, start_sector, end_sector};
}

// One endpoint of a disk chord: either a letter occurrence meeting the disk
// at its arrival or departure end, or a bare sector (arc endpoint).
struct ChordEnd {
	bool at_sector = false;
	int sector = -1;
	int occ = -1;
	bool departing = false;
};

// A single passage of a route through the disk. `split` counts the route
// letters consumed before the passage; for a closed route it is also the
// letter index at which the loop restarts when cut here.
struct Chord {
	ChordEnd from;  // strand arrives into the disk here
	ChordEnd to;    // strand leaves the disk here
	int split = 0;
};

inline int end_coarse(const RibbonSurface& s, const Route& r, const ChordEnd& e) {
	if (e.at_sector)
		return s.sector_position(e.sector);
	Letter g = r.letters[static_cast<std::size_t>(e.occ)];
	return s.end_position(e.departing ? g : -g);
}

inline std::vector<Chord> route_chords(const Route& r) {
	std::vector<Chord> out;
	int k = static_cast<int>(r.letters.size());
	if (r.closed) {
		for (int j = 0; j < k; ++j)
			out.push_back(Chord{ChordEnd{false, -1, j, false},
			                    ChordEnd{false, -1, (j + 1) % k, true}, (j + 1) % k});
		return out;
	}
	if (k == 0) {
		// A bare arc between distinct sectors crosses the disk once; the
		// constant loop at one sector does not enter it at all.
		if (r.start_sector != r.end_sector)
			out.push_back(Chord{ChordEnd{true, r.start_sector, -1, false},
			                    ChordEnd{true, r.end_sector, -1, false}, 0});
		return out;
	}
	for (int j = 0; j <= k; ++j) {
		Chord c;
		c.from = j == 0 ? ChordEnd{true, r.start_sector, -1, false}
		                : ChordEnd{false, -1, j - 1, false};
		c.to = j == k ? ChordEnd{true, r.end_sector, -1, false}
		              : ChordEnd{false, -1, j, true};
		c.split = j;
		out.push_back(c);
	}
	return out;
}

// Element i >= 1 of the departure-side ray of the band passage at letter
// `occ`: the coarse positions met tracing the strand away from the band's
// departure end. A forward passage is traced backward through the route, a
// backward passage forward. On an arc the trace ends with the arc's sector
// token; past it there is nothing.
inline std::optional<int> ray_element(const RibbonSurface& s, const Route& r, int occ,
                                      int i) {
	int k = static_cast<int>(r.letters.size());
	Letter g = r.letters[static_cast<std::size_t>(occ)];
	int q = (i + 1) / 2;
	bool odd = i % 2 == 1;
	if (g > 0) {
		int j = occ - q;
		if (!r.closed && j < 0) {
			if (odd && i == 2 * occ + 1)
				return s.sector_position(r.start_sector);
			return std::nullopt;
		}
		Letter h = r.letters[static_cast<std::size_t>(r.closed ? ((j % k) + k) % k : j)];
		return s.end_position(odd ? -h : h);
	}
	int j = occ + q;
	if (!r.closed && j >= k) {
		if (odd && i == 2 * (k - 1 - occ) + 1)
			return s.sector_position(r.end_sector);
		return std::nullopt;
	}
	Letter h = r.letters[static_cast<std::size_t>(r.closed ? j % k : j)];
	return s.end_position(odd ? h : -h);
}

// Order of two passages of the same band, read counterclockwise along the
// band's departure-end arc: negative when a comes first, positive when b
// does, zero when the strands are parallel through the whole band (pushed-off
// copies never meeting). Rays diverge first at an odd index; the passage
// whose next stop is counterclockwise-farther from the shared previous stop
// peels off earlier on the arc. At the arrival-end arc the order is the
// mirror image.
inline int band_order(const RibbonSurface& s, const Route& ra, int occ_a,
                      const Route& rb, int occ_b) {
	if (letter_index(ra.letters[static_cast<std::size_t>(occ_a)]) !=
	    letter_index(rb.letters[static_cast<std::size_t>(occ_b)]))
		throw std::logic_error("band order needs passages of one band");
	int circ = s.circle();
	int cap = 2 * static_cast<int>(ra.letters.size() + rb.letters.size()) + 2;
	int prev =
	    s.end_position(letter_index(ra.letters[static_cast<std::size_t>(occ_a)]));
	for (int i = 1; i <= cap; ++i) {
		std::optional<int> ea = ray_element(s, ra, occ_a, i);
		std::optional<int> eb = ray_element(s, rb, occ_b, i);
		if (!ea && !eb)
			return 0;
		if (!ea || !eb)
			throw std::logic_error("ray ended without a visible divergence");
		if (*ea == *eb) {
			prev = *ea;
			continue;
		}
		int da = ((*ea - prev) % circ + circ) % circ;
		int db = ((*eb - prev) % circ + circ) % circ;
		return da > db ? -1 : 1;
	}
	return 0;
}

// A transverse meeting of a chord of x with a chord of y.
struct Crossing {
	int sign = 0;       // orientation of (y branch, x branch) at the meeting
	int x_chord = -1;
	int y_chord = -1;
	int x_split = 0;
	int y_split = 0;
	ChordEnd inside;    // y endpoint inside the ccw span from x.from to x.to
};

// Transversality test for one chord pair. Endpoints sharing a band-end arc
// are separated with the band order (mirrored at arrival ends); a parallel
// pair makes the whole chord pair disjoint. The chords cross exactly when
// their endpoints alternate around the refined circle, and the sign reads the
// counterclockwise pattern from y's entry point: x-in before y-out before
// x-out is positive, the reverse negative.
inline std::optional<Crossing> cross_chords(const RibbonSurface& s, const Route& rx,
                                            const Chord& cx, const Route& ry,
                                            const Chord& cy) {
	const ChordEnd* xs[2] = {&cx.from, &cx.to};
	const ChordEnd* ys[2] = {&cy.from, &cy.to};
	int xc[2], yc[2], xkey[2], ykey[2];
	for (int i = 0; i < 2; ++i) {
		xc[i] = end_coarse(s, rx, *xs[i]);
		yc[i] = end_coarse(s, ry, *ys[i]);
		xkey[i] = 4 * xc[i];
		ykey[i] = 4 * yc[i];
	}
	for (int i = 0; i < 2; ++i) {
		for (int j = 0; j < 2; ++j) {
			if (xc[i] != yc[j])
				continue;
			if (xs[i]->at_sector && ys[j]->at_sector)
				throw std::logic_error("two arc endpoints share a sector");
			Letter g = rx.letters[static_cast<std::size_t>(xs[i]->occ)];
			int cmp = band_order(s, rx, xs[i]->occ, ry, ys[j]->occ);
			if (cmp == 0)
				return std::nullopt;
			if ((xs[i]->departing ? g : -g) < 0)
				cmp = -cmp;
			xkey[i] += cmp < 0 ? -1 : 1;
			ykey[j] += cmp < 0 ? 1 : -1;
		}
	}
	int mod = 4 * s.circle();
	auto rel = [&](int key, int base) { return ((key - base) % mod + mod) % mod; };
	int xin = rel(xkey[0], ykey[0]);
	int xout = rel(xkey[1], ykey[0]);
	int yout = rel(ykey[1], ykey[0]);
	Crossing q;
	if (xin < yout && yout < xout)
		q.sign = 1;
	else if (xout < yout && yout < xin)
		q.sign = -1;
	else
		return std::nullopt;
	q.x_split = cx.split;
	q.y_split = cy.split;
	q.inside = rel(ykey[0], xkey[0]) < rel(xkey[1], xkey[0]) ? cy.from : cy.to;
	return q;
}

// All transverse meetings between the chords of x and the chords of y.
inline std::vector<Crossing> linked_pairs(const RibbonSurface& s, const Route& x,
                                          const Route& y) {
	std::vector<Chord> cxs = route_chords(x);
	std::vector<Chord> cys = route_chords(y);
	std::vector<Crossing> out;
	for (std::size_t i = 0; i < cxs.size(); ++i) {
		for (std::size_t j = 0; j < cys.size(); ++j) {
			std::optional<Crossing> q = cross_chords(s, x, cxs[i], y, cys[j]);
			if (!q)
				continue;
			q->x_chord = static_cast<int>(i);
			q->y_chord = static_cast<int>(j);
			out.push_back(*q);
		}
	}
	return out;
}

// A closed strand is embedded when it is primitive and no two of its disk
// passages meet.
inline bool is_simple_class(const RibbonSurface& s, const CyclicWord& c) {
	if (c.empty() || c.is_proper_power())
		return false;
	Route r = closed_route(s, c);
	std::vector<Chord> ch = route_chords(r);
	for (std::size_t i = 0; i < ch.size(); ++i)
		for (std::size_t j = i + 1; j < ch.size(); ++j)
			if (cross_chords(s, r, ch[i], r, ch[j]))
				return false;
	return true;
}

}  // namespace crosscap
