#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fatgraph.hpp"
#include "group_ring.hpp"
#include "linking.hpp"
#include "word.hpp"

namespace crosscap {

// Loop bracket: sum over the transverse meetings of pushed-off
// representatives, of the sign times the class of the loops concatenated at
// the meeting point.
inline LoopSum goldman_bracket(const RibbonSurface& s, const CyclicWord& u,
                               const CyclicWord& v) {
	LoopSum out(s.bands());
	Route ru = closed_route(s, u);
	Route rv = closed_route(s, v);
	for (const Crossing& q : linked_pairs(s, rv, ru))
		out.add_term(CyclicWord(u.rotated(q.y_split) * v.rotated(q.x_split)), q.sign);
	return out;
}

inline LoopSum goldman_bracket(const RibbonSurface& s, const LoopSum& a,
                               const LoopSum& b) {
	LoopSum out(s.bands());
	for (const auto& [u, cu] : a.terms())
		for (const auto& [v, cv] : b.terms())
			out += goldman_bracket(s, u, v).scaled(cu * cv);
	return out;
}

// Loop action on an arc: at each transverse meeting the loop's class is
// spliced into the arc, with the sign deciding inverse splice.
inline GroupRingElement loop_action(const RibbonSurface& s, const CyclicWord& y,
                                    const Route& x) {
	GroupRingElement out(s.bands());
	Route ry = closed_route(s, y);
	for (const Crossing& q : linked_pairs(s, x, ry)) {
		Word pre(std::vector<Letter>(x.letters.begin(),
		                             x.letters.begin() + q.x_split));
		Word post(std::vector<Letter>(x.letters.begin() + q.x_split,
		                              x.letters.end()));
		out.add_term(pre * y.rotated(q.y_split) * post, q.sign);
	}
	return out;
}

inline GroupRingElement loop_action(const RibbonSurface& s, const LoopSum& y,
                                    const Route& x) {
	GroupRingElement out(s.bands());
	for (const auto& [u, c] : y.terms())
		out += loop_action(s, u, x).scaled(c);
	return out;
}

// Hook for fault injection in the sensitivity harness: the insertion event
// with index `target` (in deterministic enumeration order) has its exponent
// inverted.
struct InsertionFlip {
	long target = -1;
	long seen = 0;
};

// Right-handed power of the annular twist along a simple closed strand c,
// applied to an arc: each transverse meeting splices in the loop read from
// the meeting point, raised to the meeting sign times `direction`. Meetings
// in one arc gap are spliced in their order along the arc's chord, read from
// its entry point.
inline Word twist_insert(const RibbonSurface& s, const CyclicWord& c, const Route& x,
                         int direction, InsertionFlip* flip = nullptr) {
	if (x.closed)
		throw std::invalid_argument("twist acts on arcs");
	if (direction != 1 && direction != -1)
		throw std::invalid_argument("twist direction must be +1 or -1");
	Route rc = closed_route(s, c);
	std::vector<Chord> cxs = route_chords(x);
	int k = static_cast<int>(x.letters.size());
	std::vector<std::vector<Crossing>> gaps(static_cast<std::size_t>(k) + 1);
	for (const Crossing& q : linked_pairs(s, x, rc))
		gaps[static_cast<std::size_t>(q.x_chord)].push_back(q);
	int circ = s.circle();
	std::vector<Letter> out;
	for (int j = 0; j < static_cast<int>(gaps.size()); ++j) {
		std::vector<Crossing>& qs = gaps[static_cast<std::size_t>(j)];
		if (!qs.empty()) {
			int base = end_coarse(s, x, cxs[static_cast<std::size_t>(j)].from);
			std::sort(qs.begin(), qs.end(), [&](const Crossing& a, const Crossing& b) {
				int da = ((end_coarse(s, rc, a.inside) - base) % circ + circ) % circ;
				int db = ((end_coarse(s, rc, b.inside) - base) % circ + circ) % circ;
				if (da != db)
					return da < db;
				int cmp = band_order(s, rc, a.inside.occ, rc, b.inside.occ);
				Letter g = rc.letters[static_cast<std::size_t>(a.inside.occ)];
				if ((a.inside.departing ? g : -g) < 0)
					cmp = -cmp;
				return cmp < 0;
			});
			for (const Crossing& q : qs) {
				int e = q.sign * direction;
				if (flip) {
					if (flip->seen == flip->target)
						e = -e;
					++flip->seen;
				}
				Word ins = c.rotated(q.y_split);
				if (e < 0)
					ins = ins.inverse();
				for (Letter l : ins.letters())
					out.push_back(l);
			}
		}
		if (j < k)
			out.push_back(x.letters[static_cast<std::size_t>(j)]);
	}
	return Word(out);
}

}  // namespace crosscap
