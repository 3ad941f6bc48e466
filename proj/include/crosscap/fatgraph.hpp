#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "word.hpp"

namespace crosscap {

// One-vertex ribbon graph: m bands attached to an oriented disk. cyclic_order
// lists the 2m band ends counterclockwise around the disk boundary; +e is the
// end where band e departs, -e the end where it returns. Sector s in [0,2m)
// is the boundary gap just before cyclic-order index s. Coarse positions on
// the disk boundary (mod 4m): the end at index i sits at 2i+1, sector s at
// 2s. Loops on the surface are words in the band letters; all of their
// mutual geometry happens inside the disk.
class RibbonSurface {
public:
	struct Face {
		std::vector<int> orbit;    // cyclic-order indices, in trace order
		std::vector<Letter> word;  // boundary word read along the trace
		std::vector<int> sectors;  // sector owned by each orbit element
	};

	explicit RibbonSurface(std::vector<int> cyclic_order, int basepoint_sector,
	                       std::optional<int> second_sector = std::nullopt)
	    : order_(std::move(cyclic_order)),
	      basepoint_(basepoint_sector),
	      second_(second_sector) {
		if (order_.empty() || order_.size() % 2 != 0)
			throw std::invalid_argument("cyclic order must list 2m band ends");
		int m = bands();
		index_.assign(2 * static_cast<std::size_t>(m), -1);
		for (int i = 0; i < 2 * m; ++i) {
			int id = order_[static_cast<std::size_t>(i)];
			if (id == 0 || id > m || id < -m)
				throw std::invalid_argument("band end id out of range");
			int& slot = index_[id_slot(id)];
			if (slot != -1)
				throw std::invalid_argument("duplicate band end in cyclic order");
			slot = i;
		}
		check_sector(basepoint_);
		if (second_) {
			check_sector(*second_);
			if (*second_ == basepoint_)
				throw std::invalid_argument("branch sectors must be distinct");
		}
		trace_faces();
	}

	int bands() const { return static_cast<int>(order_.size()) / 2; }
	int ends() const { return static_cast<int>(order_.size()); }
	int circle() const { return 2 * ends(); }
	const std::vector<int>& cyclic_order() const { return order_; }
	int basepoint_sector() const { return basepoint_; }
	std::optional<int> second_sector() const { return second_; }

	// Position of a signed band end in the cyclic order.
	int index_of(int signed_id) const {
		if (signed_id == 0 || signed_id > bands() || signed_id < -bands())
			throw std::invalid_argument("band end id out of range");
		return index_[id_slot(signed_id)];
	}

	int end_position(int signed_id) const { return 2 * index_of(signed_id) + 1; }

	int sector_position(int s) const {
		check_sector(s);
		return 2 * s;
	}

	const std::vector<Face>& faces() const { return faces_; }

	// Face whose trace owns the given sector.
	int face_of_sector(int s) const {
		check_sector(s);
		int n = ends();
		return face_of_end_[static_cast<std::size_t>((s + n - 1) % n)];
	}

	// One vertex, m band edges; the faces are boundary circles, not disks.
	int euler_characteristic() const { return 1 - bands(); }

private:
	std::size_t id_slot(int signed_id) const {
		return static_cast<std::size_t>(signed_id > 0 ? signed_id - 1
		                                              : bands() - signed_id - 1);
	}

	void check_sector(int s) const {
		if (s < 0 || s >= ends())
			throw std::invalid_argument("sector index out of range");
	}

	// Boundary faces: from an end, step to the next end counterclockwise and
	// jump through its band. Each orbit element h owns the gap (h, h+1), i.e.
	// sector h+1; the letter read at the step is the signed id of the end
	// stepped onto.
	void trace_faces() {
		int n = ends();
		std::vector<char> seen(static_cast<std::size_t>(n), 0);
		face_of_end_.assign(static_cast<std::size_t>(n), -1);
		for (int start = 0; start < n; ++start) {
			if (seen[static_cast<std::size_t>(start)])
				continue;
			Face f;
			int h = start;
			do {
				seen[static_cast<std::size_t>(h)] = 1;
				face_of_end_[static_cast<std::size_t>(h)] =
				    static_cast<int>(faces_.size());
				f.orbit.push_back(h);
				int nxt = (h + 1) % n;
				Letter l = order_[static_cast<std::size_t>(nxt)];
				f.word.push_back(l);
				f.sectors.push_back(nxt);
				h = index_of(-l);
			} while (h != start);
			faces_.push_back(std::move(f));
		}
	}

	std::vector<int> order_;
	int basepoint_;
	std::optional<int> second_;
	std::vector<int> index_;
	std::vector<Face> faces_;
	std::vector<int> face_of_end_;
};

}  // namespace crosscap
