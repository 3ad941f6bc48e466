#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "cover.hpp"
#include "fatgraph.hpp"

namespace crosscap {

// One-holed torus: two bands, standard alternating attachment, a single
// boundary face reading the commutator.
inline RibbonSurface torus1_surface() { return RibbonSurface({1, 2, -1, -2}, 0); }

// Parses the nonorientable-surface selector "N<g>,1" to its genus.
inline std::optional<int> parse_crosscap_selector(const std::string& name) {
	if (name.size() < 4 || name[0] != 'N')
		return std::nullopt;
	std::size_t comma = name.find(',');
	if (comma == std::string::npos || name.substr(comma) != ",1")
		return std::nullopt;
	int g = 0;
	for (std::size_t i = 1; i < comma; ++i) {
		char ch = name[i];
		if (ch < '0' || ch > '9')
			return std::nullopt;
		g = g * 10 + (ch - '0');
		if (g > 64)
			throw std::invalid_argument("genus out of supported range: " + name);
	}
	if (g < 1)
		return std::nullopt;
	return g;
}

}  // namespace crosscap
