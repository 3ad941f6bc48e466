#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cover.hpp"
#include "dehn_twist.hpp"
#include "fatgraph.hpp"
#include "group_ring.hpp"
#include "props.hpp"
#include "series.hpp"
#include "word.hpp"

namespace crosscap {

// Field order in emitted documents is fixed, so identical inputs give
// byte-identical serializations.
using Json = nlohmann::ordered_json;

inline Json element_json(const GroupRingElement& a, char prefix = 'x') {
	Json out = Json::array();
	for (const auto& [w, c] : a.terms())
		out.push_back(Json{{"coeff", rational_to_string(c)}, {"word", word_to_text(w, prefix)}});
	return out;
}

inline Json loop_sum_json(const LoopSum& a, char prefix = 'y') {
	Json out = Json::array();
	for (const auto& [w, c] : a.terms())
		out.push_back(Json{{"coeff", rational_to_string(c)}, {"word", word_to_text(w, prefix)}});
	return out;
}

inline Json series_json(const TruncatedSeries& s) {
	Json terms = Json::array();
	for (const auto& [m, c] : s.terms())
		terms.push_back(Json{{"monomial", m}, {"coeff", rational_to_string(c)}});
	return Json{{"rank", s.rank()}, {"order", s.order()}, {"terms", terms}};
}

inline Json surface_json(const RibbonSurface& s) {
	Json out{{"rank", s.bands()},
	         {"cyclic_order", s.cyclic_order()},
	         {"basepoint_sector", s.basepoint_sector()}};
	if (s.second_sector())
		out["second_sector"] = *s.second_sector();
	return out;
}

inline RibbonSurface surface_from_json(const Json& j) {
	if (!j.is_object() || !j.contains("cyclic_order") || !j.contains("basepoint_sector"))
		throw std::invalid_argument(
		    "surface document needs cyclic_order and basepoint_sector");
	std::vector<int> order = j.at("cyclic_order").get<std::vector<int>>();
	int base = j.at("basepoint_sector").get<int>();
	std::optional<int> second;
	if (j.contains("second_sector"))
		second = j.at("second_sector").get<int>();
	RibbonSurface s(order, base, second);
	if (j.contains("rank") && j.at("rank").get<int>() != s.bands())
		throw std::invalid_argument("surface rank does not match its cyclic order");
	return s;
}

inline RibbonSurface surface_from_file(const std::string& path) {
	std::ifstream in(path);
	if (!in)
		throw std::invalid_argument("cannot open surface file: " + path);
	Json j = Json::parse(in);
	return surface_from_json(j);
}

// Cover presentation with its dictionaries: subgroup basis in base letters,
// deck images of the basis, and the boundary with its lift.
inline Json cover_json(const CoverPresentation& c) {
	Json basis = Json::array();
	Json deck = Json::array();
	for (int i = 1; i <= c.rank(); ++i) {
		Word g = Word::generator(i);
		basis.push_back(Json{{"letter", word_to_text(g, 'y')},
		                     {"base_word", word_to_text(c.base_word(i), 'x')}});
		deck.push_back(Json{{"letter", word_to_text(g, 'y')},
		                    {"image", word_to_text(c.tau_word(g), 'y')}});
	}
	Word bd = c.boundary_word();
	return Json{{"genus", c.genus()},
	            {"base_rank", c.base_rank()},
	            {"rank", c.rank()},
	            {"surface", surface_json(c.surface())},
	            {"basis", basis},
	            {"deck_images", deck},
	            {"boundary", Json{{"base", word_to_text(bd, 'x')},
	                              {"lift", word_to_text(c.lift(bd).word, 'y')}}}};
}

inline Json report_json(const TwistReport& r) {
	Json gens = Json::array();
	for (const GeneratorComparison& c : r.per_generator)
		gens.push_back(Json{{"gen", c.gen},
		                    {"agree_through_degree", c.agree_through_degree},
		                    {"log_agree_through_degree", c.log_agree_through_degree}});
	return Json{{"verified", r.verified},
	            {"verified_sign", r.verified_sign},
	            {"order", r.order},
	            {"degenerate", r.degenerate},
	            {"first_disagreement", r.first_disagreement},
	            {"insertion_events", r.insertion_events},
	            {"per_generator", gens},
	            {"timings", nullptr}};
}

inline Json suites_json(const std::vector<SuiteResult>& rs) {
	Json out = Json::array();
	for (const SuiteResult& r : rs) {
		Json row{{"name", r.name},
		         {"cases", r.cases},
		         {"failures", r.failures},
		         {"ok", r.ok()}};
		if (!r.detail.empty())
			row["detail"] = r.detail;
		out.push_back(row);
	}
	return out;
}

// One fixed rendering for every document the tools print: two-space indent
// and a trailing newline.
inline std::string json_to_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace crosscap
