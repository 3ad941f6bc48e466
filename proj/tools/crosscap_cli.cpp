#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "crosscap/dehn_twist.hpp"
#include "crosscap/io_json.hpp"
#include "crosscap/presets.hpp"
#include "crosscap/props.hpp"

using namespace crosscap;

namespace {

// Exit codes: 0 success/verified, 1 verification failed or property failure,
// 2 usage or parse error, 3 broken computation contract.
int fail(int code, const char* kind, const std::string& what) {
	std::cerr << "error: " << kind << ": " << what << std::endl;
	return code;
}

struct Options {
	std::string surface = "N2,1";
	std::string format = "text";
	std::string r_text;
	std::string class_a;
	std::string class_b;
	std::string word_x;
	int order = 5;
	int k_max = -1;
	long flip_l_term = -1;
	long flip_insertion = -1;
	std::uint64_t seed = 1;
	bool timings = false;

	int resolved_k_max() const { return k_max >= 0 ? k_max : (order + 1) * (order + 1); }
};

class PhaseClock {
public:
	explicit PhaseClock(bool enabled) : enabled_(enabled) {}

	void mark(const std::string& phase) {
		if (!enabled_)
			return;
		auto now = std::chrono::steady_clock::now();
		auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - last_).count();
		std::cerr << "timing: " << phase << " " << ms << "ms" << std::endl;
		last_ = now;
	}

private:
	bool enabled_;
	std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

struct NamedSurface {
	RibbonSurface surface;
	char prefix;
};

NamedSurface resolve_surface(const std::string& sel) {
	if (sel == "torus1")
		return {torus1_surface(), 'x'};
	if (std::optional<int> g = parse_crosscap_selector(sel))
		return {build_cover(*g).surface(), 'y'};
	return {surface_from_file(sel), 'x'};
}

CoverPresentation resolve_cover(const std::string& sel) {
	std::optional<int> g = parse_crosscap_selector(sel);
	if (!g)
		throw std::invalid_argument("surface must be N<g>,1 for this subcommand, got '" +
		                            sel + "'");
	return build_cover(*g);
}

void check_rank(const Word& w, int rank, char prefix) {
	for (Letter l : w.letters())
		if (letter_index(l) > rank)
			throw std::invalid_argument(std::string("letter ") + prefix +
			                            std::to_string(letter_index(l)) +
			                            " exceeds surface rank " + std::to_string(rank));
}

CyclicWord parse_class(const std::string& text, char prefix, int rank) {
	CyclicWord c = class_from_text(text, prefix);
	check_rank(c.rotated(0), rank, prefix);
	return c;
}

Word parse_word(const std::string& text, char prefix, int rank) {
	Word w = word_from_text(text, prefix);
	check_rank(w, rank, prefix);
	return w;
}

TwistProblem problem_from(const Options& o) {
	CoverPresentation cover = resolve_cover(o.surface);
	Word r = o.r_text.empty() ? Word::generator(cover.genus() >= 2 ? 2 : 1)
	                          : parse_word(o.r_text, 'y', cover.rank());
	return make_problem(cover.genus(), r, o.order, o.resolved_k_max());
}

int run_bracket(const Options& o) {
	std::optional<NamedSurface> ns;
	CyclicWord c1, c2;
	try {
		ns = resolve_surface(o.surface);
		c1 = parse_class(o.class_a, ns->prefix, ns->surface.bands());
		c2 = parse_class(o.class_b, ns->prefix, ns->surface.bands());
	} catch (const std::exception& e) {
		return fail(2, "usage", e.what());
	}
	try {
		LoopSum out = goldman_bracket(ns->surface, c1, c2);
		if (o.format == "json")
			std::cout << json_to_text(loop_sum_json(out, ns->prefix));
		else
			std::cout << out.to_text(ns->prefix) << std::endl;
		return 0;
	} catch (const std::exception& e) {
		return fail(3, "contract", e.what());
	}
}

int run_act(const Options& o) {
	std::optional<CoverPresentation> cover;
	CyclicWord y;
	Word x;
	try {
		cover = resolve_cover(o.surface);
		y = parse_class(o.class_a, 'y', cover->rank());
		x = parse_word(o.class_b, 'x', cover->base_rank());
	} catch (const std::exception& e) {
		return fail(2, "usage", e.what());
	}
	try {
		GroupRingElement out = cover->sigma_tilde(y, x);
		if (o.format == "json")
			std::cout << json_to_text(element_json(out, 'x'));
		else
			std::cout << out.to_text('x') << std::endl;
		return 0;
	} catch (const std::exception& e) {
		return fail(3, "contract", e.what());
	}
}

int run_cover_dump(const Options& o) {
	std::optional<CoverPresentation> cover;
	try {
		cover = resolve_cover(o.surface);
	} catch (const std::exception& e) {
		return fail(2, "usage", e.what());
	}
	try {
		std::cout << json_to_text(cover_json(*cover));
		return 0;
	} catch (const std::exception& e) {
		return fail(3, "contract", e.what());
	}
}

int run_log_twist(const Options& o) {
	std::optional<TwistProblem> p;
	Word x;
	try {
		p = problem_from(o);
		x = parse_word(o.word_x, 'x', p->cover.base_rank());
	} catch (const std::exception& e) {
		return fail(2, "usage", e.what());
	}
	try {
		PhaseClock clock(o.timings);
		TruncatedSeries s = log_twist_series(*p, x);
		clock.mark("log-twist");
		if (o.format == "json")
			std::cout << json_to_text(series_json(s));
		else
			std::cout << s.to_text() << std::endl;
		return 0;
	} catch (const std::exception& e) {
		return fail(3, "contract", e.what());
	}
}

int run_verify(const Options& o) {
	std::optional<TwistProblem> p;
	TwistMutation mut;
	bool mutated = false;
	try {
		p = problem_from(o);
		if (o.flip_l_term >= 0 && o.flip_insertion >= 0)
			throw std::invalid_argument("at most one fault flag may be set");
		mut.l_term = o.flip_l_term;
		mut.insertion = o.flip_insertion;
		mutated = o.flip_l_term >= 0 || o.flip_insertion >= 0;
	} catch (const std::exception& e) {
		return fail(2, "usage", e.what());
	}
	try {
		PhaseClock clock(o.timings);
		TwistReport rep = verify_main_theorem(*p, mutated ? &mut : nullptr);
		clock.mark("verify");
		if (o.format == "json") {
			std::cout << json_to_text(report_json(rep));
		} else {
			std::cout << "verified: " << (rep.verified ? "true" : "false") << "\n";
			std::cout << "sign: " << (rep.verified_sign > 0
			                              ? "+1"
			                              : rep.verified_sign < 0 ? "-1" : "none")
			          << "\n";
			std::cout << "order: " << rep.order << "\n";
			std::cout << "degenerate: " << (rep.degenerate ? "true" : "false") << "\n";
			std::cout << "insertion_events: " << rep.insertion_events << "\n";
			if (rep.verified)
				std::cout << "first_disagreement: none\n";
			else
				std::cout << "first_disagreement: " << rep.first_disagreement << "\n";
			for (const GeneratorComparison& c : rep.per_generator)
				std::cout << "gen x" << c.gen << ": exp_agree=" << c.agree_through_degree
				          << " log_agree=" << c.log_agree_through_degree << "\n";
			std::cout.flush();
		}
		return rep.verified ? 0 : 1;
	} catch (const std::exception& e) {
		return fail(3, "contract", e.what());
	}
}

int run_props(const Options& o) {
	try {
		PhaseClock clock(o.timings);
		std::vector<SuiteResult> rs = all_property_suites(o.seed);
		clock.mark("props");
		bool all = true;
		for (const SuiteResult& r : rs)
			all = all && r.ok();
		if (o.format == "json") {
			std::cout << json_to_text(suites_json(rs));
		} else {
			for (const SuiteResult& r : rs) {
				std::cout << (r.ok() ? "ok   " : "FAIL ") << r.name << " cases=" << r.cases
				          << " failures=" << r.failures;
				if (!r.detail.empty())
					std::cout << " detail=" << r.detail;
				std::cout << "\n";
			}
			std::cout.flush();
		}
		return all ? 0 : 1;
	} catch (const std::exception& e) {
		return fail(3, "contract", e.what());
	}
}

void add_format(CLI::App* sub, Options& o) {
	sub->add_option("--format", o.format, "Output format")
	    ->check(CLI::IsMember({"text", "json"}))
	    ->capture_default_str();
}

void add_order(CLI::App* sub, Options& o) {
	sub->add_option("-N,--order", o.order, "Truncation degree")
	    ->envname("CROSSCAP_ORDER")
	    ->check(CLI::Range(1, 12))
	    ->capture_default_str();
	sub->add_option("--k-max", o.k_max, "Iteration cap, default (N+1)^2")
	    ->envname("CROSSCAP_KMAX");
	sub->add_flag("--timings", o.timings, "Report phase timings on stderr");
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"Loop brackets, cover actions, and annular twist verification"};
	app.require_subcommand(1);
	Options o;

	CLI::App* bracket = app.add_subcommand("bracket", "Loop bracket of two classes");
	bracket->add_option("--surface", o.surface, "torus1, N<g>,1, or a surface JSON file")
	    ->capture_default_str();
	add_format(bracket, o);
	bracket->add_option("class1", o.class_a, "First class")->required();
	bracket->add_option("class2", o.class_b, "Second class")->required();

	CLI::App* act = app.add_subcommand("act", "Action of a cover class on a base word");
	act->add_option("--surface", o.surface, "N<g>,1")->capture_default_str();
	add_format(act, o);
	act->add_option("class", o.class_a, "Cover class (y letters)")->required();
	act->add_option("word", o.class_b, "Base word (x letters)")->required();

	CLI::App* dump = app.add_subcommand("cover-dump", "Orientation cover presentation");
	dump->add_option("--surface", o.surface, "N<g>,1")->capture_default_str();
	add_format(dump, o);

	CLI::App* logt = app.add_subcommand("log-twist", "Series logarithm of the twist");
	logt->add_option("--surface", o.surface, "N<g>,1")->capture_default_str();
	logt->add_option("--r", o.r_text, "Twist core word in y letters, default preset curve");
	add_format(logt, o);
	add_order(logt, o);
	logt->add_option("word", o.word_x, "Base word (x letters)")->required();

	CLI::App* verify = app.add_subcommand("verify", "Check the twist exponential identity");
	verify->add_option("--surface", o.surface, "N<g>,1")->capture_default_str();
	verify->add_option("--r", o.r_text, "Twist core word in y letters, default preset curve");
	verify->add_option("--flip-l-term", o.flip_l_term,
	                   "Fault injection: negate the given stored term of L");
	verify->add_option("--flip-insertion", o.flip_insertion,
	                   "Fault injection: invert the given twist insertion exponent");
	add_format(verify, o);
	add_order(verify, o);

	CLI::App* props = app.add_subcommand("props", "Run the randomized property suites");
	props->add_option("--seed", o.seed, "Suite seed")->capture_default_str();
	add_format(props, o);
	props->add_flag("--timings", o.timings, "Report phase timings on stderr");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return 2;
	}

	if (app.got_subcommand(bracket))
		return run_bracket(o);
	if (app.got_subcommand(act))
		return run_act(o);
	if (app.got_subcommand(dump))
		return run_cover_dump(o);
	if (app.got_subcommand(logt))
		return run_log_twist(o);
	if (app.got_subcommand(verify))
		return run_verify(o);
	return run_props(o);
}
