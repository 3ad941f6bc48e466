#include <gtest/gtest.h>

#include <crosscap/fatgraph.hpp>
#include <crosscap/goldman.hpp>
#include <crosscap/group_ring.hpp>
#include <crosscap/linking.hpp>
#include <crosscap/sampling.hpp>

using namespace crosscap;

namespace {

RibbonSurface torus() { return RibbonSurface({1, 2, -1, -2}, 0); }
RibbonSurface annulus() { return RibbonSurface({1, -1}, 0, 1); }

LoopSum bracket_words(const RibbonSurface& s, const char* u, const char* v) {
	return goldman_bracket(s, class_from_text(u), class_from_text(v));
}

int signed_crossings(const RibbonSurface& s, const CyclicWord& u, const CyclicWord& v) {
	int total = 0;
	for (const Crossing& q : linked_pairs(s, closed_route(s, v), closed_route(s, u)))
		total += q.sign;
	return total;
}

Route based_loop(const RibbonSurface& s, const Word& w) {
	return based_route(s, w, s.basepoint_sector(), s.basepoint_sector());
}

}  // namespace

TEST(Fatgraph, TorusShape) {
	RibbonSurface s = torus();
	EXPECT_EQ(s.bands(), 2);
	EXPECT_EQ(s.circle(), 8);
	EXPECT_EQ(s.euler_characteristic(), -1);
	ASSERT_EQ(s.faces().size(), 1u);
	EXPECT_EQ(CyclicWord(s.faces()[0].word), class_from_text("x2 x1 x2^-1 x1^-1"));
	EXPECT_EQ(s.face_of_sector(0), 0);
	EXPECT_EQ(s.end_position(1), 1);
	EXPECT_EQ(s.end_position(-2), 7);
	EXPECT_EQ(s.sector_position(3), 6);
}

TEST(Fatgraph, AnnulusShape) {
	RibbonSurface s = annulus();
	EXPECT_EQ(s.euler_characteristic(), 0);
	ASSERT_EQ(s.faces().size(), 2u);
	// The two boundary circles carry the core class with opposite signs, and
	// the basepoint sectors sit on distinct circles.
	CyclicWord f0(s.faces()[static_cast<std::size_t>(s.face_of_sector(0))].word);
	CyclicWord f1(s.faces()[static_cast<std::size_t>(s.face_of_sector(1))].word);
	EXPECT_EQ(f0, class_from_text("x1"));
	EXPECT_EQ(f1, class_from_text("x1^-1"));
}

TEST(Fatgraph, BadInputs) {
	EXPECT_THROW(RibbonSurface({1, 2, -1}, 0), std::invalid_argument);
	EXPECT_THROW(RibbonSurface({1, 1, -1, -1}, 0), std::invalid_argument);
	EXPECT_THROW(RibbonSurface({1, 3, -1, -3}, 0), std::invalid_argument);
	EXPECT_THROW(RibbonSurface({1, -1}, 2), std::invalid_argument);
	EXPECT_THROW(RibbonSurface({1, -1}, 0, 0), std::invalid_argument);
}

TEST(Linking, CrossingCounts) {
	RibbonSurface s = torus();
	CyclicWord a = class_from_text("x1");
	CyclicWord b = class_from_text("x2");
	CyclicWord ab = class_from_text("x1 x2");
	EXPECT_EQ(linked_pairs(s, closed_route(s, b), closed_route(s, a)).size(), 1u);
	EXPECT_EQ(linked_pairs(s, closed_route(s, ab), closed_route(s, a)).size(), 1u);
	// Parallel pushed-off copies never meet.
	EXPECT_EQ(linked_pairs(s, closed_route(s, a), closed_route(s, a)).size(), 0u);
	EXPECT_EQ(linked_pairs(s, closed_route(s, CyclicWord(Word({1, 1}))),
	                       closed_route(s, a))
	              .size(),
	          0u);
}

TEST(Linking, HomologicalIntersectionNumber) {
	RibbonSurface s = torus();
	Sampler smp(301);
	auto hom = [](const CyclicWord& w, int gen) {
		int n = 0;
		for (Letter l : w.letters())
			if (letter_index(l) == gen)
				n += l > 0 ? 1 : -1;
		return n;
	};
	for (int i = 0; i < 300; ++i) {
		CyclicWord u = smp.random_class(2, 5);
		CyclicWord v = smp.random_class(2, 5);
		int expected = hom(u, 1) * hom(v, 2) - hom(u, 2) * hom(v, 1);
		EXPECT_EQ(signed_crossings(s, u, v), expected)
		    << word_to_text(u) << " vs " << word_to_text(v);
	}
}

TEST(Linking, SimpleClasses) {
	RibbonSurface s = torus();
	EXPECT_TRUE(is_simple_class(s, class_from_text("x1")));
	EXPECT_TRUE(is_simple_class(s, class_from_text("x2")));
	EXPECT_TRUE(is_simple_class(s, class_from_text("x1 x2")));
	EXPECT_FALSE(is_simple_class(s, class_from_text("x1 x1")));
	EXPECT_FALSE(is_simple_class(s, CyclicWord()));
	// Homology class (2,1) has a simple representative; a commutator-like
	// class with a genuine double point does not.
	EXPECT_TRUE(is_simple_class(s, class_from_text("x1 x1 x2")));
	EXPECT_FALSE(is_simple_class(s, class_from_text("x1 x2 x1 x2^-1")));
}

TEST(Bracket, TorusHandValues) {
	RibbonSurface s = torus();
	LoopSum expect(2);
	expect.add_term(class_from_text("x1 x2"), 1);
	EXPECT_EQ(bracket_words(s, "x1", "x2"), expect);
	EXPECT_EQ(bracket_words(s, "x2", "x1"), expect.scaled(-1));
	EXPECT_TRUE(bracket_words(s, "x1", "x1").is_zero());
	EXPECT_TRUE(bracket_words(s, "x1", "x1 x1").is_zero());
}

TEST(Bracket, BoundaryIsCentral) {
	RibbonSurface s = torus();
	CyclicWord boundary(s.faces()[0].word);
	Sampler smp(302);
	for (int i = 0; i < 60; ++i) {
		CyclicWord v = smp.random_class(2, 5);
		EXPECT_TRUE(goldman_bracket(s, boundary, v).is_zero()) << word_to_text(v);
	}
}

TEST(Bracket, AntisymmetryAndJacobi) {
	RibbonSurface s = torus();
	Sampler smp(303);
	for (int i = 0; i < 120; ++i) {
		CyclicWord u = smp.random_class(2, 4);
		CyclicWord v = smp.random_class(2, 4);
		EXPECT_EQ(goldman_bracket(s, u, v), goldman_bracket(s, v, u).scaled(-1));
		EXPECT_TRUE(goldman_bracket(s, u, u).is_zero());
	}
	for (int i = 0; i < 60; ++i) {
		LoopSum u(2), v(2), w(2);
		u.add_term(smp.random_class(2, 3), 1);
		v.add_term(smp.random_class(2, 3), 1);
		w.add_term(smp.random_class(2, 3), 1);
		LoopSum jac = goldman_bracket(s, goldman_bracket(s, u, v), w);
		jac += goldman_bracket(s, goldman_bracket(s, v, w), u);
		jac += goldman_bracket(s, goldman_bracket(s, w, u), v);
		EXPECT_TRUE(jac.is_zero());
	}
}

TEST(LoopAction, TorusHandValues) {
	RibbonSurface s = torus();
	CyclicWord a = class_from_text("x1");
	GroupRingElement got = loop_action(s, a, based_loop(s, word_from_text("x2")));
	EXPECT_EQ(got, GroupRingElement::of(2, word_from_text("x1 x2")));

	got = loop_action(s, a, based_loop(s, word_from_text("x2 x2")));
	GroupRingElement expect = GroupRingElement::of(2, word_from_text("x1 x2 x2"));
	expect += GroupRingElement::of(2, word_from_text("x2 x1 x2"));
	EXPECT_EQ(got, expect);

	EXPECT_TRUE(loop_action(s, a, based_loop(s, word_from_text("x1"))).is_zero());
}

TEST(LoopAction, AnnulusArc) {
	RibbonSurface s = annulus();
	Route arc = based_route(s, Word(), 0, 1);
	GroupRingElement got = loop_action(s, class_from_text("x1"), arc);
	EXPECT_EQ(got, GroupRingElement::of(1, Word({1})));
}

TEST(LoopAction, LeibnizOverConcatenation) {
	RibbonSurface s = torus();
	Sampler smp(304);
	for (int i = 0; i < 150; ++i) {
		CyclicWord y = smp.random_class(2, 4);
		Word x1 = smp.random_word(2, 4);
		Word x2 = smp.random_word(2, 4);
		GroupRingElement lhs = loop_action(s, y, based_loop(s, x1 * x2));
		GroupRingElement rhs =
		    loop_action(s, y, based_loop(s, x1)) * GroupRingElement::of(2, x2) +
		    GroupRingElement::of(2, x1) * loop_action(s, y, based_loop(s, x2));
		EXPECT_EQ(lhs, rhs) << word_to_text(x1) << " | " << word_to_text(x2)
		                    << " under " << word_to_text(y);
	}
}

TEST(Twist, TorusHandValues) {
	RibbonSurface s = torus();
	CyclicWord a = class_from_text("x1");
	Word b = word_from_text("x2");
	EXPECT_EQ(twist_insert(s, a, based_loop(s, b), 1), word_from_text("x1 x2"));
	EXPECT_EQ(twist_insert(s, a, based_loop(s, b * b), 1),
	          word_from_text("x1 x2 x1 x2"));
	EXPECT_EQ(twist_insert(s, a, based_loop(s, word_from_text("x1")), 1),
	          word_from_text("x1"));
}

TEST(Twist, AnnulusArcWrap) {
	RibbonSurface s = annulus();
	Route arc = based_route(s, Word(), 0, 1);
	EXPECT_EQ(twist_insert(s, class_from_text("x1"), arc, 1), Word({1}));
	EXPECT_EQ(twist_insert(s, class_from_text("x1"), arc, -1), Word({-1}));
	Route wrapped = based_route(s, Word({1}), 0, 1);
	EXPECT_EQ(twist_insert(s, class_from_text("x1"), wrapped, 1), Word({1, 1}));
}

TEST(Twist, InverseUndoes) {
	RibbonSurface s = torus();
	Sampler smp(305);
	std::vector<CyclicWord> curves = {class_from_text("x1"), class_from_text("x2"),
	                                  class_from_text("x1 x2"),
	                                  class_from_text("x1 x1 x2")};
	for (const CyclicWord& c : curves) {
		ASSERT_TRUE(is_simple_class(s, c));
		for (int i = 0; i < 60; ++i) {
			Word x = smp.random_word(2, 6);
			Word fwd = twist_insert(s, c, based_loop(s, x), 1);
			EXPECT_EQ(twist_insert(s, c, based_loop(s, fwd), -1), x)
			    << word_to_text(x) << " along " << word_to_text(c);
		}
	}
}

TEST(Twist, Multiplicative) {
	RibbonSurface s = torus();
	Sampler smp(306);
	std::vector<CyclicWord> curves = {class_from_text("x1"), class_from_text("x1 x2"),
	                                  class_from_text("x1 x1 x2")};
	for (const CyclicWord& c : curves) {
		for (int i = 0; i < 60; ++i) {
			Word x = smp.random_word(2, 5);
			Word y = smp.random_word(2, 5);
			Word whole = twist_insert(s, c, based_loop(s, x * y), 1);
			Word parts = twist_insert(s, c, based_loop(s, x), 1) *
			             twist_insert(s, c, based_loop(s, y), 1);
			EXPECT_EQ(whole, parts) << word_to_text(x) << " | " << word_to_text(y)
			                        << " along " << word_to_text(c);
		}
	}
}

TEST(Twist, FixesOwnCurveAndBoundary) {
	RibbonSurface s = torus();
	// A based representative of the twist curve itself is fixed.
	EXPECT_EQ(twist_insert(s, class_from_text("x1 x2"),
	                       based_loop(s, word_from_text("x1 x2")), 1),
	          word_from_text("x1 x2"));
	// The boundary word is fixed up to conjugacy.
	Word boundary = word_from_text("x2 x1 x2^-1 x1^-1");
	for (const char* ct : {"x1", "x2", "x1 x2"}) {
		Word tw = twist_insert(s, class_from_text(ct), based_loop(s, boundary), 1);
		EXPECT_EQ(CyclicWord(tw), CyclicWord(boundary)) << ct;
	}
}
