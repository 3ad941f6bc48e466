#include <gtest/gtest.h>

#include <vector>

#include <crosscap/cover.hpp>
#include <crosscap/goldman.hpp>
#include <crosscap/sampling.hpp>

using namespace crosscap;

namespace {

LoopSum single(int rank, const CyclicWord& c) {
	LoopSum out(rank);
	out.add_term(c, 1);
	return out;
}

}  // namespace

TEST(Cover, ShapeContracts) {
	std::vector<std::vector<int>> expected_orders = {
	    {1, -1},
	    {1, -3, 2, -1, 3, -2},
	    {1, -5, 3, -4, 2, -1, 4, -2, 5, -3},
	};
	for (int g = 1; g <= 3; ++g) {
		CoverPresentation cov(g);
		EXPECT_EQ(cov.rank(), 2 * g - 1);
		EXPECT_EQ(cov.surface().cyclic_order(),
		          expected_orders[static_cast<std::size_t>(g - 1)]);
		EXPECT_EQ(cov.surface().euler_characteristic(), 2 - 2 * g);
		ASSERT_EQ(cov.surface().faces().size(), 2u);

		int up_face = cov.surface().face_of_sector(cov.up_sector());
		int down_face = cov.surface().face_of_sector(cov.down_sector());
		ASSERT_NE(up_face, down_face);
		CyclicWord up_class(
		    cov.surface().faces()[static_cast<std::size_t>(up_face)].word);
		CyclicWord down_class(
		    cov.surface().faces()[static_cast<std::size_t>(down_face)].word);
		CyclicWord boundary(cov.boundary_word());
		EXPECT_EQ(cov.project_class(up_class), boundary) << "genus " << g;
		EXPECT_EQ(cov.project_class(down_class), CyclicWord(boundary.inverted()))
		    << "genus " << g;
		// The boundary lift runs along the upper boundary circle.
		EXPECT_EQ(CyclicWord(cov.lift(cov.boundary_word()).word), up_class);
	}
}

TEST(Cover, LiftHandValues) {
	CoverPresentation cov(2);
	CoverPresentation::Lift l = cov.lift(word_from_text("x1"));
	EXPECT_TRUE(l.word.empty());
	EXPECT_TRUE(l.odd);

	l = cov.lift(word_from_text("x2"));
	EXPECT_EQ(l.word, Word({3}));
	EXPECT_TRUE(l.odd);

	l = cov.lift(word_from_text("x1 x1"));
	EXPECT_EQ(l.word, Word({1}));
	EXPECT_FALSE(l.odd);

	l = cov.lift(word_from_text("x1 x2"));
	EXPECT_EQ(l.word, Word({2}));
	EXPECT_FALSE(l.odd);

	l = cov.lift(word_from_text("x2 x1^-1"));
	EXPECT_EQ(l.word, Word({3}));
	EXPECT_FALSE(l.odd);
}

TEST(Cover, ProjectAfterLift) {
	Sampler smp(401);
	for (int g = 1; g <= 3; ++g) {
		CoverPresentation cov(g);
		for (int i = 0; i < 80; ++i) {
			Word w = smp.random_word(g, 8);
			CoverPresentation::Lift l = cov.lift(w);
			EXPECT_EQ(l.odd, w.size() % 2 == 1);
			EXPECT_EQ(cov.project(l.word, l.odd), w) << word_to_text(w);
		}
	}
}

TEST(Cover, LiftMultiplicativeOnEvenPrefix) {
	Sampler smp(402);
	CoverPresentation cov(3);
	for (int i = 0; i < 150; ++i) {
		Word u = smp.random_even_word(3, 3);
		Word v = smp.random_word(3, 6);
		CoverPresentation::Lift lu = cov.lift(u);
		CoverPresentation::Lift lv = cov.lift(v);
		CoverPresentation::Lift luv = cov.lift(u * v);
		EXPECT_EQ(luv.word, lu.word * lv.word);
		EXPECT_EQ(luv.odd, lv.odd);
	}
}

TEST(Cover, DeckInvolution) {
	CoverPresentation cov(2);
	EXPECT_EQ(cov.tau_class(class_from_text("y2", 'y')),
	          class_from_text("y1 y3", 'y'));
	EXPECT_EQ(cov.tau_class(class_from_text("y1", 'y')), class_from_text("y1", 'y'));

	Sampler smp(403);
	for (int g = 1; g <= 3; ++g) {
		CoverPresentation c(g);
		Word y1({1});
		for (int i = 0; i < 60; ++i) {
			Word w = smp.random_word(c.rank(), 5);
			// On words the involution squares to conjugation by the deck
			// translation Y_1; on classes it is an involution.
			EXPECT_EQ(c.tau_word(c.tau_word(w)), y1 * w * y1.inverse());
			CyclicWord cl(w);
			EXPECT_EQ(c.tau_class(c.tau_class(cl)), cl);
			EXPECT_EQ(c.project_class(c.tau_class(cl)), c.project_class(cl));
		}
	}
}

TEST(Cover, ThetaProjector) {
	Sampler smp(404);
	CoverPresentation cov(2);
	EXPECT_TRUE(cov.theta(single(cov.rank(), class_from_text("y1", 'y'))).is_zero());
	for (int i = 0; i < 80; ++i) {
		LoopSum a(cov.rank());
		for (int t = 0; t < 3; ++t)
			a.add_term(smp.random_class(cov.rank(), 4), smp.random_rational(4));
		EXPECT_EQ(cov.theta(cov.theta(a)), cov.theta(a));
		EXPECT_TRUE(cov.theta(a + cov.tau(a)).is_zero());
		EXPECT_EQ(cov.tau(cov.theta(a)), cov.theta(a).scaled(-1));
	}
}

TEST(Cover, ActionHandValues) {
	CoverPresentation cov(2);
	Word a1 = word_from_text("x1");
	Word a2 = word_from_text("x2");
	Word w = word_from_text("x1 x1 x2 x1^-1");
	Word a1a2 = word_from_text("x1 x2");
	for (int j = 1; j <= 3; ++j) {
		CyclicWord up(Word({2}).pow(j));
		CyclicWord down(Word({1, 3}).pow(j));

		EXPECT_TRUE(cov.sigma_cover(up, a1).is_zero()) << j;
		EXPECT_EQ(cov.sigma_cover(down, a1),
		          GroupRingElement::of(2, w.pow(j) * a1, j))
		    << j;
		EXPECT_EQ(cov.sigma_cover(up, a2),
		          GroupRingElement::of(2, a1a2.pow(j) * a2, j))
		    << j;
		EXPECT_TRUE(cov.sigma_cover(down, a2).is_zero()) << j;

		EXPECT_EQ(cov.sigma_tilde(up, a1),
		          GroupRingElement::of(2, w.pow(j) * a1, Rational(-j, 2)))
		    << j;
		EXPECT_EQ(cov.sigma_tilde(up, a2),
		          GroupRingElement::of(2, a1a2.pow(j) * a2, Rational(j, 2)))
		    << j;
	}
}

TEST(Cover, ActionVanishesOnTrivialClass) {
	CoverPresentation cov(2);
	LoopSum trivial(cov.rank());
	trivial.add_term(CyclicWord(), 1);
	Sampler smp(405);
	for (int i = 0; i < 30; ++i) {
		Word x = smp.random_word(2, 5);
		EXPECT_TRUE(cov.sigma_tilde(trivial, x).is_zero());
		EXPECT_TRUE(cov.sigma_cover(trivial, x).is_zero());
	}
}

TEST(Cover, ActionIsOddUnderDeck) {
	Sampler smp(406);
	for (int g = 2; g <= 3; ++g) {
		CoverPresentation cov(g);
		for (int i = 0; i < 60; ++i) {
			LoopSum y = single(cov.rank(), smp.random_class(cov.rank(), 4));
			Word x = smp.random_word(g, 4);
			EXPECT_EQ(cov.sigma_tilde(y, x),
			          cov.sigma_tilde(cov.tau(y), x).scaled(-1));
		}
	}
}

TEST(Cover, ActionLeibniz) {
	Sampler smp(407);
	for (int g = 2; g <= 3; ++g) {
		CoverPresentation cov(g);
		for (int i = 0; i < 60; ++i) {
			LoopSum y = single(cov.rank(), smp.random_class(cov.rank(), 4));
			Word x1 = smp.random_word(g, 4);
			Word x2 = smp.random_word(g, 4);
			GroupRingElement lhs = cov.sigma_tilde(y, x1 * x2);
			GroupRingElement rhs =
			    cov.sigma_tilde(y, x1) * GroupRingElement::of(g, x2) +
			    GroupRingElement::of(g, x1) * cov.sigma_tilde(y, x2);
			EXPECT_EQ(lhs, rhs)
			    << word_to_text(x1) << " | " << word_to_text(x2);
		}
	}
}

TEST(Cover, ActionCommutatorRule) {
	Sampler smp(408);
	CoverPresentation cov(2);
	const RibbonSurface& s = cov.surface();
	for (int i = 0; i < 40; ++i) {
		LoopSum a = single(cov.rank(), smp.random_class_nonempty(cov.rank(), 3));
		LoopSum b = single(cov.rank(), smp.random_class_nonempty(cov.rank(), 3));
		Word x = smp.random_word(2, 3);
		GroupRingElement lhs = cov.sigma_tilde(a, cov.sigma_tilde(b, x)) -
		                       cov.sigma_tilde(b, cov.sigma_tilde(a, x));
		GroupRingElement rhs =
		    cov.sigma_tilde(goldman_bracket(s, cov.theta(a), b), x);
		EXPECT_EQ(lhs, rhs) << word_to_text(x);
	}
}

TEST(Cover, BracketContracts) {
	Sampler smp(409);
	CoverPresentation cov(2);
	const RibbonSurface& s = cov.surface();
	for (int i = 0; i < 60; ++i) {
		CyclicWord u = smp.random_class(cov.rank(), 4);
		CyclicWord v = smp.random_class(cov.rank(), 4);
		EXPECT_EQ(goldman_bracket(s, u, v), goldman_bracket(s, v, u).scaled(-1));
	}
	for (int i = 0; i < 30; ++i) {
		LoopSum u = single(cov.rank(), smp.random_class(cov.rank(), 3));
		LoopSum v = single(cov.rank(), smp.random_class(cov.rank(), 3));
		LoopSum w = single(cov.rank(), smp.random_class(cov.rank(), 3));
		LoopSum jac = goldman_bracket(s, goldman_bracket(s, u, v), w);
		jac += goldman_bracket(s, goldman_bracket(s, v, w), u);
		jac += goldman_bracket(s, goldman_bracket(s, w, u), v);
		EXPECT_TRUE(jac.is_zero());
	}
	for (const auto& face : s.faces()) {
		CyclicWord fc(face.word);
		for (int i = 0; i < 30; ++i) {
			CyclicWord v = smp.random_class(cov.rank(), 4);
			EXPECT_TRUE(goldman_bracket(s, fc, v).is_zero()) << word_to_text(v);
		}
	}
}

TEST(Cover, DeckReversesBracket) {
	Sampler smp(410);
	CoverPresentation cov(2);
	const RibbonSurface& s = cov.surface();
	for (int i = 0; i < 60; ++i) {
		LoopSum u = single(cov.rank(), smp.random_class(cov.rank(), 4));
		LoopSum v = single(cov.rank(), smp.random_class(cov.rank(), 4));
		EXPECT_EQ(cov.tau(goldman_bracket(s, u, v)),
		          goldman_bracket(s, cov.tau(u), cov.tau(v)).scaled(-1));
	}
}
