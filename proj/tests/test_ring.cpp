#include <gtest/gtest.h>

#include <random>

#include "blockcert/blockcert.hpp"
#include "support/oracles.hpp"

using namespace blockcert;
using blockcert::testing::var;

namespace {

const IndexSet X3{1, 2, 3};

Polynomial P(const std::string& text, const IndexSet& ground = X3) { return parse_poly(text, ground); }

} // namespace

TEST(IndexSet, SortsAndRejectsDuplicates) {
    IndexSet s{3, 1, 2};
    EXPECT_EQ(s.elements(), (std::vector<Label>{1, 2, 3}));
    EXPECT_THROW(IndexSet({1, 1}), PreconditionError);
    EXPECT_EQ(s.without(2), (IndexSet{1, 3}));
    EXPECT_EQ(IndexSet({1, 3}).with(2), s);
    EXPECT_EQ(s.with(2), s);
}

TEST(PolyAdd, AdditiveInverseIsZero) {
    const Polynomial sum = var(1, 2, X3) + (-var(1, 2, X3));
    EXPECT_TRUE(sum.is_zero());
    EXPECT_FALSE(sum.degree().has_value());
}

TEST(PolyAdd, MergesLikeTerms) {
    EXPECT_EQ(P("2*x[1,2]") + P("3*x[1,2]"), P("5*x[1,2]"));
    ASSERT_EQ((P("2*x[1,2]") + P("3*x[1,2]")).terms().size(), 1u);
}

TEST(PolyAdd, KeepsDistinctTermsSorted) {
    const Polynomial s = var(1, 2, X3) + var(2, 3, X3);
    ASSERT_EQ(s.terms().size(), 2u);
    EXPECT_EQ(s.terms()[0].exps.of({1, 2}), 1u);
    EXPECT_EQ(s.terms()[1].exps.of({2, 3}), 1u);
    EXPECT_EQ(to_string(s), "x[1,2] + x[2,3]");
}

TEST(PolyAdd, MismatchedGroundThrows) {
    EXPECT_THROW(var(1, 2, X3) + var(1, 2, IndexSet{1, 2}), GroundMismatch);
    EXPECT_THROW(var(1, 2, X3) * var(1, 2, IndexSet{1, 2}), GroundMismatch);
}

TEST(PolyMul, ProductOfDistinctVariables) {
    const Polynomial p = var(1, 2, X3) * var(2, 1, X3);
    ASSERT_TRUE(p.is_monomial());
    const auto& powers = p.terms()[0].exps.powers();
    ASSERT_EQ(powers.size(), 2u);
    EXPECT_EQ(powers[0], (Power{{1, 2}, 1}));
    EXPECT_EQ(powers[1], (Power{{2, 1}, 1}));
}

TEST(PolyMul, DifferenceOfSquares) {
    EXPECT_EQ(P("x[1,2] + x[1,3]") * P("x[1,2] - x[1,3]"), P("x[1,2]^2 - x[1,3]^2"));
    EXPECT_EQ(to_string(P("x[1,2] + x[1,3]") * P("x[1,2] - x[1,3]")), "x[1,2]^2 - x[1,3]^2");
}

TEST(PolyMul, ZeroAbsorbs) {
    EXPECT_TRUE((Polynomial(X3) * P("x[1,2]^3 + 7")).is_zero());
}

TEST(PolyMul, HomogeneousDegreesAdd) {
    const Polynomial p = P("x[1,2]^2 + x[2,3]*x[3,1]");
    const Polynomial q = P("x[2,1]^3 - 2*x[1,3]*x[3,2]^2");
    EXPECT_EQ(*(p * q).degree(), 5u);
    EXPECT_TRUE((p * q).is_homogeneous());
}

TEST(TermOrder, GradedThenLexLeadingFirst) {
    const Polynomial p = P("x[2,3] + x[1,2]^2 + 4 + x[1,3]");
    EXPECT_EQ(to_string(p), "x[1,2]^2 + x[1,3] + x[2,3] + 4");
}

TEST(RewriteToBase, WorkedExample) {
    // x23 * x31^2 at z = 1 -> (-x12 + x13) * x13^2
    const Monomial xi(Rational(1), {Power{{2, 3}, 1}, Power{{3, 1}, 2}});
    EXPECT_EQ(rewrite_to_base(xi, 1, X3), P("-x[1,2]*x[1,3]^2 + x[1,3]^3"));
}

TEST(RewriteToBase, SingleReversedVariable) {
    EXPECT_EQ(rewrite_to_base(Monomial::variable({2, 1}), 1, X3), P("-x[1,2]"));
}

TEST(RewriteToBase, AlreadyBase) {
    EXPECT_EQ(rewrite_to_base(Monomial::variable({1, 2}, 3), 1, X3), P("x[1,2]^3"));
}

TEST(RewriteToBase, RejectsForeignBase) {
    EXPECT_THROW(rewrite_to_base(Monomial::variable({1, 2}), 4, X3), PreconditionError);
}

TEST(RewriteToBase, OnlyBaseVariablesSameDegree) {
    std::mt19937_64 rng(7);
    const IndexSet X{1, 2, 3, 4};
    for (int trial = 0; trial < 200; ++trial) {
        const Monomial m = blockcert::testing::random_monomial(X, 1 + trial % 7, rng, Rational(3, 2));
        for (Label z : X) {
            const Polynomial r = rewrite_to_base(m, z, X);
            for (const Monomial& t : r.terms()) {
                EXPECT_EQ(t.degree(), m.degree());
                for (const Power& p : t.exps.powers()) EXPECT_EQ(p.var.i, z);
            }
        }
    }
}

TEST(NormalForm, GeneratorsVanish) {
    EXPECT_TRUE(normal_form(P("x[1,2] + x[2,1]")).is_zero());
    EXPECT_TRUE(normal_form(P("x[1,2] + x[2,3] + x[3,1]")).is_zero());
}

TEST(NormalForm, NonBaseVariable) {
    EXPECT_EQ(normal_form(P("x[2,3]")), P("x[1,3] - x[1,2]"));
}

TEST(NormalForm, GeneratorsVanishExhaustivelyUpToSix) {
    for (std::size_t n = 2; n <= 6; ++n) {
        const IndexSet X = IndexSet::range(1, n);
        for (Label i : X)
            for (Label j : X) {
                if (i == j) continue;
                EXPECT_TRUE(normal_form(var(i, j, X) + var(j, i, X)).is_zero());
                for (Label k : X) {
                    if (k == i || k == j) continue;
                    EXPECT_TRUE(normal_form(var(i, j, X) + var(j, k, X) + var(k, i, X)).is_zero());
                }
            }
    }
}

TEST(EqModI, Examples) {
    EXPECT_TRUE(eq_mod_I(P("x[1,2]"), P("-x[2,1]"), X3));
    EXPECT_TRUE(eq_mod_I(P("x[1,3]"), P("x[1,2] + x[2,3]"), X3));
    // x12 -> t2 - t1 and x13 -> t3 - t1 differ at t = (0, 1, 2).
    EXPECT_FALSE(eq_mod_I(P("x[1,2]"), P("x[1,3]"), X3));
    std::map<Label, Rational> t{{1, 0}, {2, 1}, {3, 2}};
    EXPECT_NE(blockcert::testing::evaluate(P("x[1,2]"), t), blockcert::testing::evaluate(P("x[1,3]"), t));
}

TEST(EqModI, RejectsForeignGround) {
    EXPECT_THROW(eq_mod_I(P("x[1,2]"), P("x[1,2]"), IndexSet{1, 2}), GroundMismatch);
}

class RingProperties : public ::testing::Test {
protected:
    std::mt19937_64 rng{20240611};
    const IndexSet X4{1, 2, 3, 4};
    Polynomial rand() { return blockcert::testing::random_polynomial(X4, rng); }
};

TEST_F(RingProperties, NormalFormIsIdempotent) {
    for (int k = 0; k < 500; ++k) {
        const Polynomial p = rand();
        const Polynomial n = normal_form(p);
        EXPECT_EQ(normal_form(n), n);
    }
}

TEST_F(RingProperties, NormalFormIsARingHomomorphism) {
    for (int k = 0; k < 300; ++k) {
        const Polynomial p = rand();
        const Polynomial q = rand();
        EXPECT_EQ(normal_form(p * q), normal_form(normal_form(p) * normal_form(q)));
        EXPECT_EQ(normal_form(p + q), normal_form(normal_form(p) + normal_form(q)));
    }
}

TEST_F(RingProperties, NormalFormPreservesHomogeneousDegree) {
    for (int k = 0; k < 200; ++k) {
        const std::uint64_t d = 1 + k % 6;
        const Polynomial p = blockcert::testing::random_homogeneous(X4, d, rng);
        const Polynomial n = normal_form(p);
        for (const Monomial& m : n.terms()) EXPECT_EQ(m.degree(), d);
    }
}

TEST_F(RingProperties, RingAxioms) {
    for (int k = 0; k < 200; ++k) {
        const Polynomial a = rand(), b = rand(), c = rand();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST_F(RingProperties, NormalFormAgreesWithEvaluation) {
    for (int k = 0; k < 200; ++k) {
        const Polynomial p = rand();
        const auto t = blockcert::testing::random_point(X4, rng);
        EXPECT_EQ(blockcert::testing::evaluate(p, t), blockcert::testing::evaluate(normal_form(p), t));
    }
}

TEST_F(RingProperties, ZeroNormalFormIffEvaluationVanishes) {
    // Elements of I built from generators times random multipliers.
    for (int k = 0; k < 100; ++k) {
        const Polynomial gen = var(2, 3, X4) + var(3, 4, X4) + var(4, 2, X4);
        const Polynomial p = gen * rand() + (var(1, 3, X4) + var(3, 1, X4)) * rand();
        EXPECT_TRUE(normal_form(p).is_zero());
    }
}
