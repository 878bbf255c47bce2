#include <gtest/gtest.h>

#include "blockcert/blockcert.hpp"

using namespace blockcert;

TEST(EnumerateBlocks, TwoElements) {
    const auto blocks = enumerate_blocks(IndexSet{1, 2});
    ASSERT_EQ(blocks.size(), 2u);
    EXPECT_EQ(blocks[0].left(), IndexSet{1});
    EXPECT_EQ(blocks[0].right(), IndexSet{2});
    EXPECT_EQ(blocks[1].left(), IndexSet{2});
    EXPECT_EQ(blocks[1].right(), IndexSet{1});
}

TEST(EnumerateBlocks, CountsAndPartitions) {
    for (std::size_t n = 2; n <= 6; ++n) {
        const IndexSet X = IndexSet::range(1, n);
        const auto blocks = enumerate_blocks(X);
        EXPECT_EQ(blocks.size(), (std::size_t{1} << n) - 2);
        for (const Block& b : blocks) {
            EXPECT_TRUE(b.left().disjoint_from(b.right()));
            EXPECT_EQ(b.left().set_union(b.right()), X);
            EXPECT_EQ(b.pairs().size(), b.height() * b.width());
        }
    }
    EXPECT_EQ(enumerate_blocks(IndexSet{1, 2, 3}).size(), 6u);
    EXPECT_EQ(enumerate_blocks(IndexSet{1, 2, 3, 4}).size(), 14u);
}

TEST(EnumerateBlocks, TooSmall) { EXPECT_THROW(enumerate_blocks(IndexSet{1}), GroundTooSmall); }

TEST(Block, RejectsImproperLeftSets) {
    EXPECT_THROW(Block(IndexSet{1, 2, 3}, IndexSet{}), PreconditionError);
    EXPECT_THROW(Block(IndexSet{1, 2, 3}, IndexSet{1, 2, 3}), PreconditionError);
    EXPECT_THROW(Block(IndexSet{1, 2, 3}, IndexSet{4}), PreconditionError);
}

TEST(SelectZ, SingleHeavyPair) {
    PairCountTable t(IndexSet{1, 2, 3});
    t.set(1, 2, 11);
    EXPECT_EQ(select_z(t, 2), 3u);
    EXPECT_EQ(t.total_avoiding(3), 11u);
}

TEST(SelectZ, SmallestQualifyingLabel) {
    PairCountTable t(IndexSet{1, 2, 3});
    t.set(1, 2, 4);
    t.set(1, 3, 4);
    t.set(2, 3, 3);
    // z = 1 leaves 3 < 4, z = 2 leaves 4 >= 4.
    EXPECT_EQ(select_z(t, 2), 2u);
}

TEST(SelectZ, TotalBelowBound) {
    PairCountTable t(IndexSet{1, 2, 3});
    t.set(1, 2, 10);
    EXPECT_THROW(select_z(t, 2), DegreeBelowBound);
}

TEST(SelectZ, GroundTooSmallAndBadG) {
    PairCountTable t(IndexSet{1, 2});
    t.set(1, 2, 100);
    EXPECT_THROW(select_z(t, 2), GroundTooSmall);
    PairCountTable u(IndexSet{1, 2, 3});
    u.set(1, 2, 100);
    EXPECT_THROW(select_z(u, 1), PreconditionError);
}

TEST(PairCountTable, FromMonomialSumsBothOrientations) {
    const Monomial m(Rational(1), {Power{{1, 2}, 3}, Power{{2, 1}, 2}, Power{{3, 1}, 1}});
    const auto t = PairCountTable::from_monomial(m, IndexSet{1, 2, 3});
    EXPECT_EQ(t.count(1, 2), 5u);
    EXPECT_EQ(t.count(2, 1), 5u);
    EXPECT_EQ(t.count(1, 3), 1u);
    EXPECT_EQ(t.total(), m.degree());
}

TEST(SplitAtZ, PartitionsVariables) {
    const IndexSet X{1, 2, 3};
    const Monomial zeta(Rational(1), {Power{{1, 2}, 2}, Power{{1, 3}, 1}, Power{{2, 3}, 3}});
    const ZSplit s = split_at_z(zeta, 3, X);
    EXPECT_EQ(s.q, Monomial(Rational(1), {Power{{1, 3}, 1}, Power{{2, 3}, 3}}));
    EXPECT_EQ(s.r, Monomial(Rational(1), {Power{{1, 2}, 2}}));
    EXPECT_EQ(s.q * s.r, zeta);
}

TEST(SplitAtZ, EmptyQ) {
    const ZSplit s = split_at_z(Monomial::variable({1, 2}, 5), 3, IndexSet{1, 2, 3});
    EXPECT_EQ(s.q.degree(), 0u);
    EXPECT_EQ(s.r, Monomial::variable({1, 2}, 5));
}

TEST(SplitAtZ, EmptyRKeepsCoefficientOnQ) {
    const Monomial zeta(Rational(7), {Power{{1, 3}, 1}, Power{{3, 1}, 1}});
    const ZSplit s = split_at_z(zeta, 3, IndexSet{1, 2, 3});
    EXPECT_EQ(s.q, zeta);
    EXPECT_EQ(s.r, Monomial(Rational(1), Exponents{}));
}

TEST(SplitAtZ, ReconstructsProduct) {
    const IndexSet X{1, 2, 3, 4};
    const Monomial zeta(Rational(-3, 5), {Power{{1, 2}, 2}, Power{{4, 1}, 1}, Power{{2, 3}, 3}, Power{{3, 4}, 2}});
    for (Label z : X) {
        const ZSplit s = split_at_z(zeta, z, X);
        EXPECT_EQ(s.q * s.r, zeta);
    }
}

TEST(BranchOfSplit, PicksWWhenHShort) {
    // |X| = 3, g = 2, z = 1, left = {2}, right = {3}; deg 7 = 11 - 4.
    const Monomial p(Rational(1), {Power{{1, 2}, 3}, Power{{1, 3}, 4}});
    const BranchChoice c = branch_of_split(p, 1, IndexSet{2}, IndexSet{3}, 2);
    EXPECT_EQ(c.branch, Branch::W);
    EXPECT_EQ(c.p_w.degree(), 4u);
    EXPECT_EQ(c.sub_bound, 4);
    EXPECT_EQ(c.p_h * c.p_w, p);
}

TEST(BranchOfSplit, PicksH) {
    const Monomial p(Rational(1), {Power{{1, 2}, 7}});
    EXPECT_EQ(branch_of_split(p, 1, IndexSet{2}, IndexSet{3}, 2).branch, Branch::H);
}

TEST(BranchOfSplit, TiePrefersH) {
    const Monomial p(Rational(1), {Power{{1, 2}, 4}, Power{{1, 3}, 4}});
    EXPECT_EQ(branch_of_split(p, 1, IndexSet{2}, IndexSet{3}, 2).branch, Branch::H);
}

TEST(BranchOfSplit, DegreeBelowBound) {
    const Monomial p(Rational(1), {Power{{1, 2}, 3}, Power{{1, 3}, 3}});
    EXPECT_THROW(branch_of_split(p, 1, IndexSet{2}, IndexSet{3}, 2), DegreeBelowBound);
}

TEST(BranchOfSplit, RejectsNonBaseVariables) {
    const Monomial p(Rational(1), {Power{{2, 3}, 9}});
    EXPECT_THROW(branch_of_split(p, 1, IndexSet{2}, IndexSet{3}, 2), PreconditionError);
}

TEST(PivotLemma, ExhaustiveSmall) {
    for (std::int64_t g : {2, 3}) {
        const SuiteResult r = check_pivot_lemma_exhaustive(IndexSet{1, 2, 3}, g);
        EXPECT_TRUE(r.passed()) << r.first_failure;
    }
    // C(13,2) compositions of 11 into 3 parts.
    EXPECT_EQ(check_pivot_lemma_exhaustive(IndexSet{1, 2, 3}, 2).checked, 78u);
}

TEST(PivotLemma, ExhaustiveFourLabels) {
    const SuiteResult r = check_pivot_lemma_exhaustive(IndexSet{1, 2, 3, 4}, 2);
    EXPECT_EQ(r.checked, 80730u);  // C(27,5)
    EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(PartitionLemma, ExhaustiveUpToSix) {
    for (std::size_t n = 3; n <= 6; ++n)
        for (std::int64_t g : {2, 3}) {
            const SuiteResult r = check_partition_lemma(IndexSet::range(1, n), g);
            EXPECT_TRUE(r.passed()) << "n=" << n << " g=" << g << ": " << r.first_failure;
        }
}

TEST(Compositions, SamplerStaysOnSimplex) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 1000; ++k) {
        const auto c = random_composition(11, 6, rng);
        ASSERT_EQ(c.size(), 6u);
        std::uint64_t s = 0;
        for (auto x : c) s += x;
        EXPECT_EQ(s, 11u);
    }
}
