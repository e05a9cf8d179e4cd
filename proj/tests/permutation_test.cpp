#include "paprlab/permutation.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

namespace paprlab {
namespace {

TEST(PermUnrank, FirstAndLast) {
    EXPECT_EQ(perm_unrank({0, 4}).mapping, (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_EQ(perm_unrank({23, 4}).mapping, (std::vector<std::size_t>{3, 2, 1, 0}));
}

TEST(PermUnrank, MatchesEnumeration) {
    const auto table = oracle::all_permutations(4);
    EXPECT_EQ(table[5], (std::vector<std::size_t>{0, 3, 2, 1}));
    EXPECT_EQ(perm_unrank({5, 4}).mapping, table[5]);
}

TEST(PermRank, KnownValues) {
    EXPECT_EQ(perm_rank(Permutation{{0, 1, 2, 3}}).rank, 0u);
    EXPECT_EQ(perm_rank(Permutation{{3, 2, 1, 0}}).rank, 23u);
    EXPECT_EQ(perm_rank(Permutation{{0, 3, 2, 1}}).rank, 5u);
    EXPECT_EQ(perm_rank(Permutation{{1, 2, 3, 0}}).rank, 9u);
}

TEST(PermRank, RejectsNonBijection) {
    EXPECT_THROW(perm_rank(Permutation{{0, 0, 1}}), std::invalid_argument);
    EXPECT_THROW(perm_rank(Permutation{{0, 3, 1}}), std::invalid_argument);
    EXPECT_THROW(perm_rank(Permutation{}), std::invalid_argument);
}

TEST(PermUnrank, RejectsOutOfRange) {
    EXPECT_THROW(perm_unrank({24, 4}), std::invalid_argument);
    EXPECT_THROW(perm_unrank({0, 0}), std::invalid_argument);
    EXPECT_THROW(perm_unrank({0, 21}), std::invalid_argument);
}

TEST(Permutation, ExhaustiveBijectionUpToSix) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto table = oracle::all_permutations(n);
        ASSERT_EQ(table.size(), factorial(n));
        std::set<std::vector<std::size_t>> seen;
        for (std::uint64_t r = 0; r < factorial(n); ++r) {
            const auto p = perm_unrank({r, n});
            EXPECT_EQ(p.mapping, table[r]);
            EXPECT_TRUE(seen.insert(p.mapping).second);
            EXPECT_EQ(perm_rank(p), (PermutationRank{r, n}));
        }
    }
}

TEST(Permutation, LargeRanksRoundTrip) {
    const std::uint64_t last = factorial(20) - 1;
    for (std::uint64_t r : {std::uint64_t{0}, std::uint64_t{1}, last / 3, last / 2 + 7, last}) {
        EXPECT_EQ(perm_rank(perm_unrank({r, 20})).rank, r);
    }
    std::vector<std::size_t> reversed(20);
    for (std::size_t i = 0; i < 20; ++i) reversed[i] = 19 - i;
    EXPECT_EQ(perm_unrank({last, 20}).mapping, reversed);
}

TEST(Permutation, InverseComposesToIdentity) {
    for (std::uint64_t r = 0; r < factorial(5); ++r) {
        const auto p = perm_unrank({r, 5});
        const auto q = inverse(p);
        for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(q.mapping[p.mapping[i]], i);
    }
}

TEST(Factorial, Range) {
    EXPECT_EQ(factorial(0), 1u);
    EXPECT_EQ(factorial(8), 40320u);
    EXPECT_EQ(factorial(20), 2432902008176640000ULL);
    EXPECT_THROW(factorial(21), std::invalid_argument);
}

TEST(RankBits, CeilLog2OfFactorial) {
    EXPECT_EQ(rank_bits(1), 0u);
    EXPECT_EQ(rank_bits(2), 1u);
    EXPECT_EQ(rank_bits(4), 5u);   // 24
    EXPECT_EQ(rank_bits(8), 16u);  // 40320
    EXPECT_EQ(rank_bits(16), 45u);
}

}  // namespace
}  // namespace paprlab
