#include <gtest/gtest.h>

#include <vector>

#include "omcert/chirotope.hpp"
#include "omcert/combinatorics.hpp"
#include "oracles.hpp"

using namespace omcert;

TEST(Combinatorics, Binomial)
{
    EXPECT_EQ(binomial(20, 10), 184756U);
    EXPECT_EQ(binomial(6, 4), 15U);
    EXPECT_EQ(binomial(8, 4), 70U);
    EXPECT_EQ(binomial(5, 7), 0U);
    EXPECT_EQ(binomial(56, 21), 1346766106565880U);
    EXPECT_THROW(static_cast<void>(binomial(-1, 0)), std::invalid_argument);
}

TEST(Combinatorics, Phi)
{
    EXPECT_EQ(phi(3, 5), 26U);
    EXPECT_EQ(phi(1, 5), 6U);
    EXPECT_EQ(phi(2, 5), 16U);
    EXPECT_EQ(phi(3, 7), 64U);
    EXPECT_EQ(phi(0, 0), 1U);
    EXPECT_THROW(static_cast<void>(phi(6, 5)), std::invalid_argument);
    EXPECT_THROW(static_cast<void>(phi(-1, 5)), std::invalid_argument);
}

TEST(Combinatorics, RankUnrankRoundTrip)
{
    const int n = 9;
    const int k = 4;
    std::vector<int> c{0, 1, 2, 3};
    std::uint64_t rank = 0;
    do {
        EXPECT_EQ(rank_combination(c, n), rank);
        EXPECT_EQ(unrank_combination(rank, n, k), c);
        ++rank;
    } while (next_combination(c, n));
    EXPECT_EQ(rank, binomial(n, k));
    EXPECT_THROW(static_cast<void>(unrank_combination(rank, n, k)), std::out_of_range);
}

TEST(Combinatorics, SubsetsOfSizeAreLexicographic)
{
    const auto subsets = subsets_of_size(6, 4);
    ASSERT_EQ(subsets.size(), 15U);
    EXPECT_EQ(subsets.front().to_key(), "1,2,3,4");
    EXPECT_EQ(subsets[1].to_key(), "1,2,3,5");
    EXPECT_EQ(subsets.back().to_key(), "3,4,5,6");
}

TEST(ChirotopeTest, AlternatingValues)
{
    const Chirotope a64 = alternating_chirotope(6, 4);
    EXPECT_EQ(a64.values().size(), 15U);
    for (auto v : a64.values()) EXPECT_EQ(v, 1);
    const Chirotope a84 = alternating_chirotope(8, 4);
    EXPECT_EQ(a84.values().size(), 70U);
    for (auto v : a84.values()) EXPECT_EQ(v, 1);
    const Chirotope a21 = alternating_chirotope(2, 1);
    EXPECT_EQ(a21({1}), 1);
    EXPECT_EQ(a21({2}), 1);
    EXPECT_THROW(static_cast<void>(alternating_chirotope(4, 5)), std::invalid_argument);
    EXPECT_THROW(static_cast<void>(alternating_chirotope(4, 0)), std::invalid_argument);
}

TEST(ChirotopeTest, AlternatingMatchesMomentCurve)
{
    for (auto [n, r] : {std::pair{6, 4}, std::pair{8, 4}, std::pair{5, 3}}) {
        const Chirotope chi = alternating_chirotope(n, r);
        for (ElementSet s : subsets_of_size(n, r)) EXPECT_EQ(chi.sorted_value(s.elements()), oracle::moment_chirotope(s.elements()));
    }
}

TEST(ChirotopeTest, Alternation)
{
    const Chirotope chi = alternating_chirotope(6, 3);
    EXPECT_EQ(chi({1, 2, 3}), 1);
    EXPECT_EQ(chi({2, 1, 3}), -1);
    EXPECT_EQ(chi({3, 1, 2}), 1);
    EXPECT_EQ(chi({3, 2, 1}), -1);
    EXPECT_EQ(chi({1, 1, 2}), 0);
    EXPECT_THROW(static_cast<void>(chi({1, 2})), std::invalid_argument);
    EXPECT_THROW(static_cast<void>(chi({1, 2, 7})), std::invalid_argument);
}

TEST(ChirotopeTest, M2OnFourElements)
{
    // sigma = (1 2)(3 4) evaluated by hand: chi(i,j) = +1 iff sigma(i) >= sigma(j)
    const int sigma[] = {0, 2, 1, 4, 3};
    const Chirotope chi = m2_chirotope(4);
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) EXPECT_EQ(chi({i, j}), sigma[i] >= sigma[j] ? 1 : -1) << i << "," << j;
    EXPECT_EQ(chi({1, 2}), 1);
    EXPECT_EQ(chi({3, 4}), 1);
    EXPECT_EQ(chi({1, 3}), -1);
    EXPECT_EQ(chi({1, 4}), -1);
    EXPECT_EQ(chi({2, 3}), -1);
    EXPECT_EQ(chi({2, 4}), -1);
}

TEST(ChirotopeTest, M2Properties)
{
    EXPECT_EQ(m2_chirotope(6)({1, 2}), 1);
    for (int n : {2, 4, 6, 8, 10}) EXPECT_TRUE(is_uniform(m2_chirotope(n)));
    EXPECT_THROW(static_cast<void>(m2_chirotope(7)), std::invalid_argument);
    EXPECT_THROW(static_cast<void>(m2_chirotope(0)), std::invalid_argument);
}

TEST(ChirotopeTest, Uniformity)
{
    EXPECT_TRUE(is_uniform(alternating_chirotope(6, 4)));
    EXPECT_TRUE(is_uniform(m2_chirotope(8)));
    std::vector<std::int8_t> values(15, 1);
    values[3] = 0;
    EXPECT_FALSE(is_uniform(Chirotope(6, 4, values)));
}

TEST(ChirotopeTest, ConstructionErrors)
{
    EXPECT_THROW(Chirotope(4, 2, std::vector<std::int8_t>(5, 1)), std::invalid_argument);
    EXPECT_THROW(Chirotope(4, 2, std::vector<std::int8_t>(6, 0)), std::invalid_argument);
    EXPECT_THROW(Chirotope(4, 2, std::vector<std::int8_t>(6, 2)), std::invalid_argument);
}

TEST(ChirotopeTest, EqualityUpToSign)
{
    const Chirotope chi = m2_chirotope(6);
    std::vector<std::int8_t> negated(chi.values().begin(), chi.values().end());
    for (auto& v : negated) v = static_cast<std::int8_t>(-v);
    const Chirotope minus(6, 2, negated);
    EXPECT_FALSE(chi == minus);
    EXPECT_TRUE(same_oriented_matroid(chi, minus));
    EXPECT_FALSE(same_oriented_matroid(chi, alternating_chirotope(6, 2)));
    EXPECT_FALSE(same_oriented_matroid(chi, alternating_chirotope(6, 4)));
}

TEST(ChirotopeTest, RestrictAlternating)
{
    const Chirotope a84 = alternating_chirotope(8, 4);
    EXPECT_EQ(restrict_chirotope(a84, {1, 2, 3, 4, 5, 6}), alternating_chirotope(6, 4));
    EXPECT_EQ(restrict_chirotope(a84, {1, 2, 5, 6, 7, 8}), alternating_chirotope(6, 4));
}

TEST(ChirotopeTest, RestrictM2PreservesPairs)
{
    // element-by-element comparison of all 15 pairs after relabeling
    const std::vector<int> keep{1, 2, 5, 6, 7, 8};
    const Chirotope big = m2_chirotope(8);
    const Chirotope small = m2_chirotope(6);
    const Chirotope restricted = restrict_chirotope(big, keep);
    int compared = 0;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            EXPECT_EQ(restricted({i, j}), big({keep[i - 1], keep[j - 1]}));
            EXPECT_EQ(restricted({i, j}), small({i, j}));
            ++compared;
        }
    EXPECT_EQ(compared, 15);
    EXPECT_TRUE(same_oriented_matroid(restricted, small));
    // keeping a set that splits sigma-pairs gives something else
    EXPECT_FALSE(same_oriented_matroid(restrict_chirotope(big, {1, 3, 4, 5, 6, 7}), small));
}

TEST(ChirotopeTest, RestrictErrors)
{
    EXPECT_THROW(static_cast<void>(restrict_chirotope(alternating_chirotope(6, 4), {1, 2, 3})), std::invalid_argument);
    EXPECT_THROW(static_cast<void>(restrict_chirotope(alternating_chirotope(6, 4), {3, 2, 1, 4})), std::invalid_argument);
    // rank drops when every kept 2-subset is dependent
    std::vector<std::int8_t> values{0, 1, 1, 1, 1, 1}; // only chi(1,2) vanishes
    EXPECT_THROW(static_cast<void>(restrict_chirotope(Chirotope(4, 2, values), {1, 2})), std::invalid_argument);
}

TEST(ChirotopeTest, ContractAlternating)
{
    EXPECT_EQ(contract_chirotope(alternating_chirotope(6, 4), 1), alternating_chirotope(5, 3));
}

TEST(ChirotopeTest, ContractAlternatingMiddleElement)
{
    // chi'(1) = chi(2,1) = -1, chi'(3) = chi(2,3) = +1, chi'(4) = chi(2,4) = +1, relabeled 1,2,3
    const Chirotope c = contract_chirotope(alternating_chirotope(4, 2), 2);
    EXPECT_EQ(c.ground_size(), 3);
    EXPECT_EQ(c.rank(), 1);
    EXPECT_EQ(std::vector<std::int8_t>(c.values().begin(), c.values().end()), (std::vector<std::int8_t>{-1, 1, 1}));
}

TEST(ChirotopeTest, ContractLoopFails)
{
    // element 4 is a loop: every pair containing it is zero
    const Chirotope with_loop = chirotope_from(4, 2, [](std::span<const int> t) { return t[1] == 4 ? 0 : 1; });
    EXPECT_THROW(static_cast<void>(contract_chirotope(with_loop, 4)), std::invalid_argument);
    EXPECT_NO_THROW(static_cast<void>(contract_chirotope(with_loop, 1)));
}
