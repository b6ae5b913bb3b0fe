#include <gtest/gtest.h>

#include <vector>

#include "omcert/lemma6.hpp"
#include "omcert/strong_map.hpp"

using namespace omcert;

namespace {

const lemma6::Lemma6Certificate& survivors()
{
    static const lemma6::Lemma6Certificate cert = lemma6::enumerate_survivors(lemma6::build_search_instance());
    return cert;
}

} // namespace

TEST(StrongMap, PremiseSixElements)
{
    const TopeSet source = topes_of(alternating_chirotope(6, 4));
    const TopeSet target = topes_of(m2_chirotope(6));
    const StrongMapVerdict v = is_strong_map_topes(source, target);
    EXPECT_TRUE(v.holds);
    EXPECT_EQ(v.corank, 2);
    EXPECT_EQ(v.method, StrongMapMethod::tope_inclusion);
    EXPECT_FALSE(v.witness);

    const StrongMapVerdict c =
        is_strong_map_covectors(covectors_from_topes(source), covectors_from_topes(target), 4, 2);
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.corank, 2);
    EXPECT_STREQ(to_string(c.method), "covector-containment");
}

TEST(StrongMap, PremiseEightElements)
{
    const StrongMapVerdict v = is_strong_map_topes(topes_of(alternating_chirotope(8, 4)), topes_of(m2_chirotope(8)));
    EXPECT_TRUE(v.holds);
    EXPECT_EQ(v.corank, 2);
}

TEST(StrongMap, ReverseDirectionFailsWithWitness)
{
    const TopeSet big = topes_of(alternating_chirotope(6, 4));
    const TopeSet small = topes_of(m2_chirotope(6));
    const StrongMapVerdict v = is_strong_map_topes(small, big);
    EXPECT_FALSE(v.holds);
    ASSERT_TRUE(v.witness);
    EXPECT_FALSE(small.contains(*v.witness));

    const StrongMapVerdict c = is_strong_map_covectors(covectors_from_topes(small), covectors_from_topes(big), 2, 4);
    EXPECT_FALSE(c.holds);
    ASSERT_TRUE(c.witness);
    // the first missing covector in string order
    for (const auto& x : covectors_from_topes(big)) {
        if (covectors_from_topes(small).contains(x)) continue;
        EXPECT_EQ(x, *c.witness);
        break;
    }
}

TEST(StrongMap, Reflexive)
{
    const CovectorSet l = covectors_from_topes(topes_of(alternating_chirotope(6, 3)));
    const StrongMapVerdict v = is_strong_map_covectors(l, l, 3, 3);
    EXPECT_TRUE(v.holds);
    EXPECT_EQ(v.corank, 0);
}

TEST(StrongMap, GroundSetMismatch)
{
    EXPECT_THROW(static_cast<void>(is_strong_map_topes(topes_of(alternating_chirotope(6, 4)),
                                                       topes_of(m2_chirotope(8)))),
                 std::invalid_argument);
}

TEST(StrongMap, ExtensionExamples)
{
    const TopeSet m2 = topes_of(m2_chirotope(6));
    EXPECT_FALSE(is_covector_by_extension(SignedVector(GroundSet(6)), m2));
    for (const auto& t : m2) EXPECT_TRUE(is_covector_by_extension(t, m2));
    for (const auto& s : survivors().survivors)
        EXPECT_FALSE(is_covector_by_extension(parse_signed_vector("+-+-00"), s.topes));
}

TEST(StrongMap, ExtensionCriterionMatchesMembership)
{
    std::vector<TopeSet> instances{topes_of(alternating_chirotope(6, 4)), topes_of(m2_chirotope(6))};
    for (const auto& s : survivors().survivors) instances.push_back(s.topes);
    const auto all = all_signed_vectors(GroundSet(6));
    for (const auto& topes : instances) {
        const CovectorSet covectors = covectors_from_topes(topes);
        // the zero vector is a covector, yet its completions cover every full vector
        EXPECT_FALSE(is_covector_by_extension(SignedVector(GroundSet(6)), topes));
        for (const auto& x : all)
            if (!x.is_zero()) {
                ASSERT_EQ(is_covector_by_extension(x, topes), covectors.contains(x)) << x.to_string();
            }
    }
}

TEST(StrongMap, SandwichMapsAgreeAcrossMethods)
{
    const TopeSet source = topes_of(alternating_chirotope(6, 4));
    const TopeSet target = topes_of(m2_chirotope(6));
    const CovectorSet source_l = covectors_from_topes(source);
    const CovectorSet target_l = covectors_from_topes(target);
    int maps = 0;
    for (const auto& s : survivors().survivors) {
        const CovectorSet mid = covectors_from_topes(s.topes);
        const StrongMapVerdict upper = is_strong_map_topes(source, s.topes);
        const StrongMapVerdict lower = is_strong_map_topes(s.topes, target);
        EXPECT_TRUE(upper.holds);
        EXPECT_TRUE(lower.holds);
        EXPECT_EQ(upper.corank, 1);
        EXPECT_EQ(lower.corank, 1);
        EXPECT_EQ(is_strong_map_covectors(source_l, mid, 4, 3).holds, upper.holds);
        EXPECT_EQ(is_strong_map_covectors(mid, target_l, 3, 2).holds, lower.holds);
        maps += 2;
    }
    EXPECT_EQ(maps, 40);
}

TEST(StrongMap, MethodsAgreeOnAllInstancePairs)
{
    std::vector<std::pair<TopeSet, int>> instances{{topes_of(alternating_chirotope(6, 4)), 4},
                                                   {topes_of(m2_chirotope(6)), 2}};
    for (const auto& s : survivors().survivors) instances.emplace_back(s.topes, 3);
    std::vector<CovectorSet> covectors;
    for (const auto& [t, r] : instances) covectors.push_back(covectors_from_topes(t));
    for (std::size_t i = 0; i < instances.size(); ++i)
        for (std::size_t j = 0; j < instances.size(); ++j)
            EXPECT_EQ(is_strong_map_topes(instances[i].first, instances[j].first).holds,
                      is_strong_map_covectors(covectors[i], covectors[j], instances[i].second, instances[j].second).holds)
                << i << " -> " << j;
}
