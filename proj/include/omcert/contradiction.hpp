#pragma once

// The eight-element argument: alternating(8,4) -> m2(8) is a strong map of
// corank 2, and any rank-3 uniform intermediate would restrict on
// {1,...,6} and on {1,2,5,6,7,8} to an intermediate of the six-element
// search, forcing two different circuits on {1,2,5,6}.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chirotope.hpp"
#include "combinatorics.hpp"
#include "lemma6.hpp"
#include "oriented_matroid.hpp"
#include "signed_vector.hpp"
#include "strong_map.hpp"

namespace omcert::n8 {

inline constexpr int kGroundSize = 8;
inline constexpr int kSourceRank = 4;
inline constexpr ElementSet kConflictSupport = ElementSet::of({1, 2, 5, 6});
inline constexpr std::array<int, 6> kKeepA{1, 2, 3, 4, 5, 6};
inline constexpr std::array<int, 6> kKeepB{1, 2, 5, 6, 7, 8};

[[nodiscard]] inline StrongMapVerdict verify_premise_n8()
{
    const TopeSet source = topes_of(alternating_chirotope(kGroundSize, kSourceRank));
    const TopeSet target = topes_of(m2_chirotope(kGroundSize));
    if (!check_uniform_tope_axioms(target).passed())
        throw std::logic_error("m2(8) topes fail the uniform tope axioms; tope inclusion does not apply");
    return is_strong_map_topes(source, target);
}

struct RestrictionCheck {
    std::vector<int> kept;
    bool m1_restricted_equals_alternating = false;
    bool m2_restricted_equals_m2_6 = false;
    /// Six-element circuit on the relabeled image of {1,2,5,6}.
    SignedVector restricted_circuit{GroundSet(lemma6::kGroundSize)};
    SignedVector lifted_circuit{GroundSet(kGroundSize)};

    [[nodiscard]] bool passed() const noexcept
    {
        return m1_restricted_equals_alternating && m2_restricted_equals_m2_6;
    }
};

/// Positions (1-based) inside `kept` of the elements of `subset`.
[[nodiscard]] inline ElementSet relabel(ElementSet subset, std::span<const int> kept)
{
    ElementSet out;
    for (std::size_t j = 0; j < kept.size(); ++j)
        if (subset.contains(kept[j])) out.bits |= std::uint32_t{1} << j;
    if (out.size() != subset.size()) throw std::invalid_argument("subset is not contained in the kept elements");
    return out;
}

/// Compares both restricted chirotopes with the six-element pair and lifts
/// the six-element circuit living on the image of {1,2,5,6} back to [8].
[[nodiscard]] inline RestrictionCheck check_restriction(std::span<const int> kept,
                                                        const std::pair<SignedVector, SignedVector>& lemma_circuits)
{
    const bool known = std::ranges::equal(kept, kKeepA) || std::ranges::equal(kept, kKeepB);
    if (!known) throw std::invalid_argument("check_restriction supports kept sets {1..6} and {1,2,5,6,7,8} only");

    RestrictionCheck check;
    check.kept.assign(kept.begin(), kept.end());
    check.m1_restricted_equals_alternating =
        same_oriented_matroid(restrict_chirotope(alternating_chirotope(kGroundSize, kSourceRank), kept),
                              alternating_chirotope(lemma6::kGroundSize, kSourceRank));
    check.m2_restricted_equals_m2_6 =
        same_oriented_matroid(restrict_chirotope(m2_chirotope(kGroundSize), kept), m2_chirotope(lemma6::kGroundSize));

    const ElementSet image = relabel(kConflictSupport, kept);
    if (lemma_circuits.first.support() == image)
        check.restricted_circuit = lemma_circuits.first;
    else if (lemma_circuits.second.support() == image)
        check.restricted_circuit = lemma_circuits.second;
    else
        throw std::invalid_argument("no six-element circuit is supported on {" + image.to_key() + "}");
    check.lifted_circuit = lift(check.restricted_circuit, kept, GroundSet(kGroundSize));
    return check;
}

[[nodiscard]] inline RestrictionCheck check_restriction(std::span<const int> kept)
{
    return check_restriction(kept, {lemma6::kCircuitA, lemma6::kCircuitB});
}

/// Same support, yet neither equal nor opposite: two incompatible circuits.
[[nodiscard]] inline bool circuits_conflict(const SignedVector& a, const SignedVector& b)
{
    require_same_ground(a, b);
    return !a.is_zero() && a.support() == b.support() && a != b && a != opposite(b);
}

enum class AssumptionKind { empirically_checked, trusted_citation };

struct NamedAssumption {
    std::string name;
    std::string statement;
    AssumptionKind kind = AssumptionKind::trusted_citation;
    std::optional<bool> check_passed; ///< set for empirically checked assumptions
};

/// Every survivor has exactly one circuit pair on each 4-subset.
[[nodiscard]] inline bool check_unique_circuits(const lemma6::Lemma6Certificate& cert)
{
    for (const auto& s : cert.survivors) {
        for (ElementSet q : subsets_of_size(lemma6::kGroundSize, lemma6::kIntermediateRank + 1)) {
            try {
                static_cast<void>(circuit_on_support(s.topes, q));
            } catch (const std::domain_error&) {
                return false;
            }
        }
    }
    return true;
}

/// For every survivor and every 5-element deletion: the restricted topes form
/// a rank-3 uniform tope set whose circuits are the parent circuits.
[[nodiscard]] inline bool check_deletion_circuits(const lemma6::Lemma6Certificate& cert)
{
    const int n = lemma6::kGroundSize;
    const int r = lemma6::kIntermediateRank;
    for (const auto& s : cert.survivors) {
        for (ElementSet keep_set : subsets_of_size(n, n - 1)) {
            const std::vector<int> keep = keep_set.elements();
            const TopeSet deleted = restrict_topes(s.topes, keep);
            if (!check_uniform_tope_axioms(deleted).passed()) return false;
            for (ElementSet q : subsets_of_size(n, r + 1)) {
                if ((q.bits & ~keep_set.bits) != 0) continue;
                const SignedVector child = circuit_on_support(deleted, relabel(q, keep));
                if (lift(child, keep, GroundSet(n)) != circuit_on_support(s.topes, q)) return false;
            }
        }
    }
    return true;
}

struct ContradictionCertificate {
    StrongMapVerdict premise_strong_map;
    lemma6::Lemma6Certificate lemma6;
    bool lemma6_verified = false;
    RestrictionCheck restriction_a;
    RestrictionCheck restriction_b;
    bool circuits_conflict = false;
    std::vector<NamedAssumption> assumptions;
    std::string failing_stage; ///< empty when every stage passed

    [[nodiscard]] bool nonfactorizable() const noexcept { return failing_stage.empty(); }
    [[nodiscard]] const char* verdict() const noexcept { return nonfactorizable() ? "nonfactorizable" : "invalid"; }
};

[[nodiscard]] inline std::vector<NamedAssumption> standard_assumptions(const lemma6::Lemma6Certificate& cert)
{
    return {
        {"deletion-circuits",
         "the circuits of a deletion are exactly the circuits of the parent supported inside the kept elements",
         AssumptionKind::empirically_checked, check_deletion_circuits(cert)},
        {"unique-circuit-per-support",
         "a uniform rank-r oriented matroid has exactly one circuit pair on every (r+1)-subset",
         AssumptionKind::empirically_checked, check_unique_circuits(cert)},
        {"uniform-intermediate",
         "a rank-3 intermediate may be taken uniform by perturbing the extension element "
         "(standard perturbation result for single-element extensions in the oriented matroid literature)",
         AssumptionKind::trusted_citation, std::nullopt},
    };
}

/// Assembles every stage; the first failing stage is named in the result.
[[nodiscard]] inline ContradictionCertificate build_contradiction_certificate(lemma6::Lemma6Certificate lemma,
                                                                              const TopeSet& lemma_source)
{
    ContradictionCertificate cert{verify_premise_n8(),
                                  std::move(lemma),
                                  false,
                                  {},
                                  {},
                                  false,
                                  {},
                                  {}};
    cert.lemma6_verified = static_cast<bool>(lemma6::verify_lemma6(cert.lemma6, lemma_source));
    cert.restriction_a = check_restriction(kKeepA, cert.lemma6.conclusion_circuits);
    cert.restriction_b = check_restriction(kKeepB, cert.lemma6.conclusion_circuits);
    const SignedVector& a = cert.restriction_a.lifted_circuit;
    const SignedVector& b = cert.restriction_b.lifted_circuit;
    cert.circuits_conflict =
        a.support() == kConflictSupport && b.support() == kConflictSupport && circuits_conflict(a, b);
    cert.assumptions = standard_assumptions(cert.lemma6);

    if (!cert.premise_strong_map.holds || cert.premise_strong_map.corank != 2)
        cert.failing_stage = "premise";
    else if (!cert.lemma6_verified)
        cert.failing_stage = "lemma6";
    else if (!cert.restriction_a.passed())
        cert.failing_stage = "restriction_a";
    else if (!cert.restriction_b.passed())
        cert.failing_stage = "restriction_b";
    else if (!cert.circuits_conflict)
        cert.failing_stage = "circuits_conflict";
    else
        for (const auto& assumption : cert.assumptions)
            if (assumption.check_passed == false) {
                cert.failing_stage = "assumption:" + assumption.name;
                break;
            }
    return cert;
}

/// Runs the six-element search with `threads` workers and assembles the certificate.
[[nodiscard]] inline ContradictionCertificate build_contradiction_certificate(unsigned threads = 1)
{
    const lemma6::SearchInstance inst = lemma6::build_search_instance();
    return build_contradiction_certificate(lemma6::enumerate_survivors(inst, threads), inst.source);
}

} // namespace omcert::n8
