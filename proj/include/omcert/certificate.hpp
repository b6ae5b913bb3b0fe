#pragma once

// JSON certificates. Key order is fixed by construction (ordered_json), signed
// vectors are {+,-,0} strings and element subsets are comma-joined keys such
// as "1,2,5,6". A certificate can be re-validated from its contents alone:
// every recorded fact is a closed-form check that needs no search.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "chirotope.hpp"
#include "combinatorics.hpp"
#include "contradiction.hpp"
#include "lemma6.hpp"
#include "oriented_matroid.hpp"
#include "signed_vector.hpp"

namespace omcert::certificate {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kKindLemma6 = "lemma6";
inline constexpr const char* kKindContradiction = "contradiction";

[[nodiscard]] inline Json strings_of(const TopeSet& topes)
{
    Json out = Json::array();
    for (const auto& t : topes) out.push_back(t.to_string());
    return out;
}

[[nodiscard]] inline std::string kept_key(std::span<const int> kept)
{
    return ElementSet::of(kept).to_key();
}

[[nodiscard]] inline Json survivor_json(const lemma6::SurvivorRecord& s)
{
    Json witnesses = Json::object();
    for (const auto& w : s.vc_witnesses) witnesses[w.subset.to_key()] = w.pattern.to_string();
    Json excluded = Json::object();
    excluded[lemma6::kExcludedA.to_string()] = s.excludes_a;
    excluded[lemma6::kExcludedB.to_string()] = s.excludes_b;
    Json circuits = Json::object();
    circuits[lemma6::kSupportA.to_key()] = s.circuit_a.to_string();
    circuits[lemma6::kSupportB.to_key()] = s.circuit_b.to_string();
    return Json{{"combination_rank", s.combination_rank},
                {"topes", strings_of(s.topes)},
                {"vc_witnesses", witnesses},
                {"excluded", excluded},
                {"circuits", circuits}};
}

[[nodiscard]] inline Json instance_json(const char* kind, const lemma6::SearchInstance& inst)
{
    Json pool = Json::array();
    for (const auto& t : inst.pool) pool.push_back(t.to_string());
    Json j{{"kind", kind},
           {"n", lemma6::kGroundSize},
           {"source", {{"family", "alternating"}, {"rank", lemma6::kSourceRank}}},
           {"target", {{"family", "m2"}, {"rank", 2}}},
           {"intermediate_rank", inst.rank},
           {"pool_order", "string order with '+' < '-' < '0'"},
           {"base_topes", strings_of(inst.base)},
           {"pool", pool}};
    if (std::string(kind) == kKindContradiction) {
        j["n_large"] = n8::kGroundSize;
        j["sigma"] = "(1 2)(3 4)(5 6)(7 8)";
    }
    return j;
}

[[nodiscard]] inline Json lemma6_counts(const lemma6::SearchInstance& inst, const lemma6::Lemma6Certificate& cert)
{
    return Json{{"topes_source_n6", inst.source.size()},
                {"topes_target_n6", inst.base.size()},
                {"pool_size", inst.pool.size()},
                {"choose", inst.choose},
                {"combinations_checked", cert.combinations_checked},
                {"survivor_count", cert.survivors.size()}};
}

[[nodiscard]] inline Json survivors_json(const lemma6::Lemma6Certificate& cert)
{
    Json out = Json::array();
    for (const auto& s : cert.survivors) out.push_back(survivor_json(s));
    return out;
}

[[nodiscard]] inline Json lemma6_document(const lemma6::SearchInstance& inst, const lemma6::Lemma6Certificate& cert,
                                          bool verified)
{
    Json circuits = Json::object();
    circuits[lemma6::kSupportA.to_key()] = cert.conclusion_circuits.first.to_string();
    circuits[lemma6::kSupportB.to_key()] = cert.conclusion_circuits.second.to_string();
    return Json{{"version", kSchemaVersion},
                {"instance", instance_json(kKindLemma6, inst)},
                {"counts", lemma6_counts(inst, cert)},
                {"survivors", survivors_json(cert)},
                {"restrictions", Json::array()},
                {"conclusion", {{"forced_circuits", circuits}, {"verified", verified}}}};
}

[[nodiscard]] inline Json restriction_json(const n8::RestrictionCheck& r)
{
    return Json{{"kept", kept_key(r.kept)},
                {"source_equals_alternating_6_4", r.m1_restricted_equals_alternating},
                {"target_equals_m2_6", r.m2_restricted_equals_m2_6},
                {"restricted_circuit", r.restricted_circuit.to_string()},
                {"lifted_circuit", r.lifted_circuit.to_string()}};
}

[[nodiscard]] inline Json contradiction_document(const lemma6::SearchInstance& inst,
                                                 const n8::ContradictionCertificate& cert)
{
    Json counts = lemma6_counts(inst, cert.lemma6);
    counts["topes_source_n8"] = uniform_tope_count(n8::kGroundSize, n8::kSourceRank);
    counts["topes_target_n8"] = uniform_tope_count(n8::kGroundSize, 2);

    Json premise{{"holds", cert.premise_strong_map.holds},
                 {"method", to_string(cert.premise_strong_map.method)},
                 {"corank", cert.premise_strong_map.corank}};
    Json assumptions = Json::array();
    for (const auto& a : cert.assumptions) {
        Json entry{{"name", a.name},
                   {"statement", a.statement},
                   {"kind", a.kind == n8::AssumptionKind::trusted_citation ? "trusted-citation" : "empirically-checked"}};
        entry["check_passed"] = a.check_passed ? Json(*a.check_passed) : Json(nullptr);
        assumptions.push_back(entry);
    }
    Json conclusion{{"circuit_a", cert.restriction_a.lifted_circuit.to_string()},
                    {"circuit_b", cert.restriction_b.lifted_circuit.to_string()},
                    {"contradiction", cert.circuits_conflict},
                    {"premise_strong_map", premise},
                    {"lemma6_verified", cert.lemma6_verified},
                    {"assumptions", assumptions},
                    {"verdict", cert.verdict()},
                    {"failing_stage", cert.failing_stage.empty() ? Json(nullptr) : Json(cert.failing_stage)}};
    return Json{{"version", kSchemaVersion},
                {"instance", instance_json(kKindContradiction, inst)},
                {"counts", counts},
                {"survivors", survivors_json(cert.lemma6)},
                {"restrictions", Json::array({restriction_json(cert.restriction_a), restriction_json(cert.restriction_b)})},
                {"conclusion", conclusion}};
}

/// Deterministic bytes: two-space indentation and a trailing newline.
[[nodiscard]] inline std::string serialize(const Json& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Validation from serialized contents
// ---------------------------------------------------------------------------

struct ValidationReport {
    std::vector<std::string> failures;
    std::size_t checks = 0;

    [[nodiscard]] bool passed() const noexcept { return failures.empty(); }

    void expect(bool condition, const std::string& what)
    {
        ++checks;
        if (!condition) failures.push_back(what);
    }
};

namespace detail {

inline SignedVector vector_at(const Json& j, int n) { return parse_signed_vector(j.get<std::string>(), GroundSet(n)); }

inline ElementSet subset_from_key(const std::string& key)
{
    ElementSet s;
    std::size_t start = 0;
    while (start <= key.size()) {
        const std::size_t comma = key.find(',', start);
        const std::string part = key.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const int e = std::stoi(part);
        if (e < 1 || e > kMaxGroundSize) throw std::invalid_argument("element out of range in key " + key);
        s.bits |= std::uint32_t{1} << (e - 1);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return s;
}

inline void validate_survivor(const Json& s, std::size_t index, const TopeSet& source, const TopeSet& base,
                              ValidationReport& report)
{
    const std::string tag = "survivor " + std::to_string(index) + ": ";
    const int n = lemma6::kGroundSize;
    std::vector<SignedVector> topes;
    for (const auto& t : s.at("topes")) topes.push_back(vector_at(t, n));
    const TopeSet set(n, lemma6::kIntermediateRank, topes); // canonical, full support, no duplicates
    report.expect(set.size() == uniform_tope_count(n, lemma6::kIntermediateRank), tag + "has " +
                  std::to_string(set.size()) + " topes");
    for (const auto& t : base) report.expect(set.contains(t), tag + "misses base tope " + t.to_string());
    for (const auto& t : set) report.expect(source.contains(t), tag + t.to_string() + " is not a source tope");
    report.expect(check_uniform_tope_axioms(set).passed(), tag + "fails the uniform tope axioms");

    const Json& witnesses = s.at("vc_witnesses");
    report.expect(witnesses.size() == binomial(n, lemma6::kIntermediateRank + 1), tag + "witness count");
    for (const auto& [key, value] : witnesses.items()) {
        const ElementSet q = subset_from_key(key);
        const SignedVector w = vector_at(value, n);
        bool ok = w.support() == q && is_canonical(w);
        for (const auto& t : set) ok = ok && perpendicular(t, w);
        report.expect(ok, tag + "witness on {" + key + "} is not perpendicular to every tope");
    }

    const Json& excluded = s.at("excluded");
    for (const auto& x : {lemma6::kExcludedA, lemma6::kExcludedB}) {
        const bool claimed = excluded.at(x.to_string()).get<bool>();
        report.expect(claimed && !set.contains(x), tag + x.to_string() + " exclusion");
    }

    const Json& circuits = s.at("circuits");
    const std::pair<ElementSet, SignedVector> expected[] = {{lemma6::kSupportA, lemma6::kCircuitA},
                                                            {lemma6::kSupportB, lemma6::kCircuitB}};
    for (const auto& [support, circuit] : expected) {
        const SignedVector recorded = vector_at(circuits.at(support.to_key()), n);
        bool recomputed_ok = false;
        try {
            recomputed_ok = circuit_on_support(set, support) == recorded;
        } catch (const std::domain_error&) {
            recomputed_ok = false;
        }
        report.expect(recomputed_ok && recorded == circuit,
                      tag + "circuit on {" + support.to_key() + "} is not " + circuit.to_string());
    }
}

} // namespace detail

/// Re-checks every closed-form fact in a certificate document. Tope sets of
/// the named instances are regenerated from their chirotopes; the exhaustive
/// search itself is not re-run.
[[nodiscard]] inline ValidationReport validate(const Json& doc)
{
    ValidationReport report;
    try {
        report.expect(doc.at("version").get<int>() == kSchemaVersion, "unsupported schema version");
        const Json& instance = doc.at("instance");
        const std::string kind = instance.at("kind").get<std::string>();
        report.expect(kind == kKindLemma6 || kind == kKindContradiction, "unknown certificate kind " + kind);

        const lemma6::SearchInstance inst = lemma6::build_search_instance();
        const Json& counts = doc.at("counts");
        report.expect(counts.at("topes_source_n6").get<std::uint64_t>() == inst.source.size() &&
                          inst.source.size() == uniform_tope_count(6, 4),
                      "source tope count on six elements");
        report.expect(counts.at("topes_target_n6").get<std::uint64_t>() == inst.base.size() &&
                          inst.base.size() == uniform_tope_count(6, 2),
                      "target tope count on six elements");
        report.expect(strings_of(inst.base) == instance.at("base_topes"), "base topes differ from T(m2(6))");
        Json pool = Json::array();
        for (const auto& t : inst.pool) pool.push_back(t.to_string());
        report.expect(pool == instance.at("pool"), "pool differs from T(alternating(6,4)) minus T(m2(6))");
        const auto pool_size = counts.at("pool_size").get<int>();
        const auto choose = counts.at("choose").get<int>();
        report.expect(pool_size == static_cast<int>(inst.pool.size()) && choose == inst.choose, "pool size or choose");
        report.expect(counts.at("combinations_checked").get<std::uint64_t>() == binomial(pool_size, choose),
                      "combinations_checked differs from C(pool_size, choose)");

        const Json& survivors = doc.at("survivors");
        report.expect(counts.at("survivor_count").get<std::size_t>() == survivors.size(), "survivor_count mismatch");
        std::set<std::vector<std::string>> distinct;
        std::uint64_t previous_rank = 0;
        for (std::size_t i = 0; i < survivors.size(); ++i) {
            const Json& s = survivors[i];
            detail::validate_survivor(s, i, inst.source, inst.base, report);
            distinct.insert(s.at("topes").get<std::vector<std::string>>());
            const auto rank = s.at("combination_rank").get<std::uint64_t>();
            report.expect(i == 0 || rank > previous_rank, "survivors are not in enumeration order");
            previous_rank = rank;
            std::vector<int> indices = unrank_combination(rank, pool_size, choose);
            report.expect(strings_of(lemma6::candidate_topes(inst, indices)) == s.at("topes"),
                          "survivor " + std::to_string(i) + " does not match its combination rank");
        }
        report.expect(distinct.size() == survivors.size(), "duplicate survivors");
        report.expect(!survivors.empty(), "no survivors recorded");

        if (kind == kKindLemma6) {
            const Json& forced = doc.at("conclusion").at("forced_circuits");
            report.expect(forced.at(lemma6::kSupportA.to_key()) == lemma6::kCircuitA.to_string() &&
                              forced.at(lemma6::kSupportB.to_key()) == lemma6::kCircuitB.to_string(),
                          "forced circuits differ");
            report.expect(doc.at("conclusion").at("verified").get<bool>(), "lemma marked unverified");
            return report;
        }

        report.expect(counts.at("topes_source_n8").get<std::uint64_t>() == topes_of(alternating_chirotope(8, 4)).size(),
                      "source tope count on eight elements");
        report.expect(counts.at("topes_target_n8").get<std::uint64_t>() == topes_of(m2_chirotope(8)).size(),
                      "target tope count on eight elements");

        const Json& restrictions = doc.at("restrictions");
        report.expect(restrictions.size() == 2, "expected two restrictions");
        std::vector<SignedVector> lifted;
        for (const auto& r : restrictions) {
            const std::vector<int> kept = detail::subset_from_key(r.at("kept").get<std::string>()).elements();
            const n8::RestrictionCheck check = n8::check_restriction(kept);
            report.expect(r.at("source_equals_alternating_6_4").get<bool>() && check.m1_restricted_equals_alternating,
                          "alternating restriction to {" + r.at("kept").get<std::string>() + "}");
            report.expect(r.at("target_equals_m2_6").get<bool>() && check.m2_restricted_equals_m2_6,
                          "m2 restriction to {" + r.at("kept").get<std::string>() + "}");
            const SignedVector small = detail::vector_at(r.at("restricted_circuit"), lemma6::kGroundSize);
            const SignedVector big = detail::vector_at(r.at("lifted_circuit"), n8::kGroundSize);
            report.expect(restrict(big, kept) == small && big.support().size() == small.support().size(),
                          "lifted circuit does not restrict to the six-element circuit");
            report.expect(small == lemma6::kCircuitA || small == lemma6::kCircuitB,
                          "restricted circuit is not a forced circuit");
            lifted.push_back(big);
        }

        const Json& conclusion = doc.at("conclusion");
        const Json& premise = conclusion.at("premise_strong_map");
        const StrongMapVerdict recomputed = n8::verify_premise_n8();
        report.expect(premise.at("holds").get<bool>() && recomputed.holds, "premise strong map");
        report.expect(premise.at("corank").get<int>() == 2 && recomputed.corank == 2, "premise corank");
        if (lifted.size() == 2) {
            const SignedVector a = detail::vector_at(conclusion.at("circuit_a"), n8::kGroundSize);
            const SignedVector b = detail::vector_at(conclusion.at("circuit_b"), n8::kGroundSize);
            report.expect(a == lifted[0] && b == lifted[1], "conclusion circuits differ from the lifted circuits");
            const bool conflict = a.support() == n8::kConflictSupport && n8::circuits_conflict(a, b);
            report.expect(conflict && conclusion.at("contradiction").get<bool>(), "circuits do not conflict");
        }
        report.expect(conclusion.at("lemma6_verified").get<bool>(), "lemma marked unverified");
        for (const auto& a : conclusion.at("assumptions"))
            report.expect(a.at("check_passed").is_null() || a.at("check_passed").get<bool>(),
                          "assumption " + a.at("name").get<std::string>() + " failed its check");
        report.expect(conclusion.at("verdict") == "nonfactorizable", "verdict is not nonfactorizable");
    } catch (const std::exception& e) {
        report.failures.push_back(std::string("malformed certificate: ") + e.what());
    }
    return report;
}

} // namespace omcert::certificate
