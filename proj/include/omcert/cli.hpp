#pragma once

// Stage runner behind the omcert command line. Exit codes: 0 verified,
// 1 a mathematical check failed (or output could not be written), 2 usage.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "certificate.hpp"
#include "chirotope.hpp"
#include "contradiction.hpp"
#include "direct_search.hpp"
#include "lemma6.hpp"
#include "oriented_matroid.hpp"
#include "strong_map.hpp"

namespace omcert::cli {

inline constexpr int kExitVerified = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Command { topes, axioms, strongmap, lemma6, verify_n8, all, validate, direct_search };
enum class Family { alternating, m2 };
enum class Format { json, text };

struct RunConfig {
    Command command = Command::all;
    int n = 6;
    int rank = 4;
    Family family = Family::alternating;
    unsigned threads = 1;
    std::optional<std::string> output_path;
    Format format = Format::json;
    std::optional<std::string> input_path;   ///< validate
    std::uint64_t budget = 100'000'000;       ///< direct-search node limit
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void check_config(const RunConfig& c)
{
    if (c.threads < 1) throw UsageError("--threads must be at least 1");
    if (c.family == Family::m2 && (c.n < 2 || c.n % 2 != 0)) throw UsageError("--family m2 needs an even --n >= 2");
    if (c.n < 1 || c.n > 32) throw UsageError("--n must lie in 1..32");
    if (c.family == Family::alternating && (c.rank < 1 || c.rank > c.n)) throw UsageError("--rank must lie in 1..n");
    if ((c.command == Command::axioms || c.command == Command::strongmap) && c.n > 10)
        throw UsageError("covector enumeration is limited to n <= 10");
    if (c.command == Command::strongmap && c.n % 2 != 0) throw UsageError("strongmap needs an even --n");
    if (c.command == Command::validate && !c.input_path) throw UsageError("validate needs a certificate file");
}

[[nodiscard]] inline Chirotope chirotope_for(const RunConfig& c)
{
    return c.family == Family::m2 ? m2_chirotope(c.n) : alternating_chirotope(c.n, c.rank);
}

[[nodiscard]] inline std::string family_label(const RunConfig& c)
{
    return c.family == Family::m2 ? "m2(" + std::to_string(c.n) + ")"
                                  : "alternating(" + std::to_string(c.n) + "," + std::to_string(c.rank) + ")";
}

namespace detail {

struct StageOutput {
    std::string body;
    bool verified = true;
};

inline StageOutput run_topes(const RunConfig& c)
{
    const Chirotope chi = chirotope_for(c);
    const TopeSet topes = topes_of(chi);
    const bool count_ok = topes.size() == uniform_tope_count(c.n, chi.rank());
    if (c.format == Format::text) {
        std::string out;
        for (const auto& t : topes) out += t.to_string() + "\n";
        return {out, count_ok};
    }
    certificate::Json doc{{"version", certificate::kSchemaVersion},
                          {"family", c.family == Family::m2 ? "m2" : "alternating"},
                          {"n", c.n},
                          {"rank", chi.rank()},
                          {"count", topes.size()},
                          {"expected_count", uniform_tope_count(c.n, chi.rank())},
                          {"topes", certificate::strings_of(topes)}};
    return {certificate::serialize(doc), count_ok};
}

inline StageOutput run_axioms(const RunConfig& c)
{
    const Chirotope chi = chirotope_for(c);
    const TopeSet topes = topes_of(chi);
    const CovectorSet covectors = covectors_from_topes(topes);
    const CovectorAxiomReport cov = check_covector_axioms(covectors);
    const UniformTopeReport uni = check_uniform_tope_axioms(topes);
    const bool ok = cov.passed() && uni.passed();
    if (c.format == Format::text) {
        std::ostringstream out;
        out << family_label(c) << ": " << topes.size() << " canonical topes, " << covectors.size() << " covectors\n"
            << "covector axioms: " << (cov.passed() ? "pass" : "FAIL") << " (zero " << (cov.contains_zero ? "ok" : "missing")
            << ", opposite violations " << cov.opposite_violations << ", composition violations "
            << cov.composition_violations << ", elimination violations " << cov.elimination_violations << ")\n"
            << "uniform tope axioms: " << (uni.passed() ? "pass" : "FAIL") << " (count " << uni.actual_count << "/"
            << uni.expected_count << ", shattered subsets " << uni.shattered.size() << ")\n";
        return {out.str(), ok};
    }
    certificate::Json witnesses = certificate::Json::object();
    for (const auto& w : uni.witnesses) witnesses[w.subset.to_key()] = w.pattern.to_string();
    certificate::Json doc{
        {"version", certificate::kSchemaVersion},
        {"instance", family_label(c)},
        {"covector_axioms",
         {{"passed", cov.passed()},
          {"covectors", covectors.size()},
          {"contains_zero", cov.contains_zero},
          {"opposite_violations", cov.opposite_violations},
          {"composition_violations", cov.composition_violations},
          {"elimination_violations", cov.elimination_violations}}},
        {"uniform_tope_axioms",
         {{"passed", uni.passed()},
          {"count", uni.actual_count},
          {"expected_count", uni.expected_count},
          {"shattered_subsets", uni.shattered.size()},
          {"witnesses", witnesses}}}};
    return {certificate::serialize(doc), ok};
}

inline StageOutput run_strongmap(const RunConfig& c)
{
    const TopeSet source = topes_of(alternating_chirotope(c.n, c.rank));
    const TopeSet target = topes_of(m2_chirotope(c.n));
    const StrongMapVerdict by_topes = is_strong_map_topes(source, target);
    const StrongMapVerdict by_covectors =
        is_strong_map_covectors(covectors_from_topes(source), covectors_from_topes(target), source.rank(), target.rank());
    const bool ok = by_topes.holds && by_covectors.holds;
    auto verdict_json = [](const StrongMapVerdict& v) {
        certificate::Json j{{"holds", v.holds}, {"method", to_string(v.method)}, {"corank", v.corank}};
        j["witness"] = v.witness ? certificate::Json(v.witness->to_string()) : certificate::Json(nullptr);
        return j;
    };
    if (c.format == Format::text) {
        std::ostringstream out;
        out << "alternating(" << c.n << "," << c.rank << ") -> m2(" << c.n << ")\n";
        for (const auto* v : {&by_topes, &by_covectors})
            out << "  " << to_string(v->method) << ": " << (v->holds ? "holds" : "fails") << ", corank " << v->corank
                << (v->witness ? ", witness " + v->witness->to_string() : std::string{}) << "\n";
        return {out.str(), ok};
    }
    certificate::Json doc{{"version", certificate::kSchemaVersion},
                          {"source", "alternating(" + std::to_string(c.n) + "," + std::to_string(c.rank) + ")"},
                          {"target", "m2(" + std::to_string(c.n) + ")"},
                          {"tope_inclusion", verdict_json(by_topes)},
                          {"covector_containment", verdict_json(by_covectors)},
                          {"methods_agree", by_topes.holds == by_covectors.holds}};
    return {certificate::serialize(doc), ok};
}

inline std::string lemma6_text(const lemma6::Lemma6Certificate& cert, const lemma6::Lemma6Verification& v)
{
    std::ostringstream out;
    out << "combinations checked: " << cert.combinations_checked << "\n"
        << "survivors: " << cert.survivors.size() << "\n";
    for (std::size_t i = 0; i < cert.survivors.size(); ++i) {
        const auto& s = cert.survivors[i];
        out << "  #" << i << " (rank " << s.combination_rank << "): circuits " << s.circuit_a.to_string() << " "
            << s.circuit_b.to_string() << "\n";
    }
    out << "forced circuits: " << cert.conclusion_circuits.first.to_string() << " on {1,2,3,4}, "
        << cert.conclusion_circuits.second.to_string() << " on {1,2,5,6}\n"
        << "verification: " << (v.ok ? "pass" : "FAIL: " + v.reason) << "\n";
    return out.str();
}

inline StageOutput run_lemma6(const RunConfig& c)
{
    const lemma6::SearchInstance inst = lemma6::build_search_instance();
    const lemma6::Lemma6Certificate cert = lemma6::enumerate_survivors(inst, c.threads);
    const lemma6::Lemma6Verification v = lemma6::verify_lemma6(cert, inst.source);
    if (c.format == Format::text) return {lemma6_text(cert, v), v.ok};
    return {certificate::serialize(certificate::lemma6_document(inst, cert, v.ok)), v.ok};
}

inline std::string contradiction_text(const n8::ContradictionCertificate& cert)
{
    std::ostringstream out;
    out << "premise alternating(8,4) -> m2(8): " << (cert.premise_strong_map.holds ? "holds" : "fails") << ", corank "
        << cert.premise_strong_map.corank << "\n"
        << "six-element search: " << cert.lemma6.combinations_checked << " combinations, " << cert.lemma6.survivors.size()
        << " survivors, " << (cert.lemma6_verified ? "verified" : "NOT verified") << "\n";
    for (const auto* r : {&cert.restriction_a, &cert.restriction_b})
        out << "restriction to {" << certificate::kept_key(r->kept) << "}: alternating "
            << (r->m1_restricted_equals_alternating ? "ok" : "MISMATCH") << ", m2 "
            << (r->m2_restricted_equals_m2_6 ? "ok" : "MISMATCH") << ", circuit " << r->restricted_circuit.to_string()
            << " lifts to " << r->lifted_circuit.to_string() << "\n";
    out << "circuits conflict: " << (cert.circuits_conflict ? "yes" : "no") << "\n";
    for (const auto& a : cert.assumptions)
        out << "assumption " << a.name << ": "
            << (a.kind == n8::AssumptionKind::trusted_citation ? "trusted citation"
                                                                : (a.check_passed.value_or(false) ? "checked" : "CHECK FAILED"))
            << "\n";
    out << "verdict: " << cert.verdict();
    if (!cert.failing_stage.empty()) out << " (failing stage: " << cert.failing_stage << ")";
    out << "\n";
    return out.str();
}

inline StageOutput run_contradiction(const RunConfig& c)
{
    const lemma6::SearchInstance inst = lemma6::build_search_instance();
    const n8::ContradictionCertificate cert =
        n8::build_contradiction_certificate(lemma6::enumerate_survivors(inst, c.threads), inst.source);
    if (c.format == Format::text) return {contradiction_text(cert), cert.nonfactorizable()};
    return {certificate::serialize(certificate::contradiction_document(inst, cert)), cert.nonfactorizable()};
}

/// Axiom sanity on the six-element instances, then the full certificate.
inline StageOutput run_all(const RunConfig& c, std::ostream& err)
{
    bool sane = true;
    for (const Chirotope& chi : {alternating_chirotope(6, 4), m2_chirotope(6)}) {
        const TopeSet topes = topes_of(chi);
        const bool ok = check_covector_axioms(covectors_from_topes(topes)).passed() &&
                        check_uniform_tope_axioms(topes).passed();
        if (!ok) {
            err << "omcert: axiom check failed for a six-element instance\n";
            sane = false;
        }
    }
    StageOutput out = run_contradiction(c);
    out.verified = out.verified && sane;
    return out;
}

inline StageOutput run_validate(const RunConfig& c)
{
    std::ifstream in(*c.input_path);
    if (!in) throw std::runtime_error("cannot open " + *c.input_path);
    certificate::Json doc;
    try {
        doc = certificate::Json::parse(in);
    } catch (const std::exception& e) {
        return {std::string("invalid JSON: ") + e.what() + "\n", false};
    }
    const certificate::ValidationReport report = certificate::validate(doc);
    std::ostringstream out;
    out << (report.passed() ? "certificate valid" : "certificate INVALID") << " (" << report.checks << " checks)\n";
    for (const auto& f : report.failures) out << "  " << f << "\n";
    return {out.str(), report.passed()};
}

inline StageOutput run_direct_search(const RunConfig& c)
{
    const n8::DirectSearchResult r = n8::direct_search_n8(c.budget);
    std::ostringstream out;
    if (c.format == Format::text) {
        out << "direct search: " << to_string(r.status) << " after " << r.nodes << " nodes\n";
    } else {
        certificate::Json doc{{"version", certificate::kSchemaVersion},
                              {"status", to_string(r.status)},
                              {"nodes", r.nodes},
                              {"budget", c.budget}};
        doc["survivor"] = r.survivor ? certificate::strings_of(*r.survivor) : certificate::Json(nullptr);
        out << certificate::serialize(doc);
    }
    // budget exhaustion is inconclusive rather than a failed check
    return {out.str(), r.status != n8::DirectSearchStatus::found};
}

} // namespace detail

/// Runs one stage and writes its report to `output_path` or `out`.
inline int run(const RunConfig& config, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    try {
        check_config(config);
    } catch (const UsageError& e) {
        err << "omcert: " << e.what() << "\n";
        return kExitUsage;
    }

    detail::StageOutput result;
    try {
        switch (config.command) {
        case Command::topes: result = detail::run_topes(config); break;
        case Command::axioms: result = detail::run_axioms(config); break;
        case Command::strongmap: result = detail::run_strongmap(config); break;
        case Command::lemma6: result = detail::run_lemma6(config); break;
        case Command::verify_n8: result = detail::run_contradiction(config); break;
        case Command::all: result = detail::run_all(config, err); break;
        case Command::validate: result = detail::run_validate(config); break;
        case Command::direct_search: result = detail::run_direct_search(config); break;
        }
    } catch (const std::exception& e) {
        err << "omcert: " << e.what() << "\n";
        return kExitFailed;
    }

    if (config.output_path) {
        std::ofstream file(*config.output_path, std::ios::binary);
        file << result.body;
        if (!file.flush()) {
            err << "omcert: cannot write " << *config.output_path << "\n";
            return kExitFailed;
        }
    } else {
        out << result.body;
    }
    return result.verified ? kExitVerified : kExitFailed;
}

} // namespace omcert::cli
