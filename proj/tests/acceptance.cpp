// Prints one PASS/FAIL line per acceptance criterion; exits 1 on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "omcert/certificate.hpp"
#include "omcert/contradiction.hpp"
#include "omcert/lemma6.hpp"
#include "omcert/strong_map.hpp"

using namespace omcert;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    int id;
    const char* title;
    std::function<std::string(bool&)> check; // returns a detail string, sets the flag
};

std::string tope_counts(bool& ok)
{
    const auto start = Clock::now();
    const std::size_t a6 = topes_of(alternating_chirotope(6, 4)).size();
    const std::size_t m6 = topes_of(m2_chirotope(6)).size();
    const std::size_t a8 = topes_of(alternating_chirotope(8, 4)).size();
    const std::size_t m8 = topes_of(m2_chirotope(8)).size();
    const double t = seconds_since(start);
    ok = a6 == 26 && m6 == 6 && a8 == 64 && m8 == 8 && a8 == phi(3, 7) && m8 == phi(1, 7) && t < 1.0;
    return std::to_string(a6) + "/" + std::to_string(m6) + "/" + std::to_string(a8) + "/" + std::to_string(m8) + " in " +
           std::to_string(t) + " s";
}

const lemma6::Lemma6Certificate* g_lemma = nullptr;

std::string enumeration(bool& ok)
{
    const auto start = Clock::now();
    static const lemma6::Lemma6Certificate cert = lemma6::enumerate_survivors(lemma6::build_search_instance(), 1);
    const double t = seconds_since(start);
    g_lemma = &cert;
    ok = cert.combinations_checked == 184756 && cert.survivors.size() == 20 && t < 60.0;
    return std::to_string(cert.combinations_checked) + " checked, " + std::to_string(cert.survivors.size()) +
           " survivors in " + std::to_string(t) + " s";
}

std::string forced_circuits(bool& ok)
{
    ok = g_lemma != nullptr && !g_lemma->survivors.empty();
    if (!ok) return "no survivors";
    const SignedVector ca = parse_signed_vector("+-+-00");
    const SignedVector cb = parse_signed_vector("+-00-+");
    for (const auto& s : g_lemma->survivors)
        ok = ok && !s.topes.contains(parse_signed_vector("+-+---")) && !s.topes.contains(parse_signed_vector("+----+")) &&
             circuit_on_support(s.topes, ElementSet::of({1, 2, 3, 4})) == ca &&
             circuit_on_support(s.topes, ElementSet::of({1, 2, 5, 6})) == cb;
    ok = ok && static_cast<bool>(lemma6::verify_lemma6(*g_lemma));
    return std::to_string(g_lemma->survivors.size()) + " survivors checked";
}

std::string strong_map_premise(bool& ok)
{
    const TopeSet a6 = topes_of(alternating_chirotope(6, 4));
    const TopeSet m6 = topes_of(m2_chirotope(6));
    const StrongMapVerdict v6 = is_strong_map_topes(a6, m6);
    const StrongMapVerdict v8 = is_strong_map_topes(topes_of(alternating_chirotope(8, 4)), topes_of(m2_chirotope(8)));
    const CovectorSet la6 = covectors_from_topes(a6);
    const CovectorSet lm6 = covectors_from_topes(m6);
    ok = v6.holds && v6.corank == 2 && v8.holds && v8.corank == 2 &&
         is_strong_map_covectors(la6, lm6, 4, 2).holds == v6.holds;
    int agreeing = 0;
    if (g_lemma != nullptr)
        for (const auto& s : g_lemma->survivors) {
            const CovectorSet mid = covectors_from_topes(s.topes);
            const StrongMapVerdict up = is_strong_map_topes(a6, s.topes);
            const StrongMapVerdict down = is_strong_map_topes(s.topes, m6);
            agreeing += up.holds && is_strong_map_covectors(la6, mid, 4, 3).holds;
            agreeing += down.holds && is_strong_map_covectors(mid, lm6, 3, 2).holds;
        }
    ok = ok && agreeing == 40;
    return "corank " + std::to_string(v6.corank) + "/" + std::to_string(v8.corank) + ", " + std::to_string(agreeing) +
           "/40 sandwich maps agree";
}

std::string restriction_reduction(bool& ok)
{
    const n8::ContradictionCertificate cert =
        n8::build_contradiction_certificate(*g_lemma, topes_of(alternating_chirotope(6, 4)));
    const std::string a = cert.restriction_a.lifted_circuit.to_string();
    const std::string b = cert.restriction_b.lifted_circuit.to_string();
    ok = cert.restriction_a.passed() && cert.restriction_b.passed() && a == "+-00-+00" && b == "+-00+-00" &&
         cert.circuits_conflict && std::string(cert.verdict()) == "nonfactorizable";
    return a + " vs " + b + ", verdict " + cert.verdict();
}

std::string property_suites(bool& ok)
{
    const auto start = Clock::now();
    ok = true;
    for (auto [n, r] : {std::pair{4, 2}, std::pair{6, 4}, std::pair{8, 4}})
        ok = ok && alternating_topes_direct(n, r) == topes_of(alternating_chirotope(n, r));
    int instances = 0;
    for (int n = 2; n <= 6; ++n)
        for (int r = 1; r <= n; ++r) {
            std::vector<Chirotope> chis{alternating_chirotope(n, r)};
            if (r == 2 && n % 2 == 0) chis.push_back(m2_chirotope(n));
            for (const auto& chi : chis) {
                const TopeSet topes = topes_of(chi);
                const CovectorSet covectors = covectors_from_topes(topes);
                ok = ok && check_covector_axioms(covectors).passed();
                ok = ok && minimal_nonzero(covectors) == cocircuits_from_chirotope(chi);
                if (r < n)
                    for (ElementSet q : subsets_of_size(n, r + 1)) {
                        const SignedVector c = circuit_on_support(topes, q);
                        for (const auto& t : topes) ok = ok && perpendicular(c, t);
                    }
                ++instances;
            }
        }
    if (g_lemma != nullptr)
        for (const auto& s : g_lemma->survivors) {
            ok = ok && check_covector_axioms(covectors_from_topes(s.topes)).passed();
            ++instances;
        }
    const double t = seconds_since(start);
    ok = ok && t < 120.0;
    return std::to_string(instances) + " instances in " + std::to_string(t) + " s";
}

std::string determinism(bool& ok)
{
    std::vector<std::string> bodies;
    for (unsigned threads : {1U, 2U, 4U}) {
        const lemma6::SearchInstance inst = lemma6::build_search_instance();
        const n8::ContradictionCertificate cert =
            n8::build_contradiction_certificate(lemma6::enumerate_survivors(inst, threads), inst.source);
        bodies.push_back(certificate::serialize(certificate::contradiction_document(inst, cert)));
    }
    ok = bodies[0] == bodies[1] && bodies[0] == bodies[2] && certificate::validate(certificate::Json::parse(bodies[0])).passed();
    return "1/2/4 threads, " + std::to_string(bodies[0].size()) + " bytes";
}

} // namespace

int main()
{
    const Criterion criteria[] = {
        {1, "tope counts", tope_counts},
        {2, "six-element enumeration", enumeration},
        {3, "forced circuits", forced_circuits},
        {4, "strong-map premise", strong_map_premise},
        {5, "restriction reduction", restriction_reduction},
        {6, "property suites", property_suites},
        {7, "determinism", determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        bool ok = false;
        std::string detail;
        try {
            detail = c.check(ok);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", c.id, c.title, detail.c_str());
        failed += !ok;
    }
    return failed == 0 ? 0 : 1;
}
