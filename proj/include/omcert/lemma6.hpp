#pragma once

// Exhaustive search for rank-3 uniform tope sets S on six elements with
// T(m2(6)) in S in T(alternating(6,4)). Every 10-subset of the 20 candidate
// topes outside T(m2(6)) is tested against the uniform-tope axioms, and each
// survivor is checked for the two forced circuits.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "chirotope.hpp"
#include "combinatorics.hpp"
#include "oriented_matroid.hpp"
#include "signed_vector.hpp"

namespace omcert::lemma6 {

inline constexpr int kGroundSize = 6;
inline constexpr int kSourceRank = 4;
inline constexpr int kIntermediateRank = 3;

/// Supports of the two forced circuits and their expected canonical signs.
inline constexpr ElementSet kSupportA = ElementSet::of({1, 2, 3, 4});
inline constexpr ElementSet kSupportB = ElementSet::of({1, 2, 5, 6});
inline const SignedVector kCircuitA = parse_signed_vector("+-+-00");
inline const SignedVector kCircuitB = parse_signed_vector("+-00-+");

/// The only source topes violating each circuit; never in a survivor.
inline const SignedVector kExcludedA = parse_signed_vector("+-+---");
inline const SignedVector kExcludedB = parse_signed_vector("+----+");

struct SearchInstance {
    TopeSet source; ///< T(alternating(6,4)), 26 canonical topes
    TopeSet base;   ///< T(m2(6)), 6 canonical topes
    std::vector<SignedVector> pool; ///< source \ base in string order, 20 topes
    int choose = 0;                 ///< topes to add to the base, 10
    int rank = kIntermediateRank;
};

[[nodiscard]] inline SearchInstance build_search_instance()
{
    TopeSet source = topes_of(alternating_chirotope(kGroundSize, kSourceRank));
    TopeSet base = topes_of(m2_chirotope(kGroundSize));
    std::vector<SignedVector> pool;
    for (const auto& t : source)
        if (!base.contains(t)) pool.push_back(t);
    for (const auto& t : base)
        if (!source.contains(t)) throw std::logic_error("search instance: a tope of m2(6) is missing from the source");
    const auto target = static_cast<std::int64_t>(uniform_tope_count(kGroundSize, kIntermediateRank));
    const std::int64_t choose = target - static_cast<std::int64_t>(base.size());
    if (base.size() != 6 || pool.size() != 20 || choose != 10)
        throw std::logic_error("search instance: expected 6 base and 20 pool topes with 10 to choose, got " +
                               std::to_string(base.size()) + "/" + std::to_string(pool.size()) + "/" +
                               std::to_string(choose));
    return SearchInstance{std::move(source), std::move(base), std::move(pool), static_cast<int>(choose),
                          kIntermediateRank};
}

struct SurvivorRecord {
    std::uint64_t combination_rank = 0; ///< lexicographic rank of the chosen pool indices
    TopeSet topes;
    std::vector<VcWitness> vc_witnesses;
    bool excludes_a = false; ///< kExcludedA not in topes
    bool excludes_b = false; ///< kExcludedB not in topes
    SignedVector circuit_a;  ///< circuit on kSupportA
    SignedVector circuit_b;  ///< circuit on kSupportB
};

struct Lemma6Certificate {
    std::uint64_t combinations_checked = 0;
    std::vector<SurvivorRecord> survivors;
    std::pair<SignedVector, SignedVector> conclusion_circuits{kCircuitA, kCircuitB};
};

namespace detail {

/// Per-tope bitmask of the realized canonical pattern on each 4-subset, packed
/// as 8 bits per subset (15 subsets fit in 120 bits; two words).
struct PatternMasks {
    std::array<std::uint64_t, 2> words{};

    PatternMasks& operator|=(const PatternMasks& o) noexcept
    {
        words[0] |= o.words[0];
        words[1] |= o.words[1];
        return *this;
    }
};

struct PatternTable {
    std::vector<ElementSet> subsets;
    PatternMasks base;
    std::vector<PatternMasks> pool;
};

inline PatternMasks masks_of(const SignedVector& tope, const std::vector<ElementSet>& subsets)
{
    PatternMasks m;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        const unsigned bit = restricted_pattern_index(tope, subsets[i]);
        m.words[i / 8] |= std::uint64_t{1} << (8 * (i % 8) + bit);
    }
    return m;
}

inline PatternTable build_table(const SearchInstance& inst)
{
    PatternTable table;
    table.subsets = subsets_of_size(kGroundSize, inst.rank + 1);
    if (table.subsets.size() > 16 || inst.rank != 3)
        throw std::logic_error("pattern table is laid out for rank 3 on six elements");
    for (const auto& t : inst.base) table.base |= masks_of(t, table.subsets);
    for (const auto& t : inst.pool) table.pool.push_back(masks_of(t, table.subsets));
    return table;
}

/// True when some 4-subset sees all 8 canonical patterns.
inline bool shatters_some_subset(const PatternMasks& m, std::size_t subset_count)
{
    for (std::size_t i = 0; i < subset_count; ++i)
        if (((m.words[i / 8] >> (8 * (i % 8))) & 0xFFU) == 0xFFU) return true;
    return false;
}

inline std::vector<std::uint64_t> scan_range(const SearchInstance& inst, const PatternTable& table,
                                             std::uint64_t first, std::uint64_t last)
{
    std::vector<std::uint64_t> hits;
    if (first >= last) return hits;
    const int pool_size = static_cast<int>(inst.pool.size());
    std::vector<int> c = unrank_combination(first, pool_size, inst.choose);
    for (std::uint64_t rank = first; rank < last; ++rank) {
        PatternMasks m = table.base;
        for (int idx : c) m |= table.pool[static_cast<std::size_t>(idx)];
        if (!shatters_some_subset(m, table.subsets.size())) hits.push_back(rank);
        next_combination(c, pool_size);
    }
    return hits;
}

} // namespace detail

/// Candidate S = base + the pool topes at `indices`.
[[nodiscard]] inline TopeSet candidate_topes(const SearchInstance& inst, std::span<const int> indices)
{
    std::vector<SignedVector> topes(inst.base.begin(), inst.base.end());
    for (int i : indices) topes.push_back(inst.pool.at(static_cast<std::size_t>(i)));
    return TopeSet(kGroundSize, inst.rank, std::move(topes));
}

[[nodiscard]] inline SurvivorRecord make_survivor_record(const SearchInstance& inst, std::uint64_t rank)
{
    const std::vector<int> indices = unrank_combination(rank, static_cast<int>(inst.pool.size()), inst.choose);
    TopeSet topes = candidate_topes(inst, indices);
    UniformTopeReport report = check_uniform_tope_axioms(topes);
    if (!report.passed())
        throw std::logic_error("combination " + std::to_string(rank) + " passed the fast filter but fails the tope axioms");
    SurvivorRecord rec{rank,
                       topes,
                       std::move(report.witnesses),
                       !topes.contains(kExcludedA),
                       !topes.contains(kExcludedB),
                       circuit_on_support(topes, kSupportA),
                       circuit_on_support(topes, kSupportB)};
    return rec;
}

/// Full enumeration over C(20,10) combinations split into contiguous rank
/// ranges; survivors come back in rank order for any thread count.
[[nodiscard]] inline Lemma6Certificate enumerate_survivors(const SearchInstance& inst, unsigned threads = 1)
{
    if (threads == 0) throw std::invalid_argument("enumerate_survivors: thread count must be at least 1");
    const detail::PatternTable table = detail::build_table(inst);
    const std::uint64_t total = binomial(static_cast<int>(inst.pool.size()), inst.choose);

    std::vector<std::vector<std::uint64_t>> partial(threads);
    if (threads == 1) {
        partial[0] = detail::scan_range(inst, table, 0, total);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            const std::uint64_t first = total * w / threads;
            const std::uint64_t last = total * (w + 1) / threads;
            workers.emplace_back([&, w, first, last] { partial[w] = detail::scan_range(inst, table, first, last); });
        }
    }

    Lemma6Certificate cert;
    cert.combinations_checked = total;
    for (const auto& part : partial)
        for (std::uint64_t rank : part) cert.survivors.push_back(make_survivor_record(inst, rank));
    if (!cert.survivors.empty())
        cert.conclusion_circuits = {cert.survivors.front().circuit_a, cert.survivors.front().circuit_b};
    return cert;
}

/// Topes of `topes` whose restriction to the support of `pattern` equals
/// +-pattern there, i.e. the topes not perpendicular to it.
[[nodiscard]] inline std::vector<SignedVector> topes_violating(const TopeSet& topes, const SignedVector& pattern)
{
    std::vector<SignedVector> out;
    for (const auto& t : topes)
        if (!perpendicular(t, pattern)) out.push_back(t);
    return out;
}

struct Lemma6Verification {
    bool ok = false;
    std::optional<std::size_t> failing_survivor;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
};

/// Checks the forced-circuit conclusions on every survivor, plus the side
/// facts that each excluded tope is the only source tope violating its circuit.
[[nodiscard]] inline Lemma6Verification verify_lemma6(const Lemma6Certificate& cert, const TopeSet& source)
{
    auto fail = [](std::optional<std::size_t> index, std::string why) {
        return Lemma6Verification{false, index, std::move(why)};
    };
    if (cert.combinations_checked != binomial(20, 10))
        return fail(std::nullopt, "combinations_checked is " + std::to_string(cert.combinations_checked));
    if (cert.survivors.empty()) return fail(std::nullopt, "no survivors");
    if (topes_violating(source, kCircuitA) != std::vector{kExcludedA})
        return fail(std::nullopt, kExcludedA.to_string() + " is not the unique source tope violating " + kCircuitA.to_string());
    if (topes_violating(source, kCircuitB) != std::vector{kExcludedB})
        return fail(std::nullopt, kExcludedB.to_string() + " is not the unique source tope violating " + kCircuitB.to_string());
    if (cert.conclusion_circuits != std::pair{kCircuitA, kCircuitB})
        return fail(std::nullopt, "conclusion circuits differ from the expected pair");

    for (std::size_t i = 0; i < cert.survivors.size(); ++i) {
        const SurvivorRecord& s = cert.survivors[i];
        if (s.topes.contains(kExcludedA) || s.topes.contains(kExcludedB))
            return fail(i, "survivor contains an excluded tope");
        if (circuit_on_support(s.topes, kSupportA) != kCircuitA)
            return fail(i, "circuit on {1,2,3,4} is not " + kCircuitA.to_string());
        if (circuit_on_support(s.topes, kSupportB) != kCircuitB)
            return fail(i, "circuit on {1,2,5,6} is not " + kCircuitB.to_string());
        if (s.circuit_a != kCircuitA || s.circuit_b != kCircuitB || !s.excludes_a || !s.excludes_b)
            return fail(i, "recorded survivor fields disagree with recomputation");
    }
    return {true, std::nullopt, {}};
}

[[nodiscard]] inline Lemma6Verification verify_lemma6(const Lemma6Certificate& cert)
{
    return verify_lemma6(cert, topes_of(alternating_chirotope(kGroundSize, kSourceRank)));
}

} // namespace omcert::lemma6
