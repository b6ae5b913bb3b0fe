#pragma once

// Tope, cocircuit and covector generation for uniform oriented matroids given
// by chirotopes, together with the covector axiom checker and the
// uniform-tope (VC-dimension) checker.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "chirotope.hpp"
#include "combinatorics.hpp"
#include "signed_vector.hpp"

namespace omcert {

using SignedVectorSet = std::unordered_set<SignedVector, SignedVectorHash>;

/// Canonical full-support covectors of a rank-r oriented matroid, kept sorted
/// in string order. Opposites are implicit.
class TopeSet {
public:
    TopeSet(int n, int rank, std::vector<SignedVector> topes) : n_(n), r_(rank), topes_(std::move(topes))
    {
        static_cast<void>(GroundSet{n});
        if (rank < 1 || rank > n) throw std::invalid_argument("tope set rank out of range");
        for (const auto& t : topes_) {
            if (t.size() != n) throw std::invalid_argument("tope " + t.to_string() + " is on the wrong ground set");
            if (!t.has_full_support()) throw std::invalid_argument("tope " + t.to_string() + " lacks full support");
            if (!is_canonical(t)) throw std::invalid_argument("tope " + t.to_string() + " is not canonical");
        }
        std::ranges::sort(topes_);
        if (std::ranges::adjacent_find(topes_) != topes_.end())
            throw std::invalid_argument("tope set contains a duplicate");
    }

    static TopeSet from_strings(int rank, std::span<const std::string> text)
    {
        if (text.empty()) throw std::invalid_argument("empty tope list");
        const GroundSet ground(static_cast<int>(text.front().size()));
        std::vector<SignedVector> topes;
        for (const auto& s : text) topes.push_back(parse_signed_vector(s, ground));
        return TopeSet(ground.size(), rank, std::move(topes));
    }

    [[nodiscard]] int ground_size() const noexcept { return n_; }
    [[nodiscard]] int rank() const noexcept { return r_; }
    [[nodiscard]] std::size_t size() const noexcept { return topes_.size(); }
    [[nodiscard]] const std::vector<SignedVector>& topes() const noexcept { return topes_; }
    [[nodiscard]] auto begin() const noexcept { return topes_.begin(); }
    [[nodiscard]] auto end() const noexcept { return topes_.end(); }

    /// Membership of X or -X.
    [[nodiscard]] bool contains(const SignedVector& x) const
    {
        return std::ranges::binary_search(topes_, canonicalize(x));
    }

    [[nodiscard]] std::vector<std::string> to_strings() const
    {
        std::vector<std::string> out;
        out.reserve(topes_.size());
        for (const auto& t : topes_) out.push_back(t.to_string());
        return out;
    }

    friend bool operator==(const TopeSet&, const TopeSet&) = default;

private:
    int n_;
    int r_;
    std::vector<SignedVector> topes_;
};

/// A family of signed vectors with both signs stored. Invariants are what
/// check_covector_axioms verifies, so construction does not enforce them.
class CovectorSet {
public:
    CovectorSet(int n, std::vector<SignedVector> covectors) : n_(n), sorted_(std::move(covectors))
    {
        static_cast<void>(GroundSet{n});
        for (const auto& x : sorted_)
            if (x.size() != n) throw std::invalid_argument("covector " + x.to_string() + " is on the wrong ground set");
        std::ranges::sort(sorted_);
        sorted_.erase(std::unique(sorted_.begin(), sorted_.end()), sorted_.end());
        members_.insert(sorted_.begin(), sorted_.end());
    }

    [[nodiscard]] int ground_size() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return sorted_.size(); }
    [[nodiscard]] const std::vector<SignedVector>& covectors() const noexcept { return sorted_; }
    [[nodiscard]] bool contains(const SignedVector& x) const { return members_.contains(x); }
    [[nodiscard]] auto begin() const noexcept { return sorted_.begin(); }
    [[nodiscard]] auto end() const noexcept { return sorted_.end(); }

private:
    int n_;
    std::vector<SignedVector> sorted_;
    SignedVectorSet members_;
};

// ---------------------------------------------------------------------------
// Generation
// ---------------------------------------------------------------------------

/// One canonical cocircuit per (r-1)-subset Z: c(e) = chi(Z, e) off Z.
[[nodiscard]] inline std::vector<SignedVector> cocircuits_from_chirotope(const Chirotope& chi)
{
    if (!is_uniform(chi)) throw std::invalid_argument("cocircuit extraction supports uniform chirotopes only");
    const int n = chi.ground_size();
    const GroundSet ground(n);
    std::vector<SignedVector> out;
    for (ElementSet z : subsets_of_size(n, chi.rank() - 1)) {
        std::vector<int> tuple = z.elements();
        tuple.push_back(0);
        std::uint32_t pos = 0;
        std::uint32_t neg = 0;
        for (int e = 1; e <= n; ++e) {
            if (z.contains(e)) continue;
            tuple.back() = e;
            const int s = chi(tuple);
            if (s > 0) pos |= std::uint32_t{1} << (e - 1);
            if (s < 0) neg |= std::uint32_t{1} << (e - 1);
        }
        out.push_back(canonicalize(SignedVector(ground, pos, neg)));
    }
    std::ranges::sort(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline constexpr std::size_t kDefaultClosureBound = 2'000'000;

/// Composition closure of the cocircuits (both signs); every covector is a
/// composition c_1 o ... o c_k, so extending on the right by one cocircuit at
/// a time reaches all of them. Returns every covector including 0.
[[nodiscard]] inline std::vector<SignedVector> composition_closure(std::span<const SignedVector> cocircuits, int n,
                                                                   std::size_t bound = kDefaultClosureBound)
{
    if (cocircuits.empty()) throw std::invalid_argument("composition closure of an empty cocircuit set");
    const GroundSet ground(n);
    std::vector<SignedVector> generators;
    for (const auto& c : cocircuits) {
        if (c.size() != n) throw std::invalid_argument("cocircuit " + c.to_string() + " is on the wrong ground set");
        generators.push_back(c);
        generators.push_back(opposite(c));
    }
    SignedVectorSet seen;
    std::vector<SignedVector> frontier;
    std::vector<SignedVector> all;
    const SignedVector zero(ground);
    seen.insert(zero);
    all.push_back(zero);
    for (const auto& g : generators)
        if (seen.insert(g).second) {
            frontier.push_back(g);
            all.push_back(g);
        }
    while (!frontier.empty()) {
        std::vector<SignedVector> next;
        for (const auto& x : frontier) {
            if (x.has_full_support()) continue;
            for (const auto& g : generators) {
                const SignedVector y = compose(x, g);
                if (y == x) continue;
                if (seen.insert(y).second) {
                    if (seen.size() > bound)
                        throw std::length_error("composition closure exceeded the bound of " + std::to_string(bound) +
                                                " vectors; input is malformed");
                    next.push_back(y);
                    all.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    std::ranges::sort(all);
    return all;
}

[[nodiscard]] inline TopeSet topes_from_cocircuits(std::span<const SignedVector> cocircuits, int n, int rank,
                                                   std::size_t bound = kDefaultClosureBound)
{
    std::vector<SignedVector> topes;
    for (const auto& x : composition_closure(cocircuits, n, bound))
        if (x.has_full_support() && is_canonical(x)) topes.push_back(x);
    return TopeSet(n, rank, std::move(topes));
}

[[nodiscard]] inline TopeSet topes_of(const Chirotope& chi)
{
    return topes_from_cocircuits(cocircuits_from_chirotope(chi), chi.ground_size(), chi.rank());
}

/// Canonical full-support vectors with at most r-1 sign changes.
[[nodiscard]] inline TopeSet alternating_topes_direct(int n, int rank)
{
    if (rank < 1 || rank > n) throw std::invalid_argument("alternating topes: rank out of range");
    if (n > 24) throw std::length_error("alternating_topes_direct enumerates 2^(n-1) vectors; n too large");
    const GroundSet ground(n);
    std::vector<SignedVector> topes;
    const std::uint32_t full = ground.full_mask();
    // element 1 is positive; bits 2..n choose the negative set
    for (std::uint32_t neg = 0; neg <= (full >> 1); ++neg) {
        const std::uint32_t negative = neg << 1;
        const int changes = std::popcount((negative ^ (negative >> 1)) & (full >> 1));
        if (changes <= rank - 1) topes.emplace_back(ground, full & ~negative, negative);
    }
    return TopeSet(n, rank, std::move(topes));
}

/// Tope-committee rule: X is a covector iff X o T is a tope for every tope T.
[[nodiscard]] inline bool is_covector_by_committee(const SignedVector& x, const TopeSet& topes)
{
    for (const auto& t : topes) {
        if (!topes.contains(compose(x, t))) return false;
        if (!topes.contains(compose(x, opposite(t)))) return false;
    }
    return true;
}

[[nodiscard]] inline CovectorSet covectors_from_topes(const TopeSet& topes)
{
    std::vector<SignedVector> covectors;
    for (const auto& x : all_signed_vectors(GroundSet(topes.ground_size())))
        if (is_covector_by_committee(x, topes)) covectors.push_back(x);
    return CovectorSet(topes.ground_size(), std::move(covectors));
}

/// Canonical forms of the nonzero conformally minimal members.
[[nodiscard]] inline std::vector<SignedVector> minimal_nonzero(const CovectorSet& family)
{
    std::vector<SignedVector> out;
    for (const auto& x : family) {
        if (x.is_zero()) continue;
        const bool minimal = std::ranges::none_of(family, [&](const SignedVector& y) {
            return !y.is_zero() && y != x && conforms(y, x);
        });
        if (minimal) out.push_back(canonicalize(x));
    }
    std::ranges::sort(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Canonical deduplicated restrictions of every tope to `keep`.
[[nodiscard]] inline TopeSet restrict_topes(const TopeSet& topes, std::span<const int> keep)
{
    std::vector<SignedVector> out;
    for (const auto& t : topes) out.push_back(canonicalize(restrict(t, keep)));
    std::ranges::sort(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return TopeSet(static_cast<int>(keep.size()), std::min(topes.rank(), static_cast<int>(keep.size())), std::move(out));
}

// ---------------------------------------------------------------------------
// Covector axioms
// ---------------------------------------------------------------------------

struct EliminationFailure {
    SignedVector x;
    SignedVector y;
    int element;
};

struct CovectorAxiomReport {
    static constexpr std::size_t kMaxListed = 16;

    bool contains_zero = false;
    std::size_t opposite_violations = 0;
    std::size_t composition_violations = 0;
    std::size_t elimination_violations = 0;
    std::vector<SignedVector> missing_opposites;
    std::vector<std::pair<SignedVector, SignedVector>> non_closed_compositions;
    std::vector<EliminationFailure> failed_eliminations;

    [[nodiscard]] bool passed() const noexcept
    {
        return contains_zero && opposite_violations == 0 && composition_violations == 0 && elimination_violations == 0;
    }
};

[[nodiscard]] inline CovectorAxiomReport check_covector_axioms(const CovectorSet& family)
{
    CovectorAxiomReport report;
    const GroundSet ground(family.ground_size());
    report.contains_zero = family.contains(SignedVector(ground));

    for (const auto& x : family) {
        if (!family.contains(opposite(x))) {
            ++report.opposite_violations;
            if (report.missing_opposites.size() < CovectorAxiomReport::kMaxListed) report.missing_opposites.push_back(x);
        }
    }

    for (const auto& x : family) {
        for (const auto& y : family) {
            const SignedVector xy = compose(x, y);
            if (!family.contains(xy)) {
                ++report.composition_violations;
                if (report.non_closed_compositions.size() < CovectorAxiomReport::kMaxListed)
                    report.non_closed_compositions.emplace_back(x, y);
            }
            const std::uint32_t sep = separation_set(x, y).bits;
            if (sep == 0) continue;
            const std::uint32_t fixed_pos = xy.positive() & ~sep;
            const std::uint32_t fixed_neg = xy.negative() & ~sep;
            for (std::uint32_t rest = sep; rest != 0; rest &= rest - 1) {
                const std::uint32_t e_bit = rest & (~rest + 1U);
                const std::uint32_t free = sep & ~e_bit;
                // Z agrees with X o Y off S(X,Y), vanishes at e, anything on S \ {e}.
                bool found = false;
                for (std::uint32_t support = free;; support = (support - 1) & free) {
                    for (std::uint32_t neg = support;; neg = (neg - 1) & support) {
                        const SignedVector z(ground, fixed_pos | (support & ~neg), fixed_neg | neg);
                        if (family.contains(z)) {
                            found = true;
                            break;
                        }
                        if (neg == 0) break;
                    }
                    if (found || support == 0) break;
                }
                if (!found) {
                    ++report.elimination_violations;
                    if (report.failed_eliminations.size() < CovectorAxiomReport::kMaxListed)
                        report.failed_eliminations.push_back({x, y, std::countr_zero(e_bit) + 1});
                }
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Uniform tope axioms and circuits
// ---------------------------------------------------------------------------

/// Index of the canonical sign pattern of a full-support vector restricted to
/// Q = {q_0 < ... < q_r}. Bit (r - j) is set when q_j carries the sign
/// opposite to q_0, so smaller indices come first in string order.
[[nodiscard]] inline unsigned restricted_pattern_index(const SignedVector& tope, ElementSet q)
{
    const std::uint32_t lowest = q.bits & (~q.bits + 1U);
    const std::uint32_t flips = (tope.positive() & lowest) ? tope.negative() : tope.positive();
    unsigned index = 0;
    for (std::uint32_t rest = q.bits & ~lowest; rest != 0; rest &= rest - 1) {
        const std::uint32_t bit = rest & (~rest + 1U);
        index = (index << 1) | ((flips & bit) ? 1U : 0U);
    }
    return index;
}

/// The canonical vector supported on Q with pattern `index` (inverse of the above).
[[nodiscard]] inline SignedVector pattern_vector(ElementSet q, unsigned index, GroundSet ground)
{
    const std::vector<int> elements = q.elements();
    const int r = static_cast<int>(elements.size()) - 1;
    std::uint32_t pos = std::uint32_t{1} << (elements[0] - 1);
    std::uint32_t neg = 0;
    for (int j = 1; j <= r; ++j) {
        const std::uint32_t bit = std::uint32_t{1} << (elements[j] - 1);
        if ((index >> (r - j)) & 1U)
            neg |= bit;
        else
            pos |= bit;
    }
    return SignedVector(ground, pos, neg);
}

/// Mask with one bit per canonical pattern on an (r+1)-subset: 2^r bits.
[[nodiscard]] inline std::uint64_t all_patterns_mask(int r)
{
    if (r < 0 || r > 6) throw std::length_error("pattern masks hold at most 64 patterns; rank must be at most 6");
    const unsigned patterns = 1U << r;
    return patterns == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << patterns) - 1U;
}

/// Bitmask over the 2^r canonical patterns on Q realized by some tope.
[[nodiscard]] inline std::uint64_t realized_patterns(const TopeSet& topes, ElementSet q)
{
    std::uint64_t mask = 0;
    for (const auto& t : topes) mask |= std::uint64_t{1} << restricted_pattern_index(t, q);
    return mask;
}

struct VcWitness {
    ElementSet subset;
    SignedVector pattern;
};

struct UniformTopeReport {
    std::uint64_t expected_count = 0;
    std::uint64_t actual_count = 0;
    std::vector<VcWitness> witnesses;      // one per (r+1)-subset that has one, in subset order
    std::vector<ElementSet> shattered;     // (r+1)-subsets on which every pattern occurs

    [[nodiscard]] bool count_ok() const noexcept { return expected_count == actual_count; }
    [[nodiscard]] bool passed() const noexcept { return count_ok() && shattered.empty(); }
};

/// Count condition plus, for every (r+1)-subset Q, the first canonical pattern
/// on Q (string order) that no tope restricts to.
[[nodiscard]] inline UniformTopeReport check_uniform_tope_axioms(const TopeSet& topes)
{
    const int n = topes.ground_size();
    const int r = topes.rank();
    UniformTopeReport report;
    report.expected_count = uniform_tope_count(n, r);
    report.actual_count = topes.size();
    if (r + 1 > n) return report;
    const GroundSet ground(n);
    const std::uint64_t all = all_patterns_mask(r);
    for (ElementSet q : subsets_of_size(n, r + 1)) {
        const std::uint64_t missing = ~realized_patterns(topes, q) & all;
        if (missing == 0) {
            report.shattered.push_back(q);
            continue;
        }
        report.witnesses.push_back({q, pattern_vector(q, static_cast<unsigned>(std::countr_zero(missing)), ground)});
    }
    return report;
}

/// The unique canonical vector with support exactly Q perpendicular to every tope.
[[nodiscard]] inline SignedVector circuit_on_support(const TopeSet& topes, ElementSet q)
{
    const int r = topes.rank();
    if (q.size() != r + 1)
        throw std::invalid_argument("circuit support {" + q.to_key() + "} must have r+1=" + std::to_string(r + 1) + " elements");
    if (q.bits & ~GroundSet(topes.ground_size()).full_mask())
        throw std::invalid_argument("circuit support outside the ground set");
    const std::uint64_t missing = ~realized_patterns(topes, q) & all_patterns_mask(r);
    if (missing == 0)
        throw std::domain_error("no vector on {" + q.to_key() + "} is perpendicular to every tope; not a uniform tope set");
    if (std::popcount(missing) > 1)
        throw std::domain_error(std::to_string(std::popcount(missing)) + " candidate circuits on {" + q.to_key() +
                                "}; rank metadata is inconsistent with the topes");
    return pattern_vector(q, static_cast<unsigned>(std::countr_zero(missing)), GroundSet(topes.ground_size()));
}

} // namespace omcert
