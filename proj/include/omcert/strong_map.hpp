#pragma once

// Strong maps between oriented matroids on a common ground set. A strong map
// M_source -> M_target exists when every covector of the target is a covector
// of the source; for a uniform target this reduces to tope inclusion.

#include <optional>
#include <stdexcept>
#include <string>

#include "oriented_matroid.hpp"
#include "signed_vector.hpp"

namespace omcert {

enum class StrongMapMethod { covector_containment, tope_inclusion };

[[nodiscard]] inline const char* to_string(StrongMapMethod m) noexcept
{
    return m == StrongMapMethod::covector_containment ? "covector-containment" : "tope-inclusion";
}

struct StrongMapVerdict {
    bool holds = false;
    StrongMapMethod method = StrongMapMethod::tope_inclusion;
    int corank = 0;
    /// First target covector (or tope) missing from the source when !holds.
    std::optional<SignedVector> witness;
};

[[nodiscard]] inline StrongMapVerdict is_strong_map_topes(const TopeSet& source, const TopeSet& target)
{
    if (source.ground_size() != target.ground_size())
        throw std::invalid_argument("strong map between different ground sets");
    StrongMapVerdict verdict;
    verdict.method = StrongMapMethod::tope_inclusion;
    verdict.corank = source.rank() - target.rank();
    for (const auto& t : target) {
        if (!source.contains(t)) {
            verdict.witness = t;
            return verdict;
        }
    }
    verdict.holds = true;
    return verdict;
}

/// Corank is computed from the ranks the caller supplies, as covector sets
/// carry no rank metadata.
[[nodiscard]] inline StrongMapVerdict is_strong_map_covectors(const CovectorSet& source, const CovectorSet& target,
                                                              int source_rank, int target_rank)
{
    if (source.ground_size() != target.ground_size())
        throw std::invalid_argument("strong map between different ground sets");
    StrongMapVerdict verdict;
    verdict.method = StrongMapMethod::covector_containment;
    verdict.corank = source_rank - target_rank;
    for (const auto& x : target) {
        if (!source.contains(x)) {
            verdict.witness = x;
            return verdict;
        }
    }
    verdict.holds = true;
    return verdict;
}

/// X is a covector when every full-support vector above it is a tope.
/// Valid for uniform tope sets.
[[nodiscard]] inline bool is_covector_by_extension(const SignedVector& x, const TopeSet& topes)
{
    if (x.size() != topes.ground_size()) throw std::invalid_argument("vector and tope set on different ground sets");
    for (const auto& completion : full_support_extensions(x))
        if (!topes.contains(completion)) return false;
    return true;
}

} // namespace omcert
