#pragma once

// Chirotopes stored on ascending r-tuples in lexicographic order. Values on
// unsorted tuples follow by alternation and are computed on demand.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "signed_vector.hpp"

namespace omcert {

class Chirotope {
public:
    /// `values` lists chi on every ascending r-tuple of {1..n}, lexicographically.
    Chirotope(int n, int rank, std::vector<std::int8_t> values) : n_(n), r_(rank), values_(std::move(values))
    {
        static_cast<void>(GroundSet{n});
        if (rank < 1 || rank > n)
            throw std::invalid_argument("chirotope rank " + std::to_string(rank) + " out of range for n=" + std::to_string(n));
        if (values_.size() != binomial(n, rank))
            throw std::invalid_argument("chirotope needs C(n,r)=" + std::to_string(binomial(n, rank)) + " values, got " +
                                        std::to_string(values_.size()));
        bool nonzero = false;
        for (auto v : values_) {
            if (v < -1 || v > 1) throw std::invalid_argument("chirotope values must be -1, 0 or +1");
            nonzero = nonzero || v != 0;
        }
        if (!nonzero) throw std::invalid_argument("chirotope is identically zero");
    }

    [[nodiscard]] int ground_size() const noexcept { return n_; }
    [[nodiscard]] int rank() const noexcept { return r_; }
    [[nodiscard]] std::span<const std::int8_t> values() const noexcept { return values_; }

    /// chi on an ascending tuple of 1-based elements.
    [[nodiscard]] int sorted_value(std::span<const int> ascending) const
    {
        std::vector<int> zero_based(ascending.begin(), ascending.end());
        for (int& v : zero_based) --v;
        return values_[rank_combination(zero_based, n_)];
    }

    /// chi on an arbitrary r-tuple, extended by alternation; 0 on repeated elements.
    [[nodiscard]] int operator()(std::span<const int> tuple) const
    {
        if (static_cast<int>(tuple.size()) != r_) throw std::invalid_argument("chirotope evaluated on a tuple of wrong length");
        std::vector<int> t(tuple.begin(), tuple.end());
        for (int e : t)
            if (e < 1 || e > n_) throw std::invalid_argument("chirotope argument outside ground set");
        int parity = 1;
        // insertion sort, counting transpositions
        for (std::size_t i = 1; i < t.size(); ++i) {
            for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
                if (t[j - 1] == t[j]) return 0;
                std::swap(t[j - 1], t[j]);
                parity = -parity;
            }
        }
        return parity * sorted_value(t);
    }

    [[nodiscard]] int operator()(std::initializer_list<int> tuple) const
    {
        return (*this)(std::span<const int>(tuple.begin(), tuple.size()));
    }

    /// Exact equality of stored values.
    friend bool operator==(const Chirotope&, const Chirotope&) = default;

private:
    int n_;
    int r_;
    std::vector<std::int8_t> values_;
};

/// chi and -chi describe the same oriented matroid.
[[nodiscard]] inline bool same_oriented_matroid(const Chirotope& a, const Chirotope& b)
{
    if (a.ground_size() != b.ground_size() || a.rank() != b.rank()) return false;
    if (a == b) return true;
    const auto av = a.values();
    const auto bv = b.values();
    for (std::size_t i = 0; i < av.size(); ++i)
        if (av[i] != -bv[i]) return false;
    return true;
}

[[nodiscard]] inline bool is_uniform(const Chirotope& chi)
{
    return std::ranges::none_of(chi.values(), [](std::int8_t v) { return v == 0; });
}

/// Builds a chirotope from a function on ascending tuples of 1-based elements.
template <typename Fn>
[[nodiscard]] Chirotope chirotope_from(int n, int rank, Fn&& sign_of)
{
    if (rank < 1 || rank > n) throw std::invalid_argument("chirotope rank out of range");
    std::vector<std::int8_t> values;
    values.reserve(binomial(n, rank));
    for (ElementSet s : subsets_of_size(n, rank)) {
        const std::vector<int> tuple = s.elements();
        values.push_back(static_cast<std::int8_t>(sign_of(std::span<const int>(tuple))));
    }
    return Chirotope(n, rank, std::move(values));
}

/// +1 on every ascending tuple: points on the moment curve.
[[nodiscard]] inline Chirotope alternating_chirotope(int n, int rank)
{
    if (rank < 1 || rank > n)
        throw std::invalid_argument("alternating chirotope: rank " + std::to_string(rank) + " out of range for n=" +
                                    std::to_string(n));
    static_cast<void>(GroundSet{n});
    return Chirotope(n, rank, std::vector<std::int8_t>(binomial(n, rank), 1));
}

/// The pair-swap permutation (1 2)(3 4)...(n-1 n).
[[nodiscard]] constexpr int pair_swap(int e) noexcept { return (e % 2 == 1) ? e + 1 : e - 1; }

/// Rank 2 chirotope with chi(i,j) = +1 iff swap(i) >= swap(j), n even.
[[nodiscard]] inline Chirotope m2_chirotope(int n)
{
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("m2 chirotope needs an even n >= 2, got " + std::to_string(n));
    return chirotope_from(n, 2, [](std::span<const int> t) { return pair_swap(t[0]) >= pair_swap(t[1]) ? 1 : -1; });
}

/// Deletion of every element outside `keep`, relabeled order-preserving.
[[nodiscard]] inline Chirotope restrict_chirotope(const Chirotope& chi, std::span<const int> keep)
{
    require_ordered_subset(keep, GroundSet(chi.ground_size()));
    const int m = static_cast<int>(keep.size());
    if (m < chi.rank())
        throw std::invalid_argument("restriction to " + std::to_string(m) + " elements drops rank " +
                                    std::to_string(chi.rank()));
    std::vector<std::int8_t> values;
    bool nonzero = false;
    for (ElementSet s : subsets_of_size(m, chi.rank())) {
        std::vector<int> tuple;
        for (int j : s.elements()) tuple.push_back(keep[j - 1]);
        const int v = chi.sorted_value(tuple);
        nonzero = nonzero || v != 0;
        values.push_back(static_cast<std::int8_t>(v));
    }
    if (!nonzero) throw std::invalid_argument("restriction drops the rank: every r-subset of the kept set is dependent");
    return Chirotope(m, chi.rank(), std::move(values));
}

[[nodiscard]] inline Chirotope restrict_chirotope(const Chirotope& chi, std::initializer_list<int> keep)
{
    return restrict_chirotope(chi, std::span<const int>(keep.begin(), keep.size()));
}

/// Contraction of element u: chi'(x_1..x_{r-1}) = chi(u, x_1..x_{r-1}) on the
/// remaining elements, relabeled order-preserving.
[[nodiscard]] inline Chirotope contract_chirotope(const Chirotope& chi, int u)
{
    const int n = chi.ground_size();
    if (u < 1 || u > n) throw std::invalid_argument("contraction element outside ground set");
    if (chi.rank() < 2) throw std::invalid_argument("cannot contract a rank-1 chirotope");
    if (n < 2) throw std::invalid_argument("cannot contract the only element");
    std::vector<std::int8_t> values;
    bool nonzero = false;
    for (ElementSet s : subsets_of_size(n - 1, chi.rank() - 1)) {
        std::vector<int> tuple{u};
        for (int j : s.elements()) tuple.push_back(j < u ? j : j + 1);
        const int v = chi(tuple);
        nonzero = nonzero || v != 0;
        values.push_back(static_cast<std::int8_t>(v));
    }
    if (!nonzero) throw std::invalid_argument("element " + std::to_string(u) + " is a loop; contraction is degenerate");
    return Chirotope(n - 1, chi.rank() - 1, std::move(values));
}

} // namespace omcert
