#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "signed_vector.hpp"

namespace omcert {

/// Exact binomial coefficient; throws on 64-bit overflow.
[[nodiscard]] inline std::uint64_t binomial(int n, int k)
{
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
        if (result > UINT64_MAX / factor) throw std::overflow_error("binomial: 64-bit overflow");
        // result * factor is divisible by i at every step
        result = result * factor / static_cast<std::uint64_t>(i);
    }
    return result;
}

/// Partial binomial sum C(n,0) + ... + C(n,r).
[[nodiscard]] inline std::uint64_t phi(int r, int n)
{
    if (r < 0 || n < 0) throw std::invalid_argument("phi: negative argument");
    if (r > n) throw std::invalid_argument("phi: r=" + std::to_string(r) + " exceeds n=" + std::to_string(n));
    std::uint64_t total = 0;
    for (int i = 0; i <= r; ++i) total += binomial(n, i);
    return total;
}

/// Number of canonical topes of a uniform rank-r oriented matroid on n elements.
[[nodiscard]] inline std::uint64_t uniform_tope_count(int n, int r) { return phi(r - 1, n - 1); }

/// Advances `c` (strictly increasing indices in [0, n)) to the next k-combination
/// in lexicographic order. Returns false after the last one.
inline bool next_combination(std::span<int> c, int n)
{
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

/// The combination of lexicographic rank `rank` among k-subsets of [0, n).
[[nodiscard]] inline std::vector<int> unrank_combination(std::uint64_t rank, int n, int k)
{
    if (k < 0 || k > n) throw std::invalid_argument("unrank_combination: bad k");
    if (rank >= binomial(n, k)) throw std::out_of_range("unrank_combination: rank out of range");
    std::vector<int> c;
    c.reserve(static_cast<std::size_t>(k));
    int next = 0;
    for (int slot = 0; slot < k; ++slot) {
        for (int v = next;; ++v) {
            // combinations whose slot-th entry is v
            const std::uint64_t block = binomial(n - v - 1, k - slot - 1);
            if (rank < block) {
                c.push_back(v);
                next = v + 1;
                break;
            }
            rank -= block;
        }
    }
    return c;
}

[[nodiscard]] inline std::uint64_t rank_combination(std::span<const int> c, int n)
{
    const int k = static_cast<int>(c.size());
    std::uint64_t rank = 0;
    int next = 0;
    for (int slot = 0; slot < k; ++slot) {
        for (int v = next; v < c[slot]; ++v) rank += binomial(n - v - 1, k - slot - 1);
        next = c[slot] + 1;
    }
    return rank;
}

/// All k-subsets of {1..n}, ordered lexicographically by ascending element list.
[[nodiscard]] inline std::vector<ElementSet> subsets_of_size(int n, int k)
{
    std::vector<ElementSet> out;
    if (k < 0 || k > n) return out;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[i] = i;
    do {
        ElementSet s;
        for (int v : c) s.bits |= std::uint32_t{1} << v;
        out.push_back(s);
    } while (next_combination(c, n));
    return out;
}

} // namespace omcert
