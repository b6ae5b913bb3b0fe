#pragma once

// Signed vectors on a ground set {1..n}, n <= 32, stored as a pair of
// disjoint bitmasks. Bit (e-1) encodes element e.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace omcert {

inline constexpr int kMaxGroundSize = 32;

/// Largest number of free positions full_support_extensions will enumerate.
inline constexpr int kMaxFreePositions = 20;

class GroundSet {
public:
    explicit constexpr GroundSet(int n) : n_(n)
    {
        if (n < 1 || n > kMaxGroundSize)
            throw std::invalid_argument("ground set size must lie in 1..32, got " + std::to_string(n));
    }

    [[nodiscard]] constexpr int size() const noexcept { return n_; }
    [[nodiscard]] constexpr std::uint32_t full_mask() const noexcept
    {
        return n_ == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n_) - 1U);
    }

    friend constexpr bool operator==(GroundSet, GroundSet) = default;

private:
    int n_;
};

/// A subset of {1..n} as a bitmask.
struct ElementSet {
    std::uint32_t bits = 0;

    static constexpr ElementSet of(std::initializer_list<int> elements)
    {
        ElementSet s;
        for (int e : elements) s.bits |= std::uint32_t{1} << (e - 1);
        return s;
    }

    static ElementSet of(std::span<const int> elements)
    {
        ElementSet s;
        for (int e : elements) s.bits |= std::uint32_t{1} << (e - 1);
        return s;
    }

    [[nodiscard]] constexpr bool contains(int e) const noexcept { return (bits >> (e - 1)) & 1U; }
    [[nodiscard]] constexpr int size() const noexcept { return std::popcount(bits); }
    [[nodiscard]] constexpr bool empty() const noexcept { return bits == 0; }

    /// Ascending element list.
    [[nodiscard]] std::vector<int> elements() const
    {
        std::vector<int> out;
        for (std::uint32_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    /// "1,2,5,6"
    [[nodiscard]] std::string to_key() const
    {
        std::string out;
        for (int e : elements()) {
            if (!out.empty()) out += ',';
            out += std::to_string(e);
        }
        return out;
    }

    friend constexpr bool operator==(ElementSet, ElementSet) = default;
    friend constexpr auto operator<=>(ElementSet, ElementSet) = default;
};

class SignedVector {
public:
    /// The zero vector on {1..n}.
    explicit constexpr SignedVector(GroundSet ground) : n_(static_cast<std::uint8_t>(ground.size())) {}

    constexpr SignedVector(GroundSet ground, std::uint32_t positive, std::uint32_t negative)
        : n_(static_cast<std::uint8_t>(ground.size())), pos_(positive), neg_(negative)
    {
        if ((pos_ & neg_) != 0)
            throw std::invalid_argument("positive and negative parts of a signed vector must be disjoint");
        if (((pos_ | neg_) & ~ground.full_mask()) != 0)
            throw std::invalid_argument("signed vector has support outside its ground set");
    }

    [[nodiscard]] constexpr GroundSet ground() const { return GroundSet(n_); }
    [[nodiscard]] constexpr int size() const noexcept { return n_; }
    [[nodiscard]] constexpr std::uint32_t positive() const noexcept { return pos_; }
    [[nodiscard]] constexpr std::uint32_t negative() const noexcept { return neg_; }
    [[nodiscard]] constexpr ElementSet support() const noexcept { return {pos_ | neg_}; }
    [[nodiscard]] constexpr bool is_zero() const noexcept { return (pos_ | neg_) == 0; }
    [[nodiscard]] constexpr bool has_full_support() const noexcept { return (pos_ | neg_) == ground().full_mask(); }

    /// Sign of element e (1-based): -1, 0 or +1.
    [[nodiscard]] constexpr int operator[](int e) const noexcept
    {
        const std::uint32_t bit = std::uint32_t{1} << (e - 1);
        return (pos_ & bit) ? 1 : ((neg_ & bit) ? -1 : 0);
    }

    [[nodiscard]] std::string to_string() const
    {
        std::string out(n_, '0');
        for (int e = 1; e <= n_; ++e) {
            const int s = (*this)[e];
            out[e - 1] = s > 0 ? '+' : (s < 0 ? '-' : '0');
        }
        return out;
    }

    friend constexpr bool operator==(const SignedVector&, const SignedVector&) = default;

    /// Total order matching byte order of the string form ('+' < '-' < '0').
    friend constexpr std::strong_ordering operator<=>(const SignedVector& a, const SignedVector& b) noexcept
    {
        if (a.n_ != b.n_) return a.n_ <=> b.n_;
        const std::uint32_t diff = (a.pos_ ^ b.pos_) | (a.neg_ ^ b.neg_);
        if (diff == 0) return std::strong_ordering::equal;
        const int e = std::countr_zero(diff) + 1;
        auto rank = [](int sign) { return sign > 0 ? 0 : (sign < 0 ? 1 : 2); };
        return rank(a[e]) <=> rank(b[e]);
    }

private:
    std::uint8_t n_;
    std::uint32_t pos_ = 0;
    std::uint32_t neg_ = 0;
};

inline void require_same_ground(const SignedVector& x, const SignedVector& y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("signed vectors live on different ground sets (" + std::to_string(x.size()) +
                                    " vs " + std::to_string(y.size()) + ")");
}

/// Parses "+-0" text; character i gives the sign of element i+1.
inline SignedVector parse_signed_vector(std::string_view text, GroundSet ground)
{
    if (static_cast<int>(text.size()) != ground.size())
        throw std::invalid_argument("signed vector \"" + std::string(text) + "\" has length " +
                                    std::to_string(text.size()) + ", expected " + std::to_string(ground.size()));
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case '+': pos |= std::uint32_t{1} << i; break;
        case '-': neg |= std::uint32_t{1} << i; break;
        case '0': break;
        default:
            throw std::invalid_argument("illegal character '" + std::string(1, text[i]) + "' in signed vector \"" +
                                        std::string(text) + "\"");
        }
    }
    return SignedVector(ground, pos, neg);
}

/// Parses using the text length as the ground size.
inline SignedVector parse_signed_vector(std::string_view text)
{
    if (text.empty() || text.size() > kMaxGroundSize)
        throw std::invalid_argument("signed vector text must have 1..32 symbols");
    return parse_signed_vector(text, GroundSet(static_cast<int>(text.size())));
}

[[nodiscard]] inline SignedVector opposite(const SignedVector& x)
{
    return SignedVector(x.ground(), x.negative(), x.positive());
}

/// Representative of {X, -X} whose lowest-index nonzero sign is +.
[[nodiscard]] inline SignedVector canonicalize(const SignedVector& x)
{
    const std::uint32_t support = x.support().bits;
    if (support == 0) return x;
    const std::uint32_t lowest = support & (~support + 1U);
    return (x.positive() & lowest) ? x : opposite(x);
}

[[nodiscard]] inline bool is_canonical(const SignedVector& x) { return canonicalize(x) == x; }

[[nodiscard]] inline SignedVector compose(const SignedVector& x, const SignedVector& y)
{
    require_same_ground(x, y);
    const std::uint32_t free = ~x.support().bits;
    return SignedVector(x.ground(), x.positive() | (y.positive() & free), x.negative() | (y.negative() & free));
}

[[nodiscard]] inline ElementSet separation_set(const SignedVector& x, const SignedVector& y)
{
    require_same_ground(x, y);
    return {(x.positive() & y.negative()) | (x.negative() & y.positive())};
}

/// Conformal order: X <= Y iff X+ is inside Y+ and X- inside Y-.
[[nodiscard]] inline bool conforms(const SignedVector& x, const SignedVector& y)
{
    require_same_ground(x, y);
    return (x.positive() & ~y.positive()) == 0 && (x.negative() & ~y.negative()) == 0;
}

[[nodiscard]] inline bool perpendicular(const SignedVector& x, const SignedVector& y)
{
    require_same_ground(x, y);
    const bool agree = ((x.positive() & y.positive()) | (x.negative() & y.negative())) != 0;
    const bool disagree = ((x.positive() & y.negative()) | (x.negative() & y.positive())) != 0;
    return agree == disagree;
}

/// Validates an ordered element list: nonempty, strictly increasing, inside {1..n}.
inline void require_ordered_subset(std::span<const int> keep, GroundSet ground)
{
    if (keep.empty()) throw std::invalid_argument("kept element list is empty");
    int previous = 0;
    for (int e : keep) {
        if (e < 1 || e > ground.size())
            throw std::invalid_argument("element " + std::to_string(e) + " outside ground set of size " +
                                        std::to_string(ground.size()));
        if (e <= previous) throw std::invalid_argument("kept element list must be strictly increasing");
        previous = e;
    }
}

/// Restriction to `keep`, relabeled so that keep[j] becomes element j+1.
[[nodiscard]] inline SignedVector restrict(const SignedVector& x, std::span<const int> keep)
{
    require_ordered_subset(keep, x.ground());
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
    for (std::size_t j = 0; j < keep.size(); ++j) {
        const int s = x[keep[j]];
        if (s > 0) pos |= std::uint32_t{1} << j;
        if (s < 0) neg |= std::uint32_t{1} << j;
    }
    return SignedVector(GroundSet(static_cast<int>(keep.size())), pos, neg);
}

[[nodiscard]] inline SignedVector restrict(const SignedVector& x, std::initializer_list<int> keep)
{
    return restrict(x, std::span<const int>(keep.begin(), keep.size()));
}

/// Inverse of restrict: places the signs of `x` (on |keep| elements) at the
/// kept positions of an n-element ground set, zero elsewhere.
[[nodiscard]] inline SignedVector lift(const SignedVector& x, std::span<const int> keep, GroundSet ground)
{
    require_ordered_subset(keep, ground);
    if (static_cast<int>(keep.size()) != x.size())
        throw std::invalid_argument("lift: kept list length does not match the vector's ground set");
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
    for (std::size_t j = 0; j < keep.size(); ++j) {
        const int s = x[static_cast<int>(j) + 1];
        if (s > 0) pos |= std::uint32_t{1} << (keep[j] - 1);
        if (s < 0) neg |= std::uint32_t{1} << (keep[j] - 1);
    }
    return SignedVector(ground, pos, neg);
}

/// All full-support vectors X' with X <= X' in the conformal order.
[[nodiscard]] inline std::vector<SignedVector> full_support_extensions(const SignedVector& x)
{
    const std::uint32_t free = x.ground().full_mask() & ~x.support().bits;
    const int z = std::popcount(free);
    if (z > kMaxFreePositions)
        throw std::length_error("full_support_extensions: " + std::to_string(z) + " free positions exceed the limit of " +
                                std::to_string(kMaxFreePositions));
    std::vector<SignedVector> out;
    out.reserve(std::size_t{1} << z);
    // Enumerate subsets of `free` that become negative.
    std::uint32_t sub = 0;
    do {
        out.emplace_back(x.ground(), x.positive() | (free & ~sub), x.negative() | sub);
        sub = (sub - free) & free;
    } while (sub != 0);
    return out;
}

/// Every signed vector on n elements, 3^n of them (n <= 12).
[[nodiscard]] inline std::vector<SignedVector> all_signed_vectors(GroundSet ground)
{
    if (ground.size() > 12) throw std::length_error("all_signed_vectors: ground set too large");
    std::vector<SignedVector> out;
    const std::uint32_t full = ground.full_mask();
    for (std::uint32_t support = 0;; support = (support - full) & full) {
        for (std::uint32_t neg = 0;; neg = (neg - support) & support) {
            out.emplace_back(ground, support & ~neg, neg);
            if (neg == support) break;
        }
        if (support == full) break;
    }
    return out;
}

struct SignedVectorHash {
    std::size_t operator()(const SignedVector& x) const noexcept
    {
        const std::uint64_t key = (std::uint64_t{x.positive()} << 32) ^ x.negative() ^ (std::uint64_t(x.size()) << 58);
        return std::hash<std::uint64_t>{}(key * 0x9E3779B97F4A7C15ULL);
    }
};

} // namespace omcert
