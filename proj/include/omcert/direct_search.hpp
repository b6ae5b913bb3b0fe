#pragma once

// Independent backtracking search for a rank-3 uniform tope set S on eight
// elements with T(m2(8)) in S in T(alternating(8,4)). It does not use the
// six-element search; finding anything would contradict the main result.
//
// Pruning: a partial set may never realize all 8 canonical patterns on a
// 4-subset, and since every 4-element restriction of a rank-3 uniform
// oriented matroid has exactly 7 canonical topes, each 4-subset must still be
// able to reach 7 patterns from the undecided candidates.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "chirotope.hpp"
#include "combinatorics.hpp"
#include "oriented_matroid.hpp"

namespace omcert::n8 {

enum class DirectSearchStatus { none_found, budget_exhausted, found };

[[nodiscard]] inline const char* to_string(DirectSearchStatus s) noexcept
{
    switch (s) {
    case DirectSearchStatus::none_found: return "none found";
    case DirectSearchStatus::budget_exhausted: return "budget exhausted";
    case DirectSearchStatus::found: return "found";
    }
    return "?";
}

struct DirectSearchResult {
    DirectSearchStatus status = DirectSearchStatus::budget_exhausted;
    std::uint64_t nodes = 0;
    std::optional<TopeSet> survivor;
};

namespace detail {

class DirectSearch {
public:
    DirectSearch(const TopeSet& source, const TopeSet& base, int rank, std::uint64_t budget)
        : n_(source.ground_size()), rank_(rank), budget_(budget), base_(base)
    {
        subsets_ = subsets_of_size(n_, rank + 1);
        required_ = static_cast<int>(uniform_tope_count(rank + 1, rank));
        covered_.assign(subsets_.size(), 0);
        available_.assign(subsets_.size() * 8, 0);
        for (const auto& t : base) apply(pattern_row(t), covered_);
        for (const auto& t : source)
            if (!base.contains(t)) {
                pool_.push_back(t);
                rows_.push_back(pattern_row(t));
            }
        for (const auto& row : rows_)
            for (std::size_t q = 0; q < subsets_.size(); ++q) ++available_[q * 8 + row[q]];
        needed_ = static_cast<int>(uniform_tope_count(n_, rank)) - static_cast<int>(base.size());
        chosen_.assign(pool_.size(), false);
    }

    DirectSearchResult run()
    {
        DirectSearchResult result;
        if (rank_ > 3) throw std::invalid_argument("direct search packs patterns into 8 bits; rank must be at most 3");
        const bool exhausted = !descend(0, 0);
        result.nodes = nodes_;
        if (found_) {
            result.status = DirectSearchStatus::found;
            std::vector<SignedVector> topes(base_.begin(), base_.end());
            for (std::size_t i = 0; i < pool_.size(); ++i)
                if (chosen_[i]) topes.push_back(pool_[i]);
            result.survivor = TopeSet(n_, rank_, std::move(topes));
        } else {
            result.status = exhausted && !out_of_budget_ ? DirectSearchStatus::none_found
                                                         : DirectSearchStatus::budget_exhausted;
        }
        return result;
    }

private:
    using Row = std::vector<std::uint8_t>;

    Row pattern_row(const SignedVector& t) const
    {
        Row row(subsets_.size());
        for (std::size_t q = 0; q < subsets_.size(); ++q)
            row[q] = static_cast<std::uint8_t>(restricted_pattern_index(t, subsets_[q]));
        return row;
    }

    static void apply(const Row& row, std::vector<std::uint8_t>& covered)
    {
        for (std::size_t q = 0; q < row.size(); ++q) covered[q] |= static_cast<std::uint8_t>(1U << row[q]);
    }

    bool feasible() const
    {
        for (std::size_t q = 0; q < subsets_.size(); ++q) {
            const std::uint8_t c = covered_[q];
            if (c == 0xFF) return false;
            int reachable = std::popcount(static_cast<unsigned>(c));
            for (unsigned p = 0; p < 8; ++p)
                if (!((c >> p) & 1U) && available_[q * 8 + p] > 0) ++reachable;
            if (reachable < required_) return false;
        }
        return true;
    }

    /// Returns true when the search stopped early (found or out of budget).
    bool descend(std::size_t index, int selected)
    {
        if (++nodes_ > budget_) {
            out_of_budget_ = true;
            return true;
        }
        if (selected == needed_) {
            found_ = true;
            return true;
        }
        if (index == pool_.size()) return false;
        if (selected + static_cast<int>(pool_.size() - index) < needed_) return false;

        const Row& row = rows_[index];
        for (std::size_t q = 0; q < subsets_.size(); ++q) --available_[q * 8 + row[q]];

        // include
        const std::vector<std::uint8_t> saved = covered_;
        apply(row, covered_);
        chosen_[index] = true;
        if (feasible() && descend(index + 1, selected + 1)) return true;
        chosen_[index] = false;
        covered_ = saved;

        // exclude
        if (feasible() && descend(index + 1, selected)) return true;

        for (std::size_t q = 0; q < subsets_.size(); ++q) ++available_[q * 8 + row[q]];
        return false;
    }

    int n_;
    int rank_;
    std::uint64_t budget_;
    const TopeSet& base_;
    std::vector<ElementSet> subsets_;
    int required_ = 0;
    int needed_ = 0;
    std::vector<SignedVector> pool_;
    std::vector<Row> rows_;
    std::vector<std::uint8_t> covered_;
    std::vector<int> available_;
    std::vector<bool> chosen_;
    std::uint64_t nodes_ = 0;
    bool found_ = false;
    bool out_of_budget_ = false;
};

} // namespace detail

/// Explores at most `budget` search nodes.
[[nodiscard]] inline DirectSearchResult direct_search_n8(std::uint64_t budget)
{
    if (budget == 0) return {DirectSearchStatus::budget_exhausted, 0, std::nullopt};
    const TopeSet source = topes_of(alternating_chirotope(8, 4));
    const TopeSet base = topes_of(m2_chirotope(8));
    detail::DirectSearch search(source, base, 3, budget);
    return search.run();
}

} // namespace omcert::n8
