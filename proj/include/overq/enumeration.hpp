#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "overq/bigint.hpp"
#include "overq/errors.hpp"
#include "overq/qbinomial.hpp"
#include "overq/qseries.hpp"

namespace overq {

/**
 * An overpartition: weakly decreasing positive parts, where the last
 * occurrence of each distinct part value may carry an overline.
 */
struct Overpartition {
    std::vector<int> parts;
    std::vector<bool> overlined; // parallel to parts

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    int largest() const { return parts.empty() ? 0 : parts.front(); }
    int overline_count() const;
    int rank() const { return largest() - length(); } // undefined for empty

    /* Parts weakly decreasing, flags only on last occurrences. */
    bool valid() const;

    /* Flag bits in order of distinct values, largest value = bit 0. */
    unsigned flag_pattern() const;

    /* "5~+3+1" with "~" marking an overline; "(empty)" for no parts. */
    std::string str() const;
};

/* Canonical listing order: part sequences in decreasing lexicographic order
 * (an extension precedes its prefix), then flag patterns ascending. */
bool canonical_less(const Overpartition& a, const Overpartition& b);

/* Default guards; raise explicitly or via the CLI budget override. */
inline constexpr long long kDefaultCellBudget = 64;
inline constexpr long long kDefaultWeightBudget = 200;

/* Visits every overpartition fitting inside the box, in canonical order.
 * Throws BudgetExceeded when box.cells() exceeds the budget. */
void for_each_overpartition_box(BoxShape box, long long cell_budget,
                                const std::function<void(const Overpartition&)>& visit);

/* Materialized listing, optionally filtered to one weight. */
std::vector<Overpartition>
enum_overpartitions_box(BoxShape box, std::optional<int> weight = std::nullopt,
                        long long cell_budget = kDefaultCellBudget);

/**
 * A table of exact counts keyed by small integer tuples, e.g. N(m, n) rows
 * keyed (m, n) or the A/B/C columns keyed (n).
 */
struct CountTable {
    std::vector<std::string> key_names;
    std::vector<std::string> value_names;
    std::map<std::vector<long long>, std::vector<BigInt>> rows;

    CountTable(std::vector<std::string> keys, std::vector<std::string> values)
        : key_names(std::move(keys)), value_names(std::move(values)) {}

    BigInt& cell(const std::vector<long long>& key, std::size_t col = 0);
    const BigInt& at(const std::vector<long long>& key, std::size_t col = 0) const;

    /* Header row naming the statistics, one row per key tuple. */
    void write_csv(std::ostream& os) const;
};

/* Sum of q^weight over the box enumeration; trunc = M*N. */
QSeries box_weight_polynomial(BoxShape box,
                              long long cell_budget = kDefaultCellBudget);

enum class BoxRefinement { OverlineCount, PartCount };

/* Box counts keyed (n, k) with k the overline count or the part count. */
CountTable box_count_table(BoxShape box, BoxRefinement refine,
                           long long cell_budget = kDefaultCellBudget);

/* N(m, n) for 1 <= n <= nmax keyed (m, n); the empty overpartition has no
 * rank and is excluded. */
CountTable rank_counts(int nmax, long long weight_budget = kDefaultWeightBudget);

/* A(n), B(n), C(n) for 0 <= n <= nmax keyed (n):
 *   A - gap condition (difference >= 1, or >= 2 below an overlined part,
 *       with lambda_{l+1} = 0, so an overlined 1 cannot occur)
 *   B - overpartitions whose non-overlined parts are = 2 (mod 4)
 *   C - partitions with no part divisible by 4
 */
CountTable gap_congruence_counts(int nmax,
                                 long long weight_budget = kDefaultWeightBudget);

/* Unrestricted overpartition counts keyed (n, k): weight n with k parts,
 * 0 <= n <= nmax (the empty overpartition is row (0, 0)). */
CountTable overpartition_counts(int nmax,
                                long long weight_budget = kDefaultWeightBudget);

/* Weight-n listings for the three Rogers-Ramanujan families, canonical order. */
std::vector<Overpartition> enum_gap(int n, long long weight_budget = kDefaultWeightBudget);
std::vector<Overpartition> enum_congruence(int n, long long weight_budget = kDefaultWeightBudget);
std::vector<Overpartition> enum_regular4(int n, long long weight_budget = kDefaultWeightBudget);

/* Number of divisors; throws DomainError for n < 1. */
long long tau(int n);

} // namespace overq
