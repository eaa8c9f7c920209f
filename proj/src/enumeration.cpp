#include "overq/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace overq {

int Overpartition::weight() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int Overpartition::overline_count() const
{
    return static_cast<int>(std::count(overlined.begin(), overlined.end(), true));
}

bool Overpartition::valid() const
{
    if (parts.size() != overlined.size()) return false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) return false;
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
        // an overline is allowed only on the last occurrence of a value
        if (overlined[i] && i + 1 < parts.size() && parts[i + 1] == parts[i])
            return false;
    }
    return true;
}

unsigned Overpartition::flag_pattern() const
{
    unsigned pattern = 0;
    unsigned bit = 0;
    int prev = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0 && parts[i] != prev) ++bit;
        if (overlined[i]) pattern |= 1u << bit;
        prev = parts[i];
    }
    return pattern;
}

std::string Overpartition::str() const
{
    if (parts.empty()) return "(empty)";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "+";
        out += std::to_string(parts[i]);
        if (overlined[i]) out += "~";
    }
    return out;
}

bool canonical_less(const Overpartition& a, const Overpartition& b)
{
    std::size_t n = std::min(a.parts.size(), b.parts.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.parts[i] != b.parts[i]) return a.parts[i] > b.parts[i];
    if (a.parts.size() != b.parts.size()) return a.parts.size() > b.parts.size();
    return a.flag_pattern() < b.flag_pattern();
}

namespace {

void check_cells(BoxShape box, long long budget, const char* who)
{
    if (box.M < 0 || box.N < 0)
        throw OutOfRange(std::string(who) + ": negative box bound");
    if (box.cells() > budget)
        throw BudgetExceeded(std::string(who) + ": box " + std::to_string(box.M)
                             + "x" + std::to_string(box.N) + " exceeds the "
                             + std::to_string(budget) + "-cell budget");
}

void check_weight(int nmax, long long budget, const char* who)
{
    if (nmax < 0) throw OutOfRange(std::string(who) + ": negative nmax");
    if (nmax > budget)
        throw BudgetExceeded(std::string(who) + ": nmax " + std::to_string(nmax)
                             + " exceeds the " + std::to_string(budget)
                             + " budget");
}

/* Distributes overline flags over the distinct values of a fixed partition:
 * 2^{#distinct} patterns, bit 0 = largest value, flag on last occurrences. */
void emit_flag_patterns(const std::vector<int>& parts,
                        const std::function<void(const Overpartition&)>& visit)
{
    std::vector<std::size_t> last_occurrence; // per distinct value, descending
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (i + 1 == parts.size() || parts[i + 1] != parts[i])
            last_occurrence.push_back(i);
    Overpartition op;
    op.parts = parts;
    op.overlined.assign(parts.size(), false);
    std::size_t d = last_occurrence.size();
    for (unsigned pattern = 0; pattern < (1u << d); ++pattern) {
        for (std::size_t i = 0; i < d; ++i)
            op.overlined[last_occurrence[i]] = (pattern >> i) & 1u;
        visit(op);
    }
}

/* Parts in decreasing lexicographic order, extensions before their prefix. */
void box_walk(int bound, int remaining, std::vector<int>& parts,
              const std::function<void(const std::vector<int>&)>& emit)
{
    if (remaining > 0) {
        for (int v = bound; v >= 1; --v) {
            parts.push_back(v);
            box_walk(v, remaining - 1, parts, emit);
            parts.pop_back();
        }
    }
    emit(parts);
}

} // namespace

void for_each_overpartition_box(BoxShape box, long long cell_budget,
                                const std::function<void(const Overpartition&)>& visit)
{
    check_cells(box, cell_budget, "for_each_overpartition_box");
    std::vector<int> parts;
    box_walk(box.M, box.N, parts, [&](const std::vector<int>& p) {
        emit_flag_patterns(p, visit);
    });
}

std::vector<Overpartition> enum_overpartitions_box(BoxShape box,
                                                   std::optional<int> weight,
                                                   long long cell_budget)
{
    std::vector<Overpartition> out;
    for_each_overpartition_box(box, cell_budget, [&](const Overpartition& op) {
        if (!weight || op.weight() == *weight) out.push_back(op);
    });
    return out;
}

BigInt& CountTable::cell(const std::vector<long long>& key, std::size_t col)
{
    auto [it, inserted] = rows.try_emplace(key, std::vector<BigInt>(value_names.size()));
    return it->second.at(col);
}

const BigInt& CountTable::at(const std::vector<long long>& key, std::size_t col) const
{
    static const BigInt zero{};
    auto it = rows.find(key);
    if (it == rows.end()) return zero;
    return it->second.at(col);
}

void CountTable::write_csv(std::ostream& os) const
{
    for (std::size_t i = 0; i < key_names.size(); ++i)
        os << (i ? "," : "") << key_names[i];
    for (const auto& v : value_names) os << "," << v;
    os << "\n";
    for (const auto& [key, values] : rows) {
        for (std::size_t i = 0; i < key.size(); ++i)
            os << (i ? "," : "") << key[i];
        for (const auto& v : values) os << "," << v.str();
        os << "\n";
    }
}

QSeries box_weight_polynomial(BoxShape box, long long cell_budget)
{
    check_cells(box, cell_budget, "box_weight_polynomial");
    QSeries r(static_cast<std::size_t>(box.cells()));
    for_each_overpartition_box(box, cell_budget, [&](const Overpartition& op) {
        std::size_t w = static_cast<std::size_t>(op.weight());
        r.set_coeff(w, r.coeff(w) + BigInt(1));
    });
    return r;
}

CountTable box_count_table(BoxShape box, BoxRefinement refine, long long cell_budget)
{
    CountTable table({"n", refine == BoxRefinement::OverlineCount ? "k_overlined"
                                                                  : "k_parts"},
                     {"count"});
    for_each_overpartition_box(box, cell_budget, [&](const Overpartition& op) {
        long long k = refine == BoxRefinement::OverlineCount ? op.overline_count()
                                                             : op.length();
        table.cell({op.weight(), k}) += BigInt(1);
    });
    return table;
}

CountTable rank_counts(int nmax, long long weight_budget)
{
    check_weight(nmax, weight_budget, "rank_counts");
    CountTable table({"m", "n"}, {"count"});
    std::vector<int> parts;
    // walk all partitions of weight <= nmax, largest part first
    std::function<void(int, int)> rec = [&](int bound, int weight) {
        if (!parts.empty())
            emit_flag_patterns(parts, [&](const Overpartition& op) {
                table.cell({op.rank(), weight}) += BigInt(1);
            });
        for (int v = std::min(bound, nmax - weight); v >= 1; --v) {
            parts.push_back(v);
            rec(v, weight + v);
            parts.pop_back();
        }
    };
    rec(nmax, 0);
    return table;
}

namespace {

/* Gap-condition walk: parts strictly decrease, by 2 or more below an
 * overlined part; closing on an overlined part requires value >= 2. */
void gap_walk(int nmax, int prev, bool prev_flag, int weight,
              std::vector<int>& parts, std::vector<bool>& flags,
              const std::function<void(const std::vector<int>&,
                                       const std::vector<bool>&, int)>& close)
{
    if (!prev_flag || prev >= 2) close(parts, flags, weight);
    int hi = std::min(prev - (prev_flag ? 2 : 1), nmax - weight);
    for (int v = hi; v >= 1; --v) {
        for (bool f : {false, true}) {
            parts.push_back(v);
            flags.push_back(f);
            gap_walk(nmax, v, f, weight + v, parts, flags, close);
            flags.pop_back();
            parts.pop_back();
        }
    }
}

void for_each_gap(int nmax, const std::function<void(const std::vector<int>&,
                                                     const std::vector<bool>&,
                                                     int)>& close)
{
    std::vector<int> parts;
    std::vector<bool> flags;
    close(parts, flags, 0); // the empty overpartition
    for (int v = nmax; v >= 1; --v) {
        for (bool f : {false, true}) {
            parts.push_back(v);
            flags.push_back(f);
            gap_walk(nmax, v, f, v, parts, flags, close);
            flags.pop_back();
            parts.pop_back();
        }
    }
}

/* Congruence walk over part values v = nmax..1: choose c copies of v with an
 * optional overline on the last; any non-overlined copy forces v = 2 (mod 4). */
void congruence_walk(int v, int weight, int nmax,
                     std::vector<std::pair<int, int>>& runs, // (value, copies), flag = last
                     std::vector<bool>& run_flags,
                     const std::function<void(const std::vector<std::pair<int, int>>&,
                                              const std::vector<bool>&, int)>& close)
{
    if (v == 0) {
        close(runs, run_flags, weight);
        return;
    }
    congruence_walk(v - 1, weight, nmax, runs, run_flags, close);
    bool two_mod_four = (v % 4) == 2;
    for (int c = 1; weight + c * v <= nmax; ++c) {
        for (bool f : {false, true}) {
            int bare = c - (f ? 1 : 0);
            if (bare > 0 && !two_mod_four) continue;
            runs.emplace_back(v, c);
            run_flags.push_back(f);
            congruence_walk(v - 1, weight + c * v, nmax, runs, run_flags, close);
            run_flags.pop_back();
            runs.pop_back();
        }
    }
}

void regular4_walk(int v, int weight, int nmax, std::vector<std::pair<int, int>>& runs,
                   const std::function<void(const std::vector<std::pair<int, int>>&,
                                            int)>& close)
{
    if (v == 0) {
        close(runs, weight);
        return;
    }
    regular4_walk(v - 1, weight, nmax, runs, close);
    if (v % 4 != 0) {
        for (int c = 1; weight + c * v <= nmax; ++c) {
            runs.emplace_back(v, c);
            regular4_walk(v - 1, weight + c * v, nmax, runs, close);
            runs.pop_back();
        }
    }
}

Overpartition from_runs(const std::vector<std::pair<int, int>>& runs,
                        const std::vector<bool>* run_flags)
{
    // runs are pushed value-descending by the walks
    Overpartition op;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        auto [v, c] = runs[i];
        for (int j = 0; j < c; ++j) {
            op.parts.push_back(v);
            op.overlined.push_back(run_flags && (*run_flags)[i] && j == c - 1);
        }
    }
    return op;
}

} // namespace

CountTable gap_congruence_counts(int nmax, long long weight_budget)
{
    check_weight(nmax, weight_budget, "gap_congruence_counts");
    CountTable table({"n"}, {"A", "B", "C"});
    for (int n = 0; n <= nmax; ++n) table.cell({n}); // materialize zero rows
    for_each_gap(nmax, [&](const std::vector<int>&, const std::vector<bool>&, int w) {
        table.cell({w}, 0) += BigInt(1);
    });
    std::vector<std::pair<int, int>> runs;
    std::vector<bool> run_flags;
    congruence_walk(nmax, 0, nmax, runs, run_flags,
                    [&](const auto&, const auto&, int w) {
                        table.cell({w}, 1) += BigInt(1);
                    });
    regular4_walk(nmax, 0, nmax, runs,
                  [&](const auto&, int w) { table.cell({w}, 2) += BigInt(1); });
    return table;
}

CountTable overpartition_counts(int nmax, long long weight_budget)
{
    check_weight(nmax, weight_budget, "overpartition_counts");
    CountTable table({"n", "k"}, {"count"});
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int bound, int weight) {
        emit_flag_patterns(parts, [&](const Overpartition& op) {
            table.cell({weight, op.length()}) += BigInt(1);
        });
        for (int v = std::min(bound, nmax - weight); v >= 1; --v) {
            parts.push_back(v);
            rec(v, weight + v);
            parts.pop_back();
        }
    };
    rec(nmax, 0);
    return table;
}

std::vector<Overpartition> enum_gap(int n, long long weight_budget)
{
    check_weight(n, weight_budget, "enum_gap");
    std::vector<Overpartition> out;
    for_each_gap(n, [&](const std::vector<int>& parts, const std::vector<bool>& flags,
                        int w) {
        if (w != n) return;
        Overpartition op;
        op.parts = parts;
        op.overlined = flags;
        out.push_back(std::move(op));
    });
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<Overpartition> enum_congruence(int n, long long weight_budget)
{
    check_weight(n, weight_budget, "enum_congruence");
    std::vector<Overpartition> out;
    std::vector<std::pair<int, int>> runs;
    std::vector<bool> run_flags;
    congruence_walk(n, 0, n, runs, run_flags,
                    [&](const auto& rs, const auto& fs, int w) {
                        if (w == n) out.push_back(from_runs(rs, &fs));
                    });
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<Overpartition> enum_regular4(int n, long long weight_budget)
{
    check_weight(n, weight_budget, "enum_regular4");
    std::vector<Overpartition> out;
    std::vector<std::pair<int, int>> runs;
    regular4_walk(n, 0, n, runs, [&](const auto& rs, int w) {
        if (w == n) out.push_back(from_runs(rs, nullptr));
    });
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

long long tau(int n)
{
    if (n < 1) throw DomainError("tau: undefined for n = " + std::to_string(n));
    long long count = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) ++count;
    return count;
}

} // namespace overq
