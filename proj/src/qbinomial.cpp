#include "overq/qbinomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace overq {

namespace {

void require_box(int M, int N, const char* who)
{
    if (M < 0 || N < 0)
        throw OutOfRange(std::string(who) + ": negative box bound ("
                         + std::to_string(M) + "," + std::to_string(N) + ")");
}

/* Exact product of two polynomials: both sides extended so nothing truncates. */
QSeries poly_mul(const QSeries& a, const QSeries& b)
{
    std::size_t t = a.trunc() + b.trunc();
    return a.extended(t) * b.extended(t);
}

/* Exact multiplication by q^e. */
QSeries poly_shift(const QSeries& a, std::size_t e)
{
    return a.extended(a.trunc() + e).shifted(e);
}

/* Memo tables are shared across threads; duplicated fills are benign since
 * every entry is a pure function of its key. */
struct MemoTable {
    std::mutex mu;
    std::map<std::pair<int, int>, QSeries> cells;

    const QSeries* find(int m, int n)
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cells.find({m, n});
        return it == cells.end() ? nullptr : &it->second;
    }
    const QSeries& store(int m, int n, QSeries v)
    {
        std::lock_guard<std::mutex> lock(mu);
        return cells.try_emplace({m, n}, std::move(v)).first->second;
    }
};

QSeries gaussian_impl(MemoTable& memo, int M, int N)
{
    if (M == 0 || N == 0) return QSeries::constant(1, 0);
    auto [m, n] = std::minmax(M, N);
    if (const QSeries* hit = memo.find(m, n)) return *hit;
    // largest part < m, or remove one part equal to m
    QSeries r = gaussian_impl(memo, m - 1, n).extended(
                    static_cast<std::size_t>(m) * n)
              + poly_shift(gaussian_impl(memo, m, n - 1), m).extended(
                    static_cast<std::size_t>(m) * n);
    return memo.store(m, n, std::move(r));
}

enum class RecKind { ByParts, ByLargest };

QSeries over_rec_impl(MemoTable& memo, RecKind kind, int M, int N)
{
    if (M == 0 || N == 0) return QSeries::constant(1, 0);
    auto [m, n] = std::minmax(M, N);
    if (const QSeries* hit = memo.find(m, n)) return *hit;
    std::size_t deg = static_cast<std::size_t>(m) * n;
    QSeries r(deg);
    if (kind == RecKind::ByParts) {
        // (1.1): cells with fewer than n parts, plus q^n times the two
        // smallest-column removals
        r = over_rec_impl(memo, kind, m, n - 1).extended(deg)
          + poly_shift(over_rec_impl(memo, kind, m - 1, n), n).extended(deg)
          + poly_shift(over_rec_impl(memo, kind, m - 1, n - 1), n).extended(deg);
    } else {
        // (1.2): largest part below m, plus q^m times the two
        // largest-part removals
        r = over_rec_impl(memo, kind, m - 1, n).extended(deg)
          + poly_shift(over_rec_impl(memo, kind, m, n - 1), m).extended(deg)
          + poly_shift(over_rec_impl(memo, kind, m - 1, n - 1), m).extended(deg);
    }
    return memo.store(m, n, std::move(r));
}

MemoTable g_gaussian_memo;
MemoTable g_rec1_memo;
MemoTable g_rec2_memo;

} // namespace

QSeries gaussian(int M, int N)
{
    require_box(M, N, "gaussian");
    return gaussian_impl(g_gaussian_memo, M, N);
}

QSeries qtrinomial(int a, int b, int c)
{
    if (a < 0 || b < 0 || c < 0)
        throw OutOfRange("qtrinomial: negative parameter");
    // (q)_{a+b+c}/((q)_a (q)_b (q)_c) = [a+b; a] * [a+b+c; c]
    return poly_mul(gaussian(b, a), gaussian(a + b, c));
}

QSeries over_term(int M, int N, int k)
{
    require_box(M, N, "over_term");
    if (k < 0 || k > std::min(M, N))
        throw OutOfRange("over_term: overline count " + std::to_string(k)
                         + " outside 0..min(" + std::to_string(M) + ","
                         + std::to_string(N) + ")");
    // staircase of k distinct overlined parts, the rest of the k columns,
    // and an ordinary partition in the M x (N-k) box
    QSeries r = poly_mul(gaussian(M - k, k), gaussian(M, N - k));
    return poly_shift(r, static_cast<std::size_t>(k) * (k + 1) / 2);
}

QSeries over_qbinomial(int M, int N, Method method)
{
    require_box(M, N, "over_qbinomial");
    std::size_t deg = static_cast<std::size_t>(M) * N;
    switch (method) {
    case Method::ClosedSum: {
        QSeries r(deg);
        for (int k = 0; k <= std::min(M, N); ++k)
            r = r + over_term(M, N, k).extended(deg);
        return r;
    }
    case Method::Recurrence1:
        return over_rec_impl(g_rec1_memo, RecKind::ByParts, M, N);
    case Method::Recurrence2:
        return over_rec_impl(g_rec2_memo, RecKind::ByLargest, M, N);
    }
    throw OutOfRange("over_qbinomial: unknown method");
}

QSeries over_limit(int j, std::size_t trunc)
{
    if (j < 0) throw OutOfRange("over_limit: negative j");
    std::size_t n = static_cast<std::size_t>(j);
    return pochhammer(PochSpec::q(-1, n), trunc)
         * pochhammer(PochSpec::q(+1, n), trunc).inverse();
}

} // namespace overq
