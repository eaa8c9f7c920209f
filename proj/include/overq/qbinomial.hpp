#pragma once

#include "overq/qseries.hpp"

namespace overq {

/* An M x N rectangle bound: largest part <= M, at most N parts. The empty
 * box (M = 0 or N = 0) admits only the empty overpartition. */
struct BoxShape {
    int M = 0; // largest-part bound
    int N = 0; // number-of-parts bound
    long long cells() const { return static_cast<long long>(M) * N; }
};

enum class Method { ClosedSum, Recurrence1, Recurrence2 };

/* Gaussian polynomial: partitions fitting inside an M x N box, computed by
 * the q-Pascal recurrence (exact polynomial of degree M*N, trunc = M*N). */
QSeries gaussian(int M, int N);

/* (q)_{a+b+c} / ((q)_a (q)_b (q)_c) as an exact polynomial. */
QSeries qtrinomial(int a, int b, int c);

/* Generating function for overpartitions in the M x N box with exactly k
 * overlined parts: q^{k(k+1)/2} (q)_{M+N-k} / ((q)_k (q)_{M-k} (q)_{N-k}).
 * Throws OutOfRange unless 0 <= k <= min(M, N). */
QSeries over_term(int M, int N, int k);

/* The over q-binomial coefficient: generating function for overpartitions
 * fitting inside an M x N box. Exact polynomial of degree M*N (trunc = M*N);
 * value 1 when M = 0 or N = 0. All three methods agree:
 *   ClosedSum    - the k-overlined-parts sum of over_term
 *   Recurrence1  - removal of the smallest column (parts count)
 *   Recurrence2  - removal of the largest part
 * The recurrence methods memoize, storing only cells with M <= N via the
 * transposition symmetry. */
QSeries over_qbinomial(int M, int N, Method method = Method::ClosedSum);

/* N -> infinity limit of the over q-binomial with j parts allowed:
 * (-q)_j / (q)_j truncated, the generating function for overpartitions
 * into parts <= j. */
QSeries over_limit(int j, std::size_t trunc);

} // namespace overq
