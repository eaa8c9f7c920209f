#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "overq/qseries.hpp"
#include "overq/xqseries.hpp"

namespace overq {

/* The lexicographically smallest failing monomial x^a q^b (x = 0 for
 * univariate checks) with both computed coefficients. */
struct FailingMonomial {
    long long x = 0;
    long long q = 0;
    std::string lhs;
    std::string rhs;
};

/**
 * Outcome of one identity check: the identity id, its parameters, PASS/FAIL,
 * the first failing monomial when failing, and the elapsed wall time.
 * Verifiers are deterministic: identical parameters give identical reports.
 */
struct VerificationReport {
    std::string identity;
    std::map<std::string, long long> params;
    bool pass = true;
    std::optional<FailingMonomial> first_failure;
    std::chrono::milliseconds elapsed{0};
    std::vector<std::string> notes; // informational, text output only

    std::string status() const { return pass ? "PASS" : "FAIL"; }
};

nlohmann::json to_json(const VerificationReport& r);

/* Theorem overG grid: closed sum = both recurrences = box enumeration. */
VerificationReport verify_overg(int Mmax = 8, int Nmax = 8);

/* Recurrences (1.1)/(1.2) as exact polynomial identities with every cell
 * from the closed sum, plus the count-level recurrence of the combinatorial
 * proof on the enumeration tables. */
VerificationReport verify_pascal(int Mmax = 12, int Nmax = 12, int oracle_max = 8);

/* The N -> infinity limit: over[N-j, j] agrees with (-q)_j/(q)_j up to
 * q^{N-j}, and the finite identity
 * sum_k q^{k(k+1)/2}/((q)_k (q)_{j-k}) = (-q)_j/(q)_j. */
VerificationReport verify_limit(const std::vector<int>& js = {0, 1, 2, 3, 4, 5},
                                const std::vector<int>& Ns = {15, 20, 25},
                                std::size_t finite_trunc = 50,
                                int finite_jmax = 10);

/* Parts-counting generating function (-zq)_N/(zq)_N and its N = infinity
 * limit form, cross-checked against brute-force p(n, k) counts. */
VerificationReport verify_parts_gf(int Nmax = 8, std::size_t X = 6,
                                   std::size_t T = 30, int brute_nmax = 20);

/* p(n) = 2 tau(n) (mod 4), p from the series expansion. */
VerificationReport verify_tau_congruence(int nmax = 200);

/* The Durfee-square decomposition S(N; x, q) of (-xq)_N/(xq)_N. */
XQSeries sylvester_S(int N, std::size_t X, std::size_t T);

/* S(N) = (-xq)_N/(xq)_N, its N = infinity corollary, and the theta
 * specialization (q)_inf/(-q)_inf = sum (-1)^n q^{n^2}. */
VerificationReport verify_sylvester(int Nmax = 10, std::size_t X = 6,
                                    std::size_t T = 40,
                                    std::size_t theta_trunc = 50);

/* Rank generating function N_m(q) from over q-binomials; m >= 0. */
QSeries rank_gf(int m, std::size_t T);

/* Three-way rank agreement: the over-q-binomial formula, brute-force
 * N(m, n), and the Lovejoy product formula. */
VerificationReport verify_rank(int mmax = 5, std::size_t T = 30, int nmax = 30);

/* Rogers-Ramanujan building blocks: D(N, x), C(N, x) and
 * g(N, x) = (xq)_N/(-xq)_N D(N, x). */
XQSeries D_series(int N, std::size_t X, std::size_t T);
XQSeries C_series(int N, std::size_t X, std::size_t T);
XQSeries g_series(int N, std::size_t X, std::size_t T);

/* The key observation: g(N, x) satisfies its recurrence exactly, the same
 * combination of C lands in x^2 q^{N+3} Z[[x,q]], so does g(N) - C(N); the
 * N = infinity corollary and its x = 1 specialization
 * (q)_inf/(-q)_inf D(inf, 1) = sum (-1)^n q^{n(2n+1)} = (q,q^3,q^4;q^4)_inf.
 * Every N in Ns must be >= 2 (the recurrences reach back to N-2). */
VerificationReport verify_key_theorem(const std::vector<int>& Ns = {2, 3, 4, 5, 6, 7, 8, 9, 10},
                                      std::size_t X = 8, std::size_t Tpad = 20,
                                      std::size_t corollary_trunc = 60);

/* Rogers-Ramanujan type theorem: A(n) = B(n) = C(n) by enumeration, B and C
 * against their product generating functions, and the proof identity
 * sum_k q^{k(k+1)/2} (-q)_k/(q)_k = (-q)_inf/(q^2;q^4)_inf
 *                                 = 1/(q,q^2,q^3;q^4)_inf. */
VerificationReport verify_rr(int nmax = 60, std::size_t T = 60);

/* Every verifier with its default grid, in a fixed order. */
std::vector<VerificationReport> verify_all();

} // namespace overq
