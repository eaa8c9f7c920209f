#include <doctest.h>

#include <thread>
#include <vector>

#include "overq/qbinomial.hpp"

using namespace overq;

namespace {

/* (q)_n as an exact polynomial of degree n(n+1)/2. */
QSeries poch_poly(int n)
{
    std::size_t deg = static_cast<std::size_t>(n) * (n + 1) / 2;
    return pochhammer(PochSpec::q(+1, static_cast<std::size_t>(n)), deg);
}

QSeries poly_mul(const QSeries& a, const QSeries& b)
{
    std::size_t t = a.trunc() + b.trunc();
    return a.extended(t) * b.extended(t);
}

/* Pascal-triangle binomials, no division anywhere. */
std::vector<std::vector<BigInt>> binomials(int nmax)
{
    std::vector<std::vector<BigInt>> c(nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
        c[n].assign(n + 1, BigInt(0));
        c[n][0] = 1;
        c[n][n] = 1;
        for (int k = 1; k < n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
    }
    return c;
}

bool equals_coeffs(const QSeries& s, const std::vector<long long>& expect)
{
    return canonically_equal(s, QSeries::from_coeffs(expect).extended(s.trunc()));
}

} // namespace

TEST_CASE("gaussian polynomials")
{
    CHECK(equals_coeffs(gaussian(0, 5), {1}));
    CHECK(equals_coeffs(gaussian(5, 0), {1}));
    CHECK(equals_coeffs(gaussian(1, 1), {1, 1}));
    // partitions in the 3x3 box, counted by hand
    CHECK(equals_coeffs(gaussian(3, 3), {1, 1, 2, 3, 3, 3, 3, 2, 1, 1}));
    CHECK(gaussian(3, 3).trunc() == 9);
    CHECK(canonically_equal(gaussian(4, 2), gaussian(2, 4)));
    CHECK_THROWS_AS(gaussian(-1, 2), OutOfRange);
}

TEST_CASE("gaussian against the defining quotient")
{
    // G(M,N) (q)_M (q)_N = (q)_{M+N}, pure polynomial arithmetic
    for (int M = 0; M <= 5; ++M) {
        for (int N = 0; N <= 5; ++N) {
            QSeries lhs = poly_mul(poly_mul(gaussian(M, N), poch_poly(M)),
                                   poch_poly(N));
            CHECK(canonically_equal(lhs, poch_poly(M + N).extended(lhs.trunc())));
        }
    }
}

TEST_CASE("q-trinomials")
{
    CHECK(equals_coeffs(qtrinomial(4, 0, 0), {1}));
    CHECK(equals_coeffs(qtrinomial(1, 1, 0), {1, 1}));
    CHECK(equals_coeffs(qtrinomial(1, 1, 1), {1, 2, 2, 1}));
    CHECK_THROWS_AS(qtrinomial(1, -1, 0), OutOfRange);

    // defining quotient
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c) {
                QSeries lhs = poly_mul(poly_mul(poly_mul(qtrinomial(a, b, c),
                                                         poch_poly(a)),
                                                poch_poly(b)),
                                       poch_poly(c));
                CHECK(canonically_equal(lhs,
                                        poch_poly(a + b + c).extended(lhs.trunc())));
            }

    // the three-term recurrence behind the analytic recurrence proof
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                std::size_t deg = qtrinomial(a, b, c).trunc();
                QSeries rhs = qtrinomial(a - 1, b, c).extended(deg)
                            + qtrinomial(a, b - 1, c).extended(deg + a)
                                  .shifted(a).truncated(deg)
                            + qtrinomial(a, b, c - 1).extended(deg + a + b)
                                  .shifted(a + b).truncated(deg);
                CHECK(canonically_equal(qtrinomial(a, b, c), rhs));
            }
}

TEST_CASE("over_term")
{
    for (int M = 0; M <= 4; ++M)
        for (int N = 0; N <= 4; ++N)
            CHECK(canonically_equal(over_term(M, N, 0), gaussian(M, N)));

    // the all-overlined corner of the 3x3 box is the staircase alone
    QSeries t33 = over_term(3, 3, 3);
    CHECK(t33.degree() == std::size_t{6});
    CHECK(t33.coeff(6) == BigInt(1));
    CHECK(t33.eval_at_one() == BigInt(1));

    // q=1 evaluations of the summands: 20 + 30 + 12 + 1 = 63
    BigInt total;
    for (int k = 0; k <= 3; ++k) total += over_term(3, 3, k).eval_at_one();
    CHECK(total == BigInt(63));

    CHECK_THROWS_AS(over_term(3, 3, 4), OutOfRange);
    CHECK_THROWS_AS(over_term(3, 3, -1), OutOfRange);

    // defining quotient: term * (q)_k (q)_{M-k} (q)_{N-k} = q^{k(k+1)/2} (q)_{M+N-k}
    for (int M = 0; M <= 4; ++M)
        for (int N = 0; N <= 4; ++N)
            for (int k = 0; k <= std::min(M, N); ++k) {
                QSeries lhs = poly_mul(poly_mul(poly_mul(over_term(M, N, k),
                                                         poch_poly(k)),
                                                poch_poly(M - k)),
                                       poch_poly(N - k));
                std::size_t e = static_cast<std::size_t>(k) * (k + 1) / 2;
                QSeries rhs = poch_poly(M + N - k).extended(lhs.trunc() + e)
                                  .shifted(e).truncated(lhs.trunc());
                CHECK(canonically_equal(lhs, rhs));
            }
}

TEST_CASE("over q-binomials match the frozen expansions")
{
    const std::vector<long long> expect33 = {1, 2, 4, 8, 10, 12, 12, 8, 4, 2};
    CHECK(equals_coeffs(over_qbinomial(3, 3), expect33));
    CHECK(equals_coeffs(over_qbinomial(3, 3, Method::Recurrence1), expect33));
    CHECK(equals_coeffs(over_qbinomial(3, 3, Method::Recurrence2), expect33));

    CHECK(equals_coeffs(over_qbinomial(7, 0), {1}));
    CHECK(equals_coeffs(over_qbinomial(0, 7), {1}));
    CHECK(equals_coeffs(over_qbinomial(1, 1), {1, 2}));
    CHECK(equals_coeffs(over_qbinomial(2, 2), {1, 2, 4, 4, 2}));
    CHECK(equals_coeffs(over_qbinomial(4, 2), {1, 2, 4, 6, 8, 8, 6, 4, 2}));
    CHECK(equals_coeffs(over_qbinomial(4, 4),
                        {1, 2, 4, 8, 14, 20, 28, 36, 40, 42, 40, 32, 24, 16,
                         8, 4, 2}));
    CHECK(equals_coeffs(over_qbinomial(6, 6),
                        {1, 2, 4, 8, 14, 24, 40, 60, 88, 126, 172, 228, 292,
                         360, 432, 504, 566, 616, 652, 664, 656, 628, 576,
                         512, 440, 362, 288, 220, 160, 112, 76, 48, 28, 16,
                         8, 4, 2}));

    QSeries big = over_qbinomial(12, 12, Method::Recurrence1);
    CHECK(big.trunc() == 144);
    CHECK(big.coeff(72) == BigInt(6746448));
    CHECK(big.eval_at_one() == BigInt(251595969));
}

TEST_CASE("over q-binomial structure")
{
    auto binom = binomials(16);
    for (int M = 0; M <= 6; ++M) {
        for (int N = 0; N <= 6; ++N) {
            QSeries p = over_qbinomial(M, N);
            CHECK(canonically_equal(p, over_qbinomial(N, M))); // symmetry
            CHECK(p.trunc() == static_cast<std::size_t>(M) * N);
            CHECK(p.coeff(0) == BigInt(1));
            if (M >= 1 && N >= 1) {
                CHECK(p.degree() == static_cast<std::size_t>(M) * N);
                CHECK(p.coeff(static_cast<std::size_t>(M) * N) == BigInt(2));
                CHECK(p.coeff(1) == BigInt(2));
            }
            // q = 1: sum over k of C(M,k) C(M+N-k, M)
            BigInt expect;
            for (int k = 0; k <= std::min(M, N); ++k)
                expect += binom[M][k] * binom[M + N - k][M];
            CHECK(p.eval_at_one() == expect);
            // over-term decomposition against an independent method
            QSeries sum(p.trunc());
            for (int k = 0; k <= std::min(M, N); ++k)
                sum = sum + over_term(M, N, k).extended(p.trunc());
            CHECK(canonically_equal(sum, over_qbinomial(M, N, Method::Recurrence2)));
        }
    }
}

TEST_CASE("concurrent memo fills agree")
{
    // workers race on the shared recurrence tables; duplicated fills must be
    // benign and every result identical
    QSeries expect = over_qbinomial(9, 9, Method::ClosedSum);
    std::vector<QSeries> results(8, QSeries(0));
    {
        std::vector<std::thread> workers;
        for (int t = 0; t < 8; ++t) {
            workers.emplace_back([t, &results] {
                Method m = t % 2 ? Method::Recurrence1 : Method::Recurrence2;
                results[t] = over_qbinomial(9, 9, m) * gaussian(3, 3).extended(81)
                           - gaussian(3, 3).extended(81)
                                 * over_qbinomial(9, 9, m);
                results[t] = results[t] + over_qbinomial(9, 9, m);
            });
        }
        for (auto& w : workers) w.join();
    }
    for (const QSeries& r : results) CHECK(canonically_equal(r, expect));
}

TEST_CASE("over_limit")
{
    CHECK(equals_coeffs(over_limit(0, 6), {1, 0, 0, 0, 0, 0, 0}));
    CHECK(equals_coeffs(over_limit(1, 4), {1, 2, 2, 2, 2}));
    CHECK(equals_coeffs(over_limit(3, 17),
                        {1, 2, 4, 8, 12, 18, 26, 34, 44, 56, 68, 82, 98, 114,
                         132, 152, 172, 194}));
    // agreement with the wide finite box on its guaranteed window
    QSeries fin = over_qbinomial(17, 3, Method::Recurrence1);
    CHECK(agrees(fin.truncated(17), over_limit(3, 17), 17));
    CHECK_THROWS_AS(over_limit(-1, 5), OutOfRange);
}
