// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Everything here is exact integer arithmetic; there are no tolerances.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "overq/enumeration.hpp"
#include "overq/harness.hpp"
#include "overq/qbinomial.hpp"

using namespace overq;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(int number, bool pass, const std::string& what, double ms)
{
    std::printf("%s  %2d. %s (%.1f ms)\n", pass ? "PASS" : "FAIL", number,
                what.c_str(), ms);
    if (!pass) ++failures;
}

} // namespace

int main()
{
    // 1. the 3x3 over q-binomial, under a millisecond
    {
        auto t0 = Clock::now();
        QSeries p = over_qbinomial(3, 3, Method::ClosedSum);
        double ms = ms_since(t0);
        bool ok = canonically_equal(
            p, QSeries::from_coeffs({1, 2, 4, 8, 10, 12, 12, 8, 4, 2}));
        ok = ok && p.trunc() == 9 && ms < 1.0;
        report(1, ok, "over[6;3] equals its known expansion in < 1 ms", ms);
    }

    // 2. triple agreement: three methods + enumeration to 8, methods to 12
    {
        auto t0 = Clock::now();
        bool ok = verify_overg(8, 8).pass;
        for (int M = 0; M <= 12 && ok; ++M) {
            for (int N = 0; N <= 12 && ok; ++N) {
                QSeries closed = over_qbinomial(M, N, Method::ClosedSum);
                ok = canonically_equal(closed,
                                       over_qbinomial(M, N, Method::Recurrence1))
                  && canonically_equal(closed,
                                       over_qbinomial(M, N, Method::Recurrence2))
                  && canonically_equal(closed,
                                       over_qbinomial(N, M, Method::ClosedSum));
            }
        }
        double ms = ms_since(t0);
        report(2, ok && ms < 10'000,
               "closed sum = recurrences = enumeration (grid 8), methods to 12,"
               " < 10 s", ms);
    }

    // 3. recurrences (1.1)/(1.2) on the 12-grid from closed-sum cells
    {
        auto t0 = Clock::now();
        VerificationReport rep = verify_pascal(12, 12, 0);
        double ms = ms_since(t0);
        report(3, rep.pass && ms < 5'000,
               "recurrences (1.1) and (1.2) exact on the 12-grid, < 5 s", ms);
    }

    // 4. count-level recurrence on the enumeration tables, grid 8
    {
        auto t0 = Clock::now();
        VerificationReport rep = verify_pascal(1, 1, 8);
        report(4, rep.pass, "count-level recurrence on the 8-grid tables",
               ms_since(t0));
    }

    // 5. the N -> infinity limit and the finite sum identity
    {
        auto t0 = Clock::now();
        VerificationReport rep =
            verify_limit({0, 1, 2, 3, 4, 5}, {15, 20, 25}, 50, 10);
        report(5, rep.pass,
               "over[N-j; j] -> (-q)_j/(q)_j and the finite identity to T=50",
               ms_since(t0));
    }

    // 6. parts-counting bivariate identity and its limit form
    {
        auto t0 = Clock::now();
        VerificationReport rep = verify_parts_gf(8, 6, 30, 20);
        report(6, rep.pass,
               "(-zq)_N/(zq)_N identity on (X=6, T=30), p(n,k) to n=20",
               ms_since(t0));
    }

    // 7. the divisor congruence to 200 under a second
    {
        auto t0 = Clock::now();
        VerificationReport rep = verify_tau_congruence(200);
        double ms = ms_since(t0);
        report(7, rep.pass && ms < 1'000,
               "p(n) = 2 tau(n) (mod 4) for n <= 200, < 1 s", ms);
    }

    // 8. Sylvester analogue, corollary and theta specialization
    {
        auto t0 = Clock::now();
        VerificationReport rep = verify_sylvester(10, 6, 40, 50);
        report(8, rep.pass,
               "S(N;x,q) = (-xq)_N/(xq)_N on (X=6, T=40), theta to T=50",
               ms_since(t0));
    }

    // 9. rank: formula vs brute force vs Lovejoy
    {
        auto t0 = Clock::now();
        VerificationReport rep = verify_rank(5, 30, 30);
        report(9, rep.pass, "rank three-way agreement for m <= 5, n <= 30",
               ms_since(t0));
    }

    // 10. the g/C recurrence lemmas, memberships and the x = 1 corollary
    {
        auto t0 = Clock::now();
        VerificationReport rep =
            verify_key_theorem({2, 3, 4, 5, 6, 7, 8, 9, 10}, 8, 20, 60);
        report(10, rep.pass,
               "g-recurrence exact, memberships in x^2 q^{N+3}, x=1 corollary "
               "to T=60", ms_since(t0));
    }

    // 11. the Rogers-Ramanujan theorem and the whole default suite timing
    {
        auto t0 = Clock::now();
        VerificationReport rep = verify_rr(60, 60);
        bool ok = rep.pass;
        ok = ok && gap_congruence_counts(8).at({8}, 0) == BigInt(16);
        ok = ok && gap_congruence_counts(8).at({8}, 1) == BigInt(16);
        auto all_t0 = Clock::now();
        for (const VerificationReport& r : verify_all()) ok = ok && r.pass;
        double all_ms = ms_since(all_t0);
        ok = ok && all_ms < 60'000;
        report(11, ok,
               "A(n)=B(n)=C(n) to 60 with product cross-checks; verify all in "
                   + std::to_string(static_cast<int>(all_ms)) + " ms < 60 s",
               ms_since(t0));
    }

    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
