#include "overq/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "overq/enumeration.hpp"
#include "overq/qbinomial.hpp"

namespace overq {

namespace {

using Cell = std::vector<std::pair<const char*, long long>>;

void mark_failure(VerificationReport& rep, long long x, long long q,
                  std::string lhs, std::string rhs, const Cell& cell)
{
    if (!rep.pass) return; // keep the first failure
    rep.pass = false;
    rep.first_failure = FailingMonomial{x, q, std::move(lhs), std::move(rhs)};
    for (const auto& [k, v] : cell) rep.params[k] = v;
}

/* Univariate window comparison; false (and a recorded failure) on mismatch. */
bool check_q(VerificationReport& rep, const QSeries& lhs, const QSeries& rhs,
             std::size_t window, const Cell& cell)
{
    if (!rep.pass) return false;
    auto diff = first_difference(lhs, rhs, window);
    if (!diff) return true;
    mark_failure(rep, 0, static_cast<long long>(*diff),
                 lhs.coeff(*diff).str(), rhs.coeff(*diff).str(), cell);
    return false;
}

bool check_xq(VerificationReport& rep, const XQSeries& lhs, const XQSeries& rhs,
              std::size_t xwindow, std::size_t qwindow, const Cell& cell)
{
    if (!rep.pass) return false;
    auto diff = first_difference(lhs, rhs, xwindow, qwindow);
    if (!diff) return true;
    mark_failure(rep, static_cast<long long>(diff->first),
                 static_cast<long long>(diff->second),
                 lhs.coeff(diff->first, diff->second).str(),
                 rhs.coeff(diff->first, diff->second).str(), cell);
    return false;
}

bool check_count(VerificationReport& rep, long long key, const BigInt& lhs,
                 const BigInt& rhs, const Cell& cell)
{
    if (!rep.pass) return false;
    if (lhs == rhs) return true;
    mark_failure(rep, 0, key, lhs.str(), rhs.str(), cell);
    return false;
}

/* Every nonzero monomial of s inside the window must have x-degree >= 2 and
 * q-degree >= qmin; the violation reported is the lexicographically smallest. */
bool check_membership(VerificationReport& rep, const XQSeries& s,
                      std::size_t qmin, const Cell& cell)
{
    if (!rep.pass) return false;
    for (const auto& [m, v] : s.terms()) {
        if (v.is_zero()) continue;
        if (m.first < 2 || m.second < qmin) {
            mark_failure(rep, static_cast<long long>(m.first),
                         static_cast<long long>(m.second), v.str(), "0", cell);
            return false;
        }
    }
    return true;
}

template <typename Body>
VerificationReport timed(std::string identity,
                         std::map<std::string, long long> params, Body&& body)
{
    VerificationReport rep;
    rep.identity = std::move(identity);
    rep.params = std::move(params);
    auto t0 = std::chrono::steady_clock::now();
    body(rep);
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return rep;
}

/* Over q-binomials for series building; the recurrence method keeps grid
 * computations cheap, and is itself cross-validated by verify_overg. */
QSeries overq_poly(int M, int N)
{
    return over_qbinomial(M, N, Method::Recurrence1);
}

/* (sign_num x q; q)_len / (sign_den x q; q)_len on the window. */
XQSeries poch_ratio_xq(int sign_num, int sign_den, std::optional<std::size_t> len,
                       std::size_t X, std::size_t T)
{
    PochSpec num{sign_num, len, true};
    PochSpec den{sign_den, len, true};
    return pochhammer_xq(num, X, T) * pochhammer_xq(den, X, T).inverse();
}

/* (-q)_inf / (q)_inf and friends. */
QSeries poch_ratio_q(int sign_num, int sign_den, std::optional<std::size_t> len,
                     std::size_t T)
{
    PochSpec num{sign_num, len, false};
    PochSpec den{sign_den, len, false};
    return pochhammer(num, T) * pochhammer(den, T).inverse();
}

XQSeries one_minus_xq(std::size_t X, std::size_t T)
{
    XQSeries r = XQSeries::constant(1, X, T);
    if (X >= 1 && T >= 1) r.set_coeff(1, 1, -1);
    return r;
}

/* sum over n in Z of (-1)^n q^{exponent(n)} truncated. */
QSeries bilateral_theta(const std::function<long long(long long)>& exponent,
                        std::size_t T)
{
    QSeries r(T);
    for (long long n = 0;; ++n) {
        bool in_window = false;
        for (long long s : {n, -n}) {
            long long e = exponent(s);
            if (e >= 0 && e <= static_cast<long long>(T)) {
                in_window = true;
                BigInt delta = (s % 2 == 0) ? BigInt(1) : BigInt(-1);
                r.set_coeff(static_cast<std::size_t>(e), r.coeff(e) + delta);
            }
            if (s == 0) break;
        }
        if (!in_window && n > 0) break;
    }
    return r;
}

} // namespace

nlohmann::json to_json(const VerificationReport& r)
{
    nlohmann::json j;
    j["identity"] = r.identity;
    j["params"] = nlohmann::json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["status"] = r.status();
    if (r.first_failure) {
        j["firstFailure"] = {{"x", r.first_failure->x},
                             {"q", r.first_failure->q},
                             {"lhs", r.first_failure->lhs},
                             {"rhs", r.first_failure->rhs}};
    } else {
        j["firstFailure"] = nullptr;
    }
    j["elapsedMs"] = r.elapsed.count();
    return j;
}

VerificationReport verify_overg(int Mmax, int Nmax)
{
    return timed("overg", {{"Mmax", Mmax}, {"Nmax", Nmax}}, [&](VerificationReport& rep) {
        for (int M = 0; M <= Mmax && rep.pass; ++M) {
            for (int N = 0; N <= Nmax && rep.pass; ++N) {
                std::size_t window = static_cast<std::size_t>(M) * N;
                Cell cell{{"M", M}, {"N", N}};
                QSeries closed = over_qbinomial(M, N, Method::ClosedSum);
                check_q(rep, closed, over_qbinomial(M, N, Method::Recurrence1),
                        window, cell);
                check_q(rep, closed, over_qbinomial(M, N, Method::Recurrence2),
                        window, cell);
                check_q(rep, closed, box_weight_polynomial({M, N}), window, cell);
            }
        }
    });
}

VerificationReport verify_pascal(int Mmax, int Nmax, int oracle_max)
{
    return timed("pascal",
                 {{"Mmax", Mmax}, {"Nmax", Nmax}, {"oracleMax", oracle_max}},
                 [&](VerificationReport& rep) {
        // polynomial identities, every cell from the closed sum
        std::vector<std::vector<QSeries>> grid;
        grid.reserve(Mmax + 1);
        for (int M = 0; M <= Mmax; ++M) {
            grid.emplace_back();
            for (int N = 0; N <= Nmax; ++N)
                grid[M].push_back(over_qbinomial(M, N, Method::ClosedSum));
        }
        auto shifted_ext = [](const QSeries& p, std::size_t e, std::size_t deg) {
            return p.extended(deg + e).shifted(e).truncated(deg);
        };
        for (int M = 1; M <= Mmax && rep.pass; ++M) {
            for (int N = 1; N <= Nmax && rep.pass; ++N) {
                std::size_t deg = static_cast<std::size_t>(M) * N;
                const QSeries& lhs = grid[M][N];
                QSeries rhs1 = grid[M][N - 1].extended(deg)
                             + shifted_ext(grid[M - 1][N], N, deg)
                             + shifted_ext(grid[M - 1][N - 1], N, deg);
                check_q(rep, lhs, rhs1, deg, {{"M", M}, {"N", N}, {"recurrence", 1}});
                QSeries rhs2 = grid[M - 1][N].extended(deg)
                             + shifted_ext(grid[M][N - 1], M, deg)
                             + shifted_ext(grid[M - 1][N - 1], M, deg);
                check_q(rep, lhs, rhs2, deg, {{"M", M}, {"N", N}, {"recurrence", 2}});
            }
        }
        // count-level recurrence on the enumeration tables
        std::vector<std::vector<QSeries>> counts;
        for (int M = 0; M <= oracle_max; ++M) {
            counts.emplace_back();
            for (int N = 0; N <= oracle_max; ++N)
                counts[M].push_back(box_weight_polynomial({M, N}));
        }
        auto count_at = [&](int M, int N, long long n) -> BigInt {
            if (n < 0) return BigInt(0);
            const QSeries& t = counts[M][N];
            if (n > static_cast<long long>(t.trunc())) return BigInt(0);
            return t.coeff(static_cast<std::size_t>(n));
        };
        for (int M = 1; M <= oracle_max && rep.pass; ++M) {
            for (int N = 1; N <= oracle_max && rep.pass; ++N) {
                for (long long n = 0; n <= static_cast<long long>(M) * N; ++n) {
                    BigInt lhs = count_at(M, N, n) - count_at(M, N - 1, n);
                    BigInt rhs = count_at(M - 1, N - 1, n - N)
                               + count_at(M - 1, N, n - N);
                    if (!check_count(rep, n, lhs, rhs,
                                     {{"M", M}, {"N", N}, {"countLevel", 1}}))
                        break;
                }
            }
        }
    });
}

VerificationReport verify_limit(const std::vector<int>& js,
                                const std::vector<int>& Ns,
                                std::size_t finite_trunc, int finite_jmax)
{
    std::map<std::string, long long> params{
        {"jmax", js.empty() ? 0 : *std::max_element(js.begin(), js.end())},
        {"Nmax", Ns.empty() ? 0 : *std::max_element(Ns.begin(), Ns.end())},
        {"finiteT", static_cast<long long>(finite_trunc)},
        {"finiteJmax", finite_jmax}};
    return timed("limit", std::move(params), [&](VerificationReport& rep) {
        for (int j : js) {
            for (int N : Ns) {
                if (j > N) continue;
                std::size_t window = static_cast<std::size_t>(N - j);
                QSeries fin = overq_poly(N - j, j).extended(window);
                QSeries lim = over_limit(j, window);
                check_q(rep, fin, lim, window, {{"j", j}, {"N", N}});
            }
        }
        // finite identity: sum_k q^{k(k+1)/2}/((q)_k (q)_{j-k}) = (-q)_j/(q)_j
        for (int j = 0; j <= finite_jmax && rep.pass; ++j) {
            QSeries lhs(finite_trunc);
            for (int k = 0; k <= j; ++k) {
                QSeries den = pochhammer(PochSpec::q(+1, k), finite_trunc)
                            * pochhammer(PochSpec::q(+1, j - k), finite_trunc);
                lhs = lhs + den.inverse().shifted(
                          static_cast<std::size_t>(k) * (k + 1) / 2);
            }
            check_q(rep, lhs, over_limit(j, finite_trunc), finite_trunc,
                    {{"finiteJ", j}});
        }
    });
}

VerificationReport verify_parts_gf(int Nmax, std::size_t X, std::size_t T,
                                   int brute_nmax)
{
    return timed("parts",
                 {{"Nmax", Nmax},
                  {"X", static_cast<long long>(X)},
                  {"T", static_cast<long long>(T)},
                  {"bruteNmax", brute_nmax}},
                 [&](VerificationReport& rep) {
        for (int N = 1; N <= Nmax && rep.pass; ++N) {
            XQSeries lhs = poch_ratio_xq(-1, +1, static_cast<std::size_t>(N), X, T);
            XQSeries rhs = XQSeries::constant(1, X, T);
            for (std::size_t k = 1; k <= X && k <= T; ++k) {
                QSeries u = overq_poly(N - 1, static_cast<int>(k)).extended(T)
                          + overq_poly(N - 1, static_cast<int>(k) - 1).extended(T);
                rhs = rhs + XQSeries::embed(u, X).shifted(k, k);
            }
            check_xq(rep, lhs, rhs, X, T, {{"N", N}});
        }
        // the N -> infinity limit form with doubled terms
        XQSeries lhs_inf = poch_ratio_xq(-1, +1, std::nullopt, X, T);
        XQSeries rhs_inf = XQSeries::constant(1, X, T);
        for (std::size_t k = 1; k <= X && k <= T; ++k) {
            QSeries u = pochhammer(PochSpec::q(-1, k - 1), T)
                      * pochhammer(PochSpec::q(+1, k), T).inverse();
            rhs_inf = rhs_inf + XQSeries::embed(u.scaled(2), X).shifted(k, k);
        }
        check_xq(rep, lhs_inf, rhs_inf, X, T, {{"limitForm", 1}});
        // p(n, k) from the limit form against brute force
        std::size_t W = static_cast<std::size_t>(brute_nmax);
        XQSeries sum_form = XQSeries::constant(1, W, W);
        for (std::size_t k = 1; k <= W; ++k) {
            QSeries u = pochhammer(PochSpec::q(-1, k - 1), W)
                      * pochhammer(PochSpec::q(+1, k), W).inverse();
            sum_form = sum_form + XQSeries::embed(u.scaled(2), W).shifted(k, k);
        }
        CountTable brute = overpartition_counts(brute_nmax);
        for (int n = 0; n <= brute_nmax && rep.pass; ++n) {
            for (int k = 0; k <= n; ++k) {
                if (!check_count(rep, n, sum_form.coeff(k, n),
                                 brute.at({n, k}), {{"bruteN", n}, {"bruteK", k}}))
                    break;
            }
        }
    });
}

VerificationReport verify_tau_congruence(int nmax)
{
    return timed("tau", {{"nmax", nmax}}, [&](VerificationReport& rep) {
        std::size_t T = static_cast<std::size_t>(nmax);
        QSeries pbar = poch_ratio_q(-1, +1, std::nullopt, T);
        for (int n = 1; n <= nmax; ++n) {
            BigInt lhs(static_cast<long long>(pbar.coeff(n).mod(4)));
            BigInt rhs((2 * tau(n)) % 4);
            if (!check_count(rep, n, lhs, rhs, {{"n", n}})) break;
        }
    });
}

XQSeries sylvester_S(int N, std::size_t X, std::size_t T)
{
    if (N < 1) throw OutOfRange("sylvester_S: N must be positive");
    XQSeries s = XQSeries::constant(1, X, T);
    for (std::size_t j = 1; j <= X && j * j <= T && j <= static_cast<std::size_t>(N);
         ++j) {
        int ji = static_cast<int>(j);
        XQSeries corner_over =
            XQSeries::embed(overq_poly(N - ji, ji - 1).extended(T), X)
            * poch_ratio_xq(-1, +1, j - 1, X, T);
        XQSeries corner_plain =
            XQSeries::embed(overq_poly(N - ji, ji).extended(T), X)
            * poch_ratio_xq(-1, +1, j, X, T);
        s = s + (corner_over + corner_plain).shifted(j, j * j);
    }
    return s;
}

VerificationReport verify_sylvester(int Nmax, std::size_t X, std::size_t T,
                                    std::size_t theta_trunc)
{
    return timed("sylvester",
                 {{"Nmax", Nmax},
                  {"X", static_cast<long long>(X)},
                  {"T", static_cast<long long>(T)},
                  {"thetaT", static_cast<long long>(theta_trunc)}},
                 [&](VerificationReport& rep) {
        for (int N = 1; N <= Nmax && rep.pass; ++N) {
            XQSeries rhs = poch_ratio_xq(-1, +1, static_cast<std::size_t>(N), X, T);
            check_xq(rep, sylvester_S(N, X, T), rhs, X, T, {{"N", N}});
        }
        // corollary at N = infinity via the limit series
        XQSeries s_inf = XQSeries::constant(1, X, T);
        for (std::size_t j = 1; j <= X && j * j <= T; ++j) {
            XQSeries t1 = XQSeries::embed(over_limit(static_cast<int>(j) - 1, T), X)
                        * poch_ratio_xq(-1, +1, j - 1, X, T);
            XQSeries t2 = XQSeries::embed(over_limit(static_cast<int>(j), T), X)
                        * poch_ratio_xq(-1, +1, j, X, T);
            s_inf = s_inf + (t1 + t2).shifted(j, j * j);
        }
        check_xq(rep, s_inf, poch_ratio_xq(-1, +1, std::nullopt, X, T), X, T,
                 {{"limitForm", 1}});
        // theta specialization at x = -1
        QSeries lhs = poch_ratio_q(+1, -1, std::nullopt, theta_trunc);
        QSeries theta =
            bilateral_theta([](long long n) { return n * n; }, theta_trunc);
        check_q(rep, lhs, theta, theta_trunc, {{"theta", 1}});
    });
}

QSeries rank_gf(int m, std::size_t T)
{
    if (m < 0)
        throw DomainError("rank_gf: negative rank " + std::to_string(m)
                          + "; use the rank symmetry N(m,n) = N(-m,n)");
    QSeries r = QSeries::monomial(2, static_cast<std::size_t>(m) + 1, T);
    for (int k = 2; 2 * k + m - 1 <= static_cast<long long>(T); ++k) {
        std::size_t e = static_cast<std::size_t>(2 * k + m - 1);
        QSeries sum = overq_poly(k + m - 1, k - 1).extended(T)
                    + overq_poly(k + m - 2, k - 1).extended(T)
                    + overq_poly(k + m - 1, k - 2).extended(T)
                    + overq_poly(k + m - 2, k - 2).extended(T);
        r = r + sum.shifted(e);
    }
    return r;
}

namespace {

QSeries lovejoy_rank_gf(int m, std::size_t T)
{
    QSeries s(T);
    for (long long n = 1; n * n + m * n <= static_cast<long long>(T); ++n) {
        std::size_t nn = static_cast<std::size_t>(n);
        QSeries numer(T);
        numer.set_coeff(0, 1);
        if (nn <= T) numer.set_coeff(nn, -1);
        QSeries denom(T);
        denom.set_coeff(0, 1);
        if (nn <= T) denom.set_coeff(nn, 1);
        QSeries term = (numer * denom.inverse())
                           .shifted(static_cast<std::size_t>(n * n + m * n));
        s = (n % 2 == 1) ? s + term : s - term;
    }
    return (poch_ratio_q(-1, +1, std::nullopt, T) * s).scaled(2);
}

} // namespace

VerificationReport verify_rank(int mmax, std::size_t T, int nmax)
{
    return timed("rank",
                 {{"mmax", mmax}, {"T", static_cast<long long>(T)}, {"nmax", nmax}},
                 [&](VerificationReport& rep) {
        CountTable counts = rank_counts(nmax);
        for (int m = 0; m <= mmax && rep.pass; ++m) {
            QSeries formula = rank_gf(m, T);
            long long upto = std::min<long long>(static_cast<long long>(T), nmax);
            for (long long n = 0; n <= upto; ++n) {
                if (!check_count(rep, n, formula.coeff(static_cast<std::size_t>(n)),
                                 counts.at({m, n}), {{"m", m}}))
                    break;
            }
            check_q(rep, formula, lovejoy_rank_gf(m, T), T, {{"m", m}, {"lovejoy", 1}});
        }
    });
}

XQSeries D_series(int N, std::size_t X, std::size_t T)
{
    if (N < 0) throw OutOfRange("D_series: negative N");
    XQSeries d(X, T);
    for (std::size_t j = 0; j <= static_cast<std::size_t>(N) && j <= X
                            && j * (j + 1) / 2 <= T; ++j) {
        QSeries p = overq_poly(N - static_cast<int>(j), static_cast<int>(j)).extended(T);
        d = d + XQSeries::embed(p, X).shifted(j, j * (j + 1) / 2);
    }
    return d;
}

XQSeries C_series(int N, std::size_t X, std::size_t T)
{
    if (N < 0) throw OutOfRange("C_series: negative N");
    XQSeries c(X, T);
    for (std::size_t j = 0; 2 * j <= X && j * (2 * j + 1) <= T
                            && j <= static_cast<std::size_t>(N); ++j) {
        XQSeries base = XQSeries::embed(
                            overq_poly(N - static_cast<int>(j), static_cast<int>(j))
                                .extended(T), X)
                      * poch_ratio_xq(+1, -1, j, X, T);
        XQSeries term = base.shifted(2 * j, j * (2 * j + 1))
                      - base.shifted(2 * j + 1, (j + 1) * (2 * j + 1));
        c = (j % 2 == 0) ? c + term : c - term;
    }
    return c;
}

XQSeries g_series(int N, std::size_t X, std::size_t T)
{
    if (N < 0) throw OutOfRange("g_series: negative N");
    return poch_ratio_xq(+1, -1, static_cast<std::size_t>(N), X, T)
         * D_series(N, X, T);
}

VerificationReport verify_key_theorem(const std::vector<int>& Ns, std::size_t X,
                                      std::size_t Tpad,
                                      std::size_t corollary_trunc)
{
    for (int N : Ns)
        if (N < 2)
            throw OutOfRange("verify_key_theorem: N must be >= 2, got "
                             + std::to_string(N));
    std::map<std::string, long long> params{
        {"Nmax", Ns.empty() ? 0 : *std::max_element(Ns.begin(), Ns.end())},
        {"X", static_cast<long long>(X)},
        {"Tpad", static_cast<long long>(Tpad)},
        {"corollaryT", static_cast<long long>(corollary_trunc)}};
    return timed("key", std::move(params), [&](VerificationReport& rep) {
        for (int N : Ns) {
            if (!rep.pass) break;
            std::size_t T = static_cast<std::size_t>(N) + Tpad;
            XQSeries quot2 = poch_ratio_xq(+1, -1, 2, X, T);
            XQSeries g0 = g_series(N, X, T);
            XQSeries g_comb =
                one_minus_xq(X, T) * g_series(N - 1, X, T).substitute_scale(1)
                + quot2 * g_series(N - 2, X, T).substitute_scale(2).shifted(1, 2);
            check_xq(rep, g0, g_comb, X, T, {{"N", N}, {"lemma", 1}});

            XQSeries c0 = C_series(N, X, T);
            XQSeries c_comb =
                one_minus_xq(X, T) * C_series(N - 1, X, T).substitute_scale(1)
                + quot2 * C_series(N - 2, X, T).substitute_scale(2).shifted(1, 2);
            check_membership(rep, c0 - c_comb, static_cast<std::size_t>(N) + 3,
                             {{"N", N}, {"lemma", 2}});

            XQSeries diff = g0 - c0;
            check_membership(rep, diff, static_cast<std::size_t>(N) + 3,
                             {{"N", N}, {"theorem", 1}});
            // informational: smallest q-order actually observed in g - C
            std::optional<std::size_t> min_q;
            for (const auto& [mono, v] : diff.terms())
                if (!v.is_zero() && (!min_q || mono.second < *min_q))
                    min_q = mono.second;
            rep.notes.push_back(
                "N=" + std::to_string(N) + ": min q-order of g-C is "
                + (min_q ? std::to_string(*min_q) : "none (window empty)")
                + ", bound N+3=" + std::to_string(N + 3));
        }
        // corollary at N = infinity on a bivariate window
        std::size_t Ti = Tpad + 10;
        XQSeries d_inf(X, Ti);
        for (std::size_t j = 0; j <= X && j * (j + 1) / 2 <= Ti; ++j)
            d_inf = d_inf + XQSeries::embed(over_limit(static_cast<int>(j), Ti), X)
                                .shifted(j, j * (j + 1) / 2);
        XQSeries g_inf = poch_ratio_xq(+1, -1, std::nullopt, X, Ti) * d_inf;
        XQSeries c_inf(X, Ti);
        for (std::size_t j = 0; 2 * j <= X && j * (2 * j + 1) <= Ti; ++j) {
            XQSeries base = XQSeries::embed(over_limit(static_cast<int>(j), Ti), X)
                          * poch_ratio_xq(+1, -1, j, X, Ti);
            XQSeries term = base.shifted(2 * j, j * (2 * j + 1))
                          - base.shifted(2 * j + 1, (j + 1) * (2 * j + 1));
            c_inf = (j % 2 == 0) ? c_inf + term : c_inf - term;
        }
        check_xq(rep, g_inf, c_inf, X, Ti, {{"corollary", 1}});
        // x = 1 specialization, univariate to the corollary truncation
        std::size_t Tc = corollary_trunc;
        QSeries d_one(Tc);
        for (std::size_t j = 0; j * (j + 1) / 2 <= Tc; ++j)
            d_one = d_one
                  + over_limit(static_cast<int>(j), Tc).shifted(j * (j + 1) / 2);
        QSeries lhs = poch_ratio_q(+1, -1, std::nullopt, Tc) * d_one;
        QSeries rhs_sum = bilateral_theta(
            [](long long n) { return n * (2 * n + 1); }, Tc);
        QSeries rhs_prod = product_modular({1, 3, 4}, 4, Tc);
        check_q(rep, lhs, rhs_sum, Tc, {{"x1sum", 1}});
        check_q(rep, rhs_sum, rhs_prod, Tc, {{"x1product", 1}});
    });
}

VerificationReport verify_rr(int nmax, std::size_t T)
{
    return timed("rr", {{"nmax", nmax}, {"T", static_cast<long long>(T)}},
                 [&](VerificationReport& rep) {
        CountTable abc = gap_congruence_counts(nmax);
        for (int n = 0; n <= nmax && rep.pass; ++n) {
            check_count(rep, n, abc.at({n}, 0), abc.at({n}, 1), {{"sides", 1}}); // A = B
            check_count(rep, n, abc.at({n}, 1), abc.at({n}, 2), {{"sides", 2}}); // B = C
        }
        if (nmax >= 8) // the worked n = 8 lists have 16 members each
            check_count(rep, 8, abc.at({8}, 0), BigInt(16), {{"workedExample", 8}});
        QSeries b_prod = pochhammer(PochSpec::q_inf(-1), T)
                       * product_modular({2}, 4, T).inverse();
        QSeries c_prod = product_modular({1, 2, 3}, 4, T).inverse();
        long long upto = std::min<long long>(nmax, static_cast<long long>(T));
        for (long long n = 0; n <= upto && rep.pass; ++n) {
            check_count(rep, n, abc.at({n}, 1),
                        b_prod.coeff(static_cast<std::size_t>(n)), {{"productB", 1}});
            check_count(rep, n, abc.at({n}, 2),
                        c_prod.coeff(static_cast<std::size_t>(n)), {{"productC", 1}});
        }
        // proof identity: sum_k q^{k(k+1)/2} (-q)_k/(q)_k
        QSeries sum_side(T);
        for (int k = 0; static_cast<std::size_t>(k) * (k + 1) / 2 <= T; ++k)
            sum_side = sum_side + over_limit(k, T).shifted(
                           static_cast<std::size_t>(k) * (k + 1) / 2);
        check_q(rep, sum_side, b_prod, T, {{"proofIdentityB", 1}});
        check_q(rep, sum_side, c_prod, T, {{"proofIdentityC", 1}});
        for (long long n = 0; n <= upto && rep.pass; ++n)
            check_count(rep, n, sum_side.coeff(static_cast<std::size_t>(n)),
                        abc.at({n}, 0), {{"sumEqualsA", 1}});
    });
}

std::vector<VerificationReport> verify_all()
{
    std::vector<VerificationReport> reports;
    reports.push_back(verify_overg());
    reports.push_back(verify_pascal());
    reports.push_back(verify_limit());
    reports.push_back(verify_parts_gf());
    reports.push_back(verify_tau_congruence());
    reports.push_back(verify_sylvester());
    reports.push_back(verify_rank());
    reports.push_back(verify_key_theorem());
    reports.push_back(verify_rr());
    return reports;
}

} // namespace overq
