// Acceptance gate: every release-blocking numeric contract, one line each.
// Exit status is the number of failed criteria.
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "mzv/identities.hpp"
#include "mzv/multi_index.hpp"
#include "mzv/real.hpp"
#include "mzv/report_io.hpp"
#include "mzv/series.hpp"
#include "mzv/weighted_sums.hpp"
#include "mzv/zeta.hpp"

#include "oracles.hpp"

using mzv::IdentityId;
using mzv::IdentityReport;
using mzv::LinearForm;
using mzv::MultiIndex;
using mzv::Params;
using mzv::Real;
using mzv::RunConfig;
using mzv::ZetaCache;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void criterion(int k, bool ok, const std::string& detail) {
    std::printf("criterion %2d: %s - %s\n", k, ok ? "PASS" : "FAIL",
                detail.c_str());
    for (const auto& n : g_notes)
        std::printf("              %s\n", n.c_str());
    g_notes.clear();
    std::fflush(stdout);
    if (!ok)
        ++g_failures;
}

std::string f3(const Real& v) { return v.to_string(3); }

void bump(Real& worst, const Real& r) {
    if (worst < r)
        worst = r;
}

Real check(IdentityId id, const Params& p, const RunConfig& cfg,
           ZetaCache& cache) {
    return mzv::check_identity(id, p, cfg, cache).residual;
}

std::string render_all(const std::vector<IdentityReport>& rs) {
    std::ostringstream os;
    mzv::write_reports(os, rs, mzv::ReportFormat::json);
    return os.str();
}

}  // namespace

int main() {
    const int P = 40;
    ZetaCache cache;
    RunConfig cfg;  // defaults: precision 40, tolerance 1e-30 per instance
    const Real tol35 = Real::pow10(-35, P);
    const Real tol30 = Real::pow10(-30, P);
    const Real tol28 = Real::pow10(-28, P);

    // 1: the two classical closed forms, far below the generic tolerance
    {
        const Real pi2 = Real::pi(P) * Real::pi(P);
        const Real r1 = (mzv::zeta(MultiIndex({2}), P, cache) - pi2 / 6L).abs();
        const Real r2 =
            (mzv::zeta(MultiIndex({3, 1}), P, cache) - pi2 * pi2 / 360L).abs();
        criterion(1, r1 < tol35 && r2 < tol35,
                  "zeta(2) off pi^2/6 by " + f3(r1) + ", zeta(3,1) off pi^4/360 by " +
                      f3(r2) + " (tolerance 1e-35)");
    }

    // 2: convolution vs direct truncated sum, inside the a-priori tail bound
    {
        const auto idxs = mzv::admissible_indices(8);
        const long n = static_cast<long>(idxs.size());
        const long M = 100000;
        std::vector<int> ok(idxs.size(), 1);
        std::vector<std::string> msg(idxs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long i = 0; i < n; ++i) {
            const MultiIndex& idx = idxs[static_cast<std::size_t>(i)];
            const auto nr = mzv::zeta_naive(idx, M, P);
            const Real diff = (mzv::zeta(idx, P, cache) - nr.value).abs();
            if (!(diff <= nr.error_bound)) {
                ok[static_cast<std::size_t>(i)] = 0;
                msg[static_cast<std::size_t>(i)] =
                    "(" + idx.str() + "): |difference| " + f3(diff) +
                    " vs stated bound " + f3(nr.error_bound) + ", ratio " +
                    (diff / nr.error_bound).to_string(7);
            }
        }
        int good = 0;
        for (std::size_t i = 0; i < idxs.size(); ++i) {
            if (ok[i])
                ++good;
            else
                g_notes.push_back(msg[i]);
        }
        criterion(2, good == static_cast<int>(idxs.size()),
                  std::to_string(good) + "/" + std::to_string(idxs.size()) +
                      " indices of weight <= 8 within the naive error bound at "
                      "M = 100000");
    }

    // 3: duality across all admissible indices of weight <= 8
    {
        Real worst = Real::zero(P);
        const auto idxs = mzv::admissible_indices(8);
        for (const auto& idx : idxs)
            bump(worst, (mzv::zeta(idx, P, cache) -
                         mzv::zeta(mzv::dual_index(idx), P, cache))
                            .abs());
        criterion(3, worst < tol30,
                  std::to_string(idxs.size()) +
                      " dual pairs, max residual " + f3(worst) +
                      " (tolerance 1e-30)");
    }

    // 4: sum formula, every depth at weights 2..10
    {
        Real worst = Real::zero(P);
        int count = 0;
        for (int l = 2; l <= 10; ++l) {
            const Real zl = mzv::zeta(MultiIndex({l}), P, cache);
            for (int n = 1; n <= l - 1; ++n) {
                Real acc = Real::zero(P);
                mzv::for_each_composition(l, n, 2, [&](const std::vector<int>& c) {
                    acc += mzv::zeta(MultiIndex(c), P, cache);
                });
                bump(worst, (acc - zl).abs());
                ++count;
            }
        }
        criterion(4, worst < tol30,
                  std::to_string(count) + " (l,n) pairs, max residual " +
                      f3(worst) + " (tolerance 1e-30)");
    }

    // 5: weighted Euler sums and their two-parameter deformation
    {
        Real worst = Real::zero(P);
        for (int l = 3; l <= 10; ++l) {
            Params p;
            p.l = l;
            bump(worst, check(IdentityId::WEIGHTED_EULER, p, cfg, cache));
        }
        const char* pts[5][2] = {{"1", "0"},
                                 {"1", "1"},
                                 {"2", "-1.5"},
                                 {"0.75", "0.75"},
                                 {"-1.25", "0.5"}};
        for (int l = 3; l <= 9; ++l)
            for (const auto& pt : pts) {
                Params p;
                p.l = l;
                p.x = pt[0];
                p.y = pt[1];
                bump(worst, check(IdentityId::GKZ_PARAM, p, cfg, cache));
            }
        criterion(5, worst < tol30,
                  "weighted Euler l=3..10 plus parametrized form l=3..9 at 5 "
                  "points (one with x=y), max residual " +
                      f3(worst) + " (tolerance 1e-30)");
    }

    // 6: polylog shuffle lemma on the unit-interval samples
    {
        Real worst = Real::zero(P);
        int count = 0;
        const char* zs[3] = {"0.5", "-0.5", "0.3"};
        const char* xy[2][2] = {{"0.5", "-0.25"}, {"1.25", "0.75"}};
        for (int l = 1; l <= 7; ++l)
            for (int n = 1; n <= l; ++n)
                for (const char* z : zs)
                    for (const auto& pt : xy) {
                        Params p;
                        p.l = l;
                        p.n = n;
                        p.x = pt[0];
                        p.y = pt[1];
                        p.z = z;
                        bump(worst, check(IdentityId::LEMMA_2_1, p, cfg, cache));
                        ++count;
                    }
        criterion(6, worst < tol28,
                  std::to_string(count) +
                      " polylog decompositions (l <= 7, 3 z values, 2 points), "
                      "max residual " +
                      f3(worst) + " (tolerance 1e-28)");
    }

    // 7: the S_l^n(x+y,y) expansion and its hook-binomial corollary
    {
        Real worst_p = Real::zero(P);
        Real worst_a = Real::zero(P);
        int np = 0, na = 0;
        const char* xy[2][2] = {{"1", "1"}, {"0.5", "-0.25"}};
        for (int l = 3; l <= 9; ++l)
            for (int n = 2; n <= l - 1; ++n) {
                for (const auto& pt : xy) {
                    Params p;
                    p.l = l;
                    p.n = n;
                    p.x = pt[0];
                    p.y = pt[1];
                    bump(worst_p, check(IdentityId::PROP_2_1, p, cfg, cache));
                    ++np;
                }
                for (int r = 1; r <= l - n - 1; ++r) {
                    Params p;
                    p.l = l;
                    p.n = n;
                    p.r = r;
                    bump(worst_a, check(IdentityId::AK_COROLLARY, p, cfg, cache));
                    ++na;
                }
            }
        criterion(7, worst_p < tol30 && worst_a < tol30,
                  std::to_string(np) + " expansion points (max residual " +
                      f3(worst_p) + ") and " + std::to_string(na) +
                      " binomial corollary instances (max residual " +
                      f3(worst_a) + "), tolerance 1e-30");
    }

    // 8: the degree-8 generating function identity at three (x,y)
    {
        Real worst = Real::zero(P);
        const char* pts[3][2] = {{"1", "1"}, {"1", "2"}, {"-1", "0.5"}};
        for (const auto& pt : pts) {
            Params p;
            p.D = 8;
            p.x = pt[0];
            p.y = pt[1];
            bump(worst, check(IdentityId::THM_1_SERIES, p, cfg, cache));
        }
        criterion(8, worst < tol28,
                  "generating function through total degree 8 at 3 points, max "
                  "coefficient residual " +
                      f3(worst) + " (tolerance 1e-28)");
    }

    // 9: the summed double-sum form at weights 3..10
    {
        Real worst = Real::zero(P);
        const char* pts[3][2] = {{"1", "1"}, {"0.5", "-0.25"}, {"1.25", "0.75"}};
        for (int l = 3; l <= 10; ++l)
            for (const auto& pt : pts) {
                Params p;
                p.l = l;
                p.x = pt[0];
                p.y = pt[1];
                bump(worst, check(IdentityId::THM_2, p, cfg, cache));
            }
        criterion(9, worst < tol30,
                  "24 weight/point combinations, max residual " + f3(worst) +
                      " (tolerance 1e-30)");
    }

    // 10: the sine-quotient series identity and the expansion it leans on
    {
        Params p;
        p.D = 8;
        const Real r = check(IdentityId::PROP_3_1_SERIES, p, cfg, cache);
        Real worst_sin = Real::zero(P);
        LinearForm u{Real::one(P), Real::zero(P)};
        const auto s = mzv::sin_expansion_series(u, 8, P, cache);
        const auto ref = oracles::pi_over_sin_series(8, P);
        for (int m = 0; m <= 8; ++m)
            bump(worst_sin, (s.at(m, 0) - ref.at(m)).abs());
        criterion(10, r < tol28 && worst_sin < tol30,
                  "series identity residual " + f3(r) +
                      " (tolerance 1e-28); expansion vs reciprocal sine Taylor "
                      "off by " +
                      f3(worst_sin) + " through degree 8 (tolerance 1e-30)");
    }

    // 11: the three specialization families
    {
        Real worst = Real::zero(P);
        int count = 0;
        const char* pts[3][2] = {{"1", "1"}, {"0.5", "-0.25"}, {"1.25", "0.75"}};
        const struct {
            IdentityId id;
            int lmin;
        } fams[3] = {{IdentityId::PROP_4_1_I, 3},
                     {IdentityId::PROP_4_1_II, 4},
                     {IdentityId::PROP_4_1_III, 5}};
        for (const auto& fam : fams)
            for (int l = fam.lmin; l <= 10; ++l)
                for (const auto& pt : pts) {
                    Params p;
                    p.l = l;
                    p.x = pt[0];
                    p.y = pt[1];
                    bump(worst, check(fam.id, p, cfg, cache));
                    ++count;
                }
        criterion(11, worst < tol30,
                  std::to_string(count) + " instances, max residual " + f3(worst) +
                      " (tolerance 1e-30)");
    }

    // 12: difference-operator stencils at h = 1e-6, plus the exact operator
    {
        const Real flat = Real::pow10(-10, P);
        Real worst_fd = Real::zero(P);
        Real worst_exact = Real::zero(P);
        int count = 0;
        int over = 0;
        bool budget_ok = true;
        const auto look = [&](int roman, int l, int part, int n) {
            const auto c = mzv::check_lemma_4_1(roman, l, part, n, P, cache);
            ++count;
            bump(worst_fd, c.fd_residual);
            if (!(c.fd_residual < flat)) {
                ++over;
                std::string who = "family " + std::to_string(roman) + " part " +
                                  std::to_string(part) + " l=" + std::to_string(l);
                if (roman == 1 && part == 1)
                    who += " n=" + std::to_string(n);
                g_notes.push_back(who + ": stencil residual " + f3(c.fd_residual) +
                                  " exceeds 1e-10 (truncation budget " +
                                  f3(c.fd_tolerance) +
                                  (c.fd_residual < c.fd_tolerance
                                       ? ", which it meets)"
                                       : ", exceeded)"));
            }
            if (!(c.fd_residual < c.fd_tolerance))
                budget_ok = false;
            if (roman == 2 && part == 1)
                bump(worst_exact, c.exact_residual);
        };
        for (int l = 5; l <= 10; ++l) {
            for (int n = 3; n <= l - 1; ++n)
                look(1, l, 1, n);
            for (int part = 2; part <= 4; ++part)
                look(1, l, part, 0);
            look(2, l, 1, 0);
            look(2, l, 2, 0);
        }
        if (over > 0)
            g_notes.push_back(
                std::string("all stencil residuals sit within the h^2 "
                            "truncation budget: ") +
                (budget_ok ? "yes" : "no"));
        criterion(12, over == 0 && worst_exact < tol30,
                  std::to_string(count) + " stencil checks, max residual " +
                      f3(worst_fd) + " vs flat 1e-10 (" + std::to_string(over) +
                      " over); exact operator identity max residual " +
                      f3(worst_exact) + " (tolerance 1e-30)");
    }

    // 13: the x = y = 1 and (2,1) specializations, and the depth-4 variant
    {
        Real worst = Real::zero(P);
        const IdentityId ids[3] = {IdentityId::PROP_4_2_I, IdentityId::PROP_4_2_II,
                                   IdentityId::GUO_XIE_D4};
        for (IdentityId id : ids)
            for (int l = 5; l <= 10; ++l) {
                Params p;
                p.l = l;
                bump(worst, check(id, p, cfg, cache));
            }
        criterion(13, worst < tol30,
                  "18 closed-form evaluations, max residual " + f3(worst) +
                      " (tolerance 1e-30)");
    }

    // 14: termwise derivatives against central differences
    {
        const int DP = 60;
        const Real x = Real::from_ratio(5, 4, DP);
        const Real y = Real::from_ratio(3, 4, DP);
        const Real h = Real::from_ratio(1, 1L << 20, DP);
        const Real h2 = h * h;
        const Real rel_cap = Real::pow10(-8, DP);
        const Real den_floor = Real::pow10(-20, DP);
        Real worst = Real::zero(DP);
        const int pairs[3][2] = {{7, 2}, {7, 3}, {8, 4}};
        int count = 0;
        for (const auto& ln : pairs) {
            const int l = ln[0], n = ln[1];
            const auto f = [&](const Real& a, const Real& b) {
                return mzv::s_weighted(l, n, a, b, DP, cache);
            };
            const Real f00 = f(x, y);
            const Real fpx = f(x + h, y), fmx = f(x - h, y);
            const Real fpy = f(x, y + h), fmy = f(x, y - h);
            const Real fpp = f(x + h, y + h), fpm = f(x + h, y - h);
            const Real fmp = f(x - h, y + h), fmm = f(x - h, y - h);
            const struct {
                int p, q;
                Real fd;
            } stencils[6] = {
                {0, 0, f00},
                {1, 0, (fpx - fmx) / (h * 2L)},
                {0, 1, (fpy - fmy) / (h * 2L)},
                {2, 0, (fpx - f00 * 2L + fmx) / h2},
                {0, 2, (fpy - f00 * 2L + fmy) / h2},
                {1, 1, (fpp - fpm - fmp + fmm) / (h2 * 4L)},
            };
            for (const auto& st : stencils) {
                const Real d =
                    mzv::s_derivative(l, n, st.p, st.q, x, y, DP, cache);
                Real den = st.fd.abs();
                if (den < den_floor)
                    den = den_floor;
                bump(worst, (d - st.fd).abs() / den);
                ++count;
            }
        }
        criterion(14, worst < rel_cap,
                  std::to_string(count) +
                      " derivative orders across 3 (l,n), max relative error " +
                      f3(worst) + " vs central differences (tolerance 1e-8)");
    }

    // 15: full-suite determinism, rerun and serial
    {
        RunConfig base;  // defaults, seed 0
        ZetaCache c1, c2, c3;
        const auto r1 = mzv::run_suite({}, base, c1);
        const auto r2 = mzv::run_suite({}, base, c2);
        RunConfig ser = base;
        ser.threads = 1;
        const auto r3 = mzv::run_suite({}, ser, c3);
        const std::string s1 = render_all(r1);
        const bool again = s1 == render_all(r2);
        const bool serial = s1 == render_all(r3);
        criterion(15, again && serial,
                  std::to_string(r1.size()) +
                      " suite checks; rerun identical: " + (again ? "yes" : "no") +
                      "; single-thread identical: " + (serial ? "yes" : "no"));
    }

    std::printf("%d of 15 criteria failed\n", g_failures);
    return g_failures;
}
