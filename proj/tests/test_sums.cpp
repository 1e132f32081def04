#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "mzv/identities.hpp"
#include "mzv/multi_index.hpp"
#include "mzv/polylog.hpp"
#include "mzv/real.hpp"
#include "mzv/series.hpp"
#include "mzv/weighted_sums.hpp"
#include "mzv/zeta.hpp"

#include "oracles.hpp"

using mzv::LinearForm;
using mzv::MultiIndex;
using mzv::Real;
using mzv::ZetaCache;

namespace {
const int P = 40;
bool tiny(const Real& v, int neg_exp = 34) {
    return v.abs() < Real::pow10(-neg_exp, v.digits());
}
Real rat(long p, long q) { return Real::from_ratio(p, q, P); }
}  // namespace

TEST_CASE("weighted sum closed forms at low weight") {
    ZetaCache cache;
    const Real x = rat(5, 4), y = rat(3, 4);
    // depth 1: only the composition (l) itself survives
    CHECK(tiny(mzv::s_weighted(4, 1, x, y, P, cache) -
               x * x * x * mzv::zeta(MultiIndex({4}), P, cache)));
    // l=3, n=2: only (2,1) has an admissible first part
    CHECK(tiny(mzv::s_weighted(3, 2, x, y, P, cache) -
               x * mzv::zeta(MultiIndex({2, 1}), P, cache)));
    // no compositions at all gives zero
    CHECK(mzv::s_weighted(3, 3, x, y, P, cache).is_zero());
    CHECK(mzv::s_weighted(2, 2, x, y, P, cache).is_zero());
}

TEST_CASE("t_double is the n=2 slice") {
    ZetaCache cache;
    const Real x = rat(-3, 2), y = rat(7, 8);
    for (int l = 3; l <= 7; ++l)
        CHECK(tiny(mzv::t_double(l, x, y, P, cache) -
                   mzv::s_weighted(l, 2, x, y, P, cache), 36));
    CHECK_THROWS_AS(mzv::t_double(2, x, y, P, cache), std::invalid_argument);
}

TEST_CASE("polylog companion sum") {
    const Real x = rat(1, 2), y = rat(-1, 4), z = rat(2, 5);
    // on compositions of 3 into 2 parts: (1,2) weighs y, (2,1) weighs x
    const Real want = y * mzv::li_index(MultiIndex({1, 2}), z, P) +
                      x * mzv::li_index(MultiIndex({2, 1}), z, P);
    CHECK(tiny(mzv::s_hat_polylog(3, 2, x, y, z, P) - want, 36));
    CHECK_THROWS_AS(mzv::s_hat_polylog(3, 2, x, y, rat(3, 4), P),
                    std::domain_error);
    // 0.7 is still inside the supported disk
    CHECK(!mzv::s_hat_polylog(2, 1, x, y, rat(7, 10), P).is_nan());
}

TEST_CASE("basis coefficients Z_{l,n,r}") {
    ZetaCache cache;
    const Real pi = Real::pi(P);
    const Real pi4 = pi * pi * pi * pi;
    // Z_{4,2,0} = zeta(2,2) + zeta(3,1) = pi^4/90, the zeta(1,3) term drops
    CHECK(tiny(mzv::z_coeff(4, 2, 0, P, cache) - pi4 / 90L, 36));
    // Z_{4,2,1} = zeta(2,2) + 2 zeta(3,1) = 5 zeta(4)/4
    CHECK(tiny(mzv::z_coeff(4, 2, 1, P, cache) - pi4 * 5L / 360L, 36));
    // Z_{4,2,2} = zeta(3,1)
    CHECK(tiny(mzv::z_coeff(4, 2, 2, P, cache) - pi4 / 360L, 36));
}

TEST_CASE("Z coefficients recombine into the shifted sum") {
    ZetaCache cache;
    const struct {
        long xp, xq, yp, yq;
    } pts[] = {{5, 4, 3, 4}, {-1, 2, 3, 4}, {1, 1, 1, 1}};
    for (const auto& pt : pts) {
        const Real x = rat(pt.xp, pt.xq), y = rat(pt.yp, pt.yq);
        const int l = 7, n = 3;
        Real acc = Real::from_int(0, P);
        for (int r = 0; r <= l - n; ++r)
            acc += x.pow_int(r) * y.pow_int(l - n - r) *
                   mzv::z_coeff(l, n, r, P, cache);
        CHECK(tiny(acc - mzv::s_weighted(l, n, x + y, y, P, cache), 34));
    }
}

TEST_CASE("termwise derivatives match difference quotients") {
    const int DP = 60;
    ZetaCache cache;
    const Real x = Real::from_ratio(5, 4, DP), y = Real::from_ratio(3, 4, DP);
    const int l = 6, n = 3;
    auto f = [&](const Real& a, const Real& b) {
        return mzv::s_weighted(l, n, a, b, DP, cache);
    };
    CHECK((mzv::s_derivative(l, n, 0, 0, x, y, DP, cache) - f(x, y)).is_zero());

    const Real h = Real::from_ratio(1, 1L << 33, DP);
    const Real dx = (f(x + h, y) - f(x - h, y)) / (h * 2L);
    const Real dy = (f(x, y + h) - f(x, y - h)) / (h * 2L);
    const Real small = Real::pow10(-15, DP);
    CHECK((mzv::s_derivative(l, n, 1, 0, x, y, DP, cache) - dx).abs() < small);
    CHECK((mzv::s_derivative(l, n, 0, 1, x, y, DP, cache) - dy).abs() < small);

    const Real h2 = Real::from_ratio(1, 1L << 20, DP);
    const Real dxy = (f(x + h2, y + h2) - f(x + h2, y - h2) -
                      f(x - h2, y + h2) + f(x - h2, y - h2)) /
                     (h2 * h2 * 4L);
    CHECK((mzv::s_derivative(l, n, 1, 1, x, y, DP, cache) - dxy).abs() <
          Real::pow10(-8, DP));
    CHECK_THROWS_AS(mzv::s_derivative(l, n, -1, 0, x, y, DP, cache),
                    std::invalid_argument);
}

TEST_CASE("series bracket pinned values") {
    ZetaCache cache;
    const Real one = rat(1, 1);
    CHECK(tiny(mzv::thm2_bracket(3, one, one, P) - rat(4, 1), 36));
    CHECK(tiny(mzv::thm2_bracket(4, one, one, P) - rat(5, 1), 36));
    CHECK(tiny(mzv::thm2_bracket(4, one, rat(0, 1), P) - rat(5, 4), 36));
    CHECK(tiny(mzv::thm2_bracket(4, rat(2, 1), one, P) - rat(45, 4), 36));
    CHECK_THROWS_AS(mzv::thm2_bracket(2, one, one, P),
                    std::invalid_argument);
}

TEST_CASE("generating function boundary rows vanish") {
    ZetaCache cache;
    const Real x = rat(1, 1), y = rat(1, 2);
    const int cap = 6;
    const auto lhs = mzv::thm1_lhs_series(x, y, cap, P, cache);
    const auto rhs = mzv::thm1_rhs_series(x, y, cap, P, cache);
    for (int m = 0; m <= cap; ++m) {
        CHECK(tiny(lhs.at(m, 0)));
        CHECK(tiny(lhs.at(0, m)));
        CHECK(tiny(rhs.at(m, 0)));
        CHECK(tiny(rhs.at(0, m)));
    }
    // and the two sides agree coefficient by coefficient
    Real worst = Real::from_int(0, P);
    for (int a = 0; a <= cap; ++a)
        for (int b = 0; a + b <= cap; ++b) {
            const Real d = (lhs.at(a, b) - rhs.at(a, b)).abs();
            if (worst < d)
                worst = d;
        }
    CHECK(worst < Real::pow10(-30, P));
}

TEST_CASE("g_series at cap 2 reduces to a single zeta(2) term") {
    ZetaCache cache;
    const LinearForm u{rat(1, 1), rat(1, 1)};   // X + Y
    const LinearForm v{rat(1, 3), rat(-2, 7)};  // irrelevant at this cap
    const LinearForm w{rat(-1, 1), rat(1, 1)};  // -X + Y
    const auto g = mzv::g_series(u, v, w, 2, P, cache);
    const Real z2 = mzv::zeta(MultiIndex({2}), P, cache);
    CHECK(tiny(g.at(2, 0) + z2, 36));
    CHECK(tiny(g.at(0, 2) - z2, 36));
    CHECK(tiny(g.at(1, 1), 36));
    CHECK(tiny(g.at(0, 0), 36));
    CHECK(tiny(g.at(1, 0), 36));
}

TEST_CASE("sin expansion matches the reciprocal sine series") {
    ZetaCache cache;
    const LinearForm f{rat(1, 1), rat(0, 1)};  // plain X
    const auto s = mzv::sin_expansion_series(f, 8, P, cache);
    const auto ref = oracles::pi_over_sin_series(8, P);
    for (int m = 0; m <= 8; ++m) {
        CHECK(tiny(s.at(m, 0) - ref.at(m), 30));
        if (m > 0)
            CHECK(tiny(s.at(0, m), 36));
    }
}
