#include "mzv/identities.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <random>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mzv/polylog.hpp"
#include "mzv/series.hpp"
#include "mzv/weighted_sums.hpp"

namespace mzv {

namespace {

constexpr std::array<std::string_view, kIdentityCount> kIdNames = {
    "SUM_FORMULA",     "EULER_SUM",    "WEIGHTED_EULER",  "GKZ_PARAM",
    "HARMONIC_DOUBLE", "DUALITY",      "LEMMA_2_1",       "PROP_2_1",
    "AK_COROLLARY",    "THM_1_SERIES", "THM_2",           "FUNC_EQ_3_2",
    "PROP_3_1_SERIES", "PROP_4_1_I",   "PROP_4_1_II",     "PROP_4_1_III",
    "LEMMA_4_1_I",     "LEMMA_4_1_II", "PROP_4_2_I",      "PROP_4_2_II",
    "GUO_XIE_D4",
};

int pow_m1(int k) { return (k % 2 == 0) ? 1 : -1; }

int need_int(const std::optional<int>& v, const char* what) {
    if (!v)
        throw std::invalid_argument(std::string("missing parameter ") + what);
    return *v;
}

Real need_point(const std::optional<std::string>& s, const char* what, int P) {
    if (!s)
        throw std::invalid_argument(std::string("missing parameter ") + what);
    return Real::from_str(*s, P);
}

Real zeta1(int m, int P, ZetaCache& c) {
    return zeta(MultiIndex(std::vector<int>{m}), P, c);
}

Real hook_zeta(int top, int ones, int P, ZetaCache& c) {
    return zeta(MultiIndex::hook(top, ones), P, c);
}

Real r_sum_formula(int l, int n, int P, ZetaCache& c) {
    if (l < 2 || n < 1 || n > l - 1)
        throw std::invalid_argument("SUM_FORMULA: need l >= 2, 1 <= n <= l-1");
    Real acc = Real::zero(P);
    for_each_composition(l, n, 2, [&](const std::vector<int>& comp) {
        acc += zeta(MultiIndex(comp), P, c);
    });
    return (acc - zeta1(l, P, c)).abs();
}

Real r_euler_sum(int l, int P, ZetaCache& c) {
    if (l < 3)
        throw std::invalid_argument("EULER_SUM: need l >= 3");
    Real rhs = zeta1(l, P, c) * static_cast<long>(l - 1);
    for (int j = 2; j <= l - 2; ++j)
        rhs -= zeta1(j, P, c) * zeta1(l - j, P, c);
    rhs /= 2L;
    return (zeta(MultiIndex({l - 1, 1}), P, c) - rhs).abs();
}

Real r_weighted_euler(int l, int P, ZetaCache& c) {
    if (l < 3)
        throw std::invalid_argument("WEIGHTED_EULER: need l >= 3");
    Real lhs = Real::zero(P);
    for (int j = 2; j <= l - 1; ++j)
        lhs += zeta(MultiIndex({j, l - j}), P, c) * (1L << j);
    return (lhs - zeta1(l, P, c) * static_cast<long>(l + 1)).abs();
}

Real r_gkz(int l, const Real& x, const Real& y, int P, ZetaCache& c) {
    if (l < 3)
        throw std::invalid_argument("GKZ: need l >= 3");
    Real lhs = t_double(l, x + y, y, P, c) + t_double(l, y + x, x, P, c);
    Real rhs = t_double(l, x, y, P, c) + t_double(l, y, x, P, c);
    Real hom = Real::zero(P);
    for (int j = 0; j <= l - 2; ++j)
        hom += x.pow_int(j) * y.pow_int(l - 2 - j);
    rhs += hom * zeta1(l, P, c);
    return (lhs - rhs).abs();
}

Real r_harmonic(int m, int n, int P, ZetaCache& c) {
    if (m < 2 || n < 2)
        throw std::invalid_argument("HARMONIC: need m, n >= 2");
    Real lhs = zeta1(m, P, c) * zeta1(n, P, c);
    Real rhs = zeta(MultiIndex({m, n}), P, c) + zeta(MultiIndex({n, m}), P, c) +
               zeta1(m + n, P, c);
    return (lhs - rhs).abs();
}

Real r_duality(const MultiIndex& idx, int P, ZetaCache& c) {
    return (zeta(idx, P, c) - zeta(dual_index(idx), P, c)).abs();
}

Real r_lemma_2_1(int l, int n, const Real& x, const Real& y, const Real& z,
                 int P) {
    if (l < 1 || n < 1 || n > l)
        throw std::invalid_argument("LEMMA_2_1: need 1 <= n <= l");
    Real lhs = s_hat_polylog(l, n, x + y, y, z, P);
    Real second = s_hat_polylog(l, n, y + x, x, z, P);
    if (n % 2 == 0)
        lhs += second;
    else
        lhs -= second;
    Real rhs = Real::zero(P);
    for (int j1 = 1; j1 <= n - 1; ++j1) {
        const int j2 = n - j1;
        Real inner = Real::zero(P);
        for (int k1 = 0; k1 <= l - n; ++k1) {
            const int k2 = l - n - k1;
            Real t = x.pow_int(k1) * y.pow_int(k2);
            t *= li_index(MultiIndex::hook(k1 + 1, j1 - 1), z, P);
            t *= li_index(MultiIndex::hook(k2 + 1, j2 - 1), z, P);
            inner += t;
        }
        if (pow_m1(j2 - 1) > 0)
            rhs += inner;
        else
            rhs -= inner;
    }
    return (lhs - rhs).abs();
}

Real r_prop_2_1(int l, int n, const Real& x, const Real& y, int P,
                ZetaCache& c) {
    if (l < 2 || n < 1 || n > l - 1)
        throw std::invalid_argument("PROP_2_1: need l >= 2, 1 <= n <= l-1");
    const int w = l - n;
    const int sn = pow_m1(n);
    Real lhs = s_weighted(l, n, x + y, y, P, c);
    Real second = s_weighted(l, n, y + x, x, P, c);
    if (sn > 0)
        lhs += second;
    else
        lhs -= second;
    lhs -= (x.pow_int(w) * static_cast<long>(sn) + y.pow_int(w)) *
           zeta1(l, P, c);
    Real rhs = Real::zero(P);
    for (int j1 = 1; j1 <= n - 1; ++j1) {
        const int j2 = n - j1;
        Real inner = Real::zero(P);
        for (int k1 = 1; k1 <= w - 1; ++k1) {
            const int k2 = w - k1;
            Real t = x.pow_int(k1) * y.pow_int(k2);
            t *= hook_zeta(k1 + 1, j1 - 1, P, c);
            t *= hook_zeta(k2 + 1, j2 - 1, P, c);
            inner += t;
        }
        if (pow_m1(j2 - 1) > 0)
            rhs += inner;
        else
            rhs -= inner;
    }
    rhs += (x.pow_int(w) + y.pow_int(w) * static_cast<long>(sn)) *
           hook_zeta(w + 1, n - 1, P, c);
    return (lhs - rhs).abs();
}

Real r_ak(int l, int n, int r, int P, ZetaCache& c) {
    if (l < 3 || n < 1 || n > l - 2 || r < 1 || r > l - n - 1)
        throw std::invalid_argument("AK: need l >= 3, 1 <= n <= l-2, 1 <= r <= l-n-1");
    const int s = l - n - r;
    Real lhs = z_coeff(l, n, r, P, c);
    Real second = z_coeff(l, n, s, P, c);
    if (pow_m1(n) > 0)
        lhs += second;
    else
        lhs -= second;
    Real rhs = Real::zero(P);
    for (int j1 = 1; j1 <= n - 1; ++j1) {
        const int j2 = n - j1;
        Real t = hook_zeta(r + 1, j1 - 1, P, c) * hook_zeta(s + 1, j2 - 1, P, c);
        if (pow_m1(j2 - 1) > 0)
            rhs += t;
        else
            rhs -= t;
    }
    return (lhs - rhs).abs();
}

Real r_thm1(int D, const Real& x, const Real& y, int P, ZetaCache& c) {
    if (D < 2)
        throw std::invalid_argument("THM_1_SERIES: need D >= 2");
    return (thm1_lhs_series(x, y, D, P, c) - thm1_rhs_series(x, y, D, P, c))
        .max_abs_coeff();
}

Real r_thm2(int l, const Real& x, const Real& y, int P, ZetaCache& c) {
    if (l < 3)
        throw std::invalid_argument("THM_2: need l >= 3");
    const Real ymx = y - x;
    Real lhs = Real::zero(P);
    for (int n = 2; n <= l - 1; ++n) {
        Real pair = s_weighted(l, n, x + y, y, P, c);
        Real second = s_weighted(l, n, y + x, x, P, c);
        if (n % 2 == 0)
            pair += second;
        else
            pair -= second;
        lhs += ymx.pow_int(n - 2) * pair;
    }
    return (lhs - zeta1(l, P, c) * thm2_bracket(l, x, y, P)).abs();
}

Real r_func_eq(int D, const Real& x, const Real& y, int P, ZetaCache& c) {
    if (D < 2)
        throw std::invalid_argument("FUNC_EQ_3_2: need D >= 2");
    const Real zero = Real::zero(P);
    const Real one = Real::one(P);
    TruncatedSeries2 lhs = g_series(LinearForm{x + y, zero}, LinearForm{y, zero},
                                    LinearForm{zero, one}, D, P, c);
    lhs += g_series(LinearForm{y + x, zero}, LinearForm{x, zero},
                    LinearForm{zero, -one}, D, P, c);
    for (int a = 1; a < D; ++a)
        for (int n = 1; a + n <= D; ++n) {
            Real corr = x.pow_int(a) * static_cast<long>(pow_m1(n)) + y.pow_int(a);
            lhs.at(a, n) -= corr * zeta1(a + n, P, c);
        }
    return (lhs - thm1_rhs_series(x, y, D, P, c)).max_abs_coeff();
}

Real r_prop_3_1(int D, int P, ZetaCache& c) {
    if (D < 2)
        throw std::invalid_argument("PROP_3_1: need D >= 2");
    const Real zero = Real::zero(P);
    const Real one = Real::one(P);
    TruncatedSeries2 lhs = g_series(LinearForm{one, one}, LinearForm{zero, one},
                                    LinearForm{-one, one}, D, P, c);
    lhs += g_series(LinearForm{one, one}, LinearForm{one, zero},
                    LinearForm{one, -one}, D, P, c);
    TruncatedSeries2 rhs = -sin_expansion_series(LinearForm{-one, one}, D, P, c);
    rhs.at(0, 0) += one;
    for (int a = 1; a < D; ++a)
        for (int n = 1; a + n <= D; ++n) {
            const Real zv = zeta1(a + n, P, c);
            TruncatedSeries2 t =
                pow_linear_form(one, zero, a, D) * pow_linear_form(one, -one, n, D);
            t.scale(zv);
            rhs += t;
            t = pow_linear_form(zero, one, a, D) * pow_linear_form(-one, one, n, D);
            t.scale(zv);
            rhs += t;
        }
    return (lhs - rhs).max_abs_coeff();
}

Real r_p41_i(int l, const Real& x, const Real& y, int P, ZetaCache& c) {
    if (l < 3)
        throw std::invalid_argument("PROP_4_1_I: need l >= 3");
    Real lhs = s_weighted(l, 2, x + y, y, P, c) + s_weighted(l, 2, y + x, x, P, c);
    Real rhs = (x.pow_int(l - 2) + y.pow_int(l - 2)) * zeta1(l, P, c) *
               static_cast<long>(l + 1);
    rhs /= 2L;
    Real corr = Real::zero(P);
    for (int j1 = 2; j1 <= l - 2; ++j1) {
        const int j2 = l - j1;
        corr += (x.pow_int(j1 - 1) - y.pow_int(j1 - 1)) *
                (x.pow_int(j2 - 1) - y.pow_int(j2 - 1)) * zeta1(j1, P, c) *
                zeta1(j2, P, c);
    }
    rhs -= corr / 2L;
    return (lhs - rhs).abs();
}

Real r_p41_ii(int l, const Real& x, const Real& y, int P, ZetaCache& c) {
    if (l < 4)
        throw std::invalid_argument("PROP_4_1_II: need l >= 4");
    Real lhs = s_weighted(l, 3, x + y, y, P, c) - s_weighted(l, 3, y + x, x, P, c);
    Real rhs = (x.pow_int(l - 3) - y.pow_int(l - 3)) * zeta1(l, P, c) *
               static_cast<long>((l + 1) * (l - 4));
    rhs /= 6L;
    Real t2 = Real::zero(P);
    for (int j1 = 2; j1 <= l - 3; ++j1) {
        const int j2 = l - j1;  // >= 3
        t2 += (x.pow_int(j1 - 1) - y.pow_int(j1 - 1)) *
              (x.pow_int(j2 - 2) + y.pow_int(j2 - 2)) * zeta1(j1, P, c) *
              zeta1(j2, P, c) * static_cast<long>(j2 - 1);
    }
    rhs -= t2 / 2L;
    Real t3 = Real::zero(P);
    for (int j1 = 2; j1 <= l - 4; ++j1)
        for (int j2 = 2; j1 + j2 <= l - 2; ++j2) {
            const int j3 = l - j1 - j2;  // >= 2
            t3 += (x.pow_int(j1 - 1) - y.pow_int(j1 - 1)) *
                  (x.pow_int(j2 - 1) - y.pow_int(j2 - 1)) *
                  (x.pow_int(j3 - 1) - y.pow_int(j3 - 1)) * zeta1(j1, P, c) *
                  zeta1(j2, P, c) * zeta1(j3, P, c);
        }
    rhs += t3 / 6L;
    return (lhs - rhs).abs();
}

Real r_p41_iii(int l, const Real& x, const Real& y, int P, ZetaCache& c) {
    if (l < 5)
        throw std::invalid_argument("PROP_4_1_III: need l >= 5");
    Real lhs = s_weighted(l, 4, x + y, y, P, c) + s_weighted(l, 4, y + x, x, P, c);
    Real rhs = (x.pow_int(l - 4) + y.pow_int(l - 4)) * zeta1(l, P, c) *
               static_cast<long>((l + 1) * (l * l - 7 * l + 18));
    rhs /= 24L;
    Real t2 = Real::zero(P);
    for (int j1 = 2; j1 <= l - 4; ++j1) {
        const int j2 = l - j1;  // >= 4
        t2 += (x.pow_int(j1 - 1) - y.pow_int(j1 - 1)) *
              (x.pow_int(j2 - 3) - y.pow_int(j2 - 3)) * zeta1(j1, P, c) *
              zeta1(j2, P, c) * static_cast<long>((j2 - 1) * (j2 - 2));
    }
    rhs -= t2 / 6L;
    Real t3 = Real::zero(P);
    for (int j1 = 3; j1 <= l - 3; ++j1) {
        const int j2 = l - j1;  // >= 3
        t3 += (x.pow_int(j1 - 2) + y.pow_int(j1 - 2)) *
              (x.pow_int(j2 - 2) + y.pow_int(j2 - 2)) * zeta1(j1, P, c) *
              zeta1(j2, P, c) * static_cast<long>((j1 - 1) * (j2 - 1));
    }
    rhs -= t3 / 8L;
    Real t4 = Real::zero(P);
    for (int j1 = 2; j1 <= l - 5; ++j1)
        for (int j2 = 2; j1 + j2 <= l - 3; ++j2) {
            const int j3 = l - j1 - j2;  // >= 3
            t4 += (x.pow_int(j1 - 1) - y.pow_int(j1 - 1)) *
                  (x.pow_int(j2 - 1) - y.pow_int(j2 - 1)) *
                  (x.pow_int(j3 - 2) + y.pow_int(j3 - 2)) * zeta1(j1, P, c) *
                  zeta1(j2, P, c) * zeta1(j3, P, c) * static_cast<long>(j3 - 1);
        }
    rhs += t4 / 4L;
    Real t5 = Real::zero(P);
    for (int j1 = 2; j1 <= l - 6; ++j1)
        for (int j2 = 2; j1 + j2 <= l - 4; ++j2)
            for (int j3 = 2; j1 + j2 + j3 <= l - 2; ++j3) {
                const int j4 = l - j1 - j2 - j3;  // >= 2
                t5 += (x.pow_int(j1 - 1) - y.pow_int(j1 - 1)) *
                      (x.pow_int(j2 - 1) - y.pow_int(j2 - 1)) *
                      (x.pow_int(j3 - 1) - y.pow_int(j3 - 1)) *
                      (x.pow_int(j4 - 1) - y.pow_int(j4 - 1)) * zeta1(j1, P, c) *
                      zeta1(j2, P, c) * zeta1(j3, P, c) * zeta1(j4, P, c);
            }
    rhs -= t5 / 24L;
    return (lhs - rhs).abs();
}

Real r_p42_i(int l, int P, ZetaCache& c) {
    if (l < 5)
        throw std::invalid_argument("PROP_4_2_I: need l >= 5");
    const Real two = Real::from_int(2, P);
    const Real one = Real::one(P);
    Real lhs = zeta1(l, P, c) * static_cast<long>((l + 1) * (l * l - l + 6));
    lhs /= 48L;
    Real rhs = s_weighted(l, 4, two, one, P, c);
    rhs += s_derivative(l, 3, 0, 1, two, one, P, c) / 2L;
    rhs += s_derivative(l, 2, 0, 2, two, one, P, c) / 8L;
    return (lhs - rhs).abs();
}

Real r_p42_ii(int l, int P, ZetaCache& c) {
    if (l < 5)
        throw std::invalid_argument("PROP_4_2_II: need l >= 5");
    const Real two = Real::from_int(2, P);
    const Real one = Real::one(P);
    Real lhs = zeta1(l, P, c) * static_cast<long>((l + 1) * (l * l - 7 * l + 18));
    lhs /= 24L;
    Real rhs = s_weighted(l, 4, two, one, P, c);
    Real t = Real::zero(P);
    for (int j1 = 3; j1 <= l - 3; ++j1) {
        const int j2 = l - j1;
        t += zeta1(j1, P, c) * zeta1(j2, P, c) *
             static_cast<long>((j1 - 1) * (j2 - 1));
    }
    rhs += t / 4L;
    return (lhs - rhs).abs();
}

Real r_guo_xie(int l, int P, ZetaCache& c) {
    if (l < 5)
        throw std::invalid_argument("GUO_XIE: need l >= 5");
    Real rhs = Real::zero(P);
    for_each_composition(l, 4, 2, [&](const std::vector<int>& p) {
        const long a = 1L << (p[0] - 1);
        const long w =
            a + (a - 1) * ((1L << (p[1] - 1)) + (1L << (p[1] + p[2] - 1)));
        rhs += zeta(MultiIndex(p), P, c) * w;
    });
    return (zeta1(l, P, c) * static_cast<long>(l) - rhs).abs();
}

// ---- difference-operator checks ----

struct LTerm {
    int a, b;  // x^a y^b, possibly negative
    Real c;
};

long long ff_signed(long long m, int k) {
    long long r = 1;
    for (int i = 0; i < k; ++i)
        r *= m - i;
    return r;
}

// Exact psi: x^a y^b maps to b(b-1) - ab at (1,1).
Real exact_psi(const std::vector<LTerm>& terms, int P) {
    Real acc = Real::zero(P);
    for (const auto& t : terms) {
        const long long w =
            static_cast<long long>(t.b) * (t.b - 1) -
            static_cast<long long>(t.a) * t.b;
        acc += t.c * static_cast<long>(w);
    }
    return acc;
}

// h^2 * (|f_yyyy|/12 + (|f_xxxy|+|f_xyyy|)/6) bounded coefficientwise; the
// derivative sups are taken over a radius-h box around (1,1), which for
// h <= 1e-3 and exponents |a|,|b| <= 20 costs under 1% (hence the 1.01).
Real fd_budget(const std::vector<LTerm>& terms, const Real& h, int P) {
    Real myyyy = Real::zero(P);
    Real mxxxy = Real::zero(P);
    Real mxyyy = Real::zero(P);
    for (const auto& t : terms) {
        const Real ac = t.c.abs();
        myyyy += ac * static_cast<long>(std::llabs(ff_signed(t.b, 4)));
        mxxxy += ac * static_cast<long>(std::llabs(ff_signed(t.a, 3) * t.b));
        mxyyy += ac * static_cast<long>(std::llabs(t.a * ff_signed(t.b, 3)));
    }
    Real bound = myyyy / 12L + (mxxxy + mxyyy) / 6L;
    bound *= 101L;
    bound /= 100L;
    return bound * h * h;
}

std::vector<LTerm> lterms_from_series(const TruncatedSeries2& s) {
    std::vector<LTerm> out;
    for (int a = 0; a <= s.cap(); ++a)
        for (int b = 0; a + b <= s.cap(); ++b)
            if (!s.at(a, b).is_zero())
                out.push_back(LTerm{a, b, s.at(a, b)});
    return out;
}

}  // namespace

Real psi_finite_difference(
    const std::function<Real(const Real&, const Real&)>& f, const Real& h,
    int precision) {
    const Real one = Real::one(precision);
    const Real up = one + h;
    const Real dn = one - h;
    Real fyy = f(one, up) - f(one, one) * 2L + f(one, dn);
    fyy /= h * h;
    Real fxy = f(up, up) - f(up, dn) - f(dn, up) + f(dn, dn);
    fxy /= h * h * 4L;
    return fyy - fxy;
}

Real thm2_bracket(int l, const Real& x, const Real& y, int precision) {
    if (l < 3)
        throw std::invalid_argument("thm2_bracket: need l >= 3");
    Real b = Real::zero(precision);
    for (int j = 1; j <= l - 1; ++j)
        b += y.pow_int(j - 1) * x.pow_int(l - 1 - j);
    if (l % 2 == 0) {
        const long den = 1L << (l - 1);
        b -= Real::from_ratio(2 * (den - 1), den, precision) *
             (y - x).pow_int(l - 2);
    }
    for (int k = 1; k <= l - 2; ++k) {
        Real t = y.pow_int(k - 1) * x.pow_int(l - 1 - k);
        t *= static_cast<long>(binomial(l - 2, k)) * pow_m1(k);
        b -= t;
    }
    for (int k = 0; k <= l - 3; ++k) {
        Real t = y.pow_int(k + 1) * x.pow_int(l - 3 - k);
        t *= static_cast<long>(binomial(l - 2, k)) * pow_m1(l - k);
        b -= t;
    }
    return b;
}

Lemma41Check check_lemma_4_1(int roman, int l, int part, int n, int precision,
                             ZetaCache& cache, double h) {
    if (roman != 1 && roman != 2)
        throw std::invalid_argument("check_lemma_4_1: roman must be 1 or 2");
    if (l < 5)
        throw std::invalid_argument("check_lemma_4_1: need l >= 5");
    if (!(h >= 1e-10) || h > 1e-4)
        throw std::invalid_argument("check_lemma_4_1: need h in [1e-10, 1e-4]");
    const int P = precision;
    char hbuf[40];
    std::snprintf(hbuf, sizeof hbuf, "%.17g", h);
    const Real hr = Real::from_str(hbuf, P);
    const Real one = Real::one(P);
    const Real zero = Real::zero(P);
    const Real two = Real::from_int(2, P);

    std::vector<LTerm> terms;
    std::function<Real(const Real&, const Real&)> f;
    Real rhs = Real::zero(P);

    if (roman == 1) {
        int m = 0, e = 0, sgn = 1;
        switch (part) {
        case 1:
            if (n < 3 || n > l - 1)
                throw std::invalid_argument(
                    "check_lemma_4_1: part 1 needs 3 <= n <= l-1");
            m = n;
            e = n;
            sgn = pow_m1(n);
            break;
        case 2:
            m = 4;
            e = 2;
            sgn = 1;
            rhs = s_weighted(l, 4, two, one, P, cache) * 8L;
            break;
        case 3:
            m = 3;
            e = 1;
            sgn = -1;
            rhs = s_derivative(l, 3, 0, 1, two, one, P, cache) * 4L;
            break;
        case 4:
            m = 2;
            e = 0;
            sgn = 1;
            rhs = s_derivative(l, 2, 0, 2, two, one, P, cache);
            break;
        default:
            throw std::invalid_argument("check_lemma_4_1: part must be 1..4");
        }
        f = [l, m, e, sgn, P, &cache](const Real& xv, const Real& yv) {
            Real pair = s_weighted(l, m, xv + yv, yv, P, cache);
            Real second = s_weighted(l, m, yv + xv, xv, P, cache);
            if (sgn > 0)
                pair += second;
            else
                pair -= second;
            return (yv - xv).pow_int(e) * pair;
        };
        const int cap = l;
        TruncatedSeries2 S(cap, P);
        for_each_composition(l, m, 2, [&](const std::vector<int>& comp) {
            const int ey = l - comp[0] - (m - 1);
            TruncatedSeries2 tail = pow_linear_form(zero, one, ey, cap);
            const TruncatedSeries2 tailx = pow_linear_form(one, zero, ey, cap);
            if (sgn > 0)
                tail += tailx;
            else
                tail -= tailx;
            TruncatedSeries2 t = pow_linear_form(one, one, comp[0] - 1, cap) * tail;
            t.scale(zeta(MultiIndex(comp), P, cache));
            S += t;
        });
        terms = lterms_from_series(pow_linear_form(-one, one, e, cap) * S);
    } else {
        if (part == 1) {
            for (int j = 0; j <= l; ++j)
                terms.push_back(LTerm{l - 1 - j, j - 1, one});
            rhs = Real::from_ratio(
                static_cast<long>(l + 1) * (l * l - l + 6), 6, P);
        } else if (part == 2) {
            const long den = 1L << (l - 1);
            const Real cl =
                Real::from_ratio(l % 2 == 0 ? 2 * (den - 1) : 0, den, P);
            for (int k = 0; k <= l - 2; ++k) {
                const long base =
                    static_cast<long>(binomial(l - 2, k)) * pow_m1(l - 2 - k);
                if (!cl.is_zero())
                    terms.push_back(LTerm{l - 2 - k, k, cl * base});
                terms.push_back(
                    LTerm{l - 1 - k, k - 1, Real::from_int(base * pow_m1(l), P)});
                terms.push_back(LTerm{l - 3 - k, k + 1, Real::from_int(base, P)});
            }
        } else {
            throw std::invalid_argument("check_lemma_4_1: part must be 1..2");
        }
        const std::vector<LTerm> tcopy = terms;
        f = [tcopy, P](const Real& xv, const Real& yv) {
            Real s = Real::zero(P);
            for (const auto& t : tcopy)
                s += t.c * xv.pow_int(t.a) * yv.pow_int(t.b);
            return s;
        };
    }

    const Real psi_fd = psi_finite_difference(f, hr, P);
    Real fd_tol = fd_budget(terms, hr, P);
    const Real floor10 = Real::pow10(-10, P);
    if (fd_tol < floor10)
        fd_tol = floor10;
    return Lemma41Check{(psi_fd - rhs).abs(), std::move(fd_tol),
                        (exact_psi(terms, P) - rhs).abs()};
}

// ---- id table, dispatch, suite ----

const std::vector<IdentityId>& all_identity_ids() {
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> v;
        v.reserve(kIdentityCount);
        for (int i = 0; i < kIdentityCount; ++i)
            v.push_back(static_cast<IdentityId>(i));
        return v;
    }();
    return ids;
}

std::string_view id_name(IdentityId id) {
    const auto i = static_cast<std::size_t>(id);
    if (i >= kIdNames.size())
        throw std::invalid_argument("id_name: bad identity id");
    return kIdNames[i];
}

std::optional<IdentityId> id_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kIdNames.size(); ++i)
        if (kIdNames[i] == name)
            return static_cast<IdentityId>(i);
    return std::nullopt;
}

void validate_config(const RunConfig& cfg) {
    if (cfg.precision < 30 || cfg.precision > 1000)
        throw std::invalid_argument("config: precision must be in [30, 1000]");
    if (cfg.weight_cap < 5 || cfg.weight_cap > 14)
        throw std::invalid_argument("config: weight cap must be in [5, 14]");
    if (cfg.samples < 1 || cfg.samples > 64)
        throw std::invalid_argument("config: samples must be in [1, 64]");
    if (!(cfg.z_max > 0.0) || cfg.z_max > 0.75)
        throw std::invalid_argument("config: z_max must be in (0, 0.75]");
    if (cfg.threads < 0)
        throw std::invalid_argument("config: threads must be >= 0");
}

namespace {

std::pair<Real, Real> evaluate_instance(IdentityId id, const Params& p,
                                        const RunConfig& cfg,
                                        ZetaCache& cache) {
    const int P = cfg.precision;
    Real tol = Real::pow10(-(P - 10), P);
    switch (id) {
    case IdentityId::SUM_FORMULA:
        return {r_sum_formula(need_int(p.l, "l"), need_int(p.n, "n"), P, cache),
                std::move(tol)};
    case IdentityId::EULER_SUM:
        return {r_euler_sum(need_int(p.l, "l"), P, cache), std::move(tol)};
    case IdentityId::WEIGHTED_EULER:
        return {r_weighted_euler(need_int(p.l, "l"), P, cache), std::move(tol)};
    case IdentityId::GKZ_PARAM:
        return {r_gkz(need_int(p.l, "l"), need_point(p.x, "x", P),
                      need_point(p.y, "y", P), P, cache),
                std::move(tol)};
    case IdentityId::HARMONIC_DOUBLE:
        return {r_harmonic(need_int(p.l, "l"), need_int(p.n, "n"), P, cache),
                std::move(tol)};
    case IdentityId::DUALITY:
        if (!p.index)
            throw std::invalid_argument("missing parameter index");
        return {r_duality(*p.index, P, cache), std::move(tol)};
    case IdentityId::LEMMA_2_1:
        return {r_lemma_2_1(need_int(p.l, "l"), need_int(p.n, "n"),
                            need_point(p.x, "x", P), need_point(p.y, "y", P),
                            need_point(p.z, "z", P), P),
                std::move(tol)};
    case IdentityId::PROP_2_1:
        return {r_prop_2_1(need_int(p.l, "l"), need_int(p.n, "n"),
                           need_point(p.x, "x", P), need_point(p.y, "y", P), P,
                           cache),
                std::move(tol)};
    case IdentityId::AK_COROLLARY:
        return {r_ak(need_int(p.l, "l"), need_int(p.n, "n"), need_int(p.r, "r"),
                     P, cache),
                std::move(tol)};
    case IdentityId::THM_1_SERIES:
        return {r_thm1(need_int(p.D, "D"), need_point(p.x, "x", P),
                       need_point(p.y, "y", P), P, cache),
                std::move(tol)};
    case IdentityId::THM_2:
        return {r_thm2(need_int(p.l, "l"), need_point(p.x, "x", P),
                       need_point(p.y, "y", P), P, cache),
                std::move(tol)};
    case IdentityId::FUNC_EQ_3_2:
        return {r_func_eq(need_int(p.D, "D"), need_point(p.x, "x", P),
                          need_point(p.y, "y", P), P, cache),
                std::move(tol)};
    case IdentityId::PROP_3_1_SERIES:
        return {r_prop_3_1(need_int(p.D, "D"), P, cache), std::move(tol)};
    case IdentityId::PROP_4_1_I:
        return {r_p41_i(need_int(p.l, "l"), need_point(p.x, "x", P),
                        need_point(p.y, "y", P), P, cache),
                std::move(tol)};
    case IdentityId::PROP_4_1_II:
        return {r_p41_ii(need_int(p.l, "l"), need_point(p.x, "x", P),
                         need_point(p.y, "y", P), P, cache),
                std::move(tol)};
    case IdentityId::PROP_4_1_III:
        return {r_p41_iii(need_int(p.l, "l"), need_point(p.x, "x", P),
                          need_point(p.y, "y", P), P, cache),
                std::move(tol)};
    case IdentityId::LEMMA_4_1_I: {
        const int part = need_int(p.part, "part");
        const int nn = part == 1 ? need_int(p.n, "n") : 0;
        auto chk = check_lemma_4_1(1, need_int(p.l, "l"), part, nn, P, cache);
        return {std::move(chk.fd_residual), std::move(chk.fd_tolerance)};
    }
    case IdentityId::LEMMA_4_1_II: {
        auto chk = check_lemma_4_1(2, need_int(p.l, "l"),
                                   need_int(p.part, "part"), 0, P, cache);
        return {std::move(chk.fd_residual), std::move(chk.fd_tolerance)};
    }
    case IdentityId::PROP_4_2_I:
        return {r_p42_i(need_int(p.l, "l"), P, cache), std::move(tol)};
    case IdentityId::PROP_4_2_II:
        return {r_p42_ii(need_int(p.l, "l"), P, cache), std::move(tol)};
    case IdentityId::GUO_XIE_D4:
        return {r_guo_xie(need_int(p.l, "l"), P, cache), std::move(tol)};
    }
    throw std::invalid_argument("unknown identity id");
}

std::string dyadic_str(int num) {
    if (num == 0)
        return "0";
    const long q = std::labs(static_cast<long>(num)) * 15625L;  // / 10^6
    std::string s = num < 0 ? "-" : "";
    s += std::to_string(q / 1000000);
    const long fp = q % 1000000;
    if (fp != 0) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "%06ld", fp);
        std::string frac(buf);
        while (!frac.empty() && frac.back() == '0')
            frac.pop_back();
        s += ".";
        s += frac;
    }
    return s;
}

struct SampleTuple {
    int xk, yk, zk;  // numerators over 64
};

std::vector<SampleTuple> make_samples(const RunConfig& cfg, int ordinal,
                                      bool with_z) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed & 0xffffffffULL),
                      static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(ordinal)};
    std::mt19937_64 rng(seq);
    const int zk_max = std::min(44, static_cast<int>(cfg.z_max * 64));
    std::vector<SampleTuple> out;
    out.reserve(static_cast<std::size_t>(cfg.samples));
    for (int s = 0; s < cfg.samples; ++s) {
        SampleTuple t{};
        t.xk = static_cast<int>(rng() % 257) - 128;
        t.yk = static_cast<int>(rng() % 257) - 128;
        t.zk = with_z
                   ? static_cast<int>(rng() % static_cast<unsigned>(2 * zk_max + 1)) - zk_max
                   : 0;
        out.push_back(t);
    }
    return out;
}

std::vector<std::pair<IdentityId, Params>> enumerate_instances(
    const std::vector<IdentityId>& filter, const RunConfig& cfg) {
    const auto wanted = [&](IdentityId id) {
        return filter.empty() ||
               std::find(filter.begin(), filter.end(), id) != filter.end();
    };
    const int L = cfg.weight_cap;
    const int D = std::min(L, 8);
    std::vector<std::pair<IdentityId, Params>> out;
    const auto add = [&](IdentityId id, Params p) {
        out.emplace_back(id, std::move(p));
    };
    for (IdentityId id : all_identity_ids()) {
        if (!wanted(id))
            continue;
        const int ord = static_cast<int>(id);
        switch (id) {
        case IdentityId::SUM_FORMULA:
            for (int l = 2; l <= L; ++l)
                for (int n = 1; n <= l - 1; ++n) {
                    Params p;
                    p.l = l;
                    p.n = n;
                    add(id, std::move(p));
                }
            break;
        case IdentityId::EULER_SUM:
        case IdentityId::WEIGHTED_EULER:
            for (int l = 3; l <= L; ++l) {
                Params p;
                p.l = l;
                add(id, std::move(p));
            }
            break;
        case IdentityId::GKZ_PARAM:
        case IdentityId::THM_2:
        case IdentityId::PROP_4_1_I:
        case IdentityId::PROP_4_1_II:
        case IdentityId::PROP_4_1_III: {
            int lmin = 3;
            if (id == IdentityId::PROP_4_1_II)
                lmin = 4;
            if (id == IdentityId::PROP_4_1_III)
                lmin = 5;
            const auto ts = make_samples(cfg, ord, false);
            for (int l = lmin; l <= L; ++l)
                for (const auto& t : ts) {
                    Params p;
                    p.l = l;
                    p.x = dyadic_str(t.xk);
                    p.y = dyadic_str(t.yk);
                    add(id, std::move(p));
                }
            break;
        }
        case IdentityId::HARMONIC_DOUBLE: {
            const int hi = std::min(6, L - 2);
            for (int m = 2; m <= hi; ++m)
                for (int n = 2; n <= hi; ++n) {
                    if (m + n > L)
                        continue;
                    Params p;
                    p.l = m;
                    p.n = n;
                    add(id, std::move(p));
                }
            break;
        }
        case IdentityId::DUALITY:
            for (const MultiIndex& idx : admissible_indices(L)) {
                Params p;
                p.index = idx;
                add(id, std::move(p));
            }
            break;
        case IdentityId::LEMMA_2_1: {
            const auto ts = make_samples(cfg, ord, true);
            for (int l = 1; l <= L; ++l)
                for (int n = 1; n <= l; ++n)
                    for (const auto& t : ts) {
                        Params p;
                        p.l = l;
                        p.n = n;
                        p.x = dyadic_str(t.xk);
                        p.y = dyadic_str(t.yk);
                        p.z = dyadic_str(t.zk);
                        add(id, std::move(p));
                    }
            break;
        }
        case IdentityId::PROP_2_1: {
            const auto ts = make_samples(cfg, ord, false);
            for (int l = 2; l <= L; ++l)
                for (int n = 1; n <= l - 1; ++n)
                    for (const auto& t : ts) {
                        Params p;
                        p.l = l;
                        p.n = n;
                        p.x = dyadic_str(t.xk);
                        p.y = dyadic_str(t.yk);
                        add(id, std::move(p));
                    }
            break;
        }
        case IdentityId::AK_COROLLARY:
            for (int l = 3; l <= L; ++l)
                for (int n = 1; n <= l - 2; ++n)
                    for (int r = 1; r <= l - n - 1; ++r) {
                        Params p;
                        p.l = l;
                        p.n = n;
                        p.r = r;
                        add(id, std::move(p));
                    }
            break;
        case IdentityId::THM_1_SERIES:
        case IdentityId::FUNC_EQ_3_2: {
            const auto ts = make_samples(cfg, ord, false);
            for (const auto& t : ts) {
                Params p;
                p.D = D;
                p.x = dyadic_str(t.xk);
                p.y = dyadic_str(t.yk);
                add(id, std::move(p));
            }
            break;
        }
        case IdentityId::PROP_3_1_SERIES: {
            Params p;
            p.D = D;
            add(id, std::move(p));
            break;
        }
        case IdentityId::LEMMA_4_1_I:
            for (int l = 5; l <= L; ++l) {
                for (int n = 3; n <= l - 1; ++n) {
                    Params p;
                    p.l = l;
                    p.part = 1;
                    p.n = n;
                    add(id, std::move(p));
                }
                for (int part = 2; part <= 4; ++part) {
                    Params p;
                    p.l = l;
                    p.part = part;
                    add(id, std::move(p));
                }
            }
            break;
        case IdentityId::LEMMA_4_1_II:
            for (int l = 5; l <= L; ++l)
                for (int part = 1; part <= 2; ++part) {
                    Params p;
                    p.l = l;
                    p.part = part;
                    add(id, std::move(p));
                }
            break;
        case IdentityId::PROP_4_2_I:
        case IdentityId::PROP_4_2_II:
        case IdentityId::GUO_XIE_D4:
            for (int l = 5; l <= L; ++l) {
                Params p;
                p.l = l;
                add(id, std::move(p));
            }
            break;
        }
    }
    return out;
}

}  // namespace

IdentityReport check_identity(IdentityId id, const Params& p,
                              const RunConfig& cfg, ZetaCache& cache) {
    validate_config(cfg);
    const auto t0 = std::chrono::steady_clock::now();
    auto [residual, tolerance] = evaluate_instance(id, p, cfg, cache);
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const bool ok = !residual.is_nan() && residual < tolerance;
    return IdentityReport{id,        p,  std::move(residual),
                          std::move(tolerance), ok, ms};
}

std::vector<IdentityReport> run_suite(const std::vector<IdentityId>& ids,
                                      const RunConfig& cfg, ZetaCache& cache) {
    validate_config(cfg);
    const auto inst = enumerate_instances(ids, cfg);
    std::vector<std::optional<IdentityReport>> slots(inst.size());
    std::exception_ptr first_error = nullptr;
#ifdef _OPENMP
    const int nt = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(inst.size());
         ++i) {
        try {
            slots[static_cast<std::size_t>(i)] = check_identity(
                inst[static_cast<std::size_t>(i)].first,
                inst[static_cast<std::size_t>(i)].second, cfg, cache);
        } catch (...) {
#pragma omp critical
            {
                if (!first_error)
                    first_error = std::current_exception();
            }
        }
    }
#else
    for (std::size_t i = 0; i < inst.size(); ++i) {
        try {
            slots[i] = check_identity(inst[i].first, inst[i].second, cfg, cache);
        } catch (...) {
            if (!first_error)
                first_error = std::current_exception();
        }
    }
#endif
    if (first_error)
        std::rethrow_exception(first_error);
    std::vector<IdentityReport> out;
    out.reserve(slots.size());
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

}  // namespace mzv
