#include "mzv/weighted_sums.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mzv/polylog.hpp"

namespace mzv {

Real s_weighted(int l, int n, const Real& x, const Real& y, int precision,
                ZetaCache& cache) {
    if (l < 1 || n < 1)
        throw std::invalid_argument("s_weighted: l and n must be >= 1");
    Real acc = Real::zero(precision);
    for_each_composition(l, n, 2, [&](const std::vector<int>& parts) {
        const int ex = parts[0] - 1;
        const int ey = l - parts[0] - (n - 1);
        Real term = zeta(MultiIndex(parts), precision, cache);
        term *= x.pow_int(ex);
        term *= y.pow_int(ey);
        acc += term;
    });
    return acc;
}

Real t_double(int l, const Real& x, const Real& y, int precision,
              ZetaCache& cache) {
    if (l < 3)
        throw std::invalid_argument("t_double: l must be >= 3");
    return s_weighted(l, 2, x, y, precision, cache);
}

Real s_hat_polylog(int l, int n, const Real& x, const Real& y, const Real& z,
                   int precision) {
    if (l < 1 || n < 1)
        throw std::invalid_argument("s_hat_polylog: l and n must be >= 1");
    if (std::fabs(z.to_double()) > 0.7 + 1e-12)
        throw std::domain_error("s_hat_polylog: |z| must be <= 0.7");
    Real acc = Real::zero(precision);
    for_each_composition(l, n, 1, [&](const std::vector<int>& parts) {
        const int ex = parts[0] - 1;
        const int ey = l - parts[0] - (n - 1);
        Real term = li_index(MultiIndex(parts), z, precision);
        term *= x.pow_int(ex);
        term *= y.pow_int(ey);
        acc += term;
    });
    return acc;
}

Real z_coeff(int l, int n, int r, int precision, ZetaCache& cache) {
    if (n < 1 || r < 0)
        throw std::invalid_argument("z_coeff: need n >= 1 and r >= 0");
    Real acc = Real::zero(precision);
    for_each_composition(l - r, n, 1, [&](const std::vector<int>& parts) {
        const int first = parts[0] + r;
        if (first < 2)
            return;  // zeta(1,...) term reads as 0
        std::vector<int> shifted = parts;
        shifted[0] = first;
        Real term = zeta(MultiIndex(shifted), precision, cache);
        term *= static_cast<long>(binomial(first - 1, r));
        acc += term;
    });
    return acc;
}

Real s_derivative(int l, int n, int p, int q, const Real& x, const Real& y,
                  int precision, ZetaCache& cache) {
    if (l < 1 || n < 1 || p < 0 || q < 0)
        throw std::invalid_argument("s_derivative: bad parameters");
    Real acc = Real::zero(precision);
    for_each_composition(l, n, 2, [&](const std::vector<int>& parts) {
        const int ex = parts[0] - 1;
        const int ey = l - parts[0] - (n - 1);
        const long long fx = falling_factorial(ex, p);
        const long long fy = falling_factorial(ey, q);
        if (fx == 0 || fy == 0)
            return;  // monomial differentiated away; skip before 0^negative
        Real term = zeta(MultiIndex(parts), precision, cache);
        term *= static_cast<long>(fx * fy);
        term *= x.pow_int(ex - p);
        term *= y.pow_int(ey - q);
        acc += term;
    });
    return acc;
}

TruncatedSeries2 thm1_lhs_series(const Real& x, const Real& y, int cap,
                                 int precision, ZetaCache& cache) {
    TruncatedSeries2 out(cap, precision);
    const Real xy = x + y;
    for (int a = 1; a < cap; ++a) {
        for (int n = 1; a + n <= cap; ++n) {
            const int l = a + n;
            const int sgn = (n % 2 == 0) ? 1 : -1;
            Real c = s_weighted(l, n, xy, y, precision, cache);
            Real second = s_weighted(l, n, xy, x, precision, cache);
            if (sgn < 0)
                c -= second;
            else
                c += second;
            Real zl = zeta(MultiIndex({l}), precision, cache);
            Real corr = x.pow_int(a) * sgn + y.pow_int(a);
            c -= corr * zl;
            out.at(a, n) = c;
        }
    }
    return out;
}

TruncatedSeries2 thm1_rhs_series(const Real& x, const Real& y, int cap,
                                 int precision, ZetaCache& cache) {
    const Real one = Real::one(precision);
    const Real zr = Real::zero(precision);
    TruncatedSeries2 A(cap, precision);
    for (int m = 2; m <= cap; ++m) {
        Real c = zeta(MultiIndex({m}), precision, cache);
        c /= m;

        TruncatedSeries2 term = pow_linear_form(one, zr, m, cap);  // X^m
        term.scale((x.pow_int(m) + y.pow_int(m)) * c);
        A += term;

        if (m % 2 == 0) {
            term = pow_linear_form(zr, one, m, cap);  // Y^m
            term.scale(c * 2L);
            A += term;
        }

        term = pow_linear_form(x, one, m, cap);  // (xX + Y)^m
        term.scale(c);
        A -= term;

        term = pow_linear_form(y, -one, m, cap);  // (yX - Y)^m
        term.scale(c);
        A -= term;
    }
    TruncatedSeries2 r = -series_exp(A);
    r.at(0, 0) += one;
    return r;
}

TruncatedSeries2 g_series(const LinearForm& w1, const LinearForm& w2,
                          const LinearForm& w3, int cap, int precision,
                          ZetaCache& cache) {
    TruncatedSeries2 G(cap, precision);
    for (int l = 2; l <= cap; ++l) {
        for (int n = 1; n < l; ++n) {
            const TruncatedSeries2 w3n = pow_linear_form(w3, n, cap);
            for (int l1 = 2; l1 <= l - (n - 1); ++l1) {
                // total zeta weight attached to this leading part
                Real zsum = Real::zero(precision);
                if (n == 1) {
                    if (l1 != l)
                        continue;
                    zsum = zeta(MultiIndex({l}), precision, cache);
                } else {
                    for_each_composition(
                        l - l1, n - 1, 1, [&](const std::vector<int>& rest) {
                            std::vector<int> full;
                            full.reserve(static_cast<std::size_t>(n));
                            full.push_back(l1);
                            full.insert(full.end(), rest.begin(), rest.end());
                            zsum += zeta(MultiIndex(full), precision, cache);
                        });
                }
                TruncatedSeries2 t = pow_linear_form(w1, l1 - 1, cap) *
                                     pow_linear_form(w2, l - l1 - (n - 1), cap);
                t.scale(zsum);
                G += t * w3n;
            }
        }
    }
    return G;
}

TruncatedSeries2 sin_expansion_series(const LinearForm& f, int cap,
                                      int precision, ZetaCache& cache) {
    TruncatedSeries1 s(cap, precision);
    s.at(0) = Real::one(precision);
    for (int m = 2; m <= cap; m += 2) {
        const long half_pow = 1L << (m - 1);
        Real c = zeta(MultiIndex({m}), precision, cache);
        c *= 2L * (half_pow - 1);
        c /= half_pow;
        s.at(m) = c;
    }
    return compose_at_linear(s, f, cap);
}

}  // namespace mzv
