#pragma once

#include "mzv/multi_index.hpp"
#include "mzv/real.hpp"
#include "mzv/series.hpp"
#include "mzv/zeta.hpp"

namespace mzv {

// S_l^n(x,y) = sum of x^(l1-1) y^(l-l1-(n-1)) zeta(l1,...,ln) over the
// compositions of l into n parts with l1 >= 2 and the rest >= 1.
// An empty composition set gives 0.
Real s_weighted(int l, int n, const Real& x, const Real& y, int precision,
                ZetaCache& cache);

// The depth-two sum T_l(x,y) = S_l^2(x,y), l >= 3.
Real t_double(int l, const Real& x, const Real& y, int precision,
              ZetaCache& cache);

// Companion sum with l1 >= 1 allowed and Li_(l1,...,ln)(z) in place of
// zeta, so it is finite for |z| < 1; this implementation wants |z| <= 0.7.
Real s_hat_polylog(int l, int n, const Real& x, const Real& y, const Real& z,
                   int precision);

// Z_{l,n,r} = sum over compositions (l1,...,ln) of l-r, all parts >= 1, of
// binom(l1+r-1, r) zeta(l1+r, l2,...,ln), reading the divergent
// zeta(1,...) as 0. These are the coefficients of S_l^n in the basis
// x^r y^(l-n-r): S_l^n(x,y) = sum_r x^r y^(l-n-r) Z_{l,n,r}.
Real z_coeff(int l, int n, int r, int precision, ZetaCache& cache);

// Termwise partial derivative d^p/dx^p d^q/dy^q of S_l^n(x,y).
Real s_derivative(int l, int n, int p, int q, const Real& x, const Real& y,
                  int precision, ZetaCache& cache);

// Two-variable generating function pieces, truncated at total degree cap
// in the formal variables (X, Y).
//
// The lhs series carries, at X^a Y^n with a, n >= 1,
//   S_{a+n}^n(x+y,y) + (-1)^n S_{a+n}^n(y+x,x) - ((-1)^n x^a + y^a) zeta(a+n),
// and the rhs series is 1 - exp(A) with
//   A = sum_{m>=2} (zeta(m)/m) [ (x^m+y^m) X^m + (1+(-1)^m) Y^m
//                                - (xX+Y)^m - (yX-Y)^m ].
TruncatedSeries2 thm1_lhs_series(const Real& x, const Real& y, int cap,
                                 int precision, ZetaCache& cache);
TruncatedSeries2 thm1_rhs_series(const Real& x, const Real& y, int cap,
                                 int precision, ZetaCache& cache);

// G(w1,w2,w3) = sum_{l > n >= 1, l <= cap} H_{l,n}(w1,w2) w3^n where
// H_{l,n}(u,v) collects zeta(l1,...,ln) u^(l1-1) v^(l-l1-(n-1)) over the
// S_l^n composition set; every monomial lands in total degree l.
TruncatedSeries2 g_series(const LinearForm& w1, const LinearForm& w2,
                          const LinearForm& w3, int cap, int precision,
                          ZetaCache& cache);

// pi*u/sin(pi*u) on the linear form u = f, through the even-zeta expansion
//   1 + 2 sum_{even m >= 2} ((2^(m-1)-1)/2^(m-1)) zeta(m) u^m.
TruncatedSeries2 sin_expansion_series(const LinearForm& f, int cap,
                                      int precision, ZetaCache& cache);

}  // namespace mzv
