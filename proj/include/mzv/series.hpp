#pragma once

#include <vector>

#include "mzv/real.hpp"

namespace mzv {

// Formal linear form a*X + b*Y, the argument shape taken by the
// generating-function plumbing.
struct LinearForm {
    Real a;
    Real b;
};

// Univariate power series truncated at total degree cap.
class TruncatedSeries1 {
public:
    TruncatedSeries1(int cap, int digits);

    int cap() const { return cap_; }
    int digits() const { return digits_; }

    Real& at(int k);
    const Real& at(int k) const;

    TruncatedSeries1& operator+=(const TruncatedSeries1& o);
    TruncatedSeries1& operator-=(const TruncatedSeries1& o);
    friend TruncatedSeries1 operator+(TruncatedSeries1 a, const TruncatedSeries1& b) { return a += b; }
    friend TruncatedSeries1 operator-(TruncatedSeries1 a, const TruncatedSeries1& b) { return a -= b; }
    friend TruncatedSeries1 operator*(const TruncatedSeries1& a, const TruncatedSeries1& b);

private:
    void match(const TruncatedSeries1& o) const;

    int cap_;
    int digits_;
    std::vector<Real> c_;
};

// Bivariate power series in X, Y truncated at total degree cap; dense
// triangular storage. This is where all the series-level identity
// checking happens, so the cap stays small (<= 14) and O(D^4)
// multiplication is perfectly fine.
class TruncatedSeries2 {
public:
    TruncatedSeries2(int cap, int digits);

    int cap() const { return cap_; }
    int digits() const { return digits_; }

    Real& at(int dx, int dy);
    const Real& at(int dx, int dy) const;

    TruncatedSeries2& operator+=(const TruncatedSeries2& o);
    TruncatedSeries2& operator-=(const TruncatedSeries2& o);
    friend TruncatedSeries2 operator+(TruncatedSeries2 a, const TruncatedSeries2& b) { return a += b; }
    friend TruncatedSeries2 operator-(TruncatedSeries2 a, const TruncatedSeries2& b) { return a -= b; }
    friend TruncatedSeries2 operator*(const TruncatedSeries2& a, const TruncatedSeries2& b);

    TruncatedSeries2& scale(const Real& f);
    TruncatedSeries2 operator-() const;

    // max |coefficient|, the residual norm for series identities
    Real max_abs_coeff() const;

private:
    void match(const TruncatedSeries2& o) const;
    size_t idx(int dx, int dy) const;

    int cap_;
    int digits_;
    std::vector<Real> c_;
};

// exp of a series with zero constant term (throws otherwise), computed
// as sum_{k<=cap} s^k/k!; each power raises the minimum total degree, so
// the sum is exact under truncation.
TruncatedSeries2 series_exp(const TruncatedSeries2& s);

// (a*X + b*Y)^m under cap; the zero series when m > cap.
TruncatedSeries2 pow_linear_form(const Real& a, const Real& b, int m, int cap);

TruncatedSeries2 pow_linear_form(const LinearForm& f, int m, int cap);

// Substitutes the linear form for the variable of a univariate series.
TruncatedSeries2 compose_at_linear(const TruncatedSeries1& s, const LinearForm& f, int cap);

}  // namespace mzv
