#include "mzv/series.hpp"

#include <stdexcept>

namespace mzv {

static void check_cap(int cap) {
    if (cap < 0) throw std::invalid_argument("series: negative degree cap");
}

TruncatedSeries1::TruncatedSeries1(int cap, int digits) : cap_(cap), digits_(digits) {
    check_cap(cap);
    c_.assign(static_cast<size_t>(cap) + 1, Real::zero(digits));
}

Real& TruncatedSeries1::at(int k) {
    if (k < 0 || k > cap_) throw std::out_of_range("TruncatedSeries1::at");
    return c_[static_cast<size_t>(k)];
}

const Real& TruncatedSeries1::at(int k) const {
    return const_cast<TruncatedSeries1*>(this)->at(k);
}

void TruncatedSeries1::match(const TruncatedSeries1& o) const {
    if (cap_ != o.cap_ || digits_ != o.digits_)
        throw std::invalid_argument("TruncatedSeries1: cap or precision mismatch");
}

TruncatedSeries1& TruncatedSeries1::operator+=(const TruncatedSeries1& o) {
    match(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

TruncatedSeries1& TruncatedSeries1::operator-=(const TruncatedSeries1& o) {
    match(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

TruncatedSeries1 operator*(const TruncatedSeries1& a, const TruncatedSeries1& b) {
    a.match(b);
    TruncatedSeries1 r(a.cap_, a.digits_);
    for (int i = 0; i <= a.cap_; ++i) {
        if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= a.cap_; ++j)
            r.c_[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
    }
    return r;
}

TruncatedSeries2::TruncatedSeries2(int cap, int digits) : cap_(cap), digits_(digits) {
    check_cap(cap);
    size_t n = static_cast<size_t>(cap + 1) * static_cast<size_t>(cap + 2) / 2;
    c_.assign(n, Real::zero(digits));
}

size_t TruncatedSeries2::idx(int dx, int dy) const {
    // row dx holds degrees (dx, 0..cap-dx)
    size_t row = static_cast<size_t>(dx) * (static_cast<size_t>(cap_) + 1) -
                 static_cast<size_t>(dx) * (static_cast<size_t>(dx) - 1) / 2;
    return row + static_cast<size_t>(dy);
}

Real& TruncatedSeries2::at(int dx, int dy) {
    if (dx < 0 || dy < 0 || dx + dy > cap_) throw std::out_of_range("TruncatedSeries2::at");
    return c_[idx(dx, dy)];
}

const Real& TruncatedSeries2::at(int dx, int dy) const {
    return const_cast<TruncatedSeries2*>(this)->at(dx, dy);
}

void TruncatedSeries2::match(const TruncatedSeries2& o) const {
    if (cap_ != o.cap_ || digits_ != o.digits_)
        throw std::invalid_argument("TruncatedSeries2: cap or precision mismatch");
}

TruncatedSeries2& TruncatedSeries2::operator+=(const TruncatedSeries2& o) {
    match(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

TruncatedSeries2& TruncatedSeries2::operator-=(const TruncatedSeries2& o) {
    match(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

TruncatedSeries2 operator*(const TruncatedSeries2& a, const TruncatedSeries2& b) {
    a.match(b);
    TruncatedSeries2 r(a.cap_, a.digits_);
    for (int ax = 0; ax <= a.cap_; ++ax)
        for (int ay = 0; ax + ay <= a.cap_; ++ay) {
            const Real& ca = a.c_[a.idx(ax, ay)];
            if (ca.is_zero()) continue;
            for (int bx = 0; ax + bx <= a.cap_; ++bx)
                for (int by = 0; ax + ay + bx + by <= a.cap_; ++by) {
                    const Real& cb = b.c_[b.idx(bx, by)];
                    if (cb.is_zero()) continue;
                    r.c_[r.idx(ax + bx, ay + by)] += ca * cb;
                }
        }
    return r;
}

TruncatedSeries2& TruncatedSeries2::scale(const Real& f) {
    for (auto& x : c_) x *= f;
    return *this;
}

TruncatedSeries2 TruncatedSeries2::operator-() const {
    TruncatedSeries2 r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Real TruncatedSeries2::max_abs_coeff() const {
    Real m = Real::zero(digits_);
    for (const auto& x : c_) {
        Real a = x.abs();
        if (a > m) m = a;
    }
    return m;
}

TruncatedSeries2 series_exp(const TruncatedSeries2& s) {
    if (!s.at(0, 0).is_zero())
        throw std::invalid_argument("series_exp: nonzero constant term");
    TruncatedSeries2 acc(s.cap(), s.digits());
    acc.at(0, 0) = Real::one(s.digits());
    TruncatedSeries2 pw = acc;  // s^0
    long fact = 1;
    for (int k = 1; k <= s.cap(); ++k) {
        pw = pw * s;
        fact *= k;
        TruncatedSeries2 term = pw;
        term.scale(Real::from_ratio(1, fact, s.digits()));
        acc += term;
    }
    return acc;
}

TruncatedSeries2 pow_linear_form(const Real& a, const Real& b, int m, int cap) {
    if (m < 0) throw std::invalid_argument("pow_linear_form: negative exponent");
    int digits = a.digits();
    TruncatedSeries2 r(cap, digits);
    if (m > cap) return r;  // truncated away entirely
    // binomial expansion, C(m,i) built incrementally
    Real binom = Real::one(digits);
    for (int i = 0; i <= m; ++i) {
        r.at(m - i, i) = binom * a.pow_int(m - i) * b.pow_int(i);
        binom *= (m - i);
        binom /= (i + 1);
    }
    return r;
}

TruncatedSeries2 pow_linear_form(const LinearForm& f, int m, int cap) {
    return pow_linear_form(f.a, f.b, m, cap);
}

TruncatedSeries2 compose_at_linear(const TruncatedSeries1& s, const LinearForm& f, int cap) {
    TruncatedSeries2 r(cap, s.digits());
    for (int k = 0; k <= s.cap() && k <= cap; ++k) {
        if (s.at(k).is_zero()) continue;
        TruncatedSeries2 p = pow_linear_form(f, k, cap);
        p.scale(s.at(k));
        r += p;
    }
    return r;
}

}  // namespace mzv
