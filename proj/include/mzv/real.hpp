#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace mzv {

// Arbitrary-precision real number. The public contract is significant
// decimal digits: every Real carries the digit count it was created with,
// and arithmetic between two Reals of different digit counts throws.
// Internally the mantissa gets 32 guard bits beyond ceil(P*log2(10)) so
// that series truncation targets of 1e-(P+5) are not washed out by
// rounding when intermediate values reach ~1e6.
class Real {
public:
    explicit Real(int digits) : digits_(check_digits(digits)) {
        mpfr_init2(v_, bits_for(digits_));  // starts as NaN
    }

    Real(const Real& o) : digits_(o.digits_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    Real(Real&& o) noexcept : digits_(o.digits_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }

    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
            digits_ = o.digits_;
        }
        return *this;
    }

    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        digits_ = o.digits_;
        return *this;
    }

    ~Real() { mpfr_clear(v_); }

    static Real zero(int digits) {
        Real r(digits);
        mpfr_set_zero(r.v_, 1);
        return r;
    }

    static Real one(int digits) { return from_int(1, digits); }

    static Real from_int(long n, int digits) {
        Real r(digits);
        mpfr_set_si(r.v_, n, MPFR_RNDN);
        return r;
    }

    // Exact rational input, e.g. dyadic sample points k/64.
    static Real from_ratio(long num, long den, int digits);

    // Parses a decimal string; throws std::invalid_argument on junk.
    static Real from_str(std::string_view s, int digits);

    static Real pi(int digits);

    // 10^e, used for tolerances like 1e-(P-10).
    static Real pow10(long e, int digits);

    int digits() const { return digits_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    Real& operator+=(const Real& o) {
        match(o);
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator-=(const Real& o) {
        match(o);
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(const Real& o) {
        match(o);
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator/=(const Real& o) {
        match(o);
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }

    Real& operator*=(long n) {
        mpfr_mul_si(v_, v_, n, MPFR_RNDN);
        return *this;
    }
    Real& operator/=(long n) {
        mpfr_div_si(v_, v_, n, MPFR_RNDN);
        return *this;
    }
    Real& operator+=(long n) {
        mpfr_add_si(v_, v_, n, MPFR_RNDN);
        return *this;
    }
    friend Real operator*(Real a, long n) { return a *= n; }
    friend Real operator*(long n, Real a) { return a *= n; }
    friend Real operator/(Real a, long n) { return a /= n; }

    Real operator-() const {
        Real r(*this);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    Real abs() const {
        Real r(*this);
        mpfr_abs(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    // Integer power; mpfr gives x^0 = 1 for every x, including 0^0.
    Real pow_int(long e) const {
        Real r(digits_);
        mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    Real exp() const {
        Real r(digits_);
        mpfr_exp(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real log() const {
        Real r(digits_);
        mpfr_log(r.v_, v_, MPFR_RNDN);
        return r;
    }

    int cmp(const Real& o) const {
        match(o);
        return mpfr_cmp(v_, o.v_);
    }
    friend bool operator<(const Real& a, const Real& b) { return a.cmp(b) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return a.cmp(b) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return a.cmp(b) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return a.cmp(b) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return a.cmp(b) != 0; }

    bool less_than(long n) const { return mpfr_cmp_si(v_, n) < 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Scientific notation with the given number of significant digits
    // (defaults to the working precision).
    std::string to_string(int sig_digits = 0) const;

    // Enough digits that parsing the string back at the same precision
    // reproduces the mantissa bit for bit; used by the disk cache.
    std::string to_string_exact() const;

    // Returns a copy rounded to a lower digit count.
    Real round_to(int digits) const;

    // Raw handle for the few call sites that need mpfr directly.
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static mpfr_prec_t bits_for(int digits) {
        // ceil(digits * log2(10)) + guard
        return static_cast<mpfr_prec_t>(digits * 3.3219280948873626 + 1) + 32;
    }

private:
    static int check_digits(int digits) {
        if (digits < 1)
            throw std::invalid_argument("Real: precision must be positive");
        return digits;
    }

    void match(const Real& o) const {
        if (digits_ != o.digits_)
            throw std::invalid_argument(
                "Real: mixed precisions (" + std::to_string(digits_) + " vs " +
                std::to_string(o.digits_) + ")");
    }

    mpfr_t v_;
    int digits_;
};

}  // namespace mzv
