#include "mzv/real.hpp"

#include <cctype>
#include <cstdlib>
#include <memory>
#include <vector>

namespace mzv {

Real Real::from_ratio(long num, long den, int digits) {
    if (den == 0)
        throw std::invalid_argument("Real::from_ratio: zero denominator");
    Real r = from_int(num, digits);
    mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
    return r;
}

Real Real::from_str(std::string_view s, int digits) {
    // Trim ASCII whitespace, then require the whole remainder to parse.
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    std::string t(s.substr(b, e - b));
    if (t.empty())
        throw std::invalid_argument("Real::from_str: empty string");
    Real r(digits);
    char* end = nullptr;
    mpfr_strtofr(r.v_, t.c_str(), &end, 10, MPFR_RNDN);
    if (end == t.c_str() || *end != '\0')
        throw std::invalid_argument("Real::from_str: bad number '" + t + "'");
    return r;
}

Real Real::pi(int digits) {
    Real r(digits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::pow10(long e, int digits) {
    Real r(digits);
    mpfr_set_si(r.v_, 10, MPFR_RNDN);
    mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
}

std::string Real::to_string(int sig_digits) const {
    if (sig_digits <= 0) sig_digits = digits_;
    std::vector<char> buf(static_cast<size_t>(sig_digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", sig_digits - 1, v_);
    return std::string(buf.data());
}

std::string Real::to_string_exact() const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_zero_p(v_)) return "0";
    // mpfr_get_str with n=0 picks just enough digits for an exact
    // read-back at this precision.
    mpfr_exp_t exp = 0;
    char* digits = mpfr_get_str(nullptr, &exp, 10, 0, v_, MPFR_RNDN);
    std::string mant(digits);
    mpfr_free_str(digits);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    // mant is d1 d2 ... dn with value 0.d1d2...dn * 10^exp
    return sign + "0." + mant + "e" + std::to_string(static_cast<long>(exp));
}

Real Real::round_to(int digits) const {
    if (digits == digits_) return *this;
    if (digits > digits_)
        throw std::invalid_argument("Real::round_to: cannot raise precision");
    Real r(digits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

}  // namespace mzv
