#include "mzv/polylog.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace mzv {

long li_cutoff(double abs_z, int precision, int depth) {
    if (abs_z <= 0.0) return 0;
    double digits = precision + 5;
    double rate = -std::log10(abs_z);  // digits gained per term
    long m = static_cast<long>(std::ceil(digits / rate)) + 10L * depth;
    // the post |z|^M * M^depth <= 10^-(P+5) may need a few more terms
    // near z_max at high depth; fixed point converges immediately
    for (int pass = 0; pass < 8; ++pass) {
        double need = (digits + depth * std::log10(static_cast<double>(m))) / rate;
        long m2 = static_cast<long>(std::ceil(need));
        if (m2 <= m) break;
        m = m2;
    }
    return m;
}

Real li_word(const Word& w, const Real& z, int precision, double z_max) {
    if (z_max <= 0.0 || z_max > kDefaultZMax)
        throw std::domain_error("li_word: z_max must lie in (0, 3/4]");
    double az = std::fabs(z.to_double());
    if (az > z_max + 1e-15)
        throw std::domain_error("li_word: |z| exceeds z_max");
    if (w.empty()) return Real::one(precision);
    if (w.back() != Letter::e1)
        throw std::domain_error("li_word: word must end in e1");
    if (z.is_zero()) return Real::zero(precision);

    int depth = 0;
    for (Letter a : w)
        if (a == Letter::e1) ++depth;
    const long M = li_cutoff(az, precision, depth);

    // Coefficients of the partial word, built right to left. Index m is
    // the coefficient of z^m; the constant term stays zero once the
    // first (rightmost, always e1) letter has been applied.
    std::vector<Real> c(static_cast<size_t>(M) + 1, Real::zero(precision));
    std::vector<Real> d(static_cast<size_t>(M) + 1, Real::zero(precision));
    c[0] = Real::one(precision);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (*it == Letter::e1) {
            // d[N+1] = (c[0] + ... + c[N]) / (N+1)
            Real run = Real::zero(precision);
            d[0] = Real::zero(precision);
            for (long n = 0; n < M; ++n) {
                run += c[static_cast<size_t>(n)];
                d[static_cast<size_t>(n + 1)] = run / (n + 1);
            }
            c.swap(d);
        } else {
            // c[m] /= m; the constant term is already zero here, since
            // the rightmost letter of the word is e1
            for (long m = 1; m <= M; ++m)
                c[static_cast<size_t>(m)] /= m;
        }
    }

    // Horner over z, constant term known to be zero
    Real v = Real::zero(precision);
    for (long m = M; m >= 1; --m) {
        v *= z;
        v += c[static_cast<size_t>(m)];
    }
    v *= z;
    return v;
}

Real li_index(const MultiIndex& idx, const Real& z, int precision, double z_max) {
    return li_word(index_to_word(idx), z, precision, z_max);
}

}  // namespace mzv
