#pragma once

#include "mzv/multi_index.hpp"
#include "mzv/real.hpp"

namespace mzv {

inline constexpr double kDefaultZMax = 0.75;

// Value at z of the iterated integral attached to a word in {e0,e1}
// (e0 -> dt/t, e1 -> dt/(1-t), leftmost letter outermost). Equals the
// multiple polylogarithm of the corresponding index when the word is an
// index word. The word must end in e1 (the integral diverges otherwise)
// and |z| <= z_max. Empty word gives 1.
Real li_word(const Word& w, const Real& z, int precision, double z_max = kDefaultZMax);

// Li_{l_1,...,l_n}(z) = sum_{m_1>...>m_n>0} z^{m_1} / prod m_i^{l_i};
// l_1 = 1 is allowed for |z| < 1. Routed through li_word.
Real li_index(const MultiIndex& idx, const Real& z, int precision, double z_max = kDefaultZMax);

// Series cutoff used by li_word: large enough that both
// |z|^M * M^depth <= 10^-(P+5) and M >= ceil((P+5)/log10(1/|z|)) + 10*depth.
long li_cutoff(double abs_z, int precision, int depth);

}  // namespace mzv
