#include "mzv/zeta.hpp"

#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "mzv/polylog.hpp"

namespace mzv {

std::optional<Real> ZetaCache::get(const MultiIndex& idx, int digits) const {
    std::shared_lock lk(mu_);
    auto it = store_.find(idx);
    if (it != store_.end()) {
        // First level at >= digits, if any.
        auto lv = it->second.lower_bound(digits);
        if (lv != it->second.end()) {
            ++hits_;
            if (lv->first == digits)
                return lv->second;
            return lv->second.round_to(digits);
        }
    }
    ++misses_;
    return std::nullopt;
}

void ZetaCache::put(const MultiIndex& idx, const Real& value) {
    std::unique_lock lk(mu_);
    // emplace keeps an existing entry, so a racing duplicate compute
    // cannot replace what an earlier get() may already have returned
    store_[idx].emplace(value.digits(), value);
}

std::size_t ZetaCache::size() const {
    std::shared_lock lk(mu_);
    std::size_t n = 0;
    for (const auto& [idx, levels] : store_)
        n += levels.size();
    return n;
}

void ZetaCache::clear() {
    std::unique_lock lk(mu_);
    store_.clear();
}

std::size_t ZetaCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cache: cannot open " + path + " for reading");
    std::string line;
    std::size_t added = 0;
    std::unique_lock lk(mu_);
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string idx_str, val_str;
        int digits = 0;
        if (!(ss >> idx_str >> digits >> val_str))
            continue;
        if (digits < 1 || digits > 100000)
            continue;
        try {
            MultiIndex idx = MultiIndex::parse(idx_str);
            Real v = Real::from_str(val_str, digits);
            if (store_[idx].emplace(digits, std::move(v)).second)
                ++added;
        } catch (const std::exception&) {
            // tolerate junk lines
        }
    }
    return added;
}

void ZetaCache::save(const std::string& path) const {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cache: cannot open " + tmp + " for writing");
        std::shared_lock lk(mu_);
        for (const auto& [idx, levels] : store_)
            for (const auto& [digits, value] : levels)
                out << idx.str() << ' ' << digits << ' '
                    << value.to_string_exact() << '\n';
        out.flush();
        if (!out)
            throw std::runtime_error("cache: write to " + tmp + " failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cache: rename to " + path + " failed");
}

namespace {

// Splits the iterated-integral representation at 1/2: summing over all
// cut points j, the piece above 1/2 maps under t -> 1-t to the reversed,
// letter-swapped prefix. Both factors are then plain polylog series at
// z = 1/2, which converge at ~ one bit per term.
Real zeta_convolution(const MultiIndex& idx, int precision) {
    const Word w = index_to_word(idx);
    const auto L = static_cast<std::ptrdiff_t>(w.size());
    const Real half = Real::from_ratio(1, 2, precision);
    Real acc = Real::zero(precision);
    for (std::ptrdiff_t j = 0; j <= L; ++j) {
        const Word pre(w.begin(), w.begin() + j);
        const Word suf(w.begin() + j, w.end());
        acc += li_word(dual_word(pre), half, precision) *
               li_word(suf, half, precision);
    }
    return acc;
}

}  // namespace

Real zeta(const MultiIndex& idx, int precision, ZetaCache& cache) {
    if (!idx.admissible())
        throw std::domain_error("zeta: non-admissible index " + idx.str());
    if (auto v = cache.get(idx, precision))
        return *v;
    Real v = zeta_convolution(idx, precision);
    cache.put(idx, v);
    return v;
}

Real zeta(const MultiIndex& idx, int precision) {
    if (!idx.admissible())
        throw std::domain_error("zeta: non-admissible index " + idx.str());
    return zeta_convolution(idx, precision);
}

NaiveResult zeta_naive(const MultiIndex& idx, long terms, int precision) {
    if (!idx.admissible())
        throw std::domain_error("zeta_naive: non-admissible index " + idx.str());
    if (terms < 1)
        throw std::invalid_argument("zeta_naive: terms must be >= 1");
    const auto& l = idx.parts();
    const int n = idx.depth();
    const long M = terms;

    // T_k(m) = sum_{j<=m} j^(-l_k) T_{k+1}(j-1), innermost level first.
    std::vector<Real> t(static_cast<std::size_t>(M) + 1, Real::zero(precision));
    {
        Real run = Real::zero(precision);
        for (long m = 1; m <= M; ++m) {
            run += Real::from_int(m, precision).pow_int(-l[static_cast<std::size_t>(n - 1)]);
            t[static_cast<std::size_t>(m)] = run;
        }
    }
    for (int k = n - 2; k >= 0; --k) {
        std::vector<Real> s(static_cast<std::size_t>(M) + 1, Real::zero(precision));
        Real run = Real::zero(precision);
        for (long m = 1; m <= M; ++m) {
            run += Real::from_int(m, precision).pow_int(-l[static_cast<std::size_t>(k)]) *
                   t[static_cast<std::size_t>(m - 1)];
            s[static_cast<std::size_t>(m)] = run;
        }
        t.swap(s);
    }

    const Real mp1 = Real::from_int(M + 1, precision);
    Real bound = mp1.pow_int(1 - l[0]);
    bound *= (Real::one(precision) + mp1.log()).pow_int(n - 1);
    bound /= (l[0] - 1);

    return NaiveResult{t[static_cast<std::size_t>(M)], bound};
}

}  // namespace mzv
