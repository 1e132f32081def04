#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include "mzv/multi_index.hpp"
#include "mzv/real.hpp"

namespace mzv {

// Thread-safe store of computed zeta values, keyed by (index, digits).
// A request is served from the cache when a value at the same or a higher
// digit count is present; serving from a higher count rounds the copy down
// and does not store the rounded value, so the set of stored entries is
// exactly the set of values that were actually computed (or loaded).
class ZetaCache {
public:
    ZetaCache() = default;
    ZetaCache(const ZetaCache&) = delete;
    ZetaCache& operator=(const ZetaCache&) = delete;

    std::optional<Real> get(const MultiIndex& idx, int digits) const;
    void put(const MultiIndex& idx, const Real& value);

    std::size_t size() const;
    void clear();

    std::uint64_t hits() const { return hits_.load(); }
    std::uint64_t misses() const { return misses_.load(); }

    // Disk format: one entry per line, "index digits value", e.g.
    //   2,1 40 0.20205690315959428539973816151144999e1
    // Lines that fail to parse are skipped. Returns the number of entries
    // merged in; existing entries win over the file.
    std::size_t load(const std::string& path);

    // Writes to path + ".tmp" and renames, so readers never see a torn file.
    void save(const std::string& path) const;

private:
    mutable std::shared_mutex mu_;
    mutable std::atomic<std::uint64_t> hits_{0};
    mutable std::atomic<std::uint64_t> misses_{0};
    std::map<MultiIndex, std::map<int, Real>> store_;
};

// zeta(l_1,...,l_n) for an admissible index (l_1 >= 2), to `precision`
// significant digits. Throws std::domain_error on a non-admissible index.
Real zeta(const MultiIndex& idx, int precision, ZetaCache& cache);

// Same computation without a cache.
Real zeta(const MultiIndex& idx, int precision);

struct NaiveResult {
    Real value;
    Real error_bound;
};

// Direct truncation of the defining nested sum over m_1 > ... > m_n > 0
// with m_1 <= terms, plus the a-priori tail estimate
//   (terms+1)^(1-l_1) * (1 + log(terms+1))^(n-1) / (l_1 - 1).
// Slow; used as an independent check on the convolution path.
NaiveResult zeta_naive(const MultiIndex& idx, long terms, int precision);

}  // namespace mzv
