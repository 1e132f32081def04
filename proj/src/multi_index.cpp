#include "mzv/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mzv {

MultiIndex::MultiIndex(std::vector<int> parts) : p_(std::move(parts)) {
    if (p_.empty())
        throw std::invalid_argument("MultiIndex: empty index");
    for (int x : p_)
        if (x < 1) throw std::invalid_argument("MultiIndex: parts must be >= 1");
}

MultiIndex MultiIndex::hook(int k_plus_1, int ones) {
    std::vector<int> p;
    p.reserve(static_cast<size_t>(ones) + 1);
    p.push_back(k_plus_1);
    for (int i = 0; i < ones; ++i) p.push_back(1);
    return MultiIndex(std::move(p));
}

MultiIndex MultiIndex::parse(const std::string& s) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("MultiIndex::parse: bad index '" + s + "'");
        }
        if (used != tok.size())
            throw std::invalid_argument("MultiIndex::parse: bad index '" + s + "'");
        parts.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return MultiIndex(std::move(parts));
}

int MultiIndex::weight() const {
    return std::accumulate(p_.begin(), p_.end(), 0);
}

std::string MultiIndex::str() const {
    std::string s;
    for (size_t i = 0; i < p_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p_[i]);
    }
    return s;
}

Word index_to_word(const MultiIndex& idx) {
    Word w;
    w.reserve(static_cast<size_t>(idx.weight()));
    for (int l : idx.parts()) {
        for (int i = 0; i < l - 1; ++i) w.push_back(Letter::e0);
        w.push_back(Letter::e1);
    }
    return w;
}

MultiIndex word_to_index(const Word& w) {
    if (w.empty() || w.back() != Letter::e1)
        throw std::invalid_argument("word_to_index: word must end in e1");
    std::vector<int> parts;
    int run = 0;
    for (Letter a : w) {
        if (a == Letter::e0) {
            ++run;
        } else {
            parts.push_back(run + 1);
            run = 0;
        }
    }
    return MultiIndex(std::move(parts));
}

Word dual_word(const Word& w) {
    Word d(w.rbegin(), w.rend());
    for (Letter& a : d) a = (a == Letter::e0) ? Letter::e1 : Letter::e0;
    return d;
}

MultiIndex dual_index(const MultiIndex& idx) {
    if (!idx.admissible())
        throw std::domain_error("dual_index: index not admissible");
    return word_to_index(dual_word(index_to_word(idx)));
}

void for_each_composition(int total, int parts, int min_first,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (parts < 1 || total < min_first + (parts - 1)) return;
    std::vector<int> c(static_cast<size_t>(parts));
    // recursive descent keeps the lexicographic order obvious
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        int lo = (pos == 0) ? min_first : 1;
        if (pos == parts - 1) {
            if (remaining >= lo) {
                c[static_cast<size_t>(pos)] = remaining;
                fn(c);
            }
            return;
        }
        int rest = parts - 1 - pos;  // parts still to fill after this one
        for (int v = lo; remaining - v >= rest; ++v) {
            c[static_cast<size_t>(pos)] = v;
            rec(pos + 1, remaining - v);
        }
    };
    rec(0, total);
    return;
}

std::vector<MultiIndex> admissible_indices(int max_weight) {
    std::vector<MultiIndex> out;
    for (int l = 2; l <= max_weight; ++l)
        for (int n = 1; n < l; ++n)
            for_each_composition(l, n, 2, [&](const std::vector<int>& c) {
                out.push_back(MultiIndex(c));
            });
    // group by weight: re-sort within each weight lexicographically, keep
    // weights ascending (enumeration above is weight-major already, but
    // depth-major inside; normalize to plain lexicographic per weight)
    std::stable_sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.parts() < b.parts();
    });
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

long long falling_factorial(long long m, int k) {
    if (k < 0) throw std::invalid_argument("falling_factorial: negative k");
    if (k == 0) return 1;
    if (m < k) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r *= (m - i);
    return r;
}

}  // namespace mzv
