#pragma once

#include <functional>
#include <string>
#include <vector>

namespace mzv {

// Index (l_1,...,l_n) of a multiple zeta value / multiple polylogarithm;
// all parts >= 1. Convergent (admissible) as a zeta iff l_1 >= 2.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> parts);

    // hook index (k+1, 1, ..., 1) with j-1 trailing ones
    static MultiIndex hook(int k_plus_1, int ones);

    static MultiIndex parse(const std::string& s);  // "2,1"

    const std::vector<int>& parts() const { return p_; }
    int depth() const { return static_cast<int>(p_.size()); }
    int weight() const;
    bool admissible() const { return !p_.empty() && p_[0] >= 2; }

    std::string str() const;  // "2,1"

    bool operator==(const MultiIndex& o) const { return p_ == o.p_; }
    bool operator<(const MultiIndex& o) const { return p_ < o.p_; }

private:
    std::vector<int> p_;
};

enum class Letter : unsigned char { e0 = 0, e1 = 1 };

using Word = std::vector<Letter>;

// (l_1,...,l_n) -> e0^(l_1-1) e1 ... e0^(l_n-1) e1
Word index_to_word(const MultiIndex& idx);

// inverse of the above; requires the word to end in e1
MultiIndex word_to_index(const Word& w);

// reverse the word and swap e0 <-> e1
Word dual_word(const Word& w);

// duality on admissible indices, via the word involution
MultiIndex dual_index(const MultiIndex& idx);

// All compositions (l_1,...,l_n) of `total` into `parts` parts with
// l_1 >= min_first and l_i >= 1 otherwise, visited in lexicographically
// ascending order (the enumeration order every sum in the library uses).
void for_each_composition(int total, int parts, int min_first,
                          const std::function<void(const std::vector<int>&)>& fn);

// All admissible indices of weight 2..max_weight, ascending by weight
// then lexicographic.
std::vector<MultiIndex> admissible_indices(int max_weight);

long long binomial(int n, int k);

// descending factorial (m)_k = m(m-1)...(m-k+1); 0 when m < k, 1 when k = 0
long long falling_factorial(long long m, int k);

}  // namespace mzv
