#pragma once

#include <cstdint>
#include <vector>

namespace cqs {

// Permutations of {0..n-1} acting on the right: w[j] is the image of j and
// (u*v)[j] = v[u[j]]. Generator s_i (2 <= i <= n) swaps i-2 and i-1, i.e.
// the transposition (i-1,i) in 1-based labels.
using Perm = std::vector<std::uint8_t>;

Perm perm_identity(int n);
Perm perm_mul(const Perm& u, const Perm& v);
Perm perm_inverse(const Perm& w);
Perm perm_simple(int n, int i);
int perm_length(const Perm& w);

// Lexicographically first reduced word: repeatedly strip the smallest left
// descent. Returns generator labels i (2..n) with w = s_{i1} s_{i2} ... .
std::vector<int> reduced_word(const Perm& w);

// The symmetric group with all elements enumerated in lexicographic order of
// one-line notation, plus the tables the Hecke algebra needs.
class SymGroup {
public:
    explicit SymGroup(int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(elts_.size()); }
    const Perm& elt(int w) const { return elts_[w]; }
    int index(const Perm& w) const;
    int identity() const { return 0; }
    int length(int w) const { return len_[w]; }
    int inverse(int w) const { return inv_[w]; }
    int mul(int u, int v) const { return mul_[u * size() + v]; }
    // index of s_i * w and w * s_i
    int left_simple(int i, int w) const { return lsimple_[(i - 2) * size() + w]; }
    int right_simple(int i, int w) const { return rsimple_[(i - 2) * size() + w]; }
    const std::vector<int>& word(int w) const { return words_[w]; }

    // Young subgroup of a composition of n (block sizes in order)
    std::vector<int> young_subgroup(const std::vector<int>& blocks) const;

private:
    int n_;
    std::vector<Perm> elts_;
    std::vector<int> len_, inv_, mul_, lsimple_, rsimple_;
    std::vector<std::vector<int>> words_;
};

}  // namespace cqs
