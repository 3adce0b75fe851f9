#include "cqs/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cqs {

Perm perm_identity(int n) {
    Perm w(n);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

Perm perm_mul(const Perm& u, const Perm& v) {
    Perm w(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) w[j] = v[u[j]];
    return w;
}

Perm perm_inverse(const Perm& w) {
    Perm x(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) x[w[j]] = static_cast<std::uint8_t>(j);
    return x;
}

Perm perm_simple(int n, int i) {
    if (i < 2 || i > n) throw std::out_of_range("simple reflection index");
    Perm w = perm_identity(n);
    std::swap(w[i - 2], w[i - 1]);
    return w;
}

int perm_length(const Perm& w) {
    int l = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b]) ++l;
    return l;
}

std::vector<int> reduced_word(const Perm& w) {
    int n = static_cast<int>(w.size());
    std::vector<int> word;
    Perm x = w;
    int l = perm_length(x);
    while (l > 0) {
        for (int i = 2; i <= n; ++i) {
            Perm y = perm_mul(perm_simple(n, i), x);
            int ly = perm_length(y);
            if (ly < l) {
                word.push_back(i);
                x = std::move(y);
                l = ly;
                break;
            }
        }
    }
    return word;
}

SymGroup::SymGroup(int n) : n_(n) {
    if (n < 0 || n > 7) throw std::out_of_range("SymGroup supports 0 <= n <= 7");
    Perm w = perm_identity(n);
    do elts_.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    int N = size();
    len_.resize(N);
    inv_.resize(N);
    words_.resize(N);
    for (int a = 0; a < N; ++a) {
        len_[a] = perm_length(elts_[a]);
        inv_[a] = index(perm_inverse(elts_[a]));
        words_[a] = reduced_word(elts_[a]);
    }
    mul_.resize(static_cast<std::size_t>(N) * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) mul_[a * N + b] = index(perm_mul(elts_[a], elts_[b]));
    int gens = std::max(0, n - 1);
    lsimple_.resize(static_cast<std::size_t>(gens) * N);
    rsimple_.resize(static_cast<std::size_t>(gens) * N);
    for (int i = 2; i <= n; ++i) {
        int s = index(perm_simple(n, i));
        for (int a = 0; a < N; ++a) {
            lsimple_[(i - 2) * N + a] = mul(s, a);
            rsimple_[(i - 2) * N + a] = mul(a, s);
        }
    }
}

int SymGroup::index(const Perm& w) const {
    // lexicographic rank via Lehmer code
    int n = static_cast<int>(w.size());
    int rank = 0;
    for (int a = 0; a < n; ++a) {
        int smaller = 0;
        for (int b = a + 1; b < n; ++b)
            if (w[b] < w[a]) ++smaller;
        rank = rank * (n - a) + smaller;
    }
    return rank;
}

std::vector<int> SymGroup::young_subgroup(const std::vector<int>& blocks) const {
    std::vector<int> block_of(n_);
    int pos = 0, b = 0;
    for (int sz : blocks) {
        for (int k = 0; k < sz; ++k) block_of[pos++] = b;
        ++b;
    }
    if (pos != n_) throw std::invalid_argument("composition size mismatch");
    std::vector<int> out;
    for (int a = 0; a < size(); ++a) {
        bool ok = true;
        for (int j = 0; j < n_ && ok; ++j) ok = block_of[j] == block_of[elts_[a][j]];
        if (ok) out.push_back(a);
    }
    return out;
}

}  // namespace cqs
