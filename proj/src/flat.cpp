#include "cqs/flat.hpp"

#include <stdexcept>

namespace cqs {

template <class K>
K FPolys<K>::eval(int i, const K& x) const {
    K acc = 0, p = 1;
    for (const K& c : h[i]) {
        acc += c * p;
        p *= x;
    }
    return acc;
}

template <class K>
FPolys<K> f_polys(const std::vector<K>& Q) {
    const std::size_t r = Q.size();
    FPolys<K> fp;
    fp.delta = K(1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < i; ++j) fp.delta *= Q[i] - Q[j];
    if (fp.delta.is_zero()) throw std::invalid_argument("the Q_i must be pairwise distinct");
    Matrix<K> aug(r, 2 * r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) aug(i, j) = Q[j].pow(static_cast<long long>(i));
        aug(i, r + i) = K(1);
    }
    rref_inplace(aug);
    fp.h.assign(r, std::vector<K>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) fp.h[i][j] = fp.delta * aug(i, r + j);
    return fp;
}

template <class K>
FlatAlgebra<K>::FlatAlgebra(int n, Params<K> par) : HeckeCore<K>(n, std::move(par)), fp_(f_polys(this->par_.Q)) {
    this->split_unit_ = true;
}

template <class K>
Vec<K> FlatAlgebra<K>::T(int i) const {
    if (i < 2 || i > n()) throw std::out_of_range("T_i index (2..n)");
    return this->Tw(this->sym_.index(perm_simple(n(), i)));
}

template <class K>
Vec<K> FlatAlgebra<K>::xi(int k) const {
    std::vector<int> a(n(), 0);
    a[k - 1] = 1;
    return xi_monomial(a, 0);
}

template <class K>
Vec<K> FlatAlgebra<K>::xi_monomial(const std::vector<int>& a, int w) const {
    Vec<K> out = this->zero();
    for (std::size_t c = 0; c < this->nexp_; ++c) {
        K coef = 1;
        for (int k = 0; k < n(); ++k) coef *= this->par_.Q[this->digit(c, k)].pow(a[k]);
        out[this->index(c, w)] = coef;
    }
    return out;
}

template <class K>
Vec<K> FlatAlgebra<K>::to_xi_coords(const Vec<K>& x) const {
    const K dinv = fp_.delta.inv();
    Vec<K> out = this->zero();
    for (std::size_t idx = 0; idx < dim(); ++idx) {
        if (x[idx].is_zero()) continue;
        std::size_t c = this->cidx_of(idx);
        int w = this->perm_of(idx);
        for (std::size_t a = 0; a < this->nexp_; ++a) {
            K coef = x[idx];
            for (int k = 0; k < n() && !coef.is_zero(); ++k)
                coef *= fp_.h[this->digit(c, k)][this->digit(a, k)] * dinv;
            if (!coef.is_zero()) out[this->index(a, w)] += coef;
        }
    }
    return out;
}

template <class K>
Vec<K> FlatAlgebra<K>::left_T(int i, const Vec<K>& y) const {
    const K& qq = this->qq_;
    Vec<K> out = this->zero();
    for (std::size_t idx = 0; idx < dim(); ++idx) {
        const K& v = y[idx];
        if (v.is_zero()) continue;
        std::size_t c = this->cidx_of(idx);
        int w = this->perm_of(idx);
        std::size_t sc = this->swap_digits(c, i);
        int sw = this->sym_.left_simple(i, w);
        out[this->index(sc, sw)] += v;
        if (this->sym_.length(sw) < this->sym_.length(w)) out[this->index(sc, w)] += v * qq;
        int lo = this->digit(c, i - 2), hi = this->digit(c, i - 1);
        if (lo < hi)
            out[this->index(c, w)] += v * qq;
        else if (lo > hi)
            out[this->index(sc, w)] -= v * qq;
    }
    return out;
}

template <class K>
Vec<K> FlatAlgebra<K>::mul(const Vec<K>& x, const Vec<K>& y) const {
    const int N = this->sym_.size();
    Vec<K> out = this->zero();
    for (int u = 0; u < N; ++u) {
        bool any = false;
        for (std::size_t c = 0; c < this->nexp_ && !any; ++c) any = !x[this->index(c, u)].is_zero();
        if (!any) continue;
        Vec<K> z = y;
        const auto& word = this->sym_.word(u);
        for (auto it = word.rbegin(); it != word.rend(); ++it) z = left_T(*it, z);
        for (std::size_t c = 0; c < this->nexp_; ++c) {
            const K& f = x[this->index(c, u)];
            if (f.is_zero()) continue;
            for (int w = 0; w < N; ++w) {
                std::size_t j = this->index(c, w);
                if (!z[j].is_zero()) out[j] += f * z[j];
            }
        }
    }
    return out;
}

template <class K>
Vec<K> FlatAlgebra<K>::star(const Vec<K>& x) const {
    Vec<K> out = this->zero();
    for (std::size_t idx = 0; idx < dim(); ++idx) {
        const K& v = x[idx];
        if (v.is_zero()) continue;
        Vec<K> z = this->basis(this->index(this->cidx_of(idx), 0));
        const auto& word = this->sym_.word(this->sym_.inverse(this->perm_of(idx)));
        for (auto it = word.rbegin(); it != word.rend(); ++it) z = left_T(*it, z);
        for (std::size_t j = 0; j < dim(); ++j)
            if (!z[j].is_zero()) out[j] += v * z[j];
    }
    return out;
}

template <class K>
Matrix<K> FlatAlgebra<K>::left_matrix(const Vec<K>& x) const {
    Matrix<K> M(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) M.set_col(j, mul(x, this->basis(j)));
    return M;
}

template <class K>
std::vector<int> FlatAlgebra<K>::c_of_alpha(const std::vector<int>& alpha) const {
    std::vector<int> c;
    for (int i = 0; i < static_cast<int>(alpha.size()); ++i)
        for (int k = 0; k < alpha[i]; ++k) c.push_back(r() - 1 - i);
    if (static_cast<int>(c.size()) != n()) throw std::invalid_argument("alpha does not sum to n");
    return c;
}

template <class K>
Vec<K> FlatAlgebra<K>::F_alpha(const std::vector<int>& alpha) const {
    return E(c_of_alpha(alpha), 0);
}

template <class K>
Vec<K> FlatAlgebra<K>::m_weight(const Multicomp& mu) const {
    return mul(F_alpha(alpha_of(mu)), this->x_young(mu.flat()));
}

template struct FPolys<Fp>;
template struct FPolys<Rational>;
template FPolys<Fp> f_polys<Fp>(const std::vector<Fp>&);
template FPolys<Rational> f_polys<Rational>(const std::vector<Rational>&);
template class FlatAlgebra<Fp>;
template class FlatAlgebra<Rational>;

}  // namespace cqs
