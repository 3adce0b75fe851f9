#pragma once

#include <vector>

#include "cqs/hecke.hpp"

namespace cqs {

// Lagrange data for the modified algebra: A_ij = Q_j^{i-1}, A^{-1} = B / Delta.
template <class K>
struct FPolys {
    K delta;
    std::vector<std::vector<K>> h;  // h[i][j], F_i(X) = sum_j h[i][j] X^j
    K eval(int i, const K& x) const;
};

template <class K>
FPolys<K> f_polys(const std::vector<K>& Q);

// The modified Ariki-Koike algebra. Internally the basis is E_c T_w where
// E_c = prod_k F_{c_k}(xi_k) / Delta are the commuting idempotents that
// split each xi_k; xi-monomial coordinates are available at the boundary.
template <class K>
class FlatAlgebra : public HeckeCore<K> {
public:
    FlatAlgebra(int n, Params<K> par);

    using HeckeCore<K>::dim;
    using HeckeCore<K>::n;
    using HeckeCore<K>::r;

    const FPolys<K>& fpolys() const { return fp_; }
    Vec<K> E(const std::vector<int>& c, int w) const { return this->basis(this->index(this->encode(c), w)); }
    Vec<K> T(int i) const;  // T_2 .. T_n
    Vec<K> xi(int k) const;
    Vec<K> xi_monomial(const std::vector<int>& a, int w) const;
    Vec<K> to_xi_coords(const Vec<K>& x) const;

    Vec<K> left_T(int i, const Vec<K>& y) const;
    Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const;
    Vec<K> star(const Vec<K>& x) const;
    Matrix<K> left_matrix(const Vec<K>& x) const;

    // c(alpha) as 0-based eigenvalue labels, and F_alpha = E_{c(alpha)}
    std::vector<int> c_of_alpha(const std::vector<int>& alpha) const;
    Vec<K> F_alpha(const std::vector<int>& alpha) const;
    Vec<K> m_weight(const Multicomp& mu) const;

private:
    FPolys<K> fp_;
};

extern template class FlatAlgebra<Fp>;
extern template class FlatAlgebra<Rational>;

}  // namespace cqs
