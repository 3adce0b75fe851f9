#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cqs/field.hpp"
#include "cqs/linalg.hpp"
#include "cqs/multicomb.hpp"
#include "cqs/perm.hpp"

namespace cqs {

// Shared bookkeeping for algebras with a basis X^c T_w, 0 <= c_i < r, w in
// S_n: index = cidx * n! + w with cidx = sum c_i r^i. Elements are dense
// coordinate vectors of length n! r^n.
template <class K>
class HeckeCore {
public:
    HeckeCore(int n, Params<K> par);

    int n() const { return n_; }
    int r() const { return par_.r(); }
    const Params<K>& params() const { return par_; }
    const SymGroup& sym() const { return sym_; }
    std::size_t dim() const { return dim_; }
    std::size_t nexp() const { return nexp_; }
    const K& qq() const { return qq_; }  // q - q^{-1}

    std::size_t index(std::size_t cidx, int w) const { return cidx * sym_.size() + w; }
    std::size_t cidx_of(std::size_t idx) const { return idx / sym_.size(); }
    int perm_of(std::size_t idx) const { return static_cast<int>(idx % sym_.size()); }
    std::vector<int> digits(std::size_t cidx) const;
    std::size_t encode(const std::vector<int>& c) const;
    int digit(std::size_t cidx, int k) const { return static_cast<int>(cidx / rpow_[k] % r()); }
    std::size_t swap_digits(std::size_t cidx, int i) const;  // swap positions i-2, i-1

    Vec<K> zero() const { return Vec<K>(dim_); }
    Vec<K> one() const { return Tw(sym_.identity()); }
    Vec<K> basis(std::size_t idx) const {
        Vec<K> v(dim_);
        v[idx] = K(1);
        return v;
    }
    Vec<K> Tw(int w) const {
        Vec<K> v(dim_);
        if (split_unit_)
            for (std::size_t c = 0; c < nexp_; ++c) v[index(c, w)] = K(1);
        else
            v[index(0, w)] = K(1);
        return v;
    }
    // x = sum over the Young subgroup of q^{l(w)} T_w
    Vec<K> x_young(const std::vector<int>& blocks) const;

    // sparse product T_v T_w in the Hecke algebra of S_n
    const std::vector<std::pair<int, K>>& hecke_prod(int v, int w) const { return hprod_[v * sym_.size() + w]; }
    // y * T_w
    Vec<K> right_Tw(const Vec<K>& y, int w) const;

protected:
    int n_;
    Params<K> par_;
    SymGroup sym_;
    K qq_;
    std::size_t nexp_ = 1, dim_ = 0;
    std::vector<std::size_t> rpow_;
    std::vector<std::vector<std::pair<int, K>>> hprod_;
    bool split_unit_ = false;  // the unit is a sum of basis idempotents
};

// The Ariki-Koike algebra with basis L_1^{a_1} ... L_n^{a_n} T_w.
template <class K>
class AKAlgebra : public HeckeCore<K> {
public:
    AKAlgebra(int n, Params<K> par);

    using HeckeCore<K>::dim;
    using HeckeCore<K>::n;
    using HeckeCore<K>::r;

    Vec<K> monomial(const std::vector<int>& a, int w) const { return this->basis(this->index(this->encode(a), w)); }
    Vec<K> T(int i) const;  // T_1 .. T_n
    Vec<K> L(int k) const;  // L_1 .. L_n
    const Vec<K>& Lk_pow_r(int k) const { return red_[k - 1]; }

    Vec<K> left_T(int i, const Vec<K>& y) const;
    Vec<K> left_L(int k, const Vec<K>& y) const;
    Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const;
    Vec<K> star(const Vec<K>& x) const;
    Matrix<K> left_matrix(const Vec<K>& x) const;

    // m_mu = x_mu u+_mu
    Vec<K> u_plus(const Multicomp& mu) const;
    Vec<K> m_weight(const Multicomp& mu) const;

    std::string format(const Vec<K>& x) const;

private:
    std::vector<std::vector<std::pair<std::size_t, int>>> divd_;  // per (i-2)*nexp + a
    std::vector<Vec<K>> red_;                                     // L_k^r
    std::vector<Vec<K>> ovf_;                                     // per k*nexp + a, a_k = r-1
};

extern template class HeckeCore<Fp>;
extern template class HeckeCore<Rational>;
extern template class AKAlgebra<Fp>;
extern template class AKAlgebra<Rational>;

}  // namespace cqs
