#include "cqs/hecke.hpp"

#include <sstream>
#include <stdexcept>

namespace cqs {

template <class K>
HeckeCore<K>::HeckeCore(int n, Params<K> par) : n_(n), par_(std::move(par)), sym_(n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (par_.Q.empty()) throw std::invalid_argument("need r >= 1 parameters Q");
    if (par_.q.is_zero()) throw std::invalid_argument("q must be invertible");
    qq_ = par_.q - par_.q.inv();
    for (int k = 0; k < n; ++k) {
        rpow_.push_back(nexp_);
        nexp_ *= static_cast<std::size_t>(r());
    }
    dim_ = nexp_ * sym_.size();

    const int N = sym_.size();
    hprod_.resize(static_cast<std::size_t>(N) * N);
    for (int v = 0; v < N; ++v) {
        for (int w = 0; w < N; ++w) {
            // T_v T_w: push the letters of w onto T_v one by one
            std::vector<K> cur(N);
            cur[v] = K(1);
            for (int i : sym_.word(w)) {
                std::vector<K> nxt(N);
                for (int u = 0; u < N; ++u) {
                    if (cur[u].is_zero()) continue;
                    int us = sym_.right_simple(i, u);
                    nxt[us] += cur[u];
                    if (sym_.length(us) < sym_.length(u)) nxt[u] += cur[u] * qq_;
                }
                cur = std::move(nxt);
            }
            auto& out = hprod_[v * N + w];
            for (int u = 0; u < N; ++u)
                if (!cur[u].is_zero()) out.emplace_back(u, cur[u]);
        }
    }
}

template <class K>
std::vector<int> HeckeCore<K>::digits(std::size_t cidx) const {
    std::vector<int> c(n_);
    for (int k = 0; k < n_; ++k) c[k] = digit(cidx, k);
    return c;
}

template <class K>
std::size_t HeckeCore<K>::encode(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) != n_) throw std::invalid_argument("exponent vector length");
    std::size_t x = 0;
    for (int k = 0; k < n_; ++k) {
        if (c[k] < 0 || c[k] >= r()) throw std::out_of_range("exponent out of range");
        x += rpow_[k] * static_cast<std::size_t>(c[k]);
    }
    return x;
}

template <class K>
std::size_t HeckeCore<K>::swap_digits(std::size_t cidx, int i) const {
    int a = digit(cidx, i - 2), b = digit(cidx, i - 1);
    return cidx + (rpow_[i - 2] * b + rpow_[i - 1] * a) - (rpow_[i - 2] * a + rpow_[i - 1] * b);
}

template <class K>
Vec<K> HeckeCore<K>::x_young(const std::vector<int>& blocks) const {
    Vec<K> x = zero();
    for (int w : sym_.young_subgroup(blocks)) {
        K c = par_.q.pow(sym_.length(w));
        Vec<K> t = Tw(w);
        for (std::size_t j = 0; j < dim_; ++j)
            if (!t[j].is_zero()) x[j] += c;
    }
    return x;
}

template <class K>
Vec<K> HeckeCore<K>::right_Tw(const Vec<K>& y, int w) const {
    Vec<K> out = zero();
    for (std::size_t idx = 0; idx < dim_; ++idx) {
        if (y[idx].is_zero()) continue;
        std::size_t c = cidx_of(idx);
        for (const auto& [u, h] : hecke_prod(perm_of(idx), w)) out[index(c, u)] += y[idx] * h;
    }
    return out;
}

template <class K>
AKAlgebra<K>::AKAlgebra(int n, Params<K> par) : HeckeCore<K>(n, std::move(par)) {
    const int rr = r();
    const std::size_t E = this->nexp_;
    // L_i (f - s_i f) / (L_i - L_{i-1}) for f = L^a, per generator i >= 2
    divd_.resize(static_cast<std::size_t>(std::max(0, n - 1)) * E);
    for (int i = 2; i <= n; ++i) {
        for (std::size_t a = 0; a < E; ++a) {
            int x = this->digit(a, i - 2), y = this->digit(a, i - 1);
            std::size_t base = a - this->rpow_[i - 2] * x - this->rpow_[i - 1] * y;
            auto at = [&](int u, int v) { return base + this->rpow_[i - 2] * u + this->rpow_[i - 1] * v; };
            auto& out = divd_[(i - 2) * E + a];
            if (y > x)
                for (int j = 0; j < y - x; ++j) out.emplace_back(at(y - 1 - j, x + 1 + j), 1);
            else if (x > y)
                for (int j = 0; j < x - y; ++j) out.emplace_back(at(x - 1 - j, y + 1 + j), -1);
        }
    }

    red_.resize(n);
    ovf_.resize(static_cast<std::size_t>(n) * E);
    // L_1^r from the cyclotomic polynomial
    std::vector<K> poly{K(1)};
    for (const K& Qi : this->par_.Q) {
        std::vector<K> nxt(poly.size() + 1);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            nxt[j + 1] += poly[j];
            nxt[j] -= Qi * poly[j];
        }
        poly = std::move(nxt);
    }
    for (int k = 1; k <= n; ++k) {
        Vec<K> red = this->zero();
        if (k == 1) {
            for (int j = 0; j < rr; ++j) {
                std::vector<int> a(n, 0);
                a[0] = j;
                red[this->index(this->encode(a), 0)] -= poly[j];
            }
        } else {
            // L_k^r = T_k L_{k-1} (T_k L_k^{r-1})
            std::vector<int> a(n, 0);
            a[k - 1] = rr - 1;
            Vec<K> y = left_T(k, monomial(a, 0));
            y = left_L(k - 1, y);
            red = left_T(k, y);
        }
        red_[k - 1] = red;
        for (std::size_t a = 0; a < E; ++a) {
            if (this->digit(a, k - 1) != rr - 1) continue;
            Vec<K> z = red;
            for (int j = 1; j <= n; ++j) {
                if (j == k) continue;
                for (int t = 0; t < this->digit(a, j - 1); ++t) z = left_L(j, z);
            }
            ovf_[(k - 1) * E + a] = std::move(z);
        }
    }
}

template <class K>
Vec<K> AKAlgebra<K>::T(int i) const {
    if (i == 1) return L(1);
    if (i < 1 || i > n()) throw std::out_of_range("T_i index");
    return this->Tw(this->sym_.index(perm_simple(n(), i)));
}

template <class K>
Vec<K> AKAlgebra<K>::L(int k) const {
    if (k < 1 || k > n()) throw std::out_of_range("L_k index");
    return left_L(k, this->one());
}

template <class K>
Vec<K> AKAlgebra<K>::left_T(int i, const Vec<K>& y) const {
    if (i == 1) return left_L(1, y);
    const std::size_t E = this->nexp_;
    const K& qq = this->qq_;
    Vec<K> out = this->zero();
    for (std::size_t idx = 0; idx < dim(); ++idx) {
        const K& c = y[idx];
        if (c.is_zero()) continue;
        std::size_t a = this->cidx_of(idx);
        int w = this->perm_of(idx);
        std::size_t sa = this->swap_digits(a, i);
        int sw = this->sym_.left_simple(i, w);
        out[this->index(sa, sw)] += c;
        if (this->sym_.length(sw) < this->sym_.length(w)) out[this->index(sa, w)] += c * qq;
        for (const auto& [b, sign] : divd_[(i - 2) * E + a]) {
            if (sign > 0)
                out[this->index(b, w)] += c * qq;
            else
                out[this->index(b, w)] -= c * qq;
        }
    }
    return out;
}

template <class K>
Vec<K> AKAlgebra<K>::left_L(int k, const Vec<K>& y) const {
    const std::size_t E = this->nexp_;
    const int rr = r();
    Vec<K> out = this->zero();
    for (std::size_t idx = 0; idx < dim(); ++idx) {
        const K& c = y[idx];
        if (c.is_zero()) continue;
        std::size_t a = this->cidx_of(idx);
        int w = this->perm_of(idx);
        if (this->digit(a, k - 1) + 1 < rr) {
            out[this->index(a + this->rpow_[k - 1], w)] += c;
            continue;
        }
        const Vec<K>& z = ovf_[(k - 1) * E + a];
        for (std::size_t j = 0; j < dim(); ++j) {
            if (z[j].is_zero()) continue;
            std::size_t b = this->cidx_of(j);
            K cz = c * z[j];
            for (const auto& [u, h] : this->hecke_prod(this->perm_of(j), w)) out[this->index(b, u)] += cz * h;
        }
    }
    return out;
}

template <class K>
Vec<K> AKAlgebra<K>::mul(const Vec<K>& x, const Vec<K>& y) const {
    const int N = this->sym_.size();
    Vec<K> out = this->zero();
    for (int u = 0; u < N; ++u) {
        bool any = false;
        for (std::size_t a = 0; a < this->nexp_ && !any; ++a) any = !x[this->index(a, u)].is_zero();
        if (!any) continue;
        Vec<K> z = y;
        const auto& word = this->sym_.word(u);
        for (auto it = word.rbegin(); it != word.rend(); ++it) z = left_T(*it, z);
        for (std::size_t a = 0; a < this->nexp_; ++a) {
            const K& c = x[this->index(a, u)];
            if (c.is_zero()) continue;
            Vec<K> t = z;
            for (int k = 1; k <= n(); ++k)
                for (int e = 0; e < this->digit(a, k - 1); ++e) t = left_L(k, t);
            for (std::size_t j = 0; j < dim(); ++j)
                if (!t[j].is_zero()) out[j] += c * t[j];
        }
    }
    return out;
}

template <class K>
Vec<K> AKAlgebra<K>::star(const Vec<K>& x) const {
    Vec<K> out = this->zero();
    for (std::size_t idx = 0; idx < dim(); ++idx) {
        const K& c = x[idx];
        if (c.is_zero()) continue;
        Vec<K> z = this->basis(this->index(this->cidx_of(idx), 0));
        const auto& word = this->sym_.word(this->sym_.inverse(this->perm_of(idx)));
        for (auto it = word.rbegin(); it != word.rend(); ++it) z = left_T(*it, z);
        for (std::size_t j = 0; j < dim(); ++j)
            if (!z[j].is_zero()) out[j] += c * z[j];
    }
    return out;
}

template <class K>
Matrix<K> AKAlgebra<K>::left_matrix(const Vec<K>& x) const {
    Matrix<K> M(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) M.set_col(j, mul(x, this->basis(j)));
    return M;
}

template <class K>
Vec<K> AKAlgebra<K>::u_plus(const Multicomp& mu) const {
    auto a = avec_of(mu);
    Vec<K> u = this->one();
    for (int s = 2; s <= r(); ++s)
        for (int k = 1; k <= a[s - 1]; ++k) {
            Vec<K> v = left_L(k, u);
            for (std::size_t j = 0; j < dim(); ++j) v[j] -= this->par_.Q[s - 1] * u[j];
            u = std::move(v);
        }
    return u;
}

template <class K>
Vec<K> AKAlgebra<K>::m_weight(const Multicomp& mu) const {
    return mul(this->x_young(mu.flat()), u_plus(mu));
}

template <class K>
std::string AKAlgebra<K>::format(const Vec<K>& x) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t idx = 0; idx < dim(); ++idx) {
        if (x[idx].is_zero()) continue;
        os << (first ? "" : " + ") << x[idx].str() << "*L";
        for (int d : this->digits(this->cidx_of(idx))) os << d;
        os << "T[";
        for (auto v : this->sym_.elt(this->perm_of(idx))) os << int(v) + 1;
        os << "]";
        first = false;
    }
    return first ? "0" : os.str();
}

template class HeckeCore<Fp>;
template class HeckeCore<Rational>;
template class AKAlgebra<Fp>;
template class AKAlgebra<Rational>;

}  // namespace cqs
