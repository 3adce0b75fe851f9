#pragma once

// Template definitions for schur.hpp; included by the instantiating sources.

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "cqs/schur.hpp"

namespace cqs {

template <class Alg>
SchurAlgebra<Alg>::SchurAlgebra(const Alg& A, const Poset& P, Flavor flavor) : A_(A), P_(P), flavor_(flavor) {
    if (A.n() != P.n() || A.r() != P.r()) throw std::invalid_argument("algebra and poset disagree on n or r");
    const int L = P.size();
    cell_of_.assign(L, -1);
    for (int l : P.plus()) {
        const Multicomp& lam = P.at(l);
        SchurCell c;
        c.lambda = l;
        for (int mu = 0; mu < L; ++mu) {
            auto tabs = flavor == Flavor::Full ? semistandard_tableaux(lam, P.at(mu)) : t0_plus(lam, P.at(mu));
            for (auto& T : tabs) c.tabs.push_back({mu, std::move(T)});
        }
        SSTableau top = canonical_tableau(lam);
        for (std::size_t i = 0; i < c.tabs.size(); ++i)
            if (c.tabs[i].tab == top) c.top = static_cast<int>(i);
        if (c.top < 0) throw std::logic_error("T^lambda missing from its own cell");
        c.start = index_.size();
        const int cid = static_cast<int>(cells_.size());
        for (int s = 0; s < static_cast<int>(c.size()); ++s)
            for (int t = 0; t < static_cast<int>(c.size()); ++t) index_.push_back({cid, s, t});
        cell_of_[l] = cid;
        cells_.push_back(std::move(c));
    }

    block_.resize(static_cast<std::size_t>(L) * L);
    for (std::size_t k = 0; k < index_.size(); ++k)
        block_[static_cast<std::size_t>(mu_of(k)) * L + nu_of(k)].push_back(static_cast<std::uint32_t>(k));

    lb_.reserve(A.dim());
    for (std::size_t j = 0; j < A.dim(); ++j) lb_.push_back(A.left_matrix(A.basis(j)));

    for (int mu = 0; mu < L; ++mu) mlambda_.push_back(A.m_weight(P.at(mu)));

    // A_T = sum over t with nu(t) = T of q^{l(d(t))} T_{d(t)}
    const auto& S = A.sym();
    for (const auto& c : cells_) {
        const Multicomp& lam = P.at(c.lambda);
        std::map<SSTableau, int> where;
        std::vector<int> types;
        for (std::size_t i = 0; i < c.size(); ++i) {
            where.emplace(c.tabs[i].tab, static_cast<int>(i));
            if (types.empty() || types.back() != c.tabs[i].mu) types.push_back(c.tabs[i].mu);
        }
        std::vector<Vec<K>> at(c.size(), A.zero());
        for (const auto& t : std_tableaux(lam)) {
            const int w = S.index(t.d);
            const K coef = A.params().q.pow(t.length);
            for (int mu : types) {
                auto [T, ok] = cqs::mu_of(t, lam, P.at(mu));
                if (!ok) continue;
                auto it = where.find(T);
                if (it == where.end()) continue;
                Vec<K> tw = A.Tw(w);
                for (std::size_t j = 0; j < A.dim(); ++j)
                    if (!tw[j].is_zero()) at[it->second][j] += coef * tw[j];
            }
        }
        atab_.push_back(std::move(at));
    }
}

template <class Alg>
int SchurAlgebra<Alg>::cell_of(int lambda) const {
    return lambda >= 0 && lambda < static_cast<int>(cell_of_.size()) ? cell_of_[lambda] : -1;
}

template <class Alg>
int SchurAlgebra<Alg>::find_tab(int cell, const SSTableau& T) const {
    const auto& tabs = cells_[cell].tabs;
    for (std::size_t i = 0; i < tabs.size(); ++i)
        if (tabs[i].tab == T) return static_cast<int>(i);
    return -1;
}

template <class Alg>
std::string SchurAlgebra<Alg>::index_str(std::size_t k) const {
    const auto& I = index_[k];
    const auto& c = cells_[I.cell];
    return "(" + P_.at(c.lambda).str() + ";" + c.tabs[I.s].tab.str() + ";" + c.tabs[I.t].tab.str() + ")";
}

template <class Alg>
Vec<typename SchurAlgebra<Alg>::K> SchurAlgebra<Alg>::hmul(const Vec<K>& x, const Vec<K>& y) const {
    const std::size_t n = A_.dim();
    Vec<K> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        const Matrix<K>& M = lb_[i];
        for (std::size_t r = 0; r < n; ++r) {
            K acc = 0;
            auto row = M.row(r);
            for (std::size_t c = 0; c < n; ++c)
                if (!y[c].is_zero() && !row[c].is_zero()) acc += row[c] * y[c];
            if (!acc.is_zero()) out[r] += x[i] * acc;
        }
    }
    return out;
}

template <class Alg>
const Vec<typename SchurAlgebra<Alg>::K>& SchurAlgebra<Alg>::m_ST(std::size_t k) const {
    {
        std::shared_lock lk(mx_);
        auto it = mst_.find(k);
        if (it != mst_.end()) return it->second;
    }
    const auto& I = index_[k];
    const auto& c = cells_[I.cell];
    Vec<K> v = hmul(hmul(A_.star(atab_[I.cell][I.s]), mlambda_[c.lambda]), atab_[I.cell][I.t]);
    std::unique_lock lk(mx_);
    return mst_.emplace(k, std::move(v)).first->second;
}

template <class Alg>
const Solver<typename SchurAlgebra<Alg>::K>& SchurAlgebra<Alg>::member_solver(int mu) const {
    {
        std::shared_lock lk(mx_);
        auto it = msolver_.find(mu);
        if (it != msolver_.end()) return *it->second;
    }
    const std::size_t n = A_.dim();
    Matrix<K> M(n, n);
    const Vec<K>& m = mlambda_[mu];
    for (std::size_t i = 0; i < n; ++i)
        if (!m[i].is_zero()) M = matadd(M, lb_[i], m[i]);
    auto s = std::make_shared<Solver<K>>(M);
    std::unique_lock lk(mx_);
    return *msolver_.emplace(mu, std::move(s)).first->second;
}

template <class Alg>
const Solver<typename SchurAlgebra<Alg>::K>& SchurAlgebra<Alg>::block_solver(int mu, int nu) const {
    const std::size_t key = static_cast<std::size_t>(mu) * P_.size() + nu;
    {
        std::shared_lock lk(mx_);
        auto it = bsolver_.find(key);
        if (it != bsolver_.end()) return *it->second;
    }
    const auto& cols = block_[key];
    Matrix<K> M(A_.dim(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) M.set_col(j, m_ST(cols[j]));
    auto s = std::make_shared<Solver<K>>(M);
    if (s->rank() != cols.size()) throw std::runtime_error("the elements m_ST of a block are dependent");
    std::unique_lock lk(mx_);
    return *bsolver_.emplace(key, std::move(s)).first->second;
}

template <class Alg>
const Vec<typename SchurAlgebra<Alg>::K>& SchurAlgebra<Alg>::h_of(std::size_t j) const {
    {
        std::shared_lock lk(mx_);
        auto it = h_.find(j);
        if (it != h_.end()) return it->second;
    }
    auto h = member_solver(mu_of(j)).solve(std::span<const K>(m_ST(j)));
    if (!h) throw std::runtime_error("m_ST is not in M^mu for " + index_str(j));
    std::unique_lock lk(mx_);
    return h_.emplace(j, std::move(*h)).first->second;
}

template <class Alg>
std::optional<SparseVec<typename SchurAlgebra<Alg>::K>> SchurAlgebra<Alg>::expand(int mu, int nu,
                                                                                  const Vec<K>& y) const {
    const auto& cols = block_[static_cast<std::size_t>(mu) * P_.size() + nu];
    if (cols.empty()) {
        if (is_zero_vec<K>(y)) return SparseVec<K>{};
        return std::nullopt;
    }
    auto c = block_solver(mu, nu).solve(std::span<const K>(y));
    if (!c) return std::nullopt;
    SparseVec<K> out;
    for (std::size_t j = 0; j < cols.size(); ++j)
        if (!(*c)[j].is_zero()) out.emplace_back(cols[j], (*c)[j]);
    return out;
}

template <class Alg>
SparseVec<typename SchurAlgebra<Alg>::K> SchurAlgebra<Alg>::compose(std::size_t i, std::size_t j) const {
    if (nu_of(i) != mu_of(j)) return {};
    const std::uint64_t key = static_cast<std::uint64_t>(i) * dim() + j;
    {
        std::shared_lock lk(mx_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Vec<K> y = hmul(m_ST(i), h_of(j));
    auto r = expand(mu_of(i), nu_of(j), y);
    if (!r) throw std::runtime_error("product does not expand in the semistandard basis: " + index_str(i) + " * " +
                                     index_str(j));
    std::unique_lock lk(mx_);
    ++computed_;
    return memo_.emplace(key, std::move(*r)).first->second;
}

namespace detail {

template <class K>
void axpy(std::map<std::uint32_t, K>& acc, const K& a, const SparseVec<K>& x) {
    for (const auto& [k, c] : x) acc[k] += a * c;
}

template <class K>
SparseVec<K> to_sparse(const std::map<std::uint32_t, K>& acc) {
    SparseVec<K> out;
    for (const auto& [k, c] : acc)
        if (!c.is_zero()) out.emplace_back(k, c);
    return out;
}

}  // namespace detail

template <class Alg>
SparseVec<typename SchurAlgebra<Alg>::K> SchurAlgebra<Alg>::mul(const SparseVec<K>& x,
                                                                 const SparseVec<K>& y) const {
    std::map<std::uint32_t, K> acc;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            if (nu_of(a) != mu_of(b)) continue;
            detail::axpy(acc, ca * cb, compose(a, b));
        }
    return detail::to_sparse(acc);
}

template <class Alg>
SparseVec<typename SchurAlgebra<Alg>::K> SchurAlgebra<Alg>::star(const SparseVec<K>& x) const {
    std::map<std::uint32_t, K> acc;
    for (const auto& [k, c] : x) acc[star_index(k)] += c;
    return detail::to_sparse(acc);
}

template <class Alg>
const SparseVec<typename SchurAlgebra<Alg>::K>& SchurAlgebra<Alg>::projector(int mu) const {
    {
        std::shared_lock lk(mx_);
        auto it = proj_.find(mu);
        if (it != proj_.end()) return it->second;
    }
    auto r = expand(mu, mu, mlambda_[mu]);
    if (!r) throw std::runtime_error("m_mu does not expand for mu = " + P_.at(mu).str());
    std::unique_lock lk(mx_);
    return proj_.emplace(mu, std::move(*r)).first->second;
}

template <class Alg>
SparseVec<typename SchurAlgebra<Alg>::K> SchurAlgebra<Alg>::identity() const {
    std::map<std::uint32_t, K> acc;
    for (int mu = 0; mu < P_.size(); ++mu) detail::axpy(acc, K(1), projector(mu));
    return detail::to_sparse(acc);
}

template <class Alg>
ModuleRep<typename SchurAlgebra<Alg>::K> SchurAlgebra<Alg>::cell_module(
    int cell, int s, const std::vector<int>& cols, const std::vector<SchurGen<K>>& gens,
    const std::function<bool(std::uint32_t)>& keep) const {
    const auto& c = cells_[cell];
    std::vector<int> colpos(c.size(), -1);
    for (std::size_t i = 0; i < cols.size(); ++i) colpos[cols[i]] = static_cast<int>(i);
    const std::size_t d = cols.size();

    ModuleRep<K> rep;
    rep.dim = d;
    for (const auto& g : gens) {
        Matrix<K> M(d, d);
        for (std::size_t ci = 0; ci < d; ++ci) {
            const std::uint32_t row = position(cell, s, cols[ci]);
            std::map<std::uint32_t, K> acc;
            for (const auto& [k, x] : g.elt)
                if (mu_of(k) == c.tabs[cols[ci]].mu) detail::axpy(acc, x, compose(row, k));
            for (const auto& [k, v] : acc) {
                if (v.is_zero() || (keep && !keep(k))) continue;
                const auto& I = index_[k];
                if (I.cell == cell) {
                    if (I.s != s) throw std::runtime_error("cell module: product leaves the cell row");
                    if (colpos[I.t] < 0) throw std::runtime_error("cell module: product leaves the column set");
                    M(ci, colpos[I.t]) += v;
                } else if (!strictly_dominates(P_.at(cells_[I.cell].lambda), P_.at(c.lambda))) {
                    throw std::runtime_error("cell module: product below the cell at " + index_str(k));
                }
            }
        }
        rep.add(g.label, std::move(M));
    }
    return rep;
}

template <class Alg>
Matrix<typename SchurAlgebra<Alg>::K> SchurAlgebra<Alg>::cell_gram(
    int cell, const std::vector<int>& cols, int u, int v, const std::function<bool(std::uint32_t)>& keep) const {
    const std::size_t d = cols.size();
    const std::uint32_t target = position(cell, u, v);
    Matrix<K> G(d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            if (keep && !keep(target)) continue;
            G(a, b) = coeff(compose(position(cell, u, cols[a]), position(cell, cols[b], v)), target);
        }
    return G;
}

template <class Alg>
std::vector<SchurGen<typename SchurAlgebra<Alg>::K>> SchurAlgebra<Alg>::standard_generators() const {
    std::vector<SchurGen<K>> g;
    for (int mu = 0; mu < P_.size(); ++mu) g.push_back({"phi_" + P_.at(mu).str(), projector(mu)});
    for (std::size_t cid = 0; cid < cells_.size(); ++cid) {
        const auto& c = cells_[cid];
        for (int s = 0; s < static_cast<int>(c.size()); ++s) {
            const auto a = position(static_cast<int>(cid), s, c.top);
            g.push_back({"phi" + index_str(a), {{a, K(1)}}});
            if (s == c.top) continue;
            const auto b = position(static_cast<int>(cid), c.top, s);
            g.push_back({"phi" + index_str(b), {{b, K(1)}}});
        }
    }
    return g;
}

template <class Alg>
std::vector<typename SchurAlgebra<Alg>::Record> SchurAlgebra<Alg>::table() const {
    std::shared_lock lk(mx_);
    std::vector<Record> out;
    out.reserve(memo_.size());
    for (const auto& [key, v] : memo_)
        out.emplace_back(static_cast<std::uint32_t>(key / dim()), static_cast<std::uint32_t>(key % dim()), v);
    std::sort(out.begin(), out.end(), [](const Record& a, const Record& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    return out;
}

template <class Alg>
void SchurAlgebra<Alg>::preload(std::uint32_t i, std::uint32_t j, SparseVec<K> v) {
    if (i >= dim() || j >= dim()) throw std::out_of_range("cached index out of range");
    std::unique_lock lk(mx_);
    memo_[static_cast<std::uint64_t>(i) * dim() + j] = std::move(v);
}

}  // namespace cqs
