#pragma once

#include <stdexcept>
#include <vector>

#include "cqs/hecke.hpp"
#include "cqs/multicomb.hpp"

namespace cqs {

template <class Alg>
using AlgVec = decltype(std::declval<const Alg&>().one());

// T_{d}^* = T_{d^{-1}}
template <class Alg>
auto murphy_element(const Alg& A, const AlgVec<Alg>& m_lambda, const Perm& ds, const Perm& dt) {
    const auto& S = A.sym();
    auto left = A.Tw(S.inverse(S.index(ds)));
    return A.mul(A.mul(left, m_lambda), A.Tw(S.index(dt)));
}

struct MurphyIndex {
    int shape;  // index into the shape list
    int s, t;   // positions in std_tableaux(shape)
};

template <class Alg>
struct MurphyBasis {
    std::vector<Multicomp> shapes;
    std::vector<std::vector<StdTableau>> tabs;
    std::vector<MurphyIndex> index;
    std::vector<AlgVec<Alg>> elts;

    // coordinate matrix: one column per Murphy element
    auto coordinate_matrix(std::size_t dim) const {
        using K = typename AlgVec<Alg>::value_type;
        Matrix<K> M(dim, elts.size());
        for (std::size_t j = 0; j < elts.size(); ++j) M.set_col(j, elts[j]);
        return M;
    }
};

// m_st over all the given multipartitions, in (shape, s, t) order
template <class Alg>
MurphyBasis<Alg> murphy_basis(const Alg& A, const std::vector<Multicomp>& shapes) {
    MurphyBasis<Alg> B;
    B.shapes = shapes;
    for (int l = 0; l < static_cast<int>(shapes.size()); ++l) {
        B.tabs.push_back(std_tableaux(shapes[l]));
        auto m = A.m_weight(shapes[l]);
        const auto& T = B.tabs.back();
        for (int s = 0; s < static_cast<int>(T.size()); ++s)
            for (int t = 0; t < static_cast<int>(T.size()); ++t) {
                B.index.push_back({l, s, t});
                B.elts.push_back(murphy_element(A, m, T[s].d, T[t].d));
            }
    }
    return B;
}

template <class K>
struct SpechtModule {
    Multicomp shape;
    std::vector<Matrix<K>> gens;  // right action of T_1..T_n on {m_t}
    Matrix<K> gram;
    std::size_t dim() const { return gram.rows(); }
};

// S^lambda for each multipartition, with actions computed modulo the span
// of Murphy elements of strictly more dominant shape.
template <class K>
std::vector<SpechtModule<K>> specht_modules(const AKAlgebra<K>& A, const std::vector<Multicomp>& shapes) {
    auto B = murphy_basis(A, shapes);
    Solver<K> solver(B.coordinate_matrix(A.dim()));
    if (solver.rank() != A.dim()) throw std::runtime_error("Murphy basis is not a basis");
    auto expand = [&](const Vec<K>& y) {
        auto c = solver.solve(std::span<const K>(y));
        if (!c) throw std::runtime_error("Murphy expansion failed");
        return *c;
    };
    // position of (shape, s, t) in B
    std::vector<std::size_t> start(shapes.size());
    for (std::size_t j = 0, l = 0; j < B.index.size(); ++j)
        if (j == 0 || B.index[j].shape != B.index[j - 1].shape) start[l++] = j;
    auto pos = [&](int l, int s, int t) { return start[l] + s * B.tabs[l].size() + t; };

    std::vector<SpechtModule<K>> out;
    for (int l = 0; l < static_cast<int>(shapes.size()); ++l) {
        const auto& T = B.tabs[l];
        const std::size_t d = T.size();
        SpechtModule<K> S{shapes[l], {}, Matrix<K>(d, d)};
        auto check_support = [&](const Vec<K>& c) {
            for (std::size_t j = 0; j < c.size(); ++j) {
                if (c[j].is_zero()) continue;
                int lj = B.index[j].shape;
                if (lj == l) {
                    if (B.index[j].s != 0) throw std::runtime_error("Specht action leaves the cell row");
                } else if (!strictly_dominates(shapes[lj], shapes[l])) {
                    throw std::runtime_error("Specht action escapes the cell filtration");
                }
            }
        };
        for (int g = 1; g <= A.n(); ++g) {
            Matrix<K> M(d, d);
            auto Tg = A.T(g);
            for (std::size_t t = 0; t < d; ++t) {
                auto c = expand(A.mul(B.elts[pos(l, 0, t)], Tg));
                check_support(c);
                for (std::size_t u = 0; u < d; ++u) M(t, u) = c[pos(l, 0, u)];
            }
            S.gens.push_back(std::move(M));
        }
        for (std::size_t s = 0; s < d; ++s)
            for (std::size_t t = 0; t < d; ++t) {
                auto c = expand(A.mul(B.elts[pos(l, 0, s)], B.elts[pos(l, t, 0)]));
                check_support(c);
                S.gram(s, t) = c[pos(l, 0, 0)];
            }
        out.push_back(std::move(S));
    }
    return out;
}

}  // namespace cqs
