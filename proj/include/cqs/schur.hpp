#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "cqs/flat.hpp"
#include "cqs/hecke.hpp"
#include "cqs/murphy.hpp"
#include "cqs/multicomb.hpp"
#include "cqs/repkit.hpp"

namespace cqs {

template <class K>
using SparseVec = std::vector<std::pair<std::uint32_t, K>>;

template <class K>
K coeff(const SparseVec<K>& x, std::uint32_t k) {
    for (const auto& [i, c] : x)
        if (i == k) return c;
    return K(0);
}

// Which semistandard tableaux index the basis: all of T_0, or only T_0^+
// (the modified algebra).
enum class Flavor { Full, Plus };

struct CellTab {
    int mu;  // poset index of Type(T)
    SSTableau tab;
};

struct SchurCell {
    int lambda;                 // poset index
    std::vector<CellTab> tabs;  // grouped by type in poset order
    int top = -1;               // position of T^lambda
    std::size_t start = 0;      // basis position of (top-left) pair (0, 0)
    std::size_t size() const { return tabs.size(); }
};

struct SchurIndex {
    int cell, s, t;
};

// A generator of an algebra acting on a cell module, as a combination of
// basis elements.
template <class K>
struct SchurGen {
    std::string label;
    SparseVec<K> elt;
};

// phi_ST maps m_nu h to m_ST h; the product x y applies y after x's image,
// i.e. (x y)(m) = x(y(m)) composed on the right as in the solve-and-expand
// recipe: m_{S1T1} h with m_{mu2} h = m_{S2T2}.
template <class Alg>
class SchurAlgebra {
public:
    using K = typename AlgVec<Alg>::value_type;

    SchurAlgebra(const Alg& A, const Poset& P, Flavor flavor);

    const Alg& algebra() const { return A_; }
    const Poset& poset() const { return P_; }
    Flavor flavor() const { return flavor_; }
    std::size_t dim() const { return index_.size(); }

    const std::vector<SchurCell>& cells() const { return cells_; }
    int cell_of(int lambda) const;  // -1 when lambda is not a cell
    const SchurIndex& index(std::size_t k) const { return index_[k]; }
    std::uint32_t position(int cell, int s, int t) const {
        return static_cast<std::uint32_t>(cells_[cell].start + s * cells_[cell].size() + t);
    }
    int mu_of(std::size_t k) const { return cells_[index_[k].cell].tabs[index_[k].s].mu; }
    int nu_of(std::size_t k) const { return cells_[index_[k].cell].tabs[index_[k].t].mu; }
    int lambda_of(std::size_t k) const { return cells_[index_[k].cell].lambda; }
    std::uint32_t star_index(std::size_t k) const {
        return position(index_[k].cell, index_[k].t, index_[k].s);
    }
    // position of a tableau in cells_[cell].tabs, -1 if absent
    int find_tab(int cell, const SSTableau& T) const;
    std::string index_str(std::size_t k) const;

    // Hecke-side data
    const Vec<K>& m_ST(std::size_t k) const;
    const Vec<K>& A_T(int cell, int t) const { return atab_[cell][t]; }
    Vec<K> hmul(const Vec<K>& x, const Vec<K>& y) const;  // product in the Hecke algebra via the table

    SparseVec<K> compose(std::size_t i, std::size_t j) const;
    SparseVec<K> mul(const SparseVec<K>& x, const SparseVec<K>& y) const;
    SparseVec<K> star(const SparseVec<K>& x) const;
    // expand an element of m_mu^* H cap H m_nu in {m_ST : Type(S)=mu, Type(T)=nu}
    std::optional<SparseVec<K>> expand(int mu, int nu, const Vec<K>& y) const;
    const SparseVec<K>& projector(int mu) const;  // phi_mu
    SparseVec<K> identity() const;

    // Cell module on the row s of a cell, spanned by the columns cols, with
    // the given generators acting on the right. keep() filters the product
    // before reading coefficients (used for the quotient algebra); the
    // result must lie in the cell row plus strictly higher cells.
    ModuleRep<K> cell_module(int cell, int s, const std::vector<int>& cols, const std::vector<SchurGen<K>>& gens,
                             const std::function<bool(std::uint32_t)>& keep = {}) const;
    // <phi_S, phi_T> read off phi_{u S} phi_{T v} at position (u, v)
    Matrix<K> cell_gram(int cell, const std::vector<int>& cols, int u, int v,
                        const std::function<bool(std::uint32_t)>& keep = {}) const;

    // generators: phi_mu, phi_{S T^lambda} and phi_{T^lambda T}
    std::vector<SchurGen<K>> standard_generators() const;

    // memo table access for the disk cache
    using Record = std::tuple<std::uint32_t, std::uint32_t, SparseVec<K>>;
    std::vector<Record> table() const;
    void preload(std::uint32_t i, std::uint32_t j, SparseVec<K> v);
    std::size_t composes_computed() const { return computed_; }

private:
    const Alg& A_;
    const Poset& P_;
    Flavor flavor_;
    std::vector<SchurCell> cells_;
    std::vector<int> cell_of_;
    std::vector<SchurIndex> index_;
    std::vector<std::vector<Vec<K>>> atab_;
    std::vector<Vec<K>> mlambda_;          // per poset index, m_mu
    std::vector<Matrix<K>> lb_;           // left multiplication by each Hecke basis vector
    std::vector<std::vector<std::uint32_t>> block_;  // basis positions per (mu, nu)

    mutable std::shared_mutex mx_;
    mutable std::unordered_map<std::size_t, Vec<K>> mst_;
    mutable std::unordered_map<std::size_t, Vec<K>> h_;
    mutable std::unordered_map<int, std::shared_ptr<Solver<K>>> msolver_;
    mutable std::unordered_map<std::size_t, std::shared_ptr<Solver<K>>> bsolver_;
    mutable std::unordered_map<int, SparseVec<K>> proj_;
    mutable std::unordered_map<std::uint64_t, SparseVec<K>> memo_;
    mutable std::size_t computed_ = 0;

    const Vec<K>& h_of(std::size_t j) const;
    const Solver<K>& member_solver(int mu) const;
    const Solver<K>& block_solver(int mu, int nu) const;
};

extern template class SchurAlgebra<AKAlgebra<Fp>>;
extern template class SchurAlgebra<AKAlgebra<Rational>>;
extern template class SchurAlgebra<FlatAlgebra<Fp>>;
extern template class SchurAlgebra<FlatAlgebra<Rational>>;

}  // namespace cqs
