#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cqs/check.hpp"
#include "cqs/schur.hpp"

namespace cqs {

template <class K>
using AKSchur = SchurAlgebra<AKAlgebra<K>>;
template <class K>
using FlatSchur = SchurAlgebra<FlatAlgebra<K>>;

// A cell module together with the weight (poset index of the type) of each
// basis vector. Generators always start with one projector per weight.
template <class K>
struct CellModule {
    std::string label;
    int lambda = -1;  // poset index
    ModuleRep<K> rep;
    std::vector<int> weight;
};

// The subalgebra S^0 inside S(Lambda): classification of the basis into
// C^0(lambda, eps), the index sets I and J, generating sets, and the
// quotient by S^00.
template <class K>
class S0Data {
public:
    explicit S0Data(const AKSchur<K>& S);

    const AKSchur<K>& schur() const { return S_; }
    const Poset& poset() const { return S_.poset(); }

    // -1 when the basis element is not in C^0
    int eps(std::uint32_t k) const { return eps_[k]; }
    // membership by the defining a/alpha condition, independently of eps()
    bool in_c0_by_definition(std::uint32_t k) const;
    const std::vector<std::uint32_t>& c0() const { return c0_; }
    const std::vector<OmegaElt>& omega() const { return omega_; }
    bool in_omega(int lambda, int e) const;

    bool plus(int cell, int pos) const { return plus_[cell][pos]; }
    // positions in the cell's tableau list
    std::vector<int> I(int cell, int e) const;
    std::vector<int> J(int cell, int e) const;

    // projectors, phi_{S T^lambda} (all S), phi_{T^lambda T} (T in T_0^+),
    // and every C^0(lambda, 1) basis element. Without the last group the
    // list still generates S^0 modulo S^00, which is enough for modules
    // killed by S^00.
    std::vector<SchurGen<K>> s0_generators(bool with_s00 = true) const;
    // the images in the quotient: projectors cut to eps = 0, and the eps = 0
    // cell generators
    std::vector<SchurGen<K>> bar_generators() const;

    SparseVec<K> bar(const SparseVec<K>& x) const;
    SparseVec<K> bar_mul(std::uint32_t i, std::uint32_t j) const { return bar(S_.compose(i, j)); }
    std::function<bool(std::uint32_t)> keep_bar() const {
        return [this](std::uint32_t k) { return eps_[k] == 0; };
    }

private:
    const AKSchur<K>& S_;
    std::vector<int> eps_;
    std::vector<std::uint32_t> c0_;
    std::vector<OmegaElt> omega_;
    std::vector<std::vector<char>> plus_;
    std::vector<std::vector<int>> alpha_, avec_;  // per poset index
};

// Module families. All carry Gram matrices except Z^{(lambda,1)}.
template <class K>
CellModule<K> weyl_module(const AKSchur<K>& S, int cell);
template <class K>
CellModule<K> weyl_module_restricted(const S0Data<K>& D, int cell);  // W^lambda with the S^0 generators
template <class K>
CellModule<K> z0_module(const S0Data<K>& D, int cell, int row = -1,
                        bool with_s00 = true);  // row in I(lambda,0); default T^lambda
template <class K>
CellModule<K> z1_module(const S0Data<K>& D, int cell, int row);
template <class K>
CellModule<K> zbar_module(const S0Data<K>& D, int cell);
template <class K>
CellModule<K> flat_weyl_module(const FlatSchur<K>& F, int cell);

// Checks. Each returns one entry per check id.
template <class K>
Check check_factorization(const AKSchur<K>& S);  // phi_{S T^l} phi_{T^l T} = phi_ST
template <class K>
Check check_cellular_triangularity(const AKSchur<K>& S, const Budget& b);
template <class K>
Check check_identity(const AKSchur<K>& S, const Budget& b);
template <class K>
Check check_star_antihom(const AKSchur<K>& S, const Budget& b);
template <class K>
Check check_associativity(const AKSchur<K>& S, const Budget& b);
template <class K>
Check check_cell_rows(const AKSchur<K>& S, const Budget& b);

template <class K>
Check check_c0_partition(const S0Data<K>& D);
template <class K>
Check check_unit_in_s0(const S0Data<K>& D);
template <class K>
Check check_closure(const S0Data<K>& D, const Budget& b);
template <class K>
Check check_standardly_based(const S0Data<K>& D, const Budget& b);
template <class K>
Check check_full_based_witness(const S0Data<K>& D);
template <class K>
Check check_s00_ideal(const S0Data<K>& D, const Budget& b);
template <class K>
Check check_f_antihom(const S0Data<K>& D, const Budget& b);
template <class K>
Check check_bar_cellular(const S0Data<K>& D, const Budget& b);
template <class K>
Check check_s0_spans(const S0Data<K>& D);
template <class K>
std::vector<Check> check_z_modules(const S0Data<K>& D, const Budget& b);
template <class K>
Check check_tensor_theorem(const S0Data<K>& D, std::size_t cap = 50000);
template <class K>
Check check_flat_isomorphism(const S0Data<K>& D, const FlatSchur<K>& F, const Budget& b = {});
template <class K>
Check check_flat_blocks(const FlatSchur<K>& F);

// Thrown when a computation would exceed a configured resource cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cqs
