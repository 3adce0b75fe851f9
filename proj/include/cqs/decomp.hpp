#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cqs/subquot.hpp"

namespace cqs {

// A decomposition matrix computed two ways: by chopping each module into
// composition factors and identifying them against the simple heads, and by
// peeling weight characters (ranks of the projector actions) against the
// characters of the heads. The second route is always available; the first
// can be refused (over Q above the chopping limit) or undecided.
struct Decomposition {
    std::string family;
    std::optional<DecompMatrix> chopping;
    DecompMatrix characters;
    ChopStats stats;
    std::string note;

    const DecompMatrix& matrix() const { return characters; }
    bool routes_agree() const { return !chopping || *chopping == characters; }
};

// The family is consumed: its matrices are moved into the chopping copies.
template <class K>
Decomposition decompose(std::vector<CellModule<K>> family, const Poset& P, std::uint64_t seed, bool chop = true);

// One module per cell, in poset order. The Z family acts through S^0 / S^00.
template <class K>
std::vector<CellModule<K>> weyl_family(const AKSchur<K>& S);
template <class K>
std::vector<CellModule<K>> z0_family(const S0Data<K>& D);
template <class K>
std::vector<CellModule<K>> zbar_family(const S0Data<K>& D);
template <class K>
std::vector<CellModule<K>> flat_family(const FlatSchur<K>& F);

// Relations between D_S, D_Z and D_bar (and D_flat when given): equality of
// the quotient and Z matrices, D_Z <= D_S, equality on equal types,
// vanishing off equal types, and unitriangularity.
std::vector<Check> check_decomp_relations(const Poset& P, const DecompMatrix& DS, const DecompMatrix& DZ,
                                          const DecompMatrix& Dbar, const DecompMatrix* Dflat = nullptr);

// [W^lambda : L^mu] against the product of level-one decomposition numbers
// computed by an independent r = 1 run for each component. Entries with
// different types are compared only when cross_types_vanish is set (the
// flat algebra); for S(Lambda) they can be nonzero.
template <class K>
Check check_product_formula(const Poset& P, const Params<K>& par, const DecompMatrix& D, std::uint64_t seed,
                            bool cross_types_vanish);

// The level-one decomposition matrix of S(m, n) with the given q.
template <class K>
DecompMatrix qschur_r1_decomp(int n, int m, const K& q, std::uint64_t seed);

}  // namespace cqs
