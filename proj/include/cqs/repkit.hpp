#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cqs/linalg.hpp"

namespace cqs {

// A right module given by one action matrix per generator: row i of
// gens[g] is the image of basis vector i under generator g.
template <class K>
struct ModuleRep {
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<Matrix<K>> gens;
    std::optional<Matrix<K>> gram;

    void add(std::string label, Matrix<K> M) {
        labels.push_back(std::move(label));
        gens.push_back(std::move(M));
    }
};

// Sparse copy of the generators, used by the spinning loop.
template <class K>
class SparseAction {
public:
    explicit SparseAction(const ModuleRep<K>& rep, bool transpose = false);
    std::size_t size() const { return rows_.size(); }
    Vec<K> apply(std::size_t g, const Vec<K>& v) const;

private:
    std::size_t dim_;
    // per generator, per row: (col, value)
    std::vector<std::vector<std::vector<std::pair<std::uint32_t, K>>>> rows_;
};

// Smallest submodule containing the seeds (transpose = dual action v -> v M^T).
template <class K>
Echelon<K> spin(const ModuleRep<K>& rep, const std::vector<Vec<K>>& seeds, bool transpose = false);
template <class K>
Echelon<K> spin(const SparseAction<K>& act, std::size_t dim, const std::vector<Vec<K>>& seeds);

template <class K>
bool is_stable(const ModuleRep<K>& rep, const Echelon<K>& U);

template <class K>
ModuleRep<K> submodule(const ModuleRep<K>& rep, const Echelon<K>& U);
template <class K>
ModuleRep<K> quotient(const ModuleRep<K>& rep, const Echelon<K>& U);

// Gram radical {v : v G = 0}; requires rep.gram.
template <class K>
Echelon<K> gram_radical(const ModuleRep<K>& rep);
// W / rad W
template <class K>
ModuleRep<K> simple_head(const ModuleRep<K>& rep);

struct ChopStats {
    std::size_t spins = 0, norton_tests = 0, random_elements = 0;
};

// A proper nonzero submodule, or nullopt when the module is certified
// irreducible by Norton's test. Throws std::runtime_error when undecided.
template <class K>
std::optional<Echelon<K>> find_submodule(const ModuleRep<K>& rep, std::mt19937_64& rng, ChopStats* stats = nullptr);

// Irreducible subquotients of a composition series, bottom to top.
template <class K>
std::vector<ModuleRep<K>> composition_factors(const ModuleRep<K>& rep, std::uint64_t seed, ChopStats* stats = nullptr);

// Isomorphism fingerprint of a simple module: dimension and generator traces.
template <class K>
struct Fingerprint {
    std::size_t dim = 0;
    std::vector<K> traces;
    bool operator==(const Fingerprint&) const = default;
};
template <class K>
Fingerprint<K> fingerprint(const ModuleRep<K>& rep);

template <class K>
class SimpleLibrary {
public:
    // throws std::runtime_error when two entries share a fingerprint
    SimpleLibrary(std::vector<std::string> labels, const std::vector<ModuleRep<K>>& simples);
    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    // index of the matching simple; throws when none matches
    std::size_t identify(const ModuleRep<K>& factor) const;

private:
    std::vector<std::string> labels_;
    std::vector<Fingerprint<K>> fps_;
};

// multiplicity of each library simple among the composition factors
template <class K>
std::vector<int> multiplicities(const ModuleRep<K>& rep, const SimpleLibrary<K>& lib, std::uint64_t seed,
                                ChopStats* stats = nullptr);

struct DecompMatrix {
    std::vector<std::string> labels;  // rows and columns
    std::vector<std::vector<int>> d;  // d[row][col]

    std::size_t size() const { return labels.size(); }
    std::string csv() const;
    bool operator==(const DecompMatrix&) const = default;
};

// Unit diagonal and d[l][m] != 0 only when dom(l, m).
template <class Dom>
bool is_unitriangular(const DecompMatrix& D, Dom dom) {
    for (std::size_t i = 0; i < D.size(); ++i)
        for (std::size_t j = 0; j < D.size(); ++j) {
            if (i == j && D.d[i][j] != 1) return false;
            if (i != j && D.d[i][j] != 0 && !dom(i, j)) return false;
        }
    return true;
}

// Elements of K tried as eigenvalues when chopping.
template <class K>
std::vector<K> eigen_candidates();

template <class K>
K random_scalar(std::mt19937_64& rng);

}  // namespace cqs
