#include "cqs/repkit.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace cqs {

template <class K>
SparseAction<K>::SparseAction(const ModuleRep<K>& rep, bool transpose) : dim_(rep.dim) {
    rows_.resize(rep.gens.size());
    for (std::size_t g = 0; g < rep.gens.size(); ++g) {
        const Matrix<K>& M = rep.gens[g];
        auto& R = rows_[g];
        R.resize(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                const K& x = transpose ? M(j, i) : M(i, j);
                if (!x.is_zero()) R[i].emplace_back(static_cast<std::uint32_t>(j), x);
            }
    }
}

template <class K>
Vec<K> SparseAction<K>::apply(std::size_t g, const Vec<K>& v) const {
    Vec<K> out(dim_);
    const auto& R = rows_[g];
    for (std::size_t i = 0; i < dim_; ++i) {
        if (v[i].is_zero()) continue;
        for (const auto& [j, x] : R[i]) out[j] += v[i] * x;
    }
    return out;
}

template <class K>
Echelon<K> spin(const SparseAction<K>& act, std::size_t dim, const std::vector<Vec<K>>& seeds) {
    Echelon<K> E(dim);
    std::deque<Vec<K>> todo;
    for (const auto& s : seeds)
        if (E.add(s)) todo.push_back(s);
    while (!todo.empty() && E.size() < dim) {
        Vec<K> v = std::move(todo.front());
        todo.pop_front();
        for (std::size_t g = 0; g < act.size() && E.size() < dim; ++g) {
            Vec<K> w = act.apply(g, v);
            if (is_zero_vec<K>(w)) continue;
            if (E.add(w)) todo.push_back(std::move(w));
        }
    }
    return E;
}

template <class K>
Echelon<K> spin(const ModuleRep<K>& rep, const std::vector<Vec<K>>& seeds, bool transpose) {
    return spin(SparseAction<K>(rep, transpose), rep.dim, seeds);
}

template <class K>
bool is_stable(const ModuleRep<K>& rep, const Echelon<K>& U) {
    for (const auto& M : rep.gens)
        for (const auto& u : U.rows())
            if (!U.contains(vecmat<K>(u, M))) return false;
    return true;
}

template <class K>
ModuleRep<K> submodule(const ModuleRep<K>& rep, const Echelon<K>& U) {
    ModuleRep<K> out;
    out.dim = U.size();
    for (std::size_t g = 0; g < rep.gens.size(); ++g) {
        Matrix<K> M(out.dim, out.dim);
        for (std::size_t i = 0; i < out.dim; ++i) {
            Vec<K> img = vecmat<K>(U.rows()[i], rep.gens[g]);
            if (!U.contains(img)) throw std::runtime_error("submodule: subspace is not stable");
            auto c = U.coords(img);
            for (std::size_t j = 0; j < out.dim; ++j) M(i, j) = c[j];
        }
        out.add(rep.labels[g], std::move(M));
    }
    if (rep.gram) {
        Matrix<K> B = U.basis();
        out.gram = matmul(matmul(B, *rep.gram), B.transpose());
    }
    return out;
}

namespace {

std::vector<std::size_t> complement_columns(std::size_t dim, const std::vector<std::size_t>& piv) {
    std::vector<char> is_piv(dim, 0);
    for (auto p : piv) is_piv[p] = 1;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < dim; ++j)
        if (!is_piv[j]) cols.push_back(j);
    return cols;
}

}  // namespace

template <class K>
ModuleRep<K> quotient(const ModuleRep<K>& rep, const Echelon<K>& U) {
    auto C = complement_columns(rep.dim, U.pivots());
    ModuleRep<K> out;
    out.dim = C.size();
    for (std::size_t g = 0; g < rep.gens.size(); ++g) {
        Matrix<K> M(out.dim, out.dim);
        for (std::size_t i = 0; i < out.dim; ++i) {
            Vec<K> r = U.reduce(rep.gens[g].row_vec(C[i]));
            for (std::size_t j = 0; j < out.dim; ++j) M(i, j) = r[C[j]];
        }
        out.add(rep.labels[g], std::move(M));
    }
    return out;
}

template <class K>
Echelon<K> gram_radical(const ModuleRep<K>& rep) {
    if (!rep.gram) throw std::logic_error("gram_radical: module has no form");
    Matrix<K> N = left_nullspace(*rep.gram);
    Echelon<K> E(rep.dim);
    for (std::size_t i = 0; i < N.rows(); ++i) E.add(N.row_vec(i));
    return E;
}

template <class K>
ModuleRep<K> simple_head(const ModuleRep<K>& rep) {
    Echelon<K> rad = gram_radical(rep);
    ModuleRep<K> out = quotient(rep, rad);
    auto C = complement_columns(rep.dim, rad.pivots());
    Matrix<K> G(C.size(), C.size());
    for (std::size_t i = 0; i < C.size(); ++i)
        for (std::size_t j = 0; j < C.size(); ++j) G(i, j) = (*rep.gram)(C[i], C[j]);
    out.gram = std::move(G);
    return out;
}

template <>
std::vector<Fp> eigen_candidates<Fp>() {
    std::vector<Fp> v;
    for (std::uint32_t c = 0; c < Fp::modulus(); ++c) v.emplace_back(c);
    return v;
}

template <>
std::vector<Rational> eigen_candidates<Rational>() {
    return {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2)};
}

template <>
Fp random_scalar<Fp>(std::mt19937_64& rng) {
    return Fp(static_cast<long long>(rng() % Fp::modulus()));
}

template <>
Rational random_scalar<Rational>(std::mt19937_64& rng) {
    return Rational(static_cast<long long>(rng() % 7) - 3);
}

namespace {

// Dimension above which chopping over the rationals is refused.
constexpr std::size_t kRationalChopLimit = 12;
constexpr int kAttempts = 400;

}  // namespace

template <class K>
std::optional<Echelon<K>> find_submodule(const ModuleRep<K>& rep, std::mt19937_64& rng, ChopStats* stats) {
    const std::size_t n = rep.dim;
    if (n == 0) throw std::invalid_argument("find_submodule: zero module");
    if (n == 1) return std::nullopt;
    if (std::is_same_v<K, Rational> && n > kRationalChopLimit)
        throw std::runtime_error("chopping over the rationals is limited to dimension 12");

    SparseAction<K> act(rep), dual(rep, true);
    auto proper = [&](const Echelon<K>& U) { return U.size() > 0 && U.size() < n; };
    auto random_combo = [&]() {
        Matrix<K> x = matscale(Matrix<K>::identity(n), random_scalar<K>(rng));
        for (const auto& M : rep.gens) {
            K c = random_scalar<K>(rng);
            if (!c.is_zero()) x = matadd(x, M, c);
        }
        return x;
    };

    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        Matrix<K> x = random_combo();
        if (attempt % 2 == 1) x = matadd(x, matmul(random_combo(), random_combo()));
        if (stats) ++stats->random_elements;
        for (const K& c : eigen_candidates<K>()) {
            Matrix<K> y = matadd(x, Matrix<K>::identity(n), -c);
            Matrix<K> N = nullspace(y.transpose());  // v y = 0
            if (N.rows() == 0) continue;
            for (std::size_t i = 0; i < N.rows(); ++i) {
                Echelon<K> U = spin(act, n, {N.row_vec(i)});
                if (stats) ++stats->spins;
                if (proper(U)) return U;
            }
            if (N.rows() != 1) continue;
            // Norton: the unique kernel vector spins to everything; test the dual
            Matrix<K> Nd = nullspace(y);  // y w^T = 0, i.e. w y^T = 0
            Echelon<K> Ud = spin(dual, n, {Nd.row_vec(0)});
            if (stats) {
                ++stats->spins;
                ++stats->norton_tests;
            }
            if (!proper(Ud)) return std::nullopt;
            // annihilator of a dual submodule is a submodule
            Matrix<K> ann = nullspace(Ud.basis());
            Echelon<K> U(n);
            for (std::size_t i = 0; i < ann.rows(); ++i) U.add(ann.row_vec(i));
            return U;
        }
    }
    throw std::runtime_error("chopping did not reach a decision");
}

template <class K>
std::vector<ModuleRep<K>> composition_factors(const ModuleRep<K>& rep, std::uint64_t seed, ChopStats* stats) {
    std::mt19937_64 rng(seed);
    std::vector<ModuleRep<K>> out;
    std::vector<ModuleRep<K>> todo{rep};
    while (!todo.empty()) {
        ModuleRep<K> M = std::move(todo.back());
        todo.pop_back();
        if (M.dim == 0) continue;
        auto U = find_submodule(M, rng, stats);
        if (!U) {
            out.push_back(std::move(M));
            continue;
        }
        if (U->size() + quotient(M, *U).dim != M.dim) throw std::logic_error("chop lost dimension");
        todo.push_back(quotient(M, *U));
        todo.push_back(submodule(M, *U));
    }
    return out;
}

template <class K>
Fingerprint<K> fingerprint(const ModuleRep<K>& rep) {
    Fingerprint<K> f;
    f.dim = rep.dim;
    for (const auto& M : rep.gens) f.traces.push_back(M.trace());
    return f;
}

template <class K>
SimpleLibrary<K>::SimpleLibrary(std::vector<std::string> labels, const std::vector<ModuleRep<K>>& simples)
    : labels_(std::move(labels)) {
    if (labels_.size() != simples.size()) throw std::invalid_argument("library label count");
    for (const auto& s : simples) fps_.push_back(fingerprint(s));
    for (std::size_t i = 0; i < fps_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (fps_[i] == fps_[j])
                throw std::runtime_error("simple library is ambiguous: " + labels_[j] + " and " + labels_[i]);
}

template <class K>
std::size_t SimpleLibrary<K>::identify(const ModuleRep<K>& factor) const {
    auto f = fingerprint(factor);
    for (std::size_t i = 0; i < fps_.size(); ++i)
        if (fps_[i] == f) return i;
    throw std::runtime_error("composition factor of dimension " + std::to_string(f.dim) +
                             " matches no simple in the library");
}

template <class K>
std::vector<int> multiplicities(const ModuleRep<K>& rep, const SimpleLibrary<K>& lib, std::uint64_t seed,
                                ChopStats* stats) {
    std::vector<int> m(lib.size(), 0);
    for (const auto& f : composition_factors(rep, seed, stats)) ++m[lib.identify(f)];
    return m;
}

std::string DecompMatrix::csv() const {
    std::ostringstream os;
    os << "\"\"";
    for (const auto& l : labels) os << ",\"" << l << "\"";
    os << "\n";
    for (std::size_t i = 0; i < size(); ++i) {
        os << "\"" << labels[i] << "\"";
        for (int x : d[i]) os << "," << x;
        os << "\n";
    }
    return os.str();
}

#define CQS_REPKIT_INST(K)                                                                                   \
    template class SparseAction<K>;                                                                          \
    template Echelon<K> spin<K>(const ModuleRep<K>&, const std::vector<Vec<K>>&, bool);                      \
    template Echelon<K> spin<K>(const SparseAction<K>&, std::size_t, const std::vector<Vec<K>>&);            \
    template bool is_stable<K>(const ModuleRep<K>&, const Echelon<K>&);                                      \
    template ModuleRep<K> submodule<K>(const ModuleRep<K>&, const Echelon<K>&);                              \
    template ModuleRep<K> quotient<K>(const ModuleRep<K>&, const Echelon<K>&);                               \
    template Echelon<K> gram_radical<K>(const ModuleRep<K>&);                                                \
    template ModuleRep<K> simple_head<K>(const ModuleRep<K>&);                                               \
    template std::optional<Echelon<K>> find_submodule<K>(const ModuleRep<K>&, std::mt19937_64&, ChopStats*); \
    template std::vector<ModuleRep<K>> composition_factors<K>(const ModuleRep<K>&, std::uint64_t, ChopStats*); \
    template Fingerprint<K> fingerprint<K>(const ModuleRep<K>&);                                             \
    template class SimpleLibrary<K>;                                                                         \
    template std::vector<int> multiplicities<K>(const ModuleRep<K>&, const SimpleLibrary<K>&, std::uint64_t, \
                                                ChopStats*);
CQS_REPKIT_INST(Fp)
CQS_REPKIT_INST(Rational)
#undef CQS_REPKIT_INST

}  // namespace cqs
