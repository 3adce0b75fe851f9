#include "cqs/decomp.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <type_traits>

namespace cqs {

namespace {

constexpr std::size_t kRationalChopLimit = 12;

// Indices of the family in an order where dominant labels come first.
std::vector<std::size_t> peel_order(const std::vector<int>& lambdas, const Poset& P) {
    std::vector<std::size_t> order;
    std::vector<char> done(lambdas.size(), 0);
    while (order.size() < lambdas.size()) {
        bool progress = false;
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            if (done[i]) continue;
            bool blocked = false;
            for (std::size_t k = 0; k < lambdas.size() && !blocked; ++k)
                blocked = !done[k] && k != i && P.dom(lambdas[k], lambdas[i]);
            if (blocked) continue;
            done[i] = 1;
            order.push_back(i);
            progress = true;
        }
        if (!progress) throw std::logic_error("peel_order: dominance has a cycle");
    }
    return order;
}

// Keep the projectors and every generator that acts nonzero on some module.
// The family is consumed.
template <class K>
std::vector<ModuleRep<K>> pruned(std::vector<CellModule<K>>& fam, std::size_t nproj) {
    std::size_t ng = fam.empty() ? 0 : fam.front().rep.gens.size();
    std::vector<char> keep(ng, 0);
    for (std::size_t g = 0; g < ng; ++g) {
        keep[g] = g < nproj;
        for (const auto& m : fam)
            if (!keep[g] && !m.rep.gens[g].is_zero()) keep[g] = 1;
    }
    std::vector<ModuleRep<K>> out;
    for (auto& m : fam) {
        ModuleRep<K> r;
        r.dim = m.rep.dim;
        r.gram = std::move(m.rep.gram);
        for (std::size_t g = 0; g < ng; ++g)
            if (keep[g]) r.add(std::move(m.rep.labels[g]), std::move(m.rep.gens[g]));
        m.rep = {};
        out.push_back(std::move(r));
    }
    return out;
}

template <class K>
std::vector<int> module_character(const CellModule<K>& m, int nposet) {
    std::vector<int> ch(nposet, 0);
    for (int nu = 0; nu < nposet; ++nu) ch[nu] = static_cast<int>(rank(m.rep.gens[nu]));
    return ch;
}

// Weight multiplicities of W / rad W: rank of the Gram rows of each weight.
template <class K>
std::vector<int> head_character(const CellModule<K>& m, int nposet) {
    std::vector<int> ch(nposet, 0);
    const auto& G = *m.rep.gram;
    for (int nu = 0; nu < nposet; ++nu) {
        std::vector<Vec<K>> rows;
        for (std::size_t i = 0; i < m.rep.dim; ++i)
            if (m.weight[i] == nu) rows.push_back(G.row_vec(i));
        if (!rows.empty()) ch[nu] = static_cast<int>(rank(Matrix<K>::from_rows(rows, G.cols())));
    }
    return ch;
}

}  // namespace

template <class K>
Decomposition decompose(std::vector<CellModule<K>> fam, const Poset& P, std::uint64_t seed, bool chop) {
    Decomposition out;
    const std::size_t N = fam.size();
    const int np = P.size();
    std::vector<std::string> labels;
    std::vector<int> lambdas;
    for (const auto& m : fam) {
        if (!m.rep.gram) throw std::invalid_argument("decompose: module " + m.label + " has no Gram matrix");
        labels.push_back(P.at(m.lambda).str());
        lambdas.push_back(m.lambda);
    }
    out.characters.labels = labels;
    out.characters.d.assign(N, std::vector<int>(N, 0));
    std::ostringstream note;

    // route 2: characters
    std::vector<std::vector<int>> hch(N);
    for (std::size_t j = 0; j < N; ++j) {
        hch[j] = head_character(fam[j], np);
        if (hch[j][lambdas[j]] != 1)
            throw std::runtime_error("decompose: head of " + fam[j].label + " has highest weight multiplicity " +
                                     std::to_string(hch[j][lambdas[j]]));
        for (int nu = 0; nu < np; ++nu)
            if (hch[j][nu] != 0 && !P.dom(lambdas[j], nu))
                throw std::runtime_error("decompose: head of " + fam[j].label + " has weight " + P.at(nu).str() +
                                         " not below its label");
    }
    auto order = peel_order(lambdas, P);
    for (std::size_t i = 0; i < N; ++i) {
        auto res = module_character(fam[i], np);
        for (std::size_t j : order) {
            int d = res[lambdas[j]];
            if (d < 0) throw std::runtime_error("decompose: negative residual peeling " + fam[i].label);
            out.characters.d[i][j] = d;
            if (d == 0) continue;
            for (int nu = 0; nu < np; ++nu) res[nu] -= d * hch[j][nu];
        }
        for (int nu = 0; nu < np; ++nu)
            if (res[nu] != 0)
                throw std::runtime_error("decompose: character of " + fam[i].label + " is not a sum of heads");
    }

    if (!chop) return out;

    // route 1: chopping. Over Q a nonsingular Gram certifies an irreducible
    // module, and larger singular ones are refused.
    auto reps = pruned(fam, static_cast<std::size_t>(np));
    DecompMatrix C;
    C.labels = labels;
    C.d.assign(N, std::vector<int>(N, 0));
    std::vector<char> certified(N, 0);
    if constexpr (std::is_same_v<K, Rational>) {
        for (std::size_t i = 0; i < N; ++i) {
            certified[i] = rank(*reps[i].gram) == reps[i].dim;
            if (certified[i]) C.d[i][i] = 1;
        }
        if (std::all_of(certified.begin(), certified.end(), [](char c) { return c; })) {
            out.chopping = std::move(C);
            return out;
        }
    }
    std::vector<ModuleRep<K>> heads;
    for (const auto& r : reps) heads.push_back(simple_head(r));
    std::unique_ptr<SimpleLibrary<K>> lib;
    try {
        lib = std::make_unique<SimpleLibrary<K>>(labels, heads);
    } catch (const std::exception& e) {
        note << "chopping unavailable: " << e.what();
        out.note = note.str();
        return out;
    }
    heads.clear();
    std::vector<std::string> errors(N);
    std::vector<ChopStats> stats(N);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < N; ++i) {
        try {
            if (certified[i]) continue;
            if constexpr (std::is_same_v<K, Rational>) {
                if (reps[i].dim > kRationalChopLimit) {
                    errors[i] = "dimension " + std::to_string(reps[i].dim) + " above the rational chopping limit";
                    continue;
                }
            }
            auto row = multiplicities(reps[i], *lib, seed + i, &stats[i]);
            for (std::size_t j = 0; j < N; ++j) C.d[i][j] = row[j];
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    bool ok = true;
    for (std::size_t i = 0; i < N; ++i) {
        out.stats.spins += stats[i].spins;
        out.stats.norton_tests += stats[i].norton_tests;
        out.stats.random_elements += stats[i].random_elements;
        if (!errors[i].empty()) {
            if (ok) note << "chopping unavailable: " << fam[i].label << ": " << errors[i];
            ok = false;
        }
    }
    if (ok) out.chopping = std::move(C);
    out.note = note.str();
    return out;
}

template <class K>
std::vector<CellModule<K>> weyl_family(const AKSchur<K>& S) {
    std::vector<CellModule<K>> f;
    for (std::size_t c = 0; c < S.cells().size(); ++c) f.push_back(weyl_module(S, static_cast<int>(c)));
    return f;
}

template <class K>
std::vector<CellModule<K>> z0_family(const S0Data<K>& D) {
    std::vector<CellModule<K>> f;
    for (std::size_t c = 0; c < D.schur().cells().size(); ++c) f.push_back(z0_module(D, static_cast<int>(c), -1, false));
    return f;
}

template <class K>
std::vector<CellModule<K>> zbar_family(const S0Data<K>& D) {
    std::vector<CellModule<K>> f;
    for (std::size_t c = 0; c < D.schur().cells().size(); ++c) f.push_back(zbar_module(D, static_cast<int>(c)));
    return f;
}

template <class K>
std::vector<CellModule<K>> flat_family(const FlatSchur<K>& F) {
    std::vector<CellModule<K>> f;
    for (std::size_t c = 0; c < F.cells().size(); ++c) f.push_back(flat_weyl_module(F, static_cast<int>(c)));
    return f;
}

std::vector<Check> check_decomp_relations(const Poset& P, const DecompMatrix& DS, const DecompMatrix& DZ,
                                          const DecompMatrix& Dbar, const DecompMatrix* Dflat) {
    std::vector<Check> out;
    const std::size_t N = DS.size();
    std::vector<int> idx;
    for (const auto& l : DS.labels) idx.push_back(P.index(Multicomp::parse(l)));
    auto same_alpha = [&](std::size_t i, std::size_t j) { return alpha_of(P.at(idx[i])) == alpha_of(P.at(idx[j])); };
    auto entry = [&](std::size_t i, std::size_t j) { return DS.labels[i] + "," + DS.labels[j]; };
    auto fail_first = [&](Check& c, auto pred, const std::string& what) {
        for (std::size_t i = 0; i < N && c.pass; ++i)
            for (std::size_t j = 0; j < N && c.pass; ++j)
                if (pred(i, j)) {
                    c.pass = false;
                    c.witness = what + " at " + entry(i, j);
                }
    };
    bool shapes = DZ.labels == DS.labels && Dbar.labels == DS.labels && (!Dflat || Dflat->labels == DS.labels);

    Check a{"decomp.bar_equals_z", shapes && Dbar == DZ, ""};
    if (!a.pass) fail_first(a, [&](auto i, auto j) { return Dbar.d[i][j] != DZ.d[i][j]; }, "differs");
    if (a.pass) a.witness = std::to_string(N) + "x" + std::to_string(N) + " equal";
    out.push_back(a);

    Check b{"decomp.z_le_s", shapes, shapes ? "" : "label mismatch"};
    if (b.pass) fail_first(b, [&](auto i, auto j) { return DZ.d[i][j] > DS.d[i][j]; }, "D_Z exceeds D_S");
    if (b.pass) b.witness = "entrywise";
    out.push_back(b);

    Check c{"decomp.alpha_equal", shapes, ""};
    std::size_t eq = 0;
    if (c.pass)
        fail_first(c,
                   [&](auto i, auto j) {
                       if (!same_alpha(i, j)) return false;
                       ++eq;
                       return DZ.d[i][j] != DS.d[i][j];
                   },
                   "D_Z differs from D_S on equal types");
    if (c.pass) c.witness = std::to_string(eq) + " equal-type entries";
    out.push_back(c);

    Check d{"decomp.alpha_vanishing", shapes, ""};
    if (d.pass)
        fail_first(d, [&](auto i, auto j) { return !same_alpha(i, j) && Dbar.d[i][j] != 0; },
                   "nonzero across types");
    if (d.pass) d.witness = "off-type entries vanish";
    out.push_back(d);

    auto dom = [&](std::size_t i, std::size_t j) { return P.dom(idx[i], idx[j]); };
    Check e{"decomp.unitriangular", true, "D_S, D_Z, D_bar"};
    for (auto [name, M] : {std::pair{"D_S", &DS}, {"D_Z", &DZ}, {"D_bar", &Dbar}, {"D_flat", Dflat}})
        if (M && !is_unitriangular(*M, dom)) {
            e.pass = false;
            e.witness = std::string(name) + " is not unitriangular";
            break;
        }
    out.push_back(e);

    if (Dflat) {
        Check f{"decomp.flat_equals_bar", shapes && *Dflat == Dbar, ""};
        if (!f.pass) fail_first(f, [&](auto i, auto j) { return Dflat->d[i][j] != Dbar.d[i][j]; }, "differs");
        if (f.pass) f.witness = "equal";
        out.push_back(f);
    }
    return out;
}

template <class K>
DecompMatrix qschur_r1_decomp(int n, int m, const K& q, std::uint64_t seed) {
    if (n == 0) {
        Multicomp e{{std::vector<int>(m, 0)}};
        return DecompMatrix{{e.str()}, {{1}}};
    }
    AKAlgebra<K> A(n, Params<K>{q, {K(1)}});
    auto P = Poset::ptilde(n, 1, {m});
    AKSchur<K> S(A, P, Flavor::Full);
    return decompose(weyl_family(S), P, seed, false).characters;
}

template <class K>
Check check_product_formula(const Poset& P, const Params<K>& par, const DecompMatrix& DS, std::uint64_t seed,
                            bool cross_types_vanish) {
    Check ck{"decomp.product_formula", true, ""};
    const int r = P.r();
    // level-one matrices keyed by (component, size)
    std::map<std::pair<int, int>, DecompMatrix> r1;
    auto lookup = [&](int i, const std::vector<int>& la, const std::vector<int>& mu) {
        int sz = 0;
        for (int x : la) sz += x;
        auto key = std::pair{i, sz};
        if (!r1.count(key)) r1[key] = qschur_r1_decomp<K>(sz, P.m()[i], par.q, seed);
        const auto& D = r1[key];
        auto a = std::find(D.labels.begin(), D.labels.end(), Multicomp{{la}}.str());
        auto b = std::find(D.labels.begin(), D.labels.end(), Multicomp{{mu}}.str());
        if (a == D.labels.end() || b == D.labels.end())
            throw std::runtime_error("product formula: component missing from the level-one poset");
        return D.d[a - D.labels.begin()][b - D.labels.begin()];
    };
    std::size_t tested = 0;
    for (std::size_t i = 0; i < DS.size() && ck.pass; ++i)
        for (std::size_t j = 0; j < DS.size() && ck.pass; ++j) {
            auto la = Multicomp::parse(DS.labels[i]), mu = Multicomp::parse(DS.labels[j]);
            int expect = 0;
            bool eq = alpha_of(la) == alpha_of(mu);
            if (!eq && !cross_types_vanish) continue;
            if (eq) {
                expect = 1;
                for (int c = 0; c < r; ++c) expect *= lookup(c, la.comp[c], mu.comp[c]);
            }
            ++tested;
            if (DS.d[i][j] != expect) {
                ck.pass = false;
                ck.witness = "entry " + DS.labels[i] + "," + DS.labels[j] + " is " + std::to_string(DS.d[i][j]) +
                             ", product gives " + std::to_string(expect);
            }
        }
    if (ck.pass)
        ck.witness = std::to_string(tested) + " entries match " + std::to_string(r1.size()) + " level-one matrices";
    return ck;
}

#define CQS_DECOMP_INST(K)                                                                                    \
    template Decomposition decompose<K>(std::vector<CellModule<K>>, const Poset&, std::uint64_t, bool);          \
    template std::vector<CellModule<K>> weyl_family<K>(const AKSchur<K>&);                                    \
    template std::vector<CellModule<K>> z0_family<K>(const S0Data<K>&);                                       \
    template std::vector<CellModule<K>> zbar_family<K>(const S0Data<K>&);                                     \
    template std::vector<CellModule<K>> flat_family<K>(const FlatSchur<K>&);                                  \
    template DecompMatrix qschur_r1_decomp<K>(int, int, const K&, std::uint64_t);                             \
    template Check check_product_formula<K>(const Poset&, const Params<K>&, const DecompMatrix&, std::uint64_t, bool);

CQS_DECOMP_INST(Fp)
CQS_DECOMP_INST(Rational)
#undef CQS_DECOMP_INST

}  // namespace cqs
