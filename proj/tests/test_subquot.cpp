#include <random>

#include <doctest.h>

#include "cqs/decomp.hpp"

using namespace cqs;

namespace {

template <class K>
struct World {
    AKAlgebra<K> A;
    Poset P;
    AKSchur<K> S;
    S0Data<K> D;
    World(int n, Params<K> par, std::vector<int> m)
        : A(n, par), P(Poset::ptilde(n, par.r(), m)), S(A, P, Flavor::Full), D(S) {}
};

Params<Rational> rat_params(long q, std::vector<long> Q) {
    Params<Rational> p;
    p.q = Rational(q);
    for (long x : Q) p.Q.push_back(Rational(x));
    return p;
}

DecompMatrix matrix_from(std::vector<std::string> labels, std::vector<std::vector<int>> d) {
    return DecompMatrix{std::move(labels), std::move(d)};
}

template <class K>
void all_checks_pass(const World<K>& w) {
    Budget all;
    std::vector<Check> cs = {check_factorization(w.S),
                             check_identity(w.S, all),
                             check_star_antihom(w.S, all),
                             check_associativity(w.S, all),
                             check_cellular_triangularity(w.S, all),
                             check_cell_rows(w.S, all),
                             check_c0_partition(w.D),
                             check_unit_in_s0(w.D),
                             check_closure(w.D, all),
                             check_standardly_based(w.D, all),
                             check_s00_ideal(w.D, all),
                             check_f_antihom(w.D, all),
                             check_bar_cellular(w.D, all),
                             check_s0_spans(w.D),
                             check_tensor_theorem(w.D)};
    for (auto& c : check_z_modules(w.D, all)) cs.push_back(c);
    for (const auto& c : cs) CHECK_MESSAGE(c.pass, c.id << ": " << c.witness);
}

}  // namespace

TEST_CASE("C0 classification") {
    Fp::ModulusScope scope(5);
    World<Fp> w(2, Params<Fp>{Fp(2), {Fp(1), Fp(3)}}, {2, 2});
    const auto& S = w.S;
    const auto& D = w.D;
    std::size_t c0 = 0;
    for (std::uint32_t k = 0; k < S.dim(); ++k) {
        CHECK((D.eps(k) >= 0) == D.in_c0_by_definition(k));
        if (D.eps(k) >= 0) ++c0;
        if (D.eps(k) == 1) CHECK(D.in_omega(S.lambda_of(k), 1));
    }
    CHECK(c0 == D.c0().size());
    std::size_t from_omega = 0;
    for (auto e : D.omega()) {
        int cell = S.cell_of(e.lambda);
        from_omega += D.I(cell, e.eps).size() * D.J(cell, e.eps).size();
    }
    CHECK(from_omega == c0);
    // pairs of T_0^+ tableaux are in C0(lambda, 0)
    for (int c = 0; c < static_cast<int>(S.cells().size()); ++c)
        for (int s = 0; s < static_cast<int>(S.cells()[c].size()); ++s)
            for (int t = 0; t < static_cast<int>(S.cells()[c].size()); ++t)
                if (D.plus(c, s) && D.plus(c, t)) CHECK(D.eps(S.position(c, s, t)) == 0);
    // projectors are combinations of C0 elements
    for (int mu = 0; mu < w.P.size(); ++mu)
        for (const auto& [k, v] : S.projector(mu)) CHECK(D.eps(k) >= 0);
}

TEST_CASE("level one: S0 and its quotient are everything") {
    Fp::ModulusScope scope(5);
    World<Fp> w(3, Params<Fp>{Fp(2), {Fp(1)}}, {3});
    CHECK(w.D.c0().size() == w.S.dim());
    for (std::uint32_t k = 0; k < w.S.dim(); ++k) CHECK(w.D.eps(k) == 0);
}

TEST_CASE("all structural checks at n = 2, r = 2") {
    SUBCASE("F_5, non-semisimple") {
        Fp::ModulusScope scope(5);
        World<Fp> w(2, Params<Fp>{Fp(2), {Fp(1), Fp(3)}}, {2, 2});
        all_checks_pass(w);
        auto fb = check_full_based_witness(w.D);
        CHECK_MESSAGE(fb.pass, fb.witness);
    }
    SUBCASE("Q, semisimple") {
        World<Rational> w(2, rat_params(2, {1, 3}), {2, 2});
        all_checks_pass(w);
        auto fb = check_full_based_witness(w.D);
        CHECK_MESSAGE(fb.pass, fb.witness);
    }
    SUBCASE("q^s parameters over F_7") {
        Fp::ModulusScope scope(7);
        World<Fp> w(2, Params<Fp>{Fp(3), {Fp(1), Fp(3).pow(3)}}, {2, 2});
        all_checks_pass(w);
    }
}

TEST_CASE("Z modules against the Weyl modules") {
    Fp::ModulusScope scope(5);
    World<Fp> w(2, Params<Fp>{Fp(2), {Fp(1), Fp(3)}}, {2, 2});
    const auto& S = w.S;
    const auto& D = w.D;
    std::mt19937_64 rng(4);
    for (int c = 0; c < static_cast<int>(S.cells().size()); ++c) {
        auto W = weyl_module(S, c);
        const auto& G = *W.rep.gram;
        auto cols = D.I(c, 0);
        auto Z = z0_module(D, c);
        REQUIRE(Z.rep.dim == cols.size());
        const auto& G0 = *Z.rep.gram;
        for (std::size_t i = 0; i < cols.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) CHECK(G0(i, j) == G(cols[i], cols[j]));
        // the form pairs T_0^+ with its complement trivially
        for (int s : cols)
            for (int t = 0; t < static_cast<int>(W.rep.dim); ++t)
                if (!D.plus(c, t)) CHECK(G(s, t).is_zero());
        int top = S.cells()[c].top;
        CHECK(G(top, top).is_one());
        // every other row in I(lambda,0) gives the same action
        for (int row : cols) {
            auto Z2 = z0_module(D, c, row);
            for (std::size_t g = 0; g < Z.rep.gens.size(); ++g) CHECK(Z2.rep.gens[g] == Z.rep.gens[g]);
        }
        // the quotient module is the same module
        auto Zb = zbar_module(D, c);
        CHECK(Zb.rep.dim == cols.size());
        // vectors outside the radical generate; the radical is a submodule
        auto rad = gram_radical(Z.rep);
        CHECK(is_stable(Z.rep, rad));
        for (std::size_t i = 0; i < Z.rep.dim; ++i) {
            Vec<Fp> e(Z.rep.dim);
            e[i] = Fp(1);
            if (!rad.contains(e)) CHECK(spin(Z.rep, {e}).size() == Z.rep.dim);
        }
        // a proper submodule found by chopping lies in the radical
        if (auto sub = find_submodule(Z.rep, rng))
            for (const auto& v : sub->rows()) CHECK(rad.contains(v));
    }
}

TEST_CASE("level-one decomposition matrices") {
    Fp::ModulusScope scope(7);
    // q = 3: q^2 = 2 has order 3 in F_7
    CHECK(qschur_r1_decomp<Fp>(3, 3, Fp(3), 1) ==
          matrix_from({"[[3,0,0]]", "[[2,1,0]]", "[[1,1,1]]"}, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
    CHECK(qschur_r1_decomp<Fp>(2, 2, Fp(3), 1) == matrix_from({"[[2,0]]", "[[1,1]]"}, {{1, 0}, {0, 1}}));
    CHECK(qschur_r1_decomp<Fp>(1, 1, Fp(3), 1).size() == 1);
    CHECK(qschur_r1_decomp<Fp>(0, 1, Fp(3), 1).d == std::vector<std::vector<int>>{{1}});
    Fp::set_modulus(5);
    // q = 2: q^2 = -1 has order 2 in F_5; (2,1) is a 2-core
    CHECK(qschur_r1_decomp<Fp>(3, 3, Fp(2), 1) ==
          matrix_from({"[[3,0,0]]", "[[2,1,0]]", "[[1,1,1]]"}, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(qschur_r1_decomp<Fp>(2, 2, Fp(2), 1) == matrix_from({"[[2,0]]", "[[1,1]]"}, {{1, 1}, {0, 1}}));
    Fp::set_modulus(101);
    auto D = qschur_r1_decomp<Fp>(3, 3, Fp(2), 1);
    for (std::size_t i = 0; i < D.size(); ++i)
        for (std::size_t j = 0; j < D.size(); ++j) CHECK(D.d[i][j] == (i == j ? 1 : 0));
}

TEST_CASE("decomposition at n = 2, r = 2 over F_5") {
    Fp::ModulusScope scope(5);
    World<Fp> w(2, Params<Fp>{Fp(2), {Fp(1), Fp(3)}}, {2, 2});
    auto DS = decompose(weyl_family(w.S), w.P, 1);
    CHECK(DS.routes_agree());
    std::vector<std::string> labels = {"[[2,0],[0,0]]", "[[1,1],[0,0]]", "[[1,0],[1,0]]", "[[0,0],[2,0]]",
                                       "[[0,0],[1,1]]"};
    CHECK(DS.matrix() == matrix_from(labels, {{1, 1, 0, 0, 0},
                                              {0, 1, 0, 0, 0},
                                              {0, 0, 1, 0, 0},
                                              {0, 0, 0, 1, 1},
                                              {0, 0, 0, 0, 1}}));
    // rows times head dimensions give the Weyl dimensions
    std::vector<std::size_t> head, weyl;
    for (int c = 0; c < static_cast<int>(w.S.cells().size()); ++c) {
        auto W = weyl_module(w.S, c);
        weyl.push_back(W.rep.dim);
        head.push_back(rank(*W.rep.gram));
    }
    for (std::size_t i = 0; i < head.size(); ++i) {
        std::size_t sum = 0;
        for (std::size_t j = 0; j < head.size(); ++j) sum += DS.matrix().d[i][j] * head[j];
        CHECK(sum == weyl[i]);
    }
    auto DZ = decompose(z0_family(w.D), w.P, 1);
    auto Db = decompose(zbar_family(w.D), w.P, 1);
    auto DZ2 = decompose(z0_family(w.D), w.P, 12345);
    CHECK(DZ.routes_agree());
    CHECK(Db.routes_agree());
    CHECK(DZ.matrix() == DZ2.matrix());
    FlatAlgebra<Fp> F(2, Params<Fp>{Fp(2), {Fp(1), Fp(3)}});
    FlatSchur<Fp> FS(F, w.P, Flavor::Plus);
    auto iso = check_flat_isomorphism(w.D, FS);
    CHECK_MESSAGE(iso.pass, iso.witness);
    auto Df = decompose(flat_family(FS), w.P, 1);
    for (const auto& c : check_decomp_relations(w.P, DS.matrix(), DZ.matrix(), Db.matrix(), &Df.matrix()))
        CHECK_MESSAGE(c.pass, c.id << ": " << c.witness);
    auto pf = check_product_formula(w.P, Params<Fp>{Fp(2), {Fp(1), Fp(3)}}, DS.matrix(), 1, false);
    CHECK_MESSAGE(pf.pass, pf.witness);
    auto pf2 = check_product_formula(w.P, Params<Fp>{Fp(2), {Fp(1), Fp(3)}}, Df.matrix(), 1, true);
    CHECK_MESSAGE(pf2.pass, pf2.witness);
}

TEST_CASE("decomposition over Q is the identity") {
    World<Rational> w(2, rat_params(2, {1, 3}), {2, 2});
    auto DS = decompose(weyl_family(w.S), w.P, 1);
    CHECK(DS.routes_agree());
    for (std::size_t i = 0; i < DS.matrix().size(); ++i)
        for (std::size_t j = 0; j < DS.matrix().size(); ++j) CHECK(DS.matrix().d[i][j] == (i == j ? 1 : 0));
}
