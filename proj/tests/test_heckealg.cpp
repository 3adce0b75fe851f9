#include <functional>
#include <map>
#include <tuple>
#include <random>
#include <set>

#include <doctest.h>

#include "cqs/hecke.hpp"
#include "cqs/murphy.hpp"
#include "cqs/relations.hpp"

using namespace cqs;

namespace {

using V = Vec<Rational>;

Params<Rational> rat_params(long q, std::vector<long> Q) {
    Params<Rational> p;
    p.q = Rational(q);
    for (long x : Q) p.Q.push_back(Rational(x));
    return p;
}

V add(V a, const V& b, Rational s = Rational(1)) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
    return a;
}

// Every reduced word of w, by peeling each left descent in turn.
void reduced_words(const SymGroup& G, int w, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (G.length(w) == 0) {
        out.push_back(cur);
        return;
    }
    for (int i = 2; i <= G.n(); ++i) {
        int v = G.left_simple(i, w);
        if (G.length(v) < G.length(w)) {
            cur.push_back(i);
            reduced_words(G, v, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

TEST_CASE("quadratic and cyclotomic rewriting") {
    AKAlgebra<Rational> A(3, rat_params(2, {1, 3}));
    CHECK(A.dim() == 48);
    auto qq = Rational(2) - Rational(2).inv();
    for (int i = 2; i <= 3; ++i) CHECK(A.mul(A.T(i), A.T(i)) == add(A.one(), A.T(i), qq));
    auto L1 = A.L(1);
    auto want = add(V(A.dim()), L1, Rational(4));
    want = add(want, A.one(), Rational(-3));
    CHECK(A.mul(L1, L1) == want);
    auto rel = check_ak_relations(A);
    CHECK_MESSAGE(rel.pass, rel.witness);
}

TEST_CASE("associativity on random basis triples") {
    Fp::ModulusScope scope(7);
    Params<Fp> par{Fp(3), {Fp(1), Fp(2)}};
    AKAlgebra<Fp> A(3, par);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::size_t> d(0, A.dim() - 1);
    for (int k = 0; k < 200; ++k) {
        auto x = A.basis(d(rng)), y = A.basis(d(rng)), z = A.basis(d(rng));
        REQUIRE(A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z)));
    }
}

TEST_CASE("T_w does not depend on the reduced word") {
    AKAlgebra<Rational> A(4, rat_params(3, {2}));
    const auto& G = A.sym();
    for (int w = 0; w < G.size(); ++w) {
        std::vector<int> cur;
        std::vector<std::vector<int>> words;
        reduced_words(G, w, cur, words);
        for (const auto& word : words) {
            V x = A.one();
            for (int i : word) x = A.mul(x, A.T(i));
            REQUIRE(x == A.Tw(w));
        }
    }
}

TEST_CASE("star is an involutive anti-automorphism") {
    AKAlgebra<Rational> A(3, rat_params(2, {1, 3}));
    CHECK(A.star(A.mul(A.T(2), A.T(3))) == A.mul(A.T(3), A.T(2)));
    for (int k = 1; k <= 3; ++k) CHECK(A.star(A.L(k)) == A.L(k));
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> d(0, A.dim() - 1);
    for (int k = 0; k < 200; ++k) {
        auto x = A.basis(d(rng)), y = A.basis(d(rng));
        CHECK(A.star(A.mul(x, y)) == A.mul(A.star(y), A.star(x)));
        CHECK(A.star(A.star(x)) == x);
    }
    auto P = Poset::ptilde(3, 2, {3, 3});
    for (const auto& mu : P.elements()) {
        auto m = A.m_weight(mu);
        CHECK(A.star(m) == m);
        // x_mu and u+_mu commute
        CHECK(A.mul(A.u_plus(mu), A.x_young(mu.flat())) == m);
    }
}

TEST_CASE("m_lambda by direct evaluation") {
    AKAlgebra<Rational> H(2, rat_params(5, {1}));
    CHECK(H.m_weight(Multicomp::parse("[[2,0]]")) == add(H.one(), H.T(2), Rational(5)));
    AKAlgebra<Rational> A(2, rat_params(2, {1, 3}));
    // alpha = (2,0), a = (0,2): u+ = (L_1 - Q_2)(L_2 - Q_2)
    auto u1 = add(A.L(1), A.one(), Rational(-3));
    auto u2 = add(A.L(2), A.one(), Rational(-3));
    CHECK(A.m_weight(Multicomp::parse("[[1,1],[0,0]]")) == A.mul(u1, u2));
    CHECK(A.m_weight(Multicomp::parse("[[0,0],[1,1]]")) == A.one());
}

TEST_CASE("group order at q = 1") {
    // q = 1, Q = (1,-1): the group algebra of (Z/2) wr S_3
    AKAlgebra<Rational> A(3, rat_params(1, {1, -1}));
    std::vector<V> gens;
    for (int i = 1; i <= 3; ++i) gens.push_back(A.T(i));
    std::set<std::vector<std::string>> seen;
    auto key = [](const V& v) {
        std::vector<std::string> k;
        for (const auto& x : v) k.push_back(x.str());
        return k;
    };
    std::vector<V> frontier = {A.one()};
    seen.insert(key(A.one()));
    while (!frontier.empty()) {
        std::vector<V> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                auto y = A.mul(x, g);
                if (seen.insert(key(y)).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    CHECK(seen.size() == 48);
}

TEST_CASE("Murphy basis") {
    AKAlgebra<Rational> A2(2, rat_params(2, {1, 3}));
    auto B2 = murphy_basis(A2, Poset::partitions_only(2, 2).elements());
    CHECK(B2.elts.size() == 8);
    CHECK(rank(B2.coordinate_matrix(A2.dim())) == 8);

    Fp::ModulusScope scope(7);
    AKAlgebra<Fp> A(3, Params<Fp>{Fp(3), {Fp(1), Fp(2)}});
    auto shapes = Poset::partitions_only(3, 2).elements();
    auto B = murphy_basis(A, shapes);
    CHECK(B.elts.size() == 48);
    CHECK(rank(B.coordinate_matrix(A.dim())) == 48);
    std::map<std::tuple<int, int, int>, std::size_t> at;
    for (std::size_t j = 0; j < B.index.size(); ++j) at[{B.index[j].shape, B.index[j].s, B.index[j].t}] = j;
    for (std::size_t j = 0; j < B.index.size(); ++j) {
        auto [l, s, t] = B.index[j];
        if (B.tabs[l][s].length == 0 && B.tabs[l][t].length == 0) CHECK(B.elts[j] == A.m_weight(shapes[l]));
        CHECK(A.star(B.elts[j]) == B.elts[at[{l, t, s}]]);
    }
}

TEST_CASE("Specht modules") {
    auto check_modules = [](const auto& A, const std::vector<Multicomp>& shapes, bool expect_nonsingular) {
        auto mods = specht_modules(A, shapes);
        bool all_nonsingular = true;
        for (const auto& S : mods) {
            CHECK(S.dim() == std_tableaux(S.shape).size());
            CHECK(S.gram == S.gram.transpose());
            if (rank(S.gram) != S.dim()) all_nonsingular = false;
            // the generators still satisfy the quadratic relations
            using K = std::decay_t<decltype(S.gram(0, 0))>;
            const auto& par = A.params();
            auto qq = par.q - par.q.inv();
            auto I = Matrix<K>::identity(S.dim());
            for (int i = 2; i <= A.n(); ++i) {
                const auto& g = S.gens[i - 1];
                CHECK(matmul(g, g) == matadd(I, g, qq));
            }
        }
        CHECK(all_nonsingular == expect_nonsingular);
    };
    AKAlgebra<Rational> A(3, rat_params(2, {1, 3}));
    check_modules(A, Poset::partitions_only(3, 2).elements(), true);
    Fp::ModulusScope scope(5);
    // q = 2 has order 4 in F_5, so q^2 = -1 and [2]_{q^2} = 0
    AKAlgebra<Fp> B(2, Params<Fp>{Fp(2), {Fp(1), Fp(3)}});
    check_modules(B, Poset::partitions_only(2, 2).elements(), false);
}
