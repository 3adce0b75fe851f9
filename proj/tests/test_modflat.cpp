#include <doctest.h>

#include "cqs/flat.hpp"
#include "cqs/murphy.hpp"
#include "cqs/relations.hpp"

using namespace cqs;

namespace {

Params<Rational> rat_params(long q, std::vector<long> Q) {
    Params<Rational> p;
    p.q = Rational(q);
    for (long x : Q) p.Q.push_back(Rational(x));
    return p;
}

template <class K>
Vec<K> lin(const Vec<K>& a, const K& s, const Vec<K>& b, const K& t) {
    Vec<K> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i] + t * b[i];
    return out;
}

}  // namespace

TEST_CASE("Lagrange polynomials") {
    std::vector<Rational> Q2 = {Rational(3), Rational(7)};
    auto f = f_polys(Q2);
    CHECK(f.delta == Rational(4));
    for (long x = -3; x <= 3; ++x) {
        CHECK(f.eval(0, Rational(x)) == Rational(7 - x));
        CHECK(f.eval(1, Rational(x)) == Rational(x - 3));
    }
    std::vector<Rational> Q3 = {Rational::parse("1/2"), Rational(-4), Rational(9)};
    auto g = f_polys(Q3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(g.eval(i, Q3[j]) == (i == j ? g.delta : Rational(0)));
    auto h = f_polys(std::vector<Rational>{Rational(5)});
    CHECK(h.delta.is_one());
    CHECK(h.eval(0, Rational(11)).is_one());
}

TEST_CASE("xi elements") {
    FlatAlgebra<Rational> F(3, rat_params(2, {1, 3}));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(F.mul(F.xi(i), F.xi(j)) == F.mul(F.xi(j), F.xi(i)));
    auto x1 = F.xi(1);
    auto want = lin(x1, Rational(4), F.one(), Rational(-3));
    CHECK(F.mul(x1, x1) == want);
    // coordinates round trip through the xi-monomial basis
    auto y = F.mul(F.T(2), F.xi(2));
    auto c = F.to_xi_coords(y);
    Vec<Rational> back(F.dim());
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        auto d = F.digits(F.cidx_of(k));
        auto m = F.xi_monomial(d, F.perm_of(k));
        for (std::size_t j = 0; j < back.size(); ++j) back[j] += c[k] * m[j];
    }
    CHECK(back == y);
}

TEST_CASE("defining relations") {
    FlatAlgebra<Rational> F(3, rat_params(2, {1, 3}));
    auto c = check_flat_relations(F);
    CHECK_MESSAGE(c.pass, c.witness);
    Fp::ModulusScope scope(7);
    FlatAlgebra<Fp> G(3, Params<Fp>{Fp(3), {Fp(1), Fp(2)}});
    c = check_flat_relations(G);
    CHECK_MESSAGE(c.pass, c.witness);
    FlatAlgebra<Fp> H(2, Params<Fp>{Fp(3), {Fp(1), Fp(2), Fp(4)}});
    c = check_flat_relations(H);
    CHECK_MESSAGE(c.pass, c.witness);
}

TEST_CASE("the literal commutation T_j xi_k = xi_j T_j fails") {
    FlatAlgebra<Rational> F(3, rat_params(2, {1, 3}));
    CHECK(F.mul(F.T(3), F.xi(1)) == F.mul(F.xi(1), F.T(3)));
    CHECK(F.mul(F.T(3), F.xi(1)) != F.mul(F.xi(3), F.T(3)));
}

TEST_CASE("Murphy basis and m_mu") {
    FlatAlgebra<Rational> F2(2, rat_params(2, {1, 3}));
    auto c = check_flat_murphy_rank(F2);
    CHECK_MESSAGE(c.pass, c.witness);
    CHECK(rank(murphy_basis(F2, Poset::partitions_only(2, 2).elements()).coordinate_matrix(F2.dim())) == 8);
    FlatAlgebra<Rational> F(3, rat_params(2, {1, 3}));
    const auto P = Poset::ptilde(3, 2, {3, 3});
    for (const auto& mu : P.elements()) {
        auto m = F.m_weight(mu);
        CHECK(F.star(m) == m);
    }
    CHECK(F.c_of_alpha({2, 1}) == std::vector<int>{1, 1, 0});
    CHECK(F.c_of_alpha({0, 3}) == std::vector<int>{0, 0, 0});
    // F_alpha are orthogonal idempotents summing to 1
    std::vector<std::vector<int>> alphas = {{3, 0}, {2, 1}, {1, 2}, {0, 3}};
    for (const auto& a : alphas) {
        auto e = F.F_alpha(a);
        CHECK(F.mul(e, e) == e);
        for (const auto& b : alphas)
            if (a != b) CHECK(F.mul(e, F.F_alpha(b)) == F.zero());
    }
}
