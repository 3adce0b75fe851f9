#include <random>

#include <doctest.h>

#include "cqs/linalg.hpp"

using namespace cqs;

namespace {

template <class K>
Matrix<K> random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix<K> A(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) A(i, j) = K(d(rng));
    return A;
}

// A product of a k-column and a k-row matrix has rank at most k.
template <class K>
Matrix<K> low_rank(std::size_t n, std::size_t k, std::mt19937_64& rng) {
    return matmul(random_matrix<K>(n, k, rng), random_matrix<K>(k, n, rng));
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    Fp::ModulusScope scope(7);
    CHECK(Fp(3) * Fp(5) == Fp(1));
    CHECK(Fp(-1) == Fp(6));
    for (int a = 1; a < 7; ++a) CHECK(Fp(a) * Fp(a).inv() == Fp(1));
    CHECK(Fp(3).pow(6) == Fp(1));
    CHECK(Fp::parse("-2") == Fp(5));
    CHECK(Fp::parse("1/3") == Fp(5));
    CHECK(is_prime(65521));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("rational arithmetic") {
    auto h = Rational::parse("1/2");
    CHECK((h + h).is_one());
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK((Rational(2).pow(-2) * Rational(4)).is_one());
    CHECK_THROWS(Rational(0).inv());
}

TEST_CASE("parameters and q^s entries") {
    Fp::ModulusScope scope(7);
    FieldSpec f;
    f.p = 7;
    f.q = "3";
    f.Q = {"q^2", "1"};
    auto par = make_params<Fp>(f);
    CHECK(par.Q[0] == Fp(2));
    CHECK(par.Q[1] == Fp(1));
    f.q = "0";
    CHECK_THROWS_AS(make_params<Fp>(f), std::invalid_argument);
}

TEST_CASE("rank, nullspace and solve") {
    Fp::ModulusScope scope(101);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        auto A = random_matrix<Fp>(20, 20, rng, 0, 100);
        auto L = low_rank<Fp>(20, 7, rng);
        CHECK(rank(L) <= 7);
        // rank-nullity
        auto N = nullspace(L);
        CHECK(N.rows() + rank(L) == 20);
        for (std::size_t i = 0; i < N.rows(); ++i) CHECK(is_zero_vec<Fp>(matvec(L, std::span<const Fp>(N.row(i)))));
        // A x = b for b in the column space
        auto x0 = random_matrix<Fp>(20, 1, rng, 0, 100).col_vec(0);
        auto b = matvec(A, std::span<const Fp>(x0));
        auto x = solve(A, std::span<const Fp>(b));
        REQUIRE(x);
        CHECK(matvec(A, std::span<const Fp>(*x)) == b);
        Solver<Fp> S(L);
        auto bl = matvec(L, std::span<const Fp>(x0));
        auto xl = S.solve(bl);
        REQUIRE(xl);
        CHECK(matvec(L, std::span<const Fp>(*xl)) == bl);
    }
    // inconsistent system
    Matrix<Fp> Z(2, 2);
    Z(0, 0) = Fp(1);
    std::vector<Fp> b = {Fp(0), Fp(1)};
    CHECK_FALSE(solve(Z, std::span<const Fp>(b)));
}

TEST_CASE("serial and parallel kernels agree") {
    Fp::ModulusScope scope(32003);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        auto A = random_matrix<Fp>(40, 55, rng, 0, 32002);
        auto B = random_matrix<Fp>(55, 30, rng, 0, 32002);
        CHECK(matmul(A, B, Exec::Serial) == matmul(A, B, Exec::Parallel));
        auto L = matmul(low_rank<Fp>(40, 9, rng), random_matrix<Fp>(40, 55, rng));
        CHECK(rref(L, Exec::Serial) == rref(L, Exec::Parallel));
        CHECK(rref(A, Exec::Serial) == rref(A, Exec::Parallel));
    }
}

TEST_CASE("rational linear algebra") {
    std::mt19937_64 rng(5);
    auto A = random_matrix<Rational>(8, 8, rng);
    auto L = low_rank<Rational>(8, 3, rng);
    CHECK(rank(L) <= 3);
    CHECK(nullspace(L).rows() + rank(L) == 8);
    auto R = rref(A);
    CHECK(rref(R) == R);
    CHECK(matmul(A, Matrix<Rational>::identity(8)) == A);
}

TEST_CASE("echelon spans") {
    Fp::ModulusScope scope(5);
    Echelon<Fp> E(3);
    CHECK(E.add({Fp(1), Fp(2), Fp(0)}));
    CHECK(E.add({Fp(0), Fp(1), Fp(1)}));
    CHECK_FALSE(E.add({Fp(1), Fp(3), Fp(1)}));
    std::vector<Fp> v = {Fp(2), Fp(0), Fp(3)};
    bool in = E.contains(v);
    auto c = E.coords({Fp(1), Fp(3), Fp(1)});
    Vec<Fp> back(3);
    for (std::size_t i = 0; i < E.size(); ++i)
        for (int j = 0; j < 3; ++j) back[j] += c[i] * E.rows()[i][j];
    CHECK(back == Vec<Fp>{Fp(1), Fp(3), Fp(1)});
    CHECK(in == (rank(Matrix<Fp>::from_rows({{Fp(1), Fp(2), Fp(0)}, {Fp(0), Fp(1), Fp(1)}, v}, 3)) == 2));
}
