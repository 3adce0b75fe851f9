#include "cqs/relations.hpp"

#include <functional>
#include <string>

#include "cqs/murphy.hpp"

namespace cqs {

namespace {

template <class K>
Vec<K> axpy(Vec<K> x, const K& a, const Vec<K>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += a * y[i];
    return x;
}

// Runs named identities until the first failure.
class Recorder {
public:
    explicit Recorder(std::string id) { ck_.id = std::move(id); }
    template <class V>
    void eq(const V& x, const V& y, const std::string& what) {
        ++count_;
        if (ck_.pass && x != y) {
            ck_.pass = false;
            ck_.witness = what + " fails";
        }
    }
    Check done() {
        if (ck_.pass) ck_.witness = std::to_string(count_) + " identities hold";
        return ck_;
    }

private:
    Check ck_;
    std::size_t count_ = 0;
};

// (X - Q_1) ... (X - Q_r) applied to the unit
template <class Alg, class K>
Vec<K> cyclotomic(const Alg& A, const Vec<K>& X, const std::vector<K>& Q) {
    Vec<K> acc = A.one();
    for (const auto& Qi : Q) acc = axpy(A.mul(acc, X), -Qi, acc);
    return acc;
}

template <class Alg, class K>
Vec<K> quadratic(const Alg& A, const Vec<K>& T, const K& q) {
    auto a = axpy(T, -q, A.one());
    auto b = axpy(T, q.inv(), A.one());
    return A.mul(a, b);
}

template <class Alg>
void hecke_relations(Recorder& rec, const Alg& A, int first) {
    const int n = A.n();
    const auto& q = A.params().q;
    for (int i = 2; i <= n; ++i) rec.eq(quadratic(A, A.T(i), q), A.zero(), "quadratic T_" + std::to_string(i));
    for (int i = first; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            rec.eq(A.mul(A.T(i), A.T(j)), A.mul(A.T(j), A.T(i)), "T_" + std::to_string(i) + " T_" + std::to_string(j));
    for (int i = 2; i < n; ++i) {
        auto a = A.T(i), b = A.T(i + 1);
        rec.eq(A.mul(A.mul(a, b), a), A.mul(A.mul(b, a), b), "braid at " + std::to_string(i));
    }
}

}  // namespace

template <class K>
Check check_ak_relations(const AKAlgebra<K>& A) {
    Recorder rec("relations.ak");
    const int n = A.n();
    const auto& Q = A.params().Q;
    rec.eq(cyclotomic(A, A.T(1), Q), A.zero(), "cyclotomic T_1");
    if (n >= 2) {
        auto a = A.T(1), b = A.T(2);
        rec.eq(A.mul(A.mul(A.mul(a, b), a), b), A.mul(A.mul(A.mul(b, a), b), a), "T_1 T_2 T_1 T_2");
    }
    hecke_relations(rec, A, 1);
    for (int k = 2; k <= n; ++k)
        rec.eq(A.L(k), A.mul(A.mul(A.T(k), A.L(k - 1)), A.T(k)), "L_" + std::to_string(k));
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
            rec.eq(A.mul(A.L(k), A.L(l)), A.mul(A.L(l), A.L(k)), "L_" + std::to_string(k) + " L_" + std::to_string(l));
    return rec.done();
}

template <class K>
Check check_flat_relations(const FlatAlgebra<K>& F) {
    Recorder rec("relations.flat");
    const int n = F.n();
    const auto& par = F.params();
    const auto& fp = F.fpolys();
    const int r = par.r();
    hecke_relations(rec, F, 2);
    for (int i = 1; i <= n; ++i) rec.eq(cyclotomic(F, F.xi(i), par.Q), F.zero(), "cyclotomic xi_" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            rec.eq(F.mul(F.xi(i), F.xi(j)), F.mul(F.xi(j), F.xi(i)), "xi_" + std::to_string(i) + " xi_" + std::to_string(j));
    // F_c(xi_k) from powers of xi_k
    auto Fc = [&](int c, int k) {
        Vec<K> out = F.zero();
        std::vector<int> a(n, 0);
        for (int j = 0; j < r; ++j) {
            a[k - 1] = j;
            out = axpy(out, fp.h[c][j], F.xi_monomial(a, 0));
        }
        return out;
    };
    const K d2 = (fp.delta * fp.delta).inv();
    const K qq = par.q - par.q.inv();
    for (int j = 2; j <= n; ++j) {
        auto T = F.T(j);
        Vec<K> corr = F.zero();
        for (int c1 = 0; c1 < r; ++c1)
            for (int c2 = c1 + 1; c2 < r; ++c2)
                corr = axpy(corr, d2 * (par.Q[c2] - par.Q[c1]) * qq, F.mul(Fc(c1, j - 1), Fc(c2, j)));
        rec.eq(F.mul(T, F.xi(j)), axpy(F.mul(F.xi(j - 1), T), K(1), corr), "T_j xi_j at " + std::to_string(j));
        rec.eq(F.mul(T, F.xi(j - 1)), axpy(F.mul(F.xi(j), T), K(-1), corr), "T_j xi_{j-1} at " + std::to_string(j));
        for (int k = 1; k <= n; ++k) {
            if (k == j - 1 || k == j) continue;
            rec.eq(F.mul(T, F.xi(k)), F.mul(F.xi(k), T), "T_" + std::to_string(j) + " xi_" + std::to_string(k));
        }
    }
    return rec.done();
}

namespace {

template <class Alg>
Check murphy_rank(const Alg& A, std::string id) {
    auto shapes = Poset::partitions_only(A.n(), A.r()).elements();
    auto B = murphy_basis(A, shapes);
    auto rk = rank(B.coordinate_matrix(A.dim()));
    std::size_t expect = 1;
    for (int k = 2; k <= A.n(); ++k) expect *= k;
    for (int k = 0; k < A.n(); ++k) expect *= A.r();
    Check ck{std::move(id), rk == expect && A.dim() == expect, ""};
    ck.witness = "rank " + std::to_string(rk) + " of " + std::to_string(B.elts.size()) + " elements, n!r^n = " +
                 std::to_string(expect);
    return ck;
}

}  // namespace

template <class K>
Check check_murphy_rank(const AKAlgebra<K>& A) {
    return murphy_rank(A, "relations.murphy_rank");
}

template <class K>
Check check_flat_murphy_rank(const FlatAlgebra<K>& F) {
    return murphy_rank(F, "relations.flat_murphy_rank");
}

#define CQS_REL_INST(K)                                          \
    template Check check_ak_relations<K>(const AKAlgebra<K>&);   \
    template Check check_flat_relations<K>(const FlatAlgebra<K>&); \
    template Check check_murphy_rank<K>(const AKAlgebra<K>&);    \
    template Check check_flat_murphy_rank<K>(const FlatAlgebra<K>&);

CQS_REL_INST(Fp)
CQS_REL_INST(Rational)
#undef CQS_REL_INST

}  // namespace cqs
