#include "cqs/field.hpp"

#include <charconv>
#include <sstream>

namespace cqs {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void Fp::set_modulus(std::uint32_t p) {
    if (!is_prime(p) || p > 65521) throw std::invalid_argument("modulus must be a prime below 2^16");
    p_ = p;
}

Fp Fp::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    Fp base = *this, acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Fp Fp::inv() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in Fp");
    long long a = v_, m = p_, x0 = 1, x1 = 0;
    while (m != 0) {
        long long t = a / m;
        a -= t * m; std::swap(a, m);
        x0 -= t * x1; std::swap(x0, x1);
    }
    return Fp(x0);
}

Fp Fp::parse(std::string_view s) {
    auto integer = [&](std::string_view t) {
        long long x = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
        if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
            throw std::invalid_argument("bad prime-field scalar: " + std::string(s));
        return Fp(x);
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return integer(s);
    Fp den = integer(s.substr(slash + 1));
    if (den.is_zero()) throw std::invalid_argument("zero denominator: " + std::string(s));
    return integer(s.substr(0, slash)) / den;
}

Rational Rational::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    mpq_class acc = 1, base = v_;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return Rational(acc);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(std::string_view s) {
    mpq_class v;
    if (s.empty() || v.set_str(std::string(s), 10) != 0 || v.get_den() == 0)
        throw std::invalid_argument("bad rational scalar: " + std::string(s));
    v.canonicalize();
    return Rational(v);
}

std::string FieldSpec::describe() const {
    std::ostringstream os;
    os << (prime() ? "F_" + std::to_string(p) : std::string("Q")) << " q=" << q << " Q=(";
    for (std::size_t i = 0; i < Q.size(); ++i) os << (i ? "," : "") << Q[i];
    os << ")";
    return os.str();
}

template <class K>
Params<K> make_params(const FieldSpec& spec) {
    Params<K> par;
    par.q = K::parse(spec.q);
    if (par.q.is_zero()) throw std::invalid_argument("q must be invertible");
    for (const auto& s : spec.Q) {
        // "q^s" shorthand
        if (s.size() > 2 && s[0] == 'q' && s[1] == '^') {
            long long e = 0;
            auto [ptr, ec] = std::from_chars(s.data() + 2, s.data() + s.size(), e);
            if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("bad exponent in " + s);
            par.Q.push_back(par.q.pow(e));
        } else {
            par.Q.push_back(K::parse(s));
        }
    }
    if (par.Q.empty()) throw std::invalid_argument("Q must have r >= 1 entries");
    return par;
}

template <class K>
K pn_value(const Params<K>& par, int n) {
    K acc = 1;
    for (int i = 1; i <= n; ++i) {
        K s = 0, qp = 1;
        for (int j = 0; j < i; ++j) { s += qp; qp *= par.q; }
        acc *= s;
    }
    for (int j = 0; j + 1 < par.r(); ++j)
        for (int k = -n + 1; k < n; ++k) acc *= par.q.pow(2 * k) * par.Q[j] - par.Q[j + 1];
    return acc;
}

template <class K>
K pn_value_qsq(const Params<K>& par, int n) {
    K acc = 1, q2 = par.q * par.q;
    for (int i = 1; i <= n; ++i) {
        K s = 0, qp = 1;
        for (int j = 0; j < i; ++j) { s += qp; qp *= q2; }
        acc *= s;
    }
    for (int j = 0; j + 1 < par.r(); ++j)
        for (int k = -n + 1; k < n; ++k) acc *= par.q.pow(2 * k) * par.Q[j] - par.Q[j + 1];
    return acc;
}

template Params<Fp> make_params<Fp>(const FieldSpec&);
template Params<Rational> make_params<Rational>(const FieldSpec&);
template Fp pn_value<Fp>(const Params<Fp>&, int);
template Rational pn_value<Rational>(const Params<Rational>&, int);
template Fp pn_value_qsq<Fp>(const Params<Fp>&, int);
template Rational pn_value_qsq<Rational>(const Params<Rational>&, int);

}  // namespace cqs
