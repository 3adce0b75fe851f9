#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cqs {

// Prime field element. The modulus is process-wide; set it once per run
// before building any algebra (Fp::ModulusScope restores the old one).
class Fp {
public:
    Fp() = default;
    Fp(long long x) {
        long long m = static_cast<long long>(p_);
        long long r = x % m;
        v_ = static_cast<std::uint32_t>(r < 0 ? r + m : r);
    }

    static void set_modulus(std::uint32_t p);
    static std::uint32_t modulus() { return p_; }
    static std::string name() { return "Fp"; }

    class ModulusScope {
    public:
        explicit ModulusScope(std::uint32_t p) : old_(p_) { set_modulus(p); }
        ~ModulusScope() { p_ = old_; }
        ModulusScope(const ModulusScope&) = delete;
        ModulusScope& operator=(const ModulusScope&) = delete;
    private:
        std::uint32_t old_;
    };

    std::uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return from_raw(v_ == 0 ? 0 : p_ - v_); }
    Fp& operator+=(Fp o) { v_ += o.v_; if (v_ >= p_) v_ -= p_; return *this; }
    Fp& operator-=(Fp o) { v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_; return *this; }
    Fp& operator*=(Fp o) {
        v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_);
        return *this;
    }
    Fp& operator/=(Fp o) { return *this *= o.inv(); }
    friend Fp operator+(Fp a, Fp b) { return a += b; }
    friend Fp operator-(Fp a, Fp b) { return a -= b; }
    friend Fp operator*(Fp a, Fp b) { return a *= b; }
    friend Fp operator/(Fp a, Fp b) { return a /= b; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp inv() const;
    Fp pow(long long e) const;

    std::string str() const { return std::to_string(v_); }
    static Fp parse(std::string_view s);

private:
    static Fp from_raw(std::uint32_t v) { Fp x; x.v_ = v; return x; }
    std::uint32_t v_ = 0;
    static inline std::uint32_t p_ = 5;
};

class Rational {
public:
    Rational() = default;
    Rational(long long x) : v_(static_cast<long>(x)) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static std::string name() { return "Q"; }

    const mpq_class& value() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }
    Rational pow(long long e) const;

    // "a/b", or "a" when the denominator is 1
    std::string str() const;
    static Rational parse(std::string_view s);

private:
    mpq_class v_;
};

// Algebra parameters q, Q_1..Q_r over a concrete field.
template <class K>
struct Params {
    K q{1};
    std::vector<K> Q;
    int r() const { return static_cast<int>(Q.size()); }
};

// Run-time description of the coefficient field and parameters, as read
// from a configuration. Values are kept as strings until a field is fixed.
struct FieldSpec {
    enum class Kind { Prime, Rational };
    Kind kind = Kind::Prime;
    std::uint32_t p = 5;
    std::string q = "1";
    std::vector<std::string> Q;

    bool prime() const { return kind == Kind::Prime; }
    std::string field_name() const { return prime() ? "Fp" : "Q"; }
    std::string describe() const;
};

bool is_prime(std::uint64_t p);

// Parse parameters into K. Throws std::invalid_argument on bad input or q = 0.
template <class K>
Params<K> make_params(const FieldSpec& spec);

// P_n(q,Q) as written: prod_i (1+q+...+q^{i-1}) * prod_j prod_{|k|<n} (q^{2k}Q_j - Q_{j+1})
template <class K>
K pn_value(const Params<K>& par, int n);

// Same with the Hecke factor taken in q^2, i.e. prod_i [i]_{q^2}; used
// alongside pn_value when certifying semisimple parameters.
template <class K>
K pn_value_qsq(const Params<K>& par, int n);

}  // namespace cqs
