#ifndef KPG_SCALAR_HPP
#define KPG_SCALAR_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "kpg/error.hpp"

namespace kpg {

using Rational = boost::multiprecision::cpp_rational;

inline std::string scalar_str(const Rational& x) { return x.str(); }

inline Rational parse_scalar(const std::string& s, const Rational*) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw error("BadScalar", s);
    }
}

/// Prime field of order p, p < 2^31.
class Fp {
  public:
    Fp() = default;
    Fp(int64_t v, int64_t p) : p_(p) { v_ = ((v % p) + p) % p; }

    int64_t value() const { return v_; }
    int64_t modulus() const { return p_; }
    bool operator==(const Fp& o) const { return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return v_ != o.v_; }

    Fp operator+(const Fp& o) const { return Fp(v_ + o.v_, mod(o)); }
    Fp operator-(const Fp& o) const { return Fp(v_ - o.v_, mod(o)); }
    Fp operator-() const { return Fp(-v_, p_); }
    Fp operator*(const Fp& o) const { return Fp(v_ * o.v_, mod(o)); }
    Fp operator/(const Fp& o) const {
        if (o.v_ == 0) throw error("DivisionByZero", "in F_" + std::to_string(mod(o)));
        return *this * o.inverse();
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inverse() const {  // Fermat
        Fp r(1, p_), b = *this;
        for (int64_t e = p_ - 2; e > 0; e >>= 1) {
            if (e & 1) r *= b;
            b *= b;
        }
        return r;
    }

  private:
    int64_t mod(const Fp& o) const { return p_ ? p_ : o.p_; }
    int64_t v_ = 0;
    int64_t p_ = 0;  // 0 marks an uninitialized additive zero
};

inline std::string scalar_str(const Fp& x) { return std::to_string(x.value()); }

/// Scalar traits used by templated algebra/module code; Fp needs the
/// modulus threaded through one() / parsing.
template <class S>
struct ScalarField {
    static S zero() { return S(0); }
    static S one() { return S(1); }
    static bool is_zero(const S& x) { return x == S(0); }
};

template <>
struct ScalarField<Fp> {
    static inline int64_t p = 2;  // set by the CLI / tests before use
    static Fp zero() { return Fp(0, p); }
    static Fp one() { return Fp(1, p); }
    static bool is_zero(const Fp& x) { return x.value() == 0; }
};

inline Fp parse_scalar(const std::string& s, const Fp*) {
    try {
        size_t pos = 0;
        int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw error("BadScalar", s);
        return Fp(v, ScalarField<Fp>::p);
    } catch (const std::exception&) {
        throw error("BadScalar", s);
    }
}

}  // namespace kpg

#endif
