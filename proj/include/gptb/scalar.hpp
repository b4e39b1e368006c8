#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>
#include <variant>

#include "gptb/errors.hpp"

namespace gptb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/* A number that is either an exact rational (arbitrary-precision, lowest
 * terms, positive denominator) or a binary double. The kind is fixed at
 * construction and every binary operation requires both operands to share
 * it; mixing throws ScalarModeError instead of silently coercing. All
 * geometry in this library is generic over Scalar. */
class Scalar {
public:
    enum class Mode { exact, real };

    Scalar() : v_(Rational(0)) {}

    static Scalar exact(long long num, long long den = 1);
    static Scalar exact(Rational r) { return Scalar(std::move(r)); }
    static Scalar real(double x) { return Scalar(x); }
    static Scalar zero(Mode m) { return m == Mode::exact ? exact(0) : real(0.0); }
    static Scalar one(Mode m) { return m == Mode::exact ? exact(1) : real(1.0); }

    /// Parse "p/q", an integer, or a terminating decimal (exact mode); any
    /// strtod-accepted literal in real mode.
    static Scalar parse(std::string_view text, Mode m);

    Mode mode() const { return is_exact() ? Mode::exact : Mode::real; }
    bool is_exact() const { return std::holds_alternative<Rational>(v_); }

    const Rational& rat() const;
    double dbl() const;

    /// Lossy for exact values; used only for reporting.
    double to_double() const;

    /// The integer n carried into this scalar's mode.
    Scalar same_mode(long long n) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    int sign() const;
    Scalar abs() const { return sign() < 0 ? -*this : *this; }
    bool is_zero() const { return sign() == 0; }

    bool operator==(const Scalar& o) const { return compare(o) == 0; }
    bool operator!=(const Scalar& o) const { return compare(o) != 0; }
    bool operator<(const Scalar& o) const { return compare(o) < 0; }
    bool operator<=(const Scalar& o) const { return compare(o) <= 0; }
    bool operator>(const Scalar& o) const { return compare(o) > 0; }
    bool operator>=(const Scalar& o) const { return compare(o) >= 0; }

    /// "p/q" (just "p" when q == 1) for exact values, shortest round-trip
    /// decimal for real values.
    std::string str() const;

private:
    explicit Scalar(Rational r) : v_(std::move(r)) {}
    explicit Scalar(double d) : v_(d) {}

    int compare(const Scalar& o) const;
    void require_same_mode(const Scalar& o) const;

    std::variant<Rational, double> v_;
};

// Integer literals adopt the mode of the scalar they meet.
inline Scalar operator+(const Scalar& a, long long b) { return a + a.same_mode(b); }
inline Scalar operator-(const Scalar& a, long long b) { return a - a.same_mode(b); }
inline Scalar operator*(const Scalar& a, long long b) { return a * a.same_mode(b); }
inline Scalar operator/(const Scalar& a, long long b) { return a / a.same_mode(b); }
inline Scalar operator+(long long a, const Scalar& b) { return b.same_mode(a) + b; }
inline Scalar operator-(long long a, const Scalar& b) { return b.same_mode(a) - b; }
inline Scalar operator*(long long a, const Scalar& b) { return b.same_mode(a) * b; }
inline Scalar operator/(long long a, const Scalar& b) { return b.same_mode(a) / b; }

inline bool operator==(const Scalar& a, long long b) { return a == a.same_mode(b); }
inline bool operator!=(const Scalar& a, long long b) { return a != a.same_mode(b); }
inline bool operator<(const Scalar& a, long long b) { return a < a.same_mode(b); }
inline bool operator<=(const Scalar& a, long long b) { return a <= a.same_mode(b); }
inline bool operator>(const Scalar& a, long long b) { return a > a.same_mode(b); }
inline bool operator>=(const Scalar& a, long long b) { return a >= a.same_mode(b); }

/// |a - b| <= eps for real-mode values, a == b for exact ones.
bool eq_within(const Scalar& a, const Scalar& b, double eps);

/// a <= b + eps for real-mode values, a <= b for exact ones.
bool leq_within(const Scalar& a, const Scalar& b, double eps);

}  // namespace gptb
