#include "gptb/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace gptb {

Scalar Scalar::exact(long long num, long long den) {
    if (den == 0) throw DomainError("rational denominator is zero");
    // boost 1.74 rejects negative denominators in the two-argument
    // constructor; normalize the sign first.
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Scalar(Rational(BigInt(num), BigInt(den)));
}

const Rational& Scalar::rat() const {
    if (!is_exact()) throw ScalarModeError("rat() on a real-mode scalar");
    return std::get<Rational>(v_);
}

double Scalar::dbl() const {
    if (is_exact()) throw ScalarModeError("dbl() on an exact-mode scalar");
    return std::get<double>(v_);
}

double Scalar::to_double() const {
    return is_exact() ? std::get<Rational>(v_).convert_to<double>() : std::get<double>(v_);
}

Scalar Scalar::same_mode(long long n) const {
    return is_exact() ? exact(n) : real(static_cast<double>(n));
}

void Scalar::require_same_mode(const Scalar& o) const {
    if (is_exact() != o.is_exact())
        throw ScalarModeError("mixed exact/real scalar arithmetic");
}

Scalar Scalar::operator-() const {
    return is_exact() ? Scalar(Rational(-std::get<Rational>(v_))) : Scalar(-std::get<double>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_mode(o);
    if (is_exact())
        std::get<Rational>(v_) += std::get<Rational>(o.v_);
    else
        std::get<double>(v_) += std::get<double>(o.v_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same_mode(o);
    if (is_exact())
        std::get<Rational>(v_) -= std::get<Rational>(o.v_);
    else
        std::get<double>(v_) -= std::get<double>(o.v_);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_mode(o);
    if (is_exact())
        std::get<Rational>(v_) *= std::get<Rational>(o.v_);
    else
        std::get<double>(v_) *= std::get<double>(o.v_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same_mode(o);
    if (o.is_zero()) throw DomainError("scalar division by zero");
    if (is_exact())
        std::get<Rational>(v_) /= std::get<Rational>(o.v_);
    else
        std::get<double>(v_) /= std::get<double>(o.v_);
    return *this;
}

int Scalar::sign() const {
    if (is_exact()) {
        const Rational& r = std::get<Rational>(v_);
        return r.sign();
    }
    double d = std::get<double>(v_);
    return d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
}

int Scalar::compare(const Scalar& o) const {
    require_same_mode(o);
    if (is_exact()) {
        const Rational& a = std::get<Rational>(v_);
        const Rational& b = std::get<Rational>(o.v_);
        return a < b ? -1 : (a > b ? 1 : 0);
    }
    double a = std::get<double>(v_);
    double b = std::get<double>(o.v_);
    return a < b ? -1 : (a > b ? 1 : 0);
}

std::string Scalar::str() const {
    if (is_exact()) {
        const Rational& r = std::get<Rational>(v_);
        if (denominator(r) == 1) return numerator(r).str();
        return numerator(r).str() + "/" + denominator(r).str();
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), std::get<double>(v_));
    return std::string(buf, res.ptr);
}

namespace {

// cpp_int's string constructor treats a leading zero as an octal prefix;
// integer parsing goes through here to force base 10.
BigInt parse_decimal_int(std::string digits) {
    if (digits.empty()) throw ParseError("empty integer literal");
    bool negative = digits[0] == '-';
    size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
    if (start == digits.size()) throw ParseError("sign without digits");
    BigInt v = 0;
    for (size_t i = start; i < digits.size(); ++i) {
        char c = digits[i];
        if (c < '0' || c > '9') throw ParseError("non-digit in integer literal");
        v = v * 10 + (c - '0');
    }
    return negative ? BigInt(-v) : v;
}

Rational parse_exact(std::string_view text) {
    std::string s(text);
    size_t slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num = parse_decimal_int(s.substr(0, slash));
        BigInt den = parse_decimal_int(s.substr(slash + 1));
        if (den == 0) throw DomainError("rational denominator is zero");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    }
    size_t dot = s.find('.');
    if (dot == std::string::npos) return Rational(parse_decimal_int(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (frac_len == 0) return Rational(parse_decimal_int(s.substr(0, dot)));
    BigInt den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(parse_decimal_int(digits), den);
}

}  // namespace

Scalar Scalar::parse(std::string_view text, Mode m) {
    if (text.empty()) throw ParseError("empty scalar literal");
    try {
        if (m == Mode::exact) return Scalar(parse_exact(text));
        std::string s(text);
        char* end = nullptr;
        double d = std::strtod(s.c_str(), &end);
        if (end != s.c_str() + s.size()) throw ParseError("trailing characters in scalar literal '" + s + "'");
        return Scalar(d);
    } catch (const ParseError&) {
        throw;
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed scalar literal '" + std::string(text) + "'");
    }
}

bool eq_within(const Scalar& a, const Scalar& b, double eps) {
    if (a.is_exact() && b.is_exact()) return a == b;
    if (!a.is_exact() && !b.is_exact()) return std::fabs(a.dbl() - b.dbl()) <= eps;
    throw ScalarModeError("mixed exact/real scalar comparison");
}

bool leq_within(const Scalar& a, const Scalar& b, double eps) {
    if (a.is_exact() && b.is_exact()) return a <= b;
    if (!a.is_exact() && !b.is_exact()) return a.dbl() <= b.dbl() + eps;
    throw ScalarModeError("mixed exact/real scalar comparison");
}

}  // namespace gptb
