#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

#include "kloc/errors.hpp"

namespace kloc {

/**
 * Exact rational number, always in canonical reduced form:
 * denominator > 0, gcd(|num|, den) = 1, zero stored as 0/1.
 *
 * Thin value wrapper over GMP's mpq_class; construction canonicalizes,
 * so equality is structural.
 */
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit by design
    Rational(long num, long den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero("rational division by zero");
        return wrap(a.value_ / b.value_);
    }
    Rational operator-() const { return wrap(-value_); }

    Rational& operator+=(const Rational& b) { value_ += b.value_; return *this; }
    Rational& operator-=(const Rational& b) { value_ -= b.value_; return *this; }
    Rational& operator*=(const Rational& b) { value_ *= b.value_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // "n" or "n/d"; the den is omitted when 1.
    std::string str() const { return value_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.value_; }

private:
    static Rational wrap(const mpq_class& q) {
        Rational r;
        r.value_ = q;  // mpq arithmetic keeps canonical form
        return r;
    }

    mpq_class value_;
};

/**
 * Element of the field Q(i): re + im*i with exact rational components.
 * All operations are exact; equality is component-wise.
 */
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational real) : re(std::move(real)) {}  // NOLINT
    GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
    GaussianRational(long real) : re(real) {}  // NOLINT
    GaussianRational(long real, long imag) : re(real), im(imag) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// re^2 + im^2, exact; zero iff the argument is zero. Multiplicative:
// norm(a*b) = norm(a)*norm(b).
Rational norm(const GaussianRational& z);

// Field inverse; throws DivisionByZero on zero input.
GaussianRational inverse(const GaussianRational& z);

inline GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * inverse(b);
}

// The imaginary unit.
inline GaussianRational imaginary_unit() { return {0, 1}; }

/**
 * Deterministic total order on Q(i): lexicographic on (re, im).
 * Used wherever a canonical arrangement of scalars is needed (sorted
 * JSON output, deterministic direct-sum order, map keys).
 */
int scalar_compare(const GaussianRational& a, const GaussianRational& b);

struct ScalarLess {
    bool operator()(const GaussianRational& a, const GaussianRational& b) const {
        return scalar_compare(a, b) < 0;
    }
};

/**
 * Scalar grammar (no whitespace anywhere):
 *
 *   scalar := real | imag | real sign imag
 *   real   := sign? rat
 *   imag   := sign? (rat)? "i"
 *   rat    := int ("/" int)?
 *
 * Examples: "0", "-1", "3/2", "i", "-1/4i", "3/2-1/4i".
 * Throws ParseError (with position) on malformed input.
 */
GaussianRational parse_scalar(std::string_view text);

// Canonical rendering; parse_scalar(format_scalar(z)) == z for all z.
std::string format_scalar(const GaussianRational& z);

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << format_scalar(z);
}

}  // namespace kloc
