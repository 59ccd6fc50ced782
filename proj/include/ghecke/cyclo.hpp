#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghk {

/// Exact rational scalar. GMP handles reduction to lowest terms.
using Rational = mpq_class;

struct field_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct division_by_zero : std::domain_error {
    using std::domain_error::domain_error;
};

/// Euler totient.
int totient(int r);

/// Coefficients of the r-th cyclotomic polynomial, constant term first,
/// length totient(r)+1, leading coefficient 1.
const std::vector<Rational>& cyclotomic_poly(int r);

/// An element of the cyclotomic field Q(zeta_r), zeta_r = exp(2*pi*i/r),
/// stored as a polynomial in zeta of degree < totient(r), i.e. always
/// reduced modulo the r-th cyclotomic polynomial. Equality is coefficient
/// equality. r = 1 and r = 2 are plain rationals (zeta = 1 resp. -1).
///
/// Values that happen to be rational embed into any Q(zeta_r); binary
/// operations promote such operands. Mixing two non-rational values of
/// different order throws field_mismatch.
class Cyclo {
  public:
    Cyclo() : r_(1), c_(1, Rational(0)) {}
    Cyclo(long v) : r_(1), c_(1, Rational(v)) {}
    Cyclo(int v) : r_(1), c_(1, Rational(v)) {}
    Cyclo(const Rational& v) : r_(1), c_(1, v) {}

    /// Coefficient vector of length totient(r); reduces nothing, so the
    /// caller must pass a reduced vector (all public constructors do).
    Cyclo(int r, std::vector<Rational> coeffs);

    static Cyclo zero(int r) { return rational(r, Rational(0)); }
    static Cyclo one(int r) { return rational(r, Rational(1)); }
    static Cyclo rational(int r, const Rational& v);
    /// zeta_r^e, e arbitrary (reduced mod r).
    static Cyclo zeta_pow(int r, long e);

    int order() const { return r_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Value as a rational; throws unless is_rational().
    Rational rational_value() const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o);

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }

    /// Multiplicative inverse; throws division_by_zero on 0.
    Cyclo inverse() const;
    Cyclo pow(long e) const;

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    /// "a0 + a1*z + a2*z^2" with rational coefficients "p/q".
    std::string str() const;
    /// Inverse of str(); also accepts bare rationals and signs, e.g.
    /// "-1/2", "z^2 - z", "2*z". Throws std::invalid_argument on garbage.
    static Cyclo parse(int r, const std::string& text);

  private:
    int r_;
    std::vector<Rational> c_;

    void promote_to(int r);
    // Makes a and b live in one field, or throws.
    static void align(Cyclo& a, Cyclo& b);
};

inline Cyclo operator*(const Rational& a, Cyclo b) { return b *= Cyclo(a); }

std::ostream& operator<<(std::ostream& os, const Cyclo& v);

/// Parses "p" or "p/q"; throws std::invalid_argument on garbage or q = 0.
Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& v);

}  // namespace ghk
