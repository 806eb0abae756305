#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace bergman {

// Arbitrary-precision rational scalar. mpq_class keeps values canonical
// (lowest terms, positive denominator) once canonicalize() has run; every
// constructor below guarantees that.
using Rational = mpq_class;

/// Build num/den in canonical form. Throws on zero denominator.
Rational make_rational(long num, long den = 1);

/// Parse "7/3", "-2", "0.25" or "2.5e-3" into an exact rational.
/// Decimal strings are converted digit-by-digit; no binary float is involved.
Rational rational_from_string(const std::string& text);

std::string rational_to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

/// Nearest multiple of 2^-bits (ties round up). Used to keep Newton iterates
/// at a bounded working precision.
Rational dyadic_round(const Rational& q, unsigned bits);

/// Exact power with integer exponent >= 0.
Rational rational_pow(const Rational& q, unsigned e);

// Complex number with exact rational real and imaginary parts. All arithmetic
// is exact; inverse() refuses zero.
struct ExactComplex {
  Rational re{0};
  Rational im{0};

  ExactComplex() = default;
  ExactComplex(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ExactComplex(long r, long i = 0) : re(r), im(i) {}

  static ExactComplex parse(const std::string& re_text, const std::string& im_text) {
    return {rational_from_string(re_text), rational_from_string(im_text)};
  }

  bool is_zero() const { return re == 0 && im == 0; }

  ExactComplex conj() const { return {re, Rational(-im)}; }

  /// |z|^2, exact.
  Rational norm2() const { return Rational(re * re + im * im); }

  /// |Re z| + |Im z|, an exact upper bound for |z|.
  Rational l1() const { return Rational(abs(re) + abs(im)); }

  /// max(|Re z|, |Im z|), an exact lower bound for |z|.
  Rational linf() const {
    Rational a(abs(re)), b(abs(im));
    return a >= b ? a : b;
  }

  ExactComplex inverse() const {
    Rational d = norm2();
    if (d == 0) throw std::domain_error("ExactComplex: inverse of zero");
    return {Rational(re / d), Rational(-im / d)};
  }

  friend ExactComplex operator+(const ExactComplex& x, const ExactComplex& y) {
    return {Rational(x.re + y.re), Rational(x.im + y.im)};
  }
  friend ExactComplex operator-(const ExactComplex& x, const ExactComplex& y) {
    return {Rational(x.re - y.re), Rational(x.im - y.im)};
  }
  friend ExactComplex operator-(const ExactComplex& x) {
    return {Rational(-x.re), Rational(-x.im)};
  }
  friend ExactComplex operator*(const ExactComplex& x, const ExactComplex& y) {
    return {Rational(x.re * y.re - x.im * y.im), Rational(x.re * y.im + x.im * y.re)};
  }
  friend ExactComplex operator*(const Rational& s, const ExactComplex& x) {
    return {Rational(s * x.re), Rational(s * x.im)};
  }
  friend ExactComplex operator/(const ExactComplex& x, const ExactComplex& y) {
    return x * y.inverse();
  }
  ExactComplex& operator+=(const ExactComplex& y) {
    re += y.re;
    im += y.im;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& y) {
    re -= y.re;
    im -= y.im;
    return *this;
  }
  ExactComplex& operator*=(const ExactComplex& y) { return *this = *this * y; }

  friend bool operator==(const ExactComplex& x, const ExactComplex& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend bool operator!=(const ExactComplex& x, const ExactComplex& y) { return !(x == y); }
};

inline std::complex<double> to_complex(const ExactComplex& z) {
  return {to_double(z.re), to_double(z.im)};
}

inline ExactComplex dyadic_round(const ExactComplex& z, unsigned bits) {
  return {dyadic_round(z.re, bits), dyadic_round(z.im, bits)};
}

std::string to_string(const ExactComplex& z);

}  // namespace bergman
