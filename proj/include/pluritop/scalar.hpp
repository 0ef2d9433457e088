#pragma once

#include <complex>
#include <cstdio>
#include <string>

#include "pluritop/rational.hpp"

namespace pluritop {

// Residual threshold below which a float-mode weighted Frobenius norm
// squared counts as zero (~1e-9 per entry).
inline constexpr double kFloatResidualTol = 1e-18;

// Complex number with exact rational real and imaginary parts.
struct ComplexQ {
  Rational re{0};
  Rational im{0};

  ComplexQ() = default;
  ComplexQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  friend ComplexQ operator+(const ComplexQ& a, const ComplexQ& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexQ operator-(const ComplexQ& a, const ComplexQ& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexQ operator-(const ComplexQ& a) { return {-a.re, -a.im}; }
  friend ComplexQ operator*(const ComplexQ& a, const ComplexQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ComplexQ& operator+=(const ComplexQ& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  ComplexQ& operator-=(const ComplexQ& b) {
    re -= b.re;
    im -= b.im;
    return *this;
  }
  ComplexQ& operator*=(const ComplexQ& b) { return *this = *this * b; }
  friend bool operator==(const ComplexQ& a, const ComplexQ& b) {
    return a.re == b.re && a.im == b.im;
  }
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<ComplexQ> {
  using Real = Rational;
  static constexpr bool exact = true;

  static ComplexQ zero() { return {}; }
  static ComplexQ one() { return {Rational(1), Rational(0)}; }
  static ComplexQ from_ratio(const Rational& q) { return {q, Rational(0)}; }
  static ComplexQ conj(const ComplexQ& s) { return {s.re, -s.im}; }
  static Real abs_sq(const ComplexQ& s) { return s.re * s.re + s.im * s.im; }
  static bool is_zero(const ComplexQ& s) { return s.re == 0 && s.im == 0; }
  static Real real_zero() { return Rational(0); }
  static Real ratio_to_real(const Rational& q) { return q; }
  static bool resid_is_zero(const Real& r) { return r == 0; }
  static std::string real_str(const Real& r) { return rational_str(r); }
};

template <>
struct ScalarTraits<std::complex<double>> {
  using Real = double;
  static constexpr bool exact = false;

  static std::complex<double> zero() { return {0.0, 0.0}; }
  static std::complex<double> one() { return {1.0, 0.0}; }
  static std::complex<double> from_ratio(const Rational& q) {
    return {to_double(q), 0.0};
  }
  static std::complex<double> conj(const std::complex<double>& s) {
    return std::conj(s);
  }
  static Real abs_sq(const std::complex<double>& s) { return std::norm(s); }
  static bool is_zero(const std::complex<double>& s) {
    return s.real() == 0.0 && s.imag() == 0.0;
  }
  static Real real_zero() { return 0.0; }
  static Real ratio_to_real(const Rational& q) { return to_double(q); }
  static bool resid_is_zero(Real r) { return r <= kFloatResidualTol; }
  static std::string real_str(Real r) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", r);
    return buf;
  }
};

}  // namespace pluritop
