#pragma once

#include <cstdint>

#include "pluritop/toeplitz.hpp"

namespace pluritop {

// splitmix64; the fixed stream keeps seeded suite failures reproducible
// across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Derive an independent stream for case index i.
  SplitMix64
  split(std::uint64_t i) {
    SplitMix64 fork(state_ ^ (0xA0761D6478BD642FULL * (i + 1)));
    fork.next();
    return fork;
  }

 private:
  std::uint64_t state_;
};

// Coefficient draw a/b with a in [-9, 9], b in [1, 4].
inline Rational random_ratio(SplitMix64& rng) {
  const long a = static_cast<long>(rng.next() % 19) - 9;
  const long b = static_cast<long>(rng.next() % 4) + 1;
  return make_rational(a, b);
}

template <class S>
Polynomial<S> random_polynomial(SplitMix64& rng, int n, int degree) {
  Polynomial<S> p(n, degree);
  for (const MultiIndex& alpha : basis_enumerate(n, degree)) {
    const Rational re = random_ratio(rng);
    const Rational im = random_ratio(rng);
    if constexpr (ScalarTraits<S>::exact) {
      p.add_term(alpha, ComplexQ{re, im});
    } else {
      p.add_term(alpha, std::complex<double>(to_double(re), to_double(im)));
    }
  }
  return p;
}

template <class S>
PluriharmonicSymbol<S> random_symbol(SplitMix64& rng, int n, int degree) {
  PluriharmonicSymbol<S> s;
  s.g = random_polynomial<S>(rng, n, degree);
  s.h = random_polynomial<S>(rng, n, degree);
  return s;
}

template <class S>
Point<S> random_point(SplitMix64& rng, int n) {
  Point<S> w;
  for (int i = 0; i < n; ++i) {
    const Rational re = random_ratio(rng);
    const Rational im = random_ratio(rng);
    if constexpr (ScalarTraits<S>::exact) {
      w.push_back(ComplexQ{re, im});
    } else {
      w.push_back(std::complex<double>(to_double(re), to_double(im)));
    }
  }
  return w;
}

}  // namespace pluritop
