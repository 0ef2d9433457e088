#pragma once

#include <map>
#include <vector>

#include "pluritop/scalar.hpp"
#include "pluritop/space.hpp"

namespace pluritop {

template <class S>
using Point = std::vector<S>;

// Finitely supported multi-index -> coefficient map with a degree bound.
// Zero coefficients are never stored.
template <class S>
class Polynomial {
  using T = ScalarTraits<S>;

 public:
  Polynomial() = default;
  Polynomial(int n, int degree_bound) : n_(n), bound_(degree_bound) {
    if (n < 1 || degree_bound < 0) {
      throw std::invalid_argument("Polynomial: n >= 1 and degree_bound >= 0 required");
    }
  }

  static Polynomial constant(int n, int degree_bound, const S& c) {
    Polynomial p(n, degree_bound);
    p.add_term(MultiIndex(n), c);
    return p;
  }
  static Polynomial monomial(int degree_bound, const MultiIndex& alpha, const S& c) {
    Polynomial p(alpha.n(), degree_bound);
    p.add_term(alpha, c);
    return p;
  }

  int n() const { return n_; }
  int degree_bound() const { return bound_; }
  const std::map<MultiIndex, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Largest |alpha| with a nonzero coefficient (0 for the zero polynomial).
  int degree() const {
    int d = 0;
    for (const auto& [alpha, c] : terms_) d = std::max(d, alpha.degree());
    return d;
  }

  S coeff(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? T::zero() : it->second;
  }

  void add_term(const MultiIndex& alpha, const S& c) {
    if (alpha.n() != n_) throw std::invalid_argument("Polynomial: dimension mismatch");
    if (alpha.degree() > bound_) {
      throw DegreeOverflow("Polynomial term exceeds degree bound");
    }
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) it->second += c;
    if (T::is_zero(it->second)) terms_.erase(it);
  }

  Polynomial& operator+=(const Polynomial& g) {
    if (g.n_ != n_) throw std::invalid_argument("Polynomial: dimension mismatch");
    bound_ = std::max(bound_, g.bound_);
    for (const auto& [alpha, c] : g.terms_) add_term(alpha, c);
    return *this;
  }
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    return f + (-g);
  }
  friend Polynomial operator-(const Polynomial& f) {
    Polynomial r(f.n_, f.bound_);
    for (const auto& [alpha, c] : f.terms_) r.terms_.emplace(alpha, -c);
    return r;
  }
  friend Polynomial operator*(const S& c, const Polynomial& f) {
    Polynomial r(f.n_, f.bound_);
    if (T::is_zero(c)) return r;
    for (const auto& [alpha, v] : f.terms_) {
      S w = c * v;
      if (!T::is_zero(w)) r.terms_.emplace(alpha, w);
    }
    return r;
  }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    if (f.n_ != g.n_) throw std::invalid_argument("Polynomial: dimension mismatch");
    Polynomial r(f.n_, f.bound_ + g.bound_);
    for (const auto& [a, va] : f.terms_) {
      for (const auto& [b, vb] : g.terms_) r.add_term(a + b, va * vb);
    }
    return r;
  }
  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.n_ == g.n_ && f.terms_ == g.terms_;
  }

 private:
  int n_ = 1;
  int bound_ = 0;
  std::map<MultiIndex, S> terms_;
};

// Tuple of polynomials, one per component of H_m(B)^k.
template <class S>
using PolyTuple = std::vector<Polynomial<S>>;

template <class S>
S eval(const Polynomial<S>& f, const Point<S>& z) {
  using T = ScalarTraits<S>;
  if (static_cast<int>(z.size()) != f.n()) {
    throw std::invalid_argument("eval: point dimension mismatch");
  }
  S acc = T::zero();
  for (const auto& [alpha, c] : f.terms()) {
    S term = c;
    for (int i = 0; i < f.n(); ++i) {
      for (int t = 0; t < alpha[i]; ++t) term *= z[static_cast<std::size_t>(i)];
    }
    acc += term;
  }
  return acc;
}

// <f, g> = sum_alpha f_alpha conj(g_alpha) / rho_m(alpha).
template <class S>
S inner_product(const Polynomial<S>& f, const Polynomial<S>& g, const WeightTable& wt) {
  using T = ScalarTraits<S>;
  if (f.n() != g.n() || f.n() != wt.n()) {
    throw std::invalid_argument("inner_product: dimension mismatch");
  }
  S acc = T::zero();
  for (const auto& [alpha, fa] : f.terms()) {
    S gb = g.coeff(alpha);
    if (T::is_zero(gb)) continue;
    acc += fa * T::conj(gb) * T::from_ratio(Rational(1) / wt.rho(alpha));
  }
  return acc;
}

template <class S>
S tuple_inner_product(const PolyTuple<S>& f, const PolyTuple<S>& g,
                      const WeightTable& wt) {
  using T = ScalarTraits<S>;
  if (f.size() != g.size()) {
    throw std::invalid_argument("tuple_inner_product: arity mismatch");
  }
  S acc = T::zero();
  for (std::size_t i = 0; i < f.size(); ++i) acc += inner_product(f[i], g[i], wt);
  return acc;
}

// Degree-<=D partial sum of the kernel: sum_k binom(m+k-1,k) <z,w>^k with
// <z,w> = sum_i z_i conj(w_i).
template <class S>
S kernel_truncated(int m, const Point<S>& z, const Point<S>& w, int D) {
  using T = ScalarTraits<S>;
  if (m < 1 || D < 0) throw std::invalid_argument("kernel_truncated: m >= 1, D >= 0");
  if (z.size() != w.size()) {
    throw std::invalid_argument("kernel_truncated: point dimension mismatch");
  }
  S s = T::zero();
  for (std::size_t i = 0; i < z.size(); ++i) s += z[i] * T::conj(w[i]);
  S acc = T::zero();
  S pw = T::one();
  for (int k = 0; k <= D; ++k) {
    acc += T::from_ratio(Rational(binomial(static_cast<unsigned long>(m + k - 1),
                                           static_cast<unsigned long>(k)))) *
           pw;
    if (k < D) pw *= s;
  }
  return acc;
}

// The same partial sum expanded over the monomial basis in z:
// K_m(z, w) = sum_{|alpha|<=D} rho_m(alpha) conj(w)^alpha z^alpha.
template <class S>
Polynomial<S> kernel_at(const WeightTable& wt, const Point<S>& w) {
  using T = ScalarTraits<S>;
  if (static_cast<int>(w.size()) != wt.n()) {
    throw std::invalid_argument("kernel_at: point dimension mismatch");
  }
  Point<S> wc(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) wc[i] = T::conj(w[i]);
  Polynomial<S> k(wt.n(), wt.D());
  for (const MultiIndex& alpha : basis_enumerate(wt.n(), wt.D())) {
    S c = T::from_ratio(wt.rho(alpha));
    for (int i = 0; i < wt.n(); ++i) {
      for (int t = 0; t < alpha[i]; ++t) c *= wc[static_cast<std::size_t>(i)];
    }
    k.add_term(alpha, c);
  }
  return k;
}

}  // namespace pluritop
