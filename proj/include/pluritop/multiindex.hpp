#pragma once

#include <compare>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "pluritop/errors.hpp"
#include "pluritop/rational.hpp"

namespace pluritop {

// Exponent multi-index alpha in N^n. Ordering is graded lexicographic:
// lower total degree first, ties broken with z_1 dominant, so for n = 2
// the order starts (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(int n) : c_(static_cast<std::size_t>(n), 0) {}
  explicit MultiIndex(std::vector<int> comps) : c_(std::move(comps)) {
    for (int v : c_) {
      if (v < 0) throw std::invalid_argument("multi-index with negative component");
    }
  }
  MultiIndex(std::initializer_list<int> comps) : MultiIndex(std::vector<int>(comps)) {}

  int n() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  int degree() const { return std::accumulate(c_.begin(), c_.end(), 0); }
  bool is_origin() const { return degree() == 0; }
  const std::vector<int>& components() const { return c_; }

  MultiIndex bumped(int i) const {
    MultiIndex r = *this;
    ++r.c_[static_cast<std::size_t>(i)];
    return r;
  }
  // alpha - e_i; the caller must ensure alpha_i > 0.
  MultiIndex lowered(int i) const {
    MultiIndex r = *this;
    --r.c_[static_cast<std::size_t>(i)];
    return r;
  }

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r = a;
    for (int i = 0; i < a.n(); ++i) r.c_[static_cast<std::size_t>(i)] += b[i];
    return r;
  }
  // Componentwise difference; requires b <= a.
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r = a;
    for (int i = 0; i < a.n(); ++i) {
      r.c_[static_cast<std::size_t>(i)] -= b[i];
      if (r.c_[static_cast<std::size_t>(i)] < 0) {
        throw std::invalid_argument("multi-index difference is negative");
      }
    }
    return r;
  }

  // Componentwise beta <= alpha (divisibility of monomials).
  friend bool bounded_by(const MultiIndex& beta, const MultiIndex& alpha) {
    for (int i = 0; i < beta.n(); ++i) {
      if (beta[i] > alpha[i]) return false;
    }
    return true;
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.c_ == b.c_; }
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    // Within a degree, z_1-dominant: larger first component sorts earlier.
    return b.c_ <=> a.c_;
  }

 private:
  std::vector<int> c_;
};

// All alpha with |alpha| <= max_degree in basis order; length binom(n+D, n).
inline std::vector<MultiIndex> basis_enumerate(int n, int max_degree) {
  if (n < 1 || max_degree < 0) {
    throw std::invalid_argument("basis_enumerate requires n >= 1, degree >= 0");
  }
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  auto fill = [&](auto&& self, int pos, int rest) -> void {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = rest;
      out.emplace_back(cur);
      return;
    }
    for (int v = rest; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, rest - v);
    }
  };
  for (int k = 0; k <= max_degree; ++k) fill(fill, 0, k);
  return out;
}

// gamma_alpha = |alpha|! / alpha!, the multinomial count of monomial words.
inline BigInt gamma(const MultiIndex& alpha) {
  BigInt r = factorial(static_cast<unsigned long>(alpha.degree()));
  for (int i = 0; i < alpha.n(); ++i) {
    BigInt f = factorial(static_cast<unsigned long>(alpha[i]));
    r /= f;
  }
  return r;
}

}  // namespace pluritop
