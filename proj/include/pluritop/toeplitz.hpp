#pragma once

#include <optional>

#include "pluritop/hmops.hpp"

namespace pluritop {

// Pluriharmonic symbol f = g + conj(h) with analytic polynomial parts.
// The canonical split absorbs the constant into h, so g(0) = 0.
template <class S>
struct PluriharmonicSymbol {
  Polynomial<S> g;
  Polynomial<S> h;

  friend bool operator==(const PluriharmonicSymbol& a, const PluriharmonicSymbol& b) {
    return a.g == b.g && a.h == b.h;
  }
};

template <class S>
PluriharmonicSymbol<S> canonicalize(const PluriharmonicSymbol<S>& s) {
  using T = ScalarTraits<S>;
  const MultiIndex origin(s.g.n());
  const S g0 = s.g.coeff(origin);
  PluriharmonicSymbol<S> r = s;
  if (!T::is_zero(g0)) {
    r.g.add_term(origin, -g0);
    r.h.add_term(MultiIndex(s.h.n()), T::conj(g0));
  }
  return r;
}

// Multiplication by the analytic polynomial g.
template <class S>
GradedOperator<S> analytic_toeplitz(const Polynomial<S>& g, const WeightTable& wt,
                                    int d_in) {
  if (g.n() != wt.n()) throw std::invalid_argument("analytic_toeplitz: dimension mismatch");
  if (d_in + g.degree() > wt.D()) {
    throw DegreeOverflow("analytic_toeplitz: output exceeds workspace");
  }
  int lo = g.degree();
  int hi = 0;
  for (const auto& [gamma, c] : g.terms()) {
    lo = std::min(lo, gamma.degree());
    hi = std::max(hi, gamma.degree());
  }
  if (g.is_zero()) lo = hi = 0;
  GradedOperator<S> op(wt, 1, 1, d_in, d_in + hi, Band{lo, hi});
  for (const MultiIndex& beta : basis_enumerate(wt.n(), d_in)) {
    for (const auto& [gamma, c] : g.terms()) {
      op.add_entry({0, beta + gamma}, {0, beta}, c);
    }
  }
  return op;
}

// T_h^*, the adjoint of multiplication by h, from the coefficient formula
// T_h^* z^alpha = sum_{beta<=alpha} (rho(alpha-beta)/rho(alpha)) conj(h_beta)
// z^(alpha-beta).
template <class S>
GradedOperator<S> coanalytic_toeplitz(const Polynomial<S>& h, const WeightTable& wt,
                                      int d_in) {
  using T = ScalarTraits<S>;
  if (h.n() != wt.n()) {
    throw std::invalid_argument("coanalytic_toeplitz: dimension mismatch");
  }
  GradedOperator<S> op(wt, 1, 1, d_in, d_in, Band{-h.degree(), 0});
  for (const MultiIndex& alpha : basis_enumerate(wt.n(), d_in)) {
    const Rational& rho_alpha = wt.rho(alpha);
    for (const auto& [beta, c] : h.terms()) {
      if (!bounded_by(beta, alpha)) continue;
      const MultiIndex rest = alpha - beta;
      op.add_entry({0, rest}, {0, alpha},
                   T::from_ratio(wt.rho(rest) / rho_alpha) * T::conj(c));
    }
  }
  return op;
}

// T p = T_g p + T_h^* p on the common window.
template <class S>
GradedOperator<S> toeplitz_op(const PluriharmonicSymbol<S>& s, const WeightTable& wt,
                              int d_in) {
  using T = ScalarTraits<S>;
  return lincomb<S>({T::one(), T::one()}, {analytic_toeplitz(s.g, wt, d_in),
                                           coanalytic_toeplitz(s.h, wt, d_in)});
}

// Symbol recovery: g = (T - T_0)(1), h = T^*(1). The result is canonical.
template <class S>
PluriharmonicSymbol<S> recover_symbol(const GradedOperator<S>& t) {
  if (t.arity_in() != 1 || t.arity_out() != 1) {
    throw ArityMismatch("recover_symbol: operator must have arity 1");
  }
  if (t.d_in() < 1) throw WindowMismatch("recover_symbol: window must reach degree 1");
  const int n = t.params().n;
  const Polynomial<S> one =
      Polynomial<S>::constant(n, 0, ScalarTraits<S>::one());
  PluriharmonicSymbol<S> s;
  s.g = sub(t, homogeneous_component(t, 0)).apply1(one);
  s.h = adjoint(t).apply1(one);
  return s;
}

enum class Verdict { ToeplitzPluriharmonic, NotToeplitz };

inline std::string verdict_str(Verdict v) {
  return v == Verdict::ToeplitzPluriharmonic ? "ToeplitzPluriharmonic" : "NotToeplitz";
}

template <class S>
struct ClassificationReport {
  OperatorReport<S> bh;
  std::optional<PluriharmonicSymbol<S>> symbol;
  std::optional<OperatorReport<S>> toeplitz_match;
  Verdict verdict = Verdict::NotToeplitz;
};

// End-to-end classifier: Brown-Halmos residual, then symbol recovery and the
// T = T_symbol residual, both on the trusted window d.
template <class S>
ClassificationReport<S> classify(const GradedOperator<S>& t, int d) {
  ClassificationReport<S> rep;
  rep.bh = bh_residual(t, d);
  if (!rep.bh.is_zero) return rep;
  PluriharmonicSymbol<S> s = recover_symbol(t);
  rep.symbol = s;
  rep.toeplitz_match =
      report_restricted(sub(restrict_cols(t, d), toeplitz_op(s, t.weights(), d)), d);
  if (rep.toeplitz_match->is_zero) rep.verdict = Verdict::ToeplitzPluriharmonic;
  return rep;
}

}  // namespace pluritop
