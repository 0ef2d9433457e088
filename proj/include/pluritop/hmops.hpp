#pragma once

#include "pluritop/opcore.hpp"

namespace pluritop {

// Multiplication by the coordinate z_i.
template <class S>
GradedOperator<S> coord_mult(const WeightTable& wt, int i, int d_in) {
  if (i < 0 || i >= wt.n()) throw std::invalid_argument("coord_mult: bad coordinate");
  if (d_in + 1 > wt.D()) throw DegreeOverflow("coord_mult: output exceeds workspace");
  GradedOperator<S> op(wt, 1, 1, d_in, d_in + 1, Band{1, 1});
  for (const MultiIndex& beta : basis_enumerate(wt.n(), d_in)) {
    op.add_entry({0, beta.bumped(i)}, {0, beta}, ScalarTraits<S>::one());
  }
  return op;
}

// Adjoint of coord_mult over the weighted basis:
// M_{z_i}^* z^alpha = (alpha_i / (m+|alpha|-1)) z^(alpha - e_i).
template <class S>
GradedOperator<S> coord_mult_adj(const WeightTable& wt, int i, int d_in) {
  if (i < 0 || i >= wt.n()) throw std::invalid_argument("coord_mult_adj: bad coordinate");
  GradedOperator<S> op(wt, 1, 1, d_in, std::max(d_in - 1, 0), Band{-1, -1},
                       /*require_margin=*/false);
  for (const MultiIndex& alpha : basis_enumerate(wt.n(), d_in)) {
    if (alpha[i] == 0) continue;
    op.add_entry({0, alpha.lowered(i)}, {0, alpha},
                 ScalarTraits<S>::from_ratio(
                     make_rational(alpha[i], wt.m() + alpha.degree() - 1)));
  }
  return op;
}

// M_z^gamma, multiplication by the monomial z^gamma.
template <class S>
GradedOperator<S> monomial_mult(const WeightTable& wt, const MultiIndex& gamma,
                                int d_in) {
  const int g = gamma.degree();
  if (d_in + g > wt.D()) throw DegreeOverflow("monomial_mult: output exceeds workspace");
  GradedOperator<S> op(wt, 1, 1, d_in, d_in + g, Band{g, g});
  for (const MultiIndex& beta : basis_enumerate(wt.n(), d_in)) {
    op.add_entry({0, beta + gamma}, {0, beta}, ScalarTraits<S>::one());
  }
  return op;
}

// Row multiplication H_m(B)^n -> H_m(B), (f_i) -> sum z_i f_i.
template <class S>
GradedOperator<S> mz_row(const WeightTable& wt, int d_in) {
  if (d_in + 1 > wt.D()) throw DegreeOverflow("mz_row: output exceeds workspace");
  GradedOperator<S> op(wt, wt.n(), 1, d_in, d_in + 1, Band{1, 1});
  for (int i = 0; i < wt.n(); ++i) {
    for (const MultiIndex& beta : basis_enumerate(wt.n(), d_in)) {
      op.add_entry({0, beta.bumped(i)}, {i, beta}, ScalarTraits<S>::one());
    }
  }
  return op;
}

// Column of coordinate adjoints H_m(B) -> H_m(B)^n, f -> (M_{z_i}^* f)_i.
template <class S>
GradedOperator<S> mz_star(const WeightTable& wt, int d_in) {
  GradedOperator<S> op(wt, 1, wt.n(), d_in, std::max(d_in - 1, 0), Band{-1, -1},
                       /*require_margin=*/false);
  for (const MultiIndex& alpha : basis_enumerate(wt.n(), d_in)) {
    const int deg = alpha.degree();
    if (deg == 0) continue;
    for (int i = 0; i < wt.n(); ++i) {
      if (alpha[i] == 0) continue;
      op.add_entry({i, alpha.lowered(i)}, {0, alpha},
                   ScalarTraits<S>::from_ratio(make_rational(alpha[i], wt.m() + deg - 1)));
    }
  }
  return op;
}

// delta: fixes constants, multiplies the degree-k block by (m+k-1)/k.
template <class S>
GradedOperator<S> delta_op(const WeightTable& wt, int d) {
  GradedOperator<S> op(wt, 1, 1, d, d, Band{0, 0});
  for (const MultiIndex& alpha : basis_enumerate(wt.n(), d)) {
    const int k = alpha.degree();
    const Rational w = k == 0 ? Rational(1) : make_rational(wt.m() + k - 1, k);
    op.add_entry({0, alpha}, {0, alpha}, ScalarTraits<S>::from_ratio(w));
  }
  return op;
}

// Delta: multiplies the degree-k block by (m+k)/(k+1).
template <class S>
GradedOperator<S> delta_cap(const WeightTable& wt, int d) {
  GradedOperator<S> op(wt, 1, 1, d, d, Band{0, 0});
  for (const MultiIndex& alpha : basis_enumerate(wt.n(), d)) {
    const int k = alpha.degree();
    op.add_entry({0, alpha}, {0, alpha},
                 ScalarTraits<S>::from_ratio(make_rational(wt.m() + k, k + 1)));
  }
  return op;
}

// P_{H_j}: identity on the degree-j block. P_j = 0 for j < 0.
template <class S>
GradedOperator<S> graded_projection(const WeightTable& wt, int j) {
  if (j > wt.D()) throw std::invalid_argument("graded_projection: degree exceeds D");
  GradedOperator<S> op(wt, 1, 1, wt.D(), wt.D(), Band{0, 0});
  if (j < 0) return op;
  for (const MultiIndex& alpha : basis_enumerate(wt.n(), wt.D())) {
    if (alpha.degree() == j) op.add_entry({0, alpha}, {0, alpha}, ScalarTraits<S>::one());
  }
  return op;
}

// sigma(X) = sum_i M_{z_i} X M_{z_i}^*. Raises both window edges by one.
template <class S>
GradedOperator<S> sigma(const GradedOperator<S>& x) {
  if (x.arity_in() != 1 || x.arity_out() != 1) {
    throw ArityMismatch("sigma: operator must have arity 1");
  }
  const WeightTable& wt = x.weights();
  if (x.d_out() + 1 > wt.D()) {
    throw WindowMismatch("sigma: output window exceeds workspace");
  }
  const int w_in = std::min(x.d_in() + 1, wt.D());
  std::vector<GradedOperator<S>> terms;
  terms.reserve(static_cast<std::size_t>(wt.n()));
  for (int i = 0; i < wt.n(); ++i) {
    terms.push_back(compose(coord_mult<S>(wt, i, x.d_out()),
                            compose(x, coord_mult_adj<S>(wt, i, w_in))));
  }
  return lincomb(std::vector<S>(terms.size(), ScalarTraits<S>::one()), terms);
}

template <class S>
GradedOperator<S> sigma_pow(const GradedOperator<S>& x, int j) {
  if (j < 0) throw std::invalid_argument("sigma_pow: negative power");
  GradedOperator<S> r = x;
  for (int t = 0; t < j; ++t) r = sigma(r);
  return r;
}

// Delta as the alternating sum sum_{j<m} (-1)^j binom(m, j+1) sigma^j(1).
template <class S>
GradedOperator<S> delta_cap_via_sigma(const WeightTable& wt, int d) {
  const int m = wt.m();
  if (d + m - 1 > wt.D()) {
    throw WindowMismatch("delta_cap_via_sigma: workspace too small");
  }
  std::vector<S> coeffs;
  std::vector<GradedOperator<S>> ops;
  GradedOperator<S> pow = identity_op<S>(wt, 1, d);
  for (int j = 0; j < m; ++j) {
    Rational c(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(j + 1)));
    if (j % 2 == 1) c = -c;
    coeffs.push_back(ScalarTraits<S>::from_ratio(c));
    ops.push_back(pow);
    if (j + 1 < m) pow = sigma(pow);
  }
  return lincomb(coeffs, ops);
}

// Diagonal pseudoinverse of M_z M_z^* = sum_j (j/(m+j-1)) P_{H_j}; the
// constant block (the kernel) is annihilated.
template <class S>
GradedOperator<S> pinv_mz_normal(const WeightTable& wt, int d) {
  GradedOperator<S> op(wt, 1, 1, d, d, Band{0, 0});
  for (const MultiIndex& alpha : basis_enumerate(wt.n(), d)) {
    const int k = alpha.degree();
    if (k == 0) continue;
    op.add_entry({0, alpha}, {0, alpha},
                 ScalarTraits<S>::from_ratio(make_rational(wt.m() + k - 1, k)));
  }
  return op;
}

// Orthogonal projection of H_m(B)^n onto Im M_z^*, computed as
// M_z^* pinv(M_z M_z^*) M_z.
template <class S>
GradedOperator<S> proj_im_mz_star(const WeightTable& wt, int d) {
  if (d + 1 > wt.D()) throw WindowMismatch("proj_im_mz_star: workspace too small");
  return compose(mz_star<S>(wt, d + 1),
                 compose(pinv_mz_normal<S>(wt, d + 1), mz_row<S>(wt, d)));
}

// Cauchy dual row M'_z = delta M_z.
template <class S>
GradedOperator<S> cauchy_dual(const WeightTable& wt, int d) {
  if (d + 1 > wt.D()) throw WindowMismatch("cauchy_dual: workspace too small");
  return compose(delta_op<S>(wt, d + 1), mz_row<S>(wt, d));
}

// Degree-k homogeneous component T_k = sum_j P_{j+k} T P_j; over the graded
// basis this is the entries with |row| - |col| = k.
template <class S>
GradedOperator<S> homogeneous_component(const GradedOperator<S>& t, int k) {
  if (t.arity_in() != 1 || t.arity_out() != 1) {
    throw ArityMismatch("homogeneous_component: operator must have arity 1");
  }
  GradedOperator<S> r(t.weights(), 1, 1, t.d_in(), t.d_out(), Band{k, k},
                      /*require_margin=*/false);
  for (const auto& [col, rows] : t.columns()) {
    for (const auto& [row, v] : rows) {
      if (row.alpha.degree() - col.alpha.degree() == k) r.add_entry(row, col, v);
    }
  }
  return r;
}

// Fejer mean sum_{|k|<=N} (1 - |k|/(N+1)) T_k.
template <class S>
GradedOperator<S> fejer_sum(const GradedOperator<S>& t, int N) {
  if (N < 0) throw std::invalid_argument("fejer_sum: N must be >= 0");
  std::vector<S> coeffs;
  std::vector<GradedOperator<S>> comps;
  for (int k = std::max(t.band().lo, -N); k <= std::min(t.band().hi, N); ++k) {
    coeffs.push_back(
        ScalarTraits<S>::from_ratio(Rational(1) - make_rational(std::abs(k), N + 1)));
    comps.push_back(homogeneous_component(t, k));
  }
  if (comps.empty()) {
    return GradedOperator<S>(t.weights(), 1, 1, t.d_in(), t.d_out(), Band{0, 0},
                             /*require_margin=*/false);
  }
  return lincomb(coeffs, comps);
}

namespace detail {

// Shrink d_out to what the band can reach from the trusted columns.
template <class S>
GradedOperator<S> tighten_dout(const GradedOperator<S>& t) {
  const int d_out = std::min(t.d_out(), std::max(t.d_in() + t.band().hi, 0));
  GradedOperator<S> r(t.weights(), t.arity_in(), t.arity_out(), t.d_in(), d_out,
                      t.band(), /*require_margin=*/false);
  for (const auto& [col, rows] : t.columns()) {
    for (const auto& [row, v] : rows) r.add_entry(row, col, v);
  }
  return r;
}

}  // namespace detail

// Left side of the Brown-Halmos identity: M_z^* delta T delta M_z.
template <class S>
GradedOperator<S> bh_lhs(const GradedOperator<S>& t) {
  if (t.arity_in() != 1 || t.arity_out() != 1) {
    throw ArityMismatch("bh_lhs: operator must have arity 1");
  }
  if (t.d_in() < 1) throw WindowMismatch("bh_lhs: input window too small");
  const WeightTable& wt = t.weights();
  GradedOperator<S> inner =
      compose(t, compose(delta_op<S>(wt, t.d_in()), mz_row<S>(wt, t.d_in() - 1)));
  return compose(mz_star<S>(wt, t.d_out()), compose(delta_op<S>(wt, t.d_out()), inner));
}

// Right side: P (oplus sum_{j<m} (-1)^j binom(m,j+1) sigma^j(T)) P with
// P = P_{Im M_z^*}.
template <class S>
GradedOperator<S> bh_rhs(const GradedOperator<S>& t) {
  if (t.arity_in() != 1 || t.arity_out() != 1) {
    throw ArityMismatch("bh_rhs: operator must have arity 1");
  }
  const WeightTable& wt = t.weights();
  const int m = wt.m();
  if (t.d_out() + m > wt.D() || t.d_in() + 1 > wt.D()) {
    throw WindowMismatch("bh_rhs: workspace too small for sigma/projection chain");
  }
  std::vector<S> coeffs;
  std::vector<GradedOperator<S>> pows;
  GradedOperator<S> pow = t;
  for (int j = 0; j < m; ++j) {
    Rational c(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(j + 1)));
    if (j % 2 == 1) c = -c;
    coeffs.push_back(ScalarTraits<S>::from_ratio(c));
    pows.push_back(pow);
    if (j + 1 < m) pow = sigma(pow);
  }
  GradedOperator<S> alt = lincomb(coeffs, pows);
  GradedOperator<S> right = proj_im_mz_star<S>(wt, alt.d_in());
  GradedOperator<S> left = proj_im_mz_star<S>(wt, alt.d_out());
  return compose(left, compose(direct_sum_n(alt), right));
}

// Residual of the Brown-Halmos identity on the trusted window d.
template <class S>
OperatorReport<S> bh_residual(const GradedOperator<S>& t, int d) {
  if (t.arity_in() != 1 || t.arity_out() != 1) {
    throw ArityMismatch("bh_residual: operator must have arity 1");
  }
  if (d < 0) throw std::invalid_argument("bh_residual: negative degree");
  if (t.d_in() < d + 1) {
    throw WindowMismatch("bh_residual: trusted window needs d_in >= d + 1");
  }
  GradedOperator<S> sect = detail::tighten_dout(restrict_cols(t, d + 1));
  return report_restricted(sub(bh_lhs(sect), bh_rhs(sect)), d);
}

// Both M_z^gamma and its adjoint satisfy the
// Brown-Halmos identity; reports the combined residual.
template <class S>
OperatorReport<S> verify_powers(const WeightTable& wt, const MultiIndex& gamma, int d) {
  using T = ScalarTraits<S>;
  if (d + 1 + gamma.degree() + wt.m() > wt.D()) {
    throw WindowMismatch("verify_powers: workspace too small");
  }
  GradedOperator<S> mono = monomial_mult<S>(wt, gamma, d + 1);
  OperatorReport<S> a = bh_residual(mono, d);
  OperatorReport<S> b = bh_residual(adjoint(mono), d);
  OperatorReport<S> rep;
  rep.frobenius_sq = a.frobenius_sq + b.frobenius_sq;
  rep.is_zero = T::resid_is_zero(rep.frobenius_sq);
  rep.max_degree_checked = d;
  return rep;
}

}  // namespace pluritop
