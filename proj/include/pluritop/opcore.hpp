#pragma once

#include <map>
#include <string>
#include <vector>

#include "pluritop/polynomial.hpp"

namespace pluritop {

// Degree-shift bounds: nonzero entries satisfy lo <= |row| - |col| <= hi.
struct Band {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const Band&, const Band&) = default;
};

// Basis vector of H_m(B)^k: component index plus monomial exponent.
// Component-major order keeps a block direct sum literally block diagonal.
struct BasisKey {
  int comp = 0;
  MultiIndex alpha;

  friend bool operator==(const BasisKey&, const BasisKey&) = default;
  friend std::strong_ordering operator<=>(const BasisKey& a, const BasisKey& b) {
    if (auto c = a.comp <=> b.comp; c != 0) return c;
    return a.alpha <=> b.alpha;
  }
};

// Finite section of an operator between truncated tuple spaces, stored as a
// sparse column-major map over the graded monomial basis. Columns |beta| <=
// d_in are the trusted inputs; every reachable output fits |alpha| <= d_out.
//
// Direct constructors guarantee d_out >= d_in + band.hi (no truncation loss
// inside the window); adjoints of mixed-band sections keep their entries and
// swapped windows instead, so adjoint(adjoint(T)) == T holds exactly.
template <class S>
class GradedOperator {
  using T = ScalarTraits<S>;

 public:
  using ColumnMap = std::map<BasisKey, std::map<BasisKey, S>>;

  GradedOperator(WeightTable wt, int arity_in, int arity_out, int d_in, int d_out,
                 Band band, bool require_margin = true)
      : wt_(std::move(wt)),
        arity_in_(arity_in),
        arity_out_(arity_out),
        d_in_(d_in),
        d_out_(d_out),
        band_(band) {
    if (arity_in_ < 1 || arity_out_ < 1) {
      throw std::invalid_argument("GradedOperator: arity must be >= 1");
    }
    if (d_in_ < 0 || d_out_ < 0 || d_in_ > wt_.D() || d_out_ > wt_.D()) {
      throw WindowMismatch("GradedOperator: degree window outside workspace");
    }
    if (band_.lo > band_.hi) {
      throw std::invalid_argument("GradedOperator: band.lo > band.hi");
    }
    if (require_margin && d_out_ < d_in_ + band_.hi) {
      throw WindowMismatch("GradedOperator: d_out < d_in + band.hi");
    }
  }

  const WeightTable& weights() const { return wt_; }
  const SpaceParams& params() const { return wt_.params(); }
  int arity_in() const { return arity_in_; }
  int arity_out() const { return arity_out_; }
  int d_in() const { return d_in_; }
  int d_out() const { return d_out_; }
  const Band& band() const { return band_; }
  const ColumnMap& columns() const { return cols_; }

  bool is_zero() const { return cols_.empty(); }

  std::size_t entry_count() const {
    std::size_t c = 0;
    for (const auto& [col, rows] : cols_) c += rows.size();
    return c;
  }

  S entry(const BasisKey& row, const BasisKey& col) const {
    auto cit = cols_.find(col);
    if (cit == cols_.end()) return T::zero();
    auto rit = cit->second.find(row);
    return rit == cit->second.end() ? T::zero() : rit->second;
  }

  void add_entry(const BasisKey& row, const BasisKey& col, const S& v) {
    if (T::is_zero(v)) return;
    check_key(col, arity_in_, d_in_, "column");
    check_key(row, arity_out_, d_out_, "row");
    const int shift = row.alpha.degree() - col.alpha.degree();
    if (shift < band_.lo || shift > band_.hi) {
      throw std::invalid_argument("GradedOperator: entry outside declared band");
    }
    auto& rows = cols_[col];
    auto [it, inserted] = rows.emplace(row, v);
    if (!inserted) {
      it->second += v;
      if (T::is_zero(it->second)) {
        rows.erase(it);
        if (rows.empty()) cols_.erase(col);
      }
    }
  }

  friend bool operator==(const GradedOperator& a, const GradedOperator& b) {
    return a.params() == b.params() && a.arity_in_ == b.arity_in_ &&
           a.arity_out_ == b.arity_out_ && a.d_in_ == b.d_in_ && a.d_out_ == b.d_out_ &&
           a.band_ == b.band_ && a.cols_ == b.cols_;
  }

  // Matrix-vector product over the monomial basis. A member rather than a
  // free function so unqualified calls on tuple arguments never collide
  // with std::apply through ADL.
  PolyTuple<S> apply(const PolyTuple<S>& p) const {
    if (static_cast<int>(p.size()) != arity_in_) {
      throw ArityMismatch("apply: tuple arity does not match operator");
    }
    int deg_in = 0;
    for (const auto& f : p) {
      if (f.n() != wt_.n()) throw std::invalid_argument("apply: dimension mismatch");
      if (f.degree() > d_in_) throw DegreeOverflow("apply: input exceeds d_in");
      deg_in = std::max(deg_in, f.degree());
    }
    const int out_bound = std::min(d_out_, std::max(0, deg_in + band_.hi));
    PolyTuple<S> out(static_cast<std::size_t>(arity_out_),
                     Polynomial<S>(wt_.n(), out_bound));
    for (int c = 0; c < arity_in_; ++c) {
      for (const auto& [alpha, v] : p[static_cast<std::size_t>(c)].terms()) {
        auto cit = cols_.find(BasisKey{c, alpha});
        if (cit == cols_.end()) continue;
        for (const auto& [row, w] : cit->second) {
          S prod = w * v;
          if (!T::is_zero(prod)) {
            out[static_cast<std::size_t>(row.comp)].add_term(row.alpha, prod);
          }
        }
      }
    }
    return out;
  }

  // Convenience for arity 1 -> 1 sections.
  Polynomial<S> apply1(const Polynomial<S>& p) const {
    if (arity_in_ != 1 || arity_out_ != 1) {
      throw ArityMismatch("apply1: operator is not arity 1 -> 1");
    }
    return apply(PolyTuple<S>{p})[0];
  }

 private:
  void check_key(const BasisKey& k, int arity, int window, const char* kind) const {
    if (k.comp < 0 || k.comp >= arity) {
      throw std::invalid_argument(std::string("GradedOperator: ") + kind +
                                  " component out of range");
    }
    if (k.alpha.n() != wt_.n()) {
      throw std::invalid_argument(std::string("GradedOperator: ") + kind +
                                  " multi-index dimension mismatch");
    }
    if (k.alpha.degree() > window) {
      throw std::invalid_argument(std::string("GradedOperator: ") + kind +
                                  " degree outside window");
    }
  }

  WeightTable wt_;
  int arity_in_;
  int arity_out_;
  int d_in_;
  int d_out_;
  Band band_;
  ColumnMap cols_;
};

// Entry maps agree (windows and declared bands may differ).
template <class S>
bool same_entries(const GradedOperator<S>& a, const GradedOperator<S>& b) {
  return a.columns() == b.columns();
}

template <class S>
GradedOperator<S> identity_op(const WeightTable& wt, int arity, int d) {
  GradedOperator<S> id(wt, arity, arity, d, d, Band{0, 0});
  for (int c = 0; c < arity; ++c) {
    for (const MultiIndex& alpha : basis_enumerate(wt.n(), d)) {
      id.add_entry({c, alpha}, {c, alpha}, ScalarTraits<S>::one());
    }
  }
  return id;
}

// s after t; refuses silent truncation (s must accept every t output).
template <class S>
GradedOperator<S> compose(const GradedOperator<S>& s, const GradedOperator<S>& t) {
  using T = ScalarTraits<S>;
  if (!(s.params() == t.params())) {
    throw std::invalid_argument("compose: space params mismatch");
  }
  if (s.arity_in() != t.arity_out()) {
    throw ArityMismatch("compose: inner arities do not match");
  }
  if (s.d_in() < t.d_out()) {
    throw WindowMismatch("compose: left factor window smaller than right output");
  }
  GradedOperator<S> r(s.weights(), t.arity_in(), s.arity_out(), t.d_in(), s.d_out(),
                      Band{s.band().lo + t.band().lo, s.band().hi + t.band().hi},
                      /*require_margin=*/false);
  for (const auto& [col, mids] : t.columns()) {
    std::map<BasisKey, S> acc;
    for (const auto& [mid, v] : mids) {
      auto sit = s.columns().find(mid);
      if (sit == s.columns().end()) continue;
      for (const auto& [row, w] : sit->second) {
        auto [it, inserted] = acc.emplace(row, w * v);
        if (!inserted) it->second += w * v;
      }
    }
    for (const auto& [row, v] : acc) {
      if (!T::is_zero(v)) r.add_entry(row, col, v);
    }
  }
  return r;
}

// Entrywise linear combination on the common trusted window (columns up to
// min d_in); the band is the componentwise hull.
template <class S>
GradedOperator<S> lincomb(const std::vector<S>& coeffs,
                          const std::vector<GradedOperator<S>>& ops) {
  using T = ScalarTraits<S>;
  if (coeffs.size() != ops.size() || ops.empty()) {
    throw std::invalid_argument("lincomb: need matching nonempty coeff/op lists");
  }
  int d_in = ops[0].d_in();
  int d_out = ops[0].d_out();
  Band band = ops[0].band();
  for (const auto& op : ops) {
    if (!(op.params() == ops[0].params())) {
      throw std::invalid_argument("lincomb: space params mismatch");
    }
    if (op.arity_in() != ops[0].arity_in() || op.arity_out() != ops[0].arity_out()) {
      throw ArityMismatch("lincomb: operator arities differ");
    }
    d_in = std::min(d_in, op.d_in());
    d_out = std::max(d_out, op.d_out());
    band.lo = std::min(band.lo, op.band().lo);
    band.hi = std::max(band.hi, op.band().hi);
  }
  GradedOperator<S> r(ops[0].weights(), ops[0].arity_in(), ops[0].arity_out(), d_in,
                      d_out, band, /*require_margin=*/false);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (T::is_zero(coeffs[k])) continue;
    for (const auto& [col, rows] : ops[k].columns()) {
      if (col.alpha.degree() > d_in) continue;
      for (const auto& [row, v] : rows) r.add_entry(row, col, coeffs[k] * v);
    }
  }
  return r;
}

template <class S>
GradedOperator<S> sub(const GradedOperator<S>& a, const GradedOperator<S>& b) {
  using T = ScalarTraits<S>;
  return lincomb<S>({T::one(), -T::one()}, {a, b});
}

// Adjoint with respect to the weighted inner product:
// s_{beta,alpha} = (rho(beta)/rho(alpha)) conj(t_{alpha,beta}).
template <class S>
GradedOperator<S> adjoint(const GradedOperator<S>& t) {
  using T = ScalarTraits<S>;
  GradedOperator<S> r(t.weights(), t.arity_out(), t.arity_in(), t.d_out(), t.d_in(),
                      Band{-t.band().hi, -t.band().lo}, /*require_margin=*/false);
  const WeightTable& wt = t.weights();
  for (const auto& [col, rows] : t.columns()) {
    const Rational& rho_col = wt.rho(col.alpha);
    for (const auto& [row, v] : rows) {
      S w = T::from_ratio(rho_col / wt.rho(row.alpha)) * T::conj(v);
      r.add_entry(col, row, w);
    }
  }
  return r;
}

// Squared Frobenius norm of the matrix re-expressed in the orthonormalized
// basis: sum |t_{alpha,beta}|^2 rho(beta)/rho(alpha).
template <class S>
typename ScalarTraits<S>::Real frobenius_sq(const GradedOperator<S>& t) {
  using T = ScalarTraits<S>;
  typename T::Real acc = T::real_zero();
  const WeightTable& wt = t.weights();
  for (const auto& [col, rows] : t.columns()) {
    const Rational& rho_col = wt.rho(col.alpha);
    for (const auto& [row, v] : rows) {
      acc += T::abs_sq(v) * T::ratio_to_real(rho_col / wt.rho(row.alpha));
    }
  }
  return acc;
}

// Columns limited to |beta| <= d; entries and d_out unchanged.
template <class S>
GradedOperator<S> restrict_cols(const GradedOperator<S>& t, int d) {
  if (d > t.d_in()) throw DegreeOverflow("restrict: d exceeds trusted window");
  if (d < 0) throw std::invalid_argument("restrict: negative degree");
  GradedOperator<S> r(t.weights(), t.arity_in(), t.arity_out(), d, t.d_out(), t.band(),
                      /*require_margin=*/false);
  for (const auto& [col, rows] : t.columns()) {
    if (col.alpha.degree() > d) continue;
    for (const auto& [row, v] : rows) r.add_entry(row, col, v);
  }
  return r;
}

// Block-diagonal n-fold direct sum of an arity-1 operator.
template <class S>
GradedOperator<S> direct_sum_n(const GradedOperator<S>& t) {
  if (t.arity_in() != 1 || t.arity_out() != 1) {
    throw ArityMismatch("direct_sum_n: operator must have arity 1");
  }
  const int n = t.params().n;
  GradedOperator<S> r(t.weights(), n, n, t.d_in(), t.d_out(), t.band(),
                      /*require_margin=*/false);
  for (int c = 0; c < n; ++c) {
    for (const auto& [col, rows] : t.columns()) {
      for (const auto& [row, v] : rows) {
        r.add_entry({c, row.alpha}, {c, col.alpha}, v);
      }
    }
  }
  return r;
}

// Residual magnitude report for the columns |beta| <= d.
template <class S>
struct OperatorReport {
  bool is_zero = true;
  typename ScalarTraits<S>::Real frobenius_sq{};
  int max_degree_checked = 0;
};

template <class S>
OperatorReport<S> report_restricted(const GradedOperator<S>& t, int d) {
  using T = ScalarTraits<S>;
  GradedOperator<S> r = restrict_cols(t, std::min(d, t.d_in()));
  OperatorReport<S> rep;
  rep.frobenius_sq = frobenius_sq(r);
  rep.is_zero = T::resid_is_zero(rep.frobenius_sq);
  rep.max_degree_checked = d;
  return rep;
}

}  // namespace pluritop
