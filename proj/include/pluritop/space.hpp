#pragma once

#include <map>
#include <memory>
#include <string>

#include "pluritop/multiindex.hpp"
#include "pluritop/rational.hpp"

namespace pluritop {

enum class Mode { exact, floating };

inline std::string mode_str(Mode m) { return m == Mode::exact ? "exact" : "float"; }

// Parameters of the truncated space: dimension n of the ball, kernel
// exponent m, truncation degree D and arithmetic mode.
struct SpaceParams {
  int n = 1;
  int m = 1;
  int D = 0;
  Mode mode = Mode::exact;

  void validate() const {
    if (n < 1) throw std::invalid_argument("SpaceParams: n must be >= 1");
    if (m < 1) throw std::invalid_argument("SpaceParams: m must be >= 1");
    if (D < 0) throw std::invalid_argument("SpaceParams: D must be >= 0");
  }
  friend bool operator==(const SpaceParams& a, const SpaceParams& b) {
    return a.n == b.n && a.m == b.m && a.D == b.D;
  }
};

// rho_m(alpha) = (m+|alpha|-1)! / (alpha! (m-1)!), built by the recurrence
// rho(alpha) = rho(alpha - e_i) * (m+|alpha|-1) / alpha_i.
inline Rational rho(int m, const MultiIndex& alpha) {
  Rational r(1);
  int deg = 0;
  for (int i = 0; i < alpha.n(); ++i) {
    for (int t = 1; t <= alpha[i]; ++t) {
      ++deg;
      r *= make_rational(m + deg - 1, t);
    }
  }
  return r;
}

// Immutable table of rho_m(alpha) for all |alpha| <= D; cheap to copy.
class WeightTable {
 public:
  explicit WeightTable(SpaceParams params) : params_(params) {
    params_.validate();
    auto tbl = std::make_shared<std::map<MultiIndex, Rational>>();
    for (const MultiIndex& alpha : basis_enumerate(params_.n, params_.D)) {
      if (alpha.is_origin()) {
        tbl->emplace(alpha, Rational(1));
        continue;
      }
      int i = 0;
      while (alpha[i] == 0) ++i;
      const Rational& parent = tbl->at(alpha.lowered(i));
      tbl->emplace(alpha,
                   parent * make_rational(params_.m + alpha.degree() - 1, alpha[i]));
    }
    tbl_ = std::move(tbl);
  }

  const SpaceParams& params() const { return params_; }
  int n() const { return params_.n; }
  int m() const { return params_.m; }
  int D() const { return params_.D; }

  const Rational& rho(const MultiIndex& alpha) const {
    auto it = tbl_->find(alpha);
    if (it == tbl_->end()) {
      throw std::out_of_range("rho: multi-index outside truncation degree");
    }
    return it->second;
  }

 private:
  SpaceParams params_;
  std::shared_ptr<const std::map<MultiIndex, Rational>> tbl_;
};

}  // namespace pluritop
