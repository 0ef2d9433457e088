#pragma once

#include <functional>
#include <vector>

#include "pluritop/json_io.hpp"
#include "pluritop/pool.hpp"

namespace pluritop {

struct VerifyConfig {
  int n = 1;
  int m = 1;
  int degree = 3;
  Mode mode = Mode::exact;
  std::uint64_t seed = 0;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string frobenius_sq;
  std::string detail;
};

// Max squared coefficient deviation between two polynomials.
template <class S>
typename ScalarTraits<S>::Real poly_dist_max_sq(const Polynomial<S>& f,
                                                const Polynomial<S>& g) {
  using T = ScalarTraits<S>;
  typename T::Real worst = T::real_zero();
  auto scan = [&](const Polynomial<S>& a, const Polynomial<S>& b) {
    for (const auto& [alpha, c] : a.terms()) {
      typename T::Real d = T::abs_sq(c - b.coeff(alpha));
      if (worst < d) worst = d;
    }
  };
  scan(f, g);
  scan(g, f);
  return worst;
}

namespace detail {

template <class S>
CheckResult make_result(const std::string& name, typename ScalarTraits<S>::Real resid,
                        const std::string& detail = std::string()) {
  using T = ScalarTraits<S>;
  return CheckResult{name, T::resid_is_zero(resid), T::real_str(resid), detail};
}

// Seeded symbol stream for case index i: degree-bounded parts with
// coefficients a/b, a in [-9,9], b in [1,4].
template <class S>
PluriharmonicSymbol<S> suite_symbol(std::uint64_t seed, std::uint64_t i, int n,
                                    int sdeg) {
  SplitMix64 root(seed);
  SplitMix64 rng = root.split(i);
  return random_symbol<S>(rng, n, sdeg);
}

}  // namespace detail

// The full identity battery for one (n, m, degree) cell. Workspace degree is
// degree + 4 + m, wide enough for degree-3 symbols through the Brown-Halmos
// pipeline. Checks run on the worker pool; the result order is fixed.
template <class S>
std::vector<CheckResult> run_verify_suite(const VerifyConfig& cfg) {
  using T = ScalarTraits<S>;
  using Real = typename T::Real;
  using Op = GradedOperator<S>;

  SpaceParams params{cfg.n, cfg.m, cfg.degree + 4 + cfg.m, cfg.mode};
  params.validate();
  const WeightTable wt(params);
  const int d = std::max(cfg.degree, 1);
  const int m = cfg.m;
  const int n = cfg.n;
  const int sdeg = std::min(3, d + 1);
  constexpr int kSeededCases = 5;

  auto seeded_toeplitz = [&](std::uint64_t i) {
    return toeplitz_op(detail::suite_symbol<S>(cfg.seed, i, n, sdeg), wt, d + 1);
  };

  std::vector<std::pair<std::string, std::function<CheckResult()>>> tasks;

  tasks.emplace_back("delta_via_sigma", [&]() {
    Op a = delta_cap_via_sigma<S>(wt, d);
    Op b = delta_cap<S>(wt, d);
    return detail::make_result<S>("delta_via_sigma",
                                  report_restricted(sub(a, b), d).frobenius_sq,
                                  "alternating sigma sum equals the diagonal Delta");
  });

  tasks.emplace_back("intertwining", [&]() {
    Op lhs = compose(delta_op<S>(wt, d + 1), mz_row<S>(wt, d));
    Op rhs = compose(mz_row<S>(wt, d), direct_sum_n(delta_cap<S>(wt, d)));
    return detail::make_result<S>("intertwining",
                                  report_restricted(sub(lhs, rhs), d).frobenius_sq,
                                  "delta M_z = M_z (oplus Delta)");
  });

  tasks.emplace_back("mz_normal_diagonal", [&]() {
    Op lhs = compose(mz_row<S>(wt, d - 1), mz_star<S>(wt, d));
    std::vector<S> coeffs;
    std::vector<Op> projs;
    for (int j = 1; j <= d; ++j) {
      coeffs.push_back(T::from_ratio(make_rational(j, m + j - 1)));
      projs.push_back(graded_projection<S>(wt, j));
    }
    Op rhs = lincomb(coeffs, projs);
    return detail::make_result<S>("mz_normal_diagonal",
                                  report_restricted(sub(lhs, rhs), d).frobenius_sq,
                                  "M_z M_z^* = sum_j j/(m+j-1) P_j");
  });

  tasks.emplace_back("im_mz_projection", [&]() {
    Op lhs = compose(delta_op<S>(wt, d), compose(mz_row<S>(wt, d - 1), mz_star<S>(wt, d)));
    Op rhs = sub(identity_op<S>(wt, 1, d), graded_projection<S>(wt, 0));
    return detail::make_result<S>("im_mz_projection",
                                  report_restricted(sub(lhs, rhs), d).frobenius_sq,
                                  "delta M_z M_z^* = I - P_0");
  });

  tasks.emplace_back("normal_equation", [&]() {
    Op normal = compose(mz_star<S>(wt, d), mz_row<S>(wt, d - 1));
    Op lhs = compose(normal, compose(mz_star<S>(wt, d), delta_op<S>(wt, d)));
    Op rhs = mz_star<S>(wt, d);
    return detail::make_result<S>("normal_equation",
                                  report_restricted(sub(lhs, rhs), d).frobenius_sq,
                                  "(M_z^* M_z)(M_z^* delta) = M_z^*");
  });

  tasks.emplace_back("proj_idempotent", [&]() {
    Op p = proj_im_mz_star<S>(wt, d);
    return detail::make_result<S>("proj_idempotent",
                                  report_restricted(sub(compose(p, p), p), d).frobenius_sq);
  });

  tasks.emplace_back("proj_self_adjoint", [&]() {
    Op p = proj_im_mz_star<S>(wt, d);
    return detail::make_result<S>("proj_self_adjoint",
                                  report_restricted(sub(adjoint(p), p), d).frobenius_sq);
  });

  tasks.emplace_back("proj_fixes_im_mz_star", [&]() {
    Op col = mz_star<S>(wt, d + 1);
    Op p = proj_im_mz_star<S>(wt, d);
    return detail::make_result<S>(
        "proj_fixes_im_mz_star",
        report_restricted(sub(compose(p, col), col), d + 1).frobenius_sq);
  });

  for (int gdeg = 0; gdeg <= 2; ++gdeg) {
    const std::string name = "monomial_powers_deg" + std::to_string(gdeg);
    tasks.emplace_back(name, [&, gdeg, name]() {
      Real acc = T::real_zero();
      for (const MultiIndex& gamma : basis_enumerate(n, gdeg)) {
        if (gamma.degree() != gdeg) continue;
        acc += verify_powers<S>(wt, gamma, d).frobenius_sq;
      }
      return detail::make_result<S>(name, acc,
                                    "monomial powers and adjoints satisfy the identity");
    });
  }

  tasks.emplace_back("forward_toeplitz_seeded", [&]() {
    Real acc = T::real_zero();
    for (std::uint64_t i = 0; i < kSeededCases; ++i) {
      acc += bh_residual(seeded_toeplitz(i), d).frobenius_sq;
    }
    return detail::make_result<S>("forward_toeplitz_seeded", acc,
                                  "seeded pluriharmonic Toeplitz sections pass");
  });

  tasks.emplace_back("recovery_roundtrip_seeded", [&]() {
    Real worst = T::real_zero();
    for (std::uint64_t i = 0; i < kSeededCases; ++i) {
      PluriharmonicSymbol<S> s = detail::suite_symbol<S>(cfg.seed, i, n, sdeg);
      PluriharmonicSymbol<S> rec = recover_symbol(toeplitz_op(s, wt, d + 1));
      PluriharmonicSymbol<S> expect = canonicalize(s);
      worst = std::max(worst, poly_dist_max_sq(rec.g, expect.g));
      worst = std::max(worst, poly_dist_max_sq(rec.h, expect.h));
    }
    return detail::make_result<S>("recovery_roundtrip_seeded", worst,
                                  "recovered symbol equals the canonical input");
  });

  tasks.emplace_back("component_inheritance_seeded", [&]() {
    Real acc = T::real_zero();
    Op t = seeded_toeplitz(0);
    for (int k = t.band().lo; k <= t.band().hi; ++k) {
      acc += bh_residual(homogeneous_component(t, k), d).frobenius_sq;
    }
    return detail::make_result<S>("component_inheritance_seeded", acc,
                                  "homogeneous components inherit the identity");
  });

  tasks.emplace_back("component_multiplication_seeded", [&]() {
    Real worst = T::real_zero();
    Op t = seeded_toeplitz(0);
    const Polynomial<S> one = Polynomial<S>::constant(n, 0, T::one());
    for (int k = std::max(t.band().lo, 0); k <= t.band().hi; ++k) {
      Op tk = homogeneous_component(t, k);
      Polynomial<S> q = tk.apply1(one);
      for (const MultiIndex& beta : basis_enumerate(n, d)) {
        Polynomial<S> zb = Polynomial<S>::monomial(d, beta, T::one());
        worst = std::max(worst, poly_dist_max_sq(tk.apply1(zb), q * zb));
      }
    }
    return detail::make_result<S>("component_multiplication_seeded", worst,
                                  "nonnegative components act as multiplications");
  });

  tasks.emplace_back("fejer_reconstruction", [&]() {
    Op t = seeded_toeplitz(0);
    const int width = std::max(-t.band().lo, t.band().hi);
    Real prev = T::real_zero();
    bool monotone = true;
    bool formula = true;
    std::vector<Real> comp_norm_sq;
    for (int k = t.band().lo; k <= t.band().hi; ++k) {
      comp_norm_sq.push_back(frobenius_sq(homogeneous_component(t, k)));
    }
    for (int N = 0; N <= 2 * width + 2; ++N) {
      Real err = frobenius_sq(sub(fejer_sum(t, N), t));
      if constexpr (T::exact) {
        if (N > 0 && prev < err) monotone = false;
      } else {
        if (N > 0 && prev + 1e-9 * (1.0 + prev) < err) monotone = false;
      }
      prev = err;
      // Expected error: missing components plus squared Fejer damping.
      Real expect = T::real_zero();
      int idx = 0;
      for (int k = t.band().lo; k <= t.band().hi; ++k, ++idx) {
        if (std::abs(k) > N) {
          expect += comp_norm_sq[static_cast<std::size_t>(idx)];
        } else {
          expect += T::ratio_to_real(make_rational(std::abs(k), N + 1) *
                                     make_rational(std::abs(k), N + 1)) *
                    comp_norm_sq[static_cast<std::size_t>(idx)];
        }
      }
      if constexpr (T::exact) {
        if (err != expect) formula = false;
      } else {
        if (std::abs(err - expect) > 1e-9 * (1.0 + err + expect)) formula = false;
      }
    }
    // Unweighted reconstruction is exact once the band is covered.
    std::vector<S> ones;
    std::vector<Op> comps;
    for (int k = t.band().lo; k <= t.band().hi; ++k) {
      ones.push_back(T::one());
      comps.push_back(homogeneous_component(t, k));
    }
    Real recon = frobenius_sq(sub(lincomb(ones, comps), t));
    CheckResult r = detail::make_result<S>("fejer_reconstruction", recon,
                                           "error law and exact unweighted sum");
    r.pass = r.pass && monotone && formula;
    return r;
  });

  tasks.emplace_back("kernel_reproducing_seeded", [&]() {
    Real worst = T::real_zero();
    SplitMix64 root(cfg.seed ^ 0x6b65726e656cULL);
    for (int i = 0; i < 20; ++i) {
      SplitMix64 rng = root.split(static_cast<std::uint64_t>(i));
      Polynomial<S> p = random_polynomial<S>(rng, n, wt.D());
      Point<S> w = random_point<S>(rng, n);
      S lhs = inner_product(p, kernel_at(wt, w), wt);
      S rhs = eval(p, w);
      Real dist = T::abs_sq(lhs - rhs);
      if constexpr (!T::exact) {
        // Values grow like |w|^D; compare relative to their size.
        dist /= 1.0 + T::abs_sq(lhs) + T::abs_sq(rhs);
      }
      worst = std::max(worst, dist);
    }
    return detail::make_result<S>("kernel_reproducing_seeded", worst,
                                  "<p, K(.,w)> = p(w) for seeded pairs");
  });

  tasks.emplace_back("negative_control_ph0", [&]() {
    ClassificationReport<S> rep = classify(graded_projection<S>(wt, 0), d);
    Op spiked = lincomb<S>({T::one(), T::one()},
                           {seeded_toeplitz(0), graded_projection<S>(wt, 0)});
    ClassificationReport<S> rep2 = classify(spiked, d);
    const bool ok = rep.verdict == Verdict::NotToeplitz && !rep.bh.is_zero &&
                    rep2.verdict == Verdict::NotToeplitz && !rep2.bh.is_zero;
    return CheckResult{"negative_control_ph0", ok, T::real_str(rep.bh.frobenius_sq),
                       "P_{H_0} and spiked sections are rejected"};
  });

  if (m == 1) {
    tasks.emplace_back("m1_reduction", [&]() {
      Op t = seeded_toeplitz(0);
      Op sect = pluritop::detail::tighten_dout(restrict_cols(t, d + 1));
      Op via_pipeline = bh_rhs(sect);
      Op left = proj_im_mz_star<S>(wt, sect.d_out());
      Op right = proj_im_mz_star<S>(wt, sect.d_in());
      Op manual = compose(left, compose(direct_sum_n(sect), right));
      return detail::make_result<S>(
          "m1_reduction", report_restricted(sub(via_pipeline, manual), d).frobenius_sq,
          "right side collapses to P (oplus T) P");
    });
  }

  if (n == 1 && m == 1) {
    tasks.emplace_back("classical_brown_halmos", [&]() {
      Op t = seeded_toeplitz(0);
      Op sect = pluritop::detail::tighten_dout(restrict_cols(t, d + 1));
      Op shifted = compose(coord_mult_adj<S>(wt, 0, sect.d_out()),
                           compose(sect, coord_mult<S>(wt, 0, d)));
      Op classical = restrict_cols(sub(shifted, restrict_cols(sect, d)), d);
      Op graded = restrict_cols(sub(bh_lhs(sect), bh_rhs(sect)), d);
      Real dist = frobenius_sq(sub(classical, graded));
      CheckResult r = detail::make_result<S>(
          "classical_brown_halmos", dist,
          "M_z^* T M_z - T agrees with the graded residual entrywise");
      r.pass = r.pass && report_restricted(classical, d).is_zero;
      return r;
    });
  }

  std::vector<CheckResult> results(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) { results[i] = tasks[i].second(); });
  return results;
}

}  // namespace pluritop
