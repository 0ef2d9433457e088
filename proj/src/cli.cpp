#include "pluritop/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "pluritop/suite.hpp"

namespace pluritop {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNegative = 3;

struct RunConfig {
  int n = 1;
  int m = 1;
  int degree = 3;
  std::string mode = "exact";
  std::uint64_t seed = 0;
  std::string output;
  std::string operator_file;
  std::string symbol_file;

  Mode parsed_mode() const { return mode == "float" ? Mode::floating : Mode::exact; }
};

void emit(const RunConfig& cfg, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + cfg.output + "'");
  out << text;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
  }
  return j;
}

template <class S>
int run_verify(const RunConfig& cfg) {
  VerifyConfig vc{cfg.n, cfg.m, cfg.degree, cfg.parsed_mode(), cfg.seed};
  const std::vector<CheckResult> checks = run_verify_suite<S>(vc);
  bool all = true;
  Json arr = Json::array();
  for (const CheckResult& c : checks) {
    all = all && c.pass;
    arr.push_back(Json{{"name", c.name},
                       {"pass", c.pass},
                       {"frobenius_sq", c.frobenius_sq},
                       {"detail", c.detail}});
  }
  Json rep;
  rep["all_passed"] = all;
  rep["checks"] = std::move(arr);
  rep["config"] = Json{{"n", cfg.n},
                       {"m", cfg.m},
                       {"degree", cfg.degree},
                       {"mode", cfg.mode},
                       {"seed", cfg.seed}};
  if constexpr (ScalarTraits<S>::exact) {
    rep["threshold"] = "0";
  } else {
    rep["threshold"] = kFloatResidualTol;
  }
  emit(cfg, rep);
  return all ? kExitOk : kExitSuiteFailure;
}

template <class S>
int run_toeplitz(const RunConfig& cfg, bool n_given) {
  const Json j = load_json_file(cfg.symbol_file);
  const PluriharmonicSymbol<S> s = symbol_from_json<S>(j);
  if (n_given && s.g.n() != cfg.n) {
    throw ParseError("symbol dimension disagrees with --n");
  }
  const int n = s.g.n();
  const int hi = std::max(s.g.degree(), s.h.degree());
  SpaceParams params{n, cfg.m, cfg.degree + hi, cfg.parsed_mode()};
  params.validate();
  const WeightTable wt(params);
  emit(cfg, operator_to_json(toeplitz_op(s, wt, cfg.degree)));
  return kExitOk;
}

template <class S>
int run_classify(const RunConfig& cfg) {
  const Json j = load_json_file(cfg.operator_file);
  GradedOperator<S> probe = operator_from_json<S>(j, 0, cfg.parsed_mode());
  const int workspace =
      std::max({probe.d_in() + 1, probe.d_out(),
                std::min(probe.d_out(), cfg.degree + 1 + std::max(probe.band().hi, 0)) +
                    probe.params().m});
  GradedOperator<S> op = operator_from_json<S>(j, workspace, cfg.parsed_mode());
  ClassificationReport<S> rep = classify(op, cfg.degree);
  Json out = classification_to_json(rep);
  out["mode"] = cfg.mode;
  out["trusted_degree"] = cfg.degree;
  if constexpr (ScalarTraits<S>::exact) {
    out["threshold"] = "0";
  } else {
    out["threshold"] = kFloatResidualTol;
  }
  emit(cfg, out);
  return rep.verdict == Verdict::ToeplitzPluriharmonic ? kExitOk : kExitNegative;
}

template <class S>
int run_recover(const RunConfig& cfg) {
  const Json j = load_json_file(cfg.operator_file);
  GradedOperator<S> op = operator_from_json<S>(j, 0, cfg.parsed_mode());
  emit(cfg, symbol_to_json(recover_symbol(op)));
  return kExitOk;
}


}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Exact verification of the Brown-Halmos identity for Toeplitz "
               "operators with pluriharmonic symbol on H_m(B)"};
  app.require_subcommand(1);

  RunConfig cfg;
  CLI::Option* n_opt = nullptr;
  auto add_common = [&cfg, &n_opt](CLI::App* sub, bool with_space) {
    if (with_space) {
      n_opt = sub->add_option("--n", cfg.n, "ball dimension");
      sub->add_option("--m", cfg.m, "kernel exponent");
    }
    sub->add_option("--degree", cfg.degree, "trusted degree window");
    sub->add_option("--mode", cfg.mode, "arithmetic mode")
        ->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--seed", cfg.seed, "seed for random symbols");
    sub->add_option("--output", cfg.output, "output file (default stdout)");
  };

  CLI::App* verify = app.add_subcommand("verify", "run the identity suite");
  add_common(verify, true);

  CLI::App* toeplitz = app.add_subcommand("toeplitz", "build a Toeplitz matrix");
  add_common(toeplitz, true);
  toeplitz->add_option("--symbol", cfg.symbol_file, "symbol JSON file")->required();

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "classify an operator matrix");
  add_common(classify_cmd, false);
  classify_cmd->add_option("--operator", cfg.operator_file, "operator JSON file")
      ->required();

  CLI::App* recover =
      app.add_subcommand("recover", "recover a symbol without the BH check");
  add_common(recover, false);
  recover->add_option("--operator", cfg.operator_file, "operator JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (cfg.n < 1 || cfg.m < 1 || cfg.degree < 0) {
    std::cerr << "invalid config: need n >= 1, m >= 1, degree >= 0\n";
    return kExitUsage;
  }

  using CD = std::complex<double>;
  const bool exact = cfg.parsed_mode() == Mode::exact;
  try {
    if (verify->parsed()) {
      return exact ? run_verify<ComplexQ>(cfg) : run_verify<CD>(cfg);
    }
    if (toeplitz->parsed()) {
      const bool n_given = n_opt != nullptr && n_opt->count() > 0;
      return exact ? run_toeplitz<ComplexQ>(cfg, n_given)
                   : run_toeplitz<CD>(cfg, n_given);
    }
    if (classify_cmd->parsed()) {
      return exact ? run_classify<ComplexQ>(cfg) : run_classify<CD>(cfg);
    }
    if (recover->parsed()) {
      return exact ? run_recover<ComplexQ>(cfg) : run_recover<CD>(cfg);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const WindowMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegreeOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ArityMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int cli_main(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("pluritop");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace pluritop
