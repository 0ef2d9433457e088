#pragma once

#include <json.hpp>

#include "pluritop/prng.hpp"
#include "pluritop/toeplitz.hpp"

namespace pluritop {

using Json = nlohmann::json;

namespace detail {

template <class S>
void scalar_to_json(Json& obj, const S& v) {
  if constexpr (ScalarTraits<S>::exact) {
    obj["re"] = rational_str(v.re);
    obj["im"] = rational_str(v.im);
  } else {
    obj["re"] = v.real();
    obj["im"] = v.imag();
  }
}

inline Rational rational_from_json(const Json& v, const char* field) {
  if (!v.is_string()) throw ParseError(std::string("field '") + field + "' must be a rational string");
  return parse_rational(v.get<std::string>());
}

template <class S>
S scalar_from_json(const Json& obj) {
  const Json re = obj.contains("re") ? obj.at("re") : Json("0");
  const Json im = obj.contains("im") ? obj.at("im") : Json("0");
  if constexpr (ScalarTraits<S>::exact) {
    return ComplexQ{rational_from_json(re, "re"), rational_from_json(im, "im")};
  } else {
    auto num = [](const Json& v, const char* field) -> double {
      if (v.is_number()) return v.get<double>();
      if (v.is_string()) return to_double(parse_rational(v.get<std::string>()));
      throw ParseError(std::string("field '") + field +
                       "' must be a number or rational string");
    };
    return std::complex<double>(num(re, "re"), num(im, "im"));
  }
}

inline MultiIndex multiindex_from_json(const Json& v, int n, const char* field) {
  if (!v.is_array() || static_cast<int>(v.size()) != n) {
    throw ParseError(std::string("field '") + field + "' must be an array of " +
                     std::to_string(n) + " integers");
  }
  std::vector<int> comps;
  for (const Json& e : v) {
    if (!e.is_number_integer() || e.get<long long>() < 0) {
      throw ParseError(std::string("field '") + field + "' must hold nonnegative integers");
    }
    comps.push_back(e.get<int>());
  }
  return MultiIndex(comps);
}

inline int int_field(const Json& obj, const char* field) {
  if (!obj.contains(field)) throw ParseError(std::string("missing field '") + field + "'");
  const Json& v = obj.at(field);
  if (!v.is_number_integer()) {
    throw ParseError(std::string("field '") + field + "' must be an integer");
  }
  return v.get<int>();
}

}  // namespace detail

template <class S>
Json poly_to_json(const Polynomial<S>& p) {
  Json terms = Json::array();
  for (const auto& [alpha, c] : p.terms()) {
    Json t;
    t["alpha"] = alpha.components();
    detail::scalar_to_json(t, c);
    terms.push_back(std::move(t));
  }
  return Json{{"n", p.n()}, {"terms", std::move(terms)}};
}

template <class S>
Polynomial<S> poly_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("polynomial must be a JSON object");
  const int n = detail::int_field(j, "n");
  if (n < 1) throw ParseError("field 'n' must be >= 1");
  if (!j.contains("terms") || !j.at("terms").is_array()) {
    throw ParseError("missing or non-array field 'terms'");
  }
  int bound = 0;
  std::vector<std::pair<MultiIndex, S>> terms;
  for (const Json& t : j.at("terms")) {
    MultiIndex alpha = detail::multiindex_from_json(
        t.contains("alpha") ? t.at("alpha") : Json(), n, "alpha");
    bound = std::max(bound, alpha.degree());
    terms.emplace_back(std::move(alpha), detail::scalar_from_json<S>(t));
  }
  Polynomial<S> p(n, bound);
  for (auto& [alpha, c] : terms) p.add_term(alpha, c);
  return p;
}

template <class S>
Json symbol_to_json(const PluriharmonicSymbol<S>& s) {
  return Json{{"n", s.g.n()}, {"g", poly_to_json(s.g)}, {"h", poly_to_json(s.h)}};
}

template <class S>
PluriharmonicSymbol<S> symbol_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("symbol must be a JSON object");
  const int n = detail::int_field(j, "n");
  if (!j.contains("g")) throw ParseError("missing field 'g'");
  if (!j.contains("h")) throw ParseError("missing field 'h'");
  PluriharmonicSymbol<S> s;
  s.g = poly_from_json<S>(j.at("g"));
  s.h = poly_from_json<S>(j.at("h"));
  if (s.g.n() != n || s.h.n() != n) {
    throw ParseError("field 'n' disagrees with symbol parts");
  }
  return s;
}

template <class S>
Json operator_to_json(const GradedOperator<S>& t) {
  Json entries = Json::array();
  for (const auto& [col, rows] : t.columns()) {
    for (const auto& [row, v] : rows) {
      Json e;
      e["row_comp"] = row.comp;
      e["row"] = row.alpha.components();
      e["col_comp"] = col.comp;
      e["col"] = col.alpha.components();
      detail::scalar_to_json(e, v);
      entries.push_back(std::move(e));
    }
  }
  return Json{{"n", t.params().n},     {"m", t.params().m},
              {"arity_in", t.arity_in()}, {"arity_out", t.arity_out()},
              {"d_in", t.d_in()},      {"d_out", t.d_out()},
              {"entries", std::move(entries)}};
}

// Loads an operator section; the band is inferred from the entries and the
// windows are validated. The workspace degree becomes
// max(workspace_D, d_in, d_out).
template <class S>
GradedOperator<S> operator_from_json(const Json& j, int workspace_D,
                                     Mode mode = Mode::exact) {
  if (!j.is_object()) throw ParseError("operator must be a JSON object");
  const int n = detail::int_field(j, "n");
  const int m = detail::int_field(j, "m");
  const int arity_in = detail::int_field(j, "arity_in");
  const int arity_out = detail::int_field(j, "arity_out");
  const int d_in = detail::int_field(j, "d_in");
  const int d_out = detail::int_field(j, "d_out");
  if (n < 1 || m < 1) throw ParseError("fields 'n' and 'm' must be >= 1");
  if (arity_in < 1 || arity_out < 1) throw ParseError("arities must be >= 1");
  if (d_in < 0 || d_out < 0) throw ParseError("windows must be >= 0");
  if (!j.contains("entries") || !j.at("entries").is_array()) {
    throw ParseError("missing or non-array field 'entries'");
  }

  struct RawEntry {
    BasisKey row, col;
    S value;
  };
  std::vector<RawEntry> raw;
  Band band{0, 0};
  bool first = true;
  for (const Json& e : j.at("entries")) {
    RawEntry r;
    r.row.comp = detail::int_field(e, "row_comp");
    r.col.comp = detail::int_field(e, "col_comp");
    r.row.alpha = detail::multiindex_from_json(
        e.contains("row") ? e.at("row") : Json(), n, "row");
    r.col.alpha = detail::multiindex_from_json(
        e.contains("col") ? e.at("col") : Json(), n, "col");
    r.value = detail::scalar_from_json<S>(e);
    if (r.row.comp < 0 || r.row.comp >= arity_out) throw ParseError("field 'row_comp' out of range");
    if (r.col.comp < 0 || r.col.comp >= arity_in) throw ParseError("field 'col_comp' out of range");
    if (r.col.alpha.degree() > d_in) throw ParseError("entry column degree exceeds 'd_in'");
    if (r.row.alpha.degree() > d_out) throw ParseError("entry row degree exceeds 'd_out'");
    const int shift = r.row.alpha.degree() - r.col.alpha.degree();
    if (first) {
      band = Band{shift, shift};
      first = false;
    } else {
      band.lo = std::min(band.lo, shift);
      band.hi = std::max(band.hi, shift);
    }
    raw.push_back(std::move(r));
  }

  SpaceParams params{n, m, std::max({workspace_D, d_in, d_out}), mode};
  GradedOperator<S> op(WeightTable(params), arity_in, arity_out, d_in, d_out, band,
                       /*require_margin=*/false);
  for (const RawEntry& r : raw) op.add_entry(r.row, r.col, r.value);
  return op;
}

template <class S>
Json report_to_json(const OperatorReport<S>& rep) {
  using T = ScalarTraits<S>;
  Json j;
  j["is_zero"] = rep.is_zero;
  if constexpr (T::exact) {
    j["frobenius_sq"] = rational_str(rep.frobenius_sq);
  } else {
    j["frobenius_sq"] = rep.frobenius_sq;
  }
  j["max_degree_checked"] = rep.max_degree_checked;
  return j;
}

template <class S>
Json classification_to_json(const ClassificationReport<S>& rep) {
  Json j;
  j["verdict"] = verdict_str(rep.verdict);
  j["bh"] = report_to_json(rep.bh);
  if (rep.symbol) j["symbol"] = symbol_to_json(*rep.symbol);
  if (rep.toeplitz_match) j["toeplitz_match"] = report_to_json(*rep.toeplitz_match);
  return j;
}

}  // namespace pluritop
