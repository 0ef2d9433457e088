#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pluritop/json_io.hpp"

using namespace pluritop;

namespace {

using Op = GradedOperator<ComplexQ>;

ComplexQ cq(long num, long den = 1) {
  return ComplexQ{make_rational(num, den), Rational(0)};
}

}  // namespace

TEST_CASE("polynomial round trip and canonical strings") {
  Polynomial<ComplexQ> p(2, 3);
  p.add_term(MultiIndex{1, 0}, ComplexQ{make_rational(-6, 4), make_rational(1, 3)});
  p.add_term(MultiIndex{0, 2}, cq(5));
  Json j = poly_to_json(p);
  CHECK(j["n"] == 2);
  CHECK(j["terms"].size() == 2);
  CHECK(j["terms"][0]["re"] == "-3/2");
  CHECK(j["terms"][0]["im"] == "1/3");
  CHECK(poly_from_json<ComplexQ>(j) == p);

  // Bare integers parse as rationals; "0/1" may be written "0".
  Json loose = {{"n", 1}, {"terms", {{{"alpha", {1}}, {"re", "4"}, {"im", "0"}}}}};
  auto q = poly_from_json<ComplexQ>(loose);
  CHECK(q.coeff(MultiIndex{1}) == cq(4));
}

TEST_CASE("polynomial parse failures name the offending field") {
  CHECK_THROWS_WITH_AS(poly_from_json<ComplexQ>(Json{{"terms", Json::array()}}),
                       doctest::Contains("'n'"), ParseError);
  CHECK_THROWS_WITH_AS(poly_from_json<ComplexQ>(Json{{"n", 2}}),
                       doctest::Contains("'terms'"), ParseError);
  Json bad_alpha = {{"n", 2}, {"terms", {{{"alpha", {1}}, {"re", "1"}, {"im", "0"}}}}};
  CHECK_THROWS_WITH_AS(poly_from_json<ComplexQ>(bad_alpha),
                       doctest::Contains("'alpha'"), ParseError);
  Json bad_re = {{"n", 1}, {"terms", {{{"alpha", {1}}, {"re", "x/2"}, {"im", "0"}}}}};
  CHECK_THROWS_AS(poly_from_json<ComplexQ>(bad_re), ParseError);
}

TEST_CASE("operator round trip with band inference") {
  WeightTable wt(SpaceParams{2, 2, 5});
  Op t(wt, 1, 2, 3, 4, Band{-1, 1}, false);
  t.add_entry({0, MultiIndex{2, 0}}, {0, MultiIndex{1, 0}}, cq(3, 2));
  t.add_entry({1, MultiIndex{0, 1}}, {0, MultiIndex{1, 1}}, cq(-1, 7));
  Json j = operator_to_json(t);
  Op back = operator_from_json<ComplexQ>(j, 5);
  CHECK(back.arity_in() == 1);
  CHECK(back.arity_out() == 2);
  CHECK(back.d_in() == 3);
  CHECK(back.d_out() == 4);
  // Inferred band is the hull of the present shifts.
  CHECK(back.band().lo == -1);
  CHECK(back.band().hi == 1);
  CHECK(same_entries(back, t));
}

TEST_CASE("operator load validation") {
  Json base = {{"n", 2},        {"m", 1},     {"arity_in", 1}, {"arity_out", 1},
               {"d_in", 2},     {"d_out", 3},
               {"entries", Json::array()}};

  Json bad = base;
  bad["entries"].push_back({{"row_comp", 0},
                            {"row", {3, 1}},
                            {"col_comp", 0},
                            {"col", {1, 0}},
                            {"re", "1"},
                            {"im", "0"}});
  CHECK_THROWS_WITH_AS(operator_from_json<ComplexQ>(bad, 5),
                       doctest::Contains("d_out"), ParseError);

  bad = base;
  bad["entries"].push_back({{"row_comp", 2},
                            {"row", {1, 0}},
                            {"col_comp", 0},
                            {"col", {1, 0}},
                            {"re", "1"},
                            {"im", "0"}});
  CHECK_THROWS_WITH_AS(operator_from_json<ComplexQ>(bad, 5),
                       doctest::Contains("row_comp"), ParseError);

  bad = base;
  bad.erase("m");
  CHECK_THROWS_WITH_AS(operator_from_json<ComplexQ>(bad, 5), doctest::Contains("'m'"),
                       ParseError);
}

TEST_CASE("symbol round trip") {
  Polynomial<ComplexQ> g(2, 1);
  g.add_term(MultiIndex{1, 0}, cq(1));
  Polynomial<ComplexQ> h(2, 2);
  h.add_term(MultiIndex{0, 2}, ComplexQ{Rational(0), make_rational(2, 5)});
  PluriharmonicSymbol<ComplexQ> s{g, h};
  Json j = symbol_to_json(s);
  auto back = symbol_from_json<ComplexQ>(j);
  CHECK(back == s);
  CHECK_THROWS_WITH_AS(symbol_from_json<ComplexQ>(Json{{"n", 2}, {"g", poly_to_json(g)}}),
                       doctest::Contains("'h'"), ParseError);
}

TEST_CASE("float mode accepts both numbers and rational strings") {
  using CD = std::complex<double>;
  Json j = {{"n", 1},
            {"terms",
             {{{"alpha", {1}}, {"re", 0.5}, {"im", "1/4"}}}}};
  auto p = poly_from_json<CD>(j);
  CHECK(p.coeff(MultiIndex{1}) == CD{0.5, 0.25});
}

TEST_CASE("serialization is deterministic") {
  WeightTable wt(SpaceParams{2, 3, 4});
  Op t(wt, 1, 1, 2, 3, Band{0, 1});
  t.add_entry({0, MultiIndex{1, 1}}, {0, MultiIndex{1, 0}}, cq(1, 3));
  t.add_entry({0, MultiIndex{1, 0}}, {0, MultiIndex{1, 0}}, cq(2));
  const std::string a = operator_to_json(t).dump(2);
  const std::string b = operator_to_json(t).dump(2);
  CHECK(a == b);
  // Keys are emitted sorted, entries in (column, row) order.
  CHECK(a.find("\"arity_in\"") < a.find("\"arity_out\""));
  CHECK(a.find("\"d_in\"") < a.find("\"d_out\""));
}

TEST_CASE("report serialization carries exact rationals") {
  WeightTable wt(SpaceParams{1, 1, 3});
  auto id = identity_op<ComplexQ>(wt, 1, 2);
  auto rep = report_restricted(id, 2);
  Json j = report_to_json(rep);
  CHECK(j["is_zero"] == false);
  CHECK(j["frobenius_sq"] == "3/1");
  CHECK(j["max_degree_checked"] == 2);
}
