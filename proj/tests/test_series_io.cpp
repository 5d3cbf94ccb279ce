#include <doctest.h>

#include <random>
#include <sstream>

#include "moonshine/series_io.hpp"

using namespace moonshine;

TEST_SUITE("qseries") {

TEST_CASE("text format round trip") {
  const auto j = j_expansion(12);
  CHECK(parse_series(format_series(j)) == j);
  PuiseuxSeries::Terms terms;
  terms.emplace(frac(-1, 4), CycloElem::root_of_unity(8, 3));
  terms.emplace(frac(1, 4), CycloElem(frac(-2, 3), 8));
  const PuiseuxSeries twisted(4, Trunc::at(frac(7, 4)), terms, 8);
  CHECK(parse_series(format_series(twisted)) == twisted);
  CHECK(parse_series(format_series(PuiseuxSeries())) == PuiseuxSeries());
}

TEST_CASE("text format details") {
  const auto f = parse_series("# comment\ndenom=2 trunc=3/1\n-1/1 1/1\n\n1/2 -3/2\n");
  CHECK(f.denom() == 2);
  CHECK(f.trunc() == Trunc::at(3));
  CHECK(f.coefficient(frac(1, 2)) == CycloElem(frac(-3, 2)));
  CHECK(parse_series("denom=1 trunc=inf\n0/1 5/1\n") == PuiseuxSeries::constant(CycloElem(5)));
}

TEST_CASE("malformed text names the line") {
  try {
    parse_series("denom=1 trunc=3/1\n-1/1 1/1\n1/1 abc\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_series("denom=1 trunc=3/1\n1/1 1/1\n1/1 2/1\n"), ParseError);
  CHECK_THROWS_AS(parse_series("trunc=3/1\n"), ParseError);
  CHECK_THROWS_AS(parse_series("denom=1 trunc=3/1\n5/1 1/1\n"), ParseError);
  CHECK_THROWS_AS(parse_series("denom=2 trunc=3/1\n1/3 1/1\n"), ParseError);
}

TEST_CASE("json round trip") {
  const auto j = j_expansion(8);
  CHECK(series_from_json(series_to_json(j)) == j);
  const auto t = PuiseuxSeries::monomial(frac(1, 3), CycloElem::root_of_unity(3), Trunc::at(2));
  CHECK(series_from_json(series_to_json(t)) == t);
  CHECK_THROWS_AS(series_from_json(nlohmann::json{{"denom", 1}}), ParseError);
}

TEST_CASE("pretty form") {
  CHECK(pretty_series(j_expansion(2), 3) == "q^-1 + 196884*q + 21493760*q^2 + O(q^3)");
  CHECK(pretty_series(PuiseuxSeries()) == "0");
}

}
