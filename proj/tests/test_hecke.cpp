#include <doctest.h>

#include <cmath>

#include "moonshine/hecke.hpp"
#include "moonshine/power_ops.hpp"

using namespace moonshine;

namespace {

Rational coeff(const PuiseuxSeries& s, std::int64_t m) { return *s.coefficient(frac(m)).try_rational(); }

}  // namespace

TEST_SUITE("hecke") {

TEST_CASE("T_1 is the identity") {
  for (const auto& G : {Group::trivial(), Group::cyclic(2), Group::symmetric(3)}) {
    const auto f = random_norton(G, 5);
    CHECK(hecke_geometric(f, 1) == f);
    CHECK(hecke_combinatorial(f, 1) == f);
  }
  CHECK_THROWS(hecke_geometric(random_norton(Group::trivial(), 1), 0));
}

TEST_CASE("T_2 of j") {
  const auto j = NortonSeries::constant(Group::trivial(), j_expansion(40));
  const auto t2 = hecke_geometric(j, 2).at_class(0);
  CHECK(t2.valuation() == Rational(-2));
  CHECK(coeff(t2, -2) == frac(1, 2));
  CHECK(t2.trunc() == Trunc::at(frac(41, 2)));
  const auto& c = j.at_class(0);
  for (std::int64_t m = -2; m <= 20; ++m) {
    Rational expected = 2 * (2 * m < 41 ? coeff(c, 2 * m) : Rational(0));
    if (m % 2 == 0) expected += coeff(c, m / 2);
    CHECK(coeff(t2, m) == expected / 2);
  }
}

TEST_CASE("geometric formula at a Z/2 class") {
  const Group G = Group::cyclic(2);
  const auto f = random_norton(G, 11, 16);
  const auto lhs = hecke_geometric(f, 2).evaluate(1, 0);
  const auto rhs = sum_lifted({substitute(f.evaluate(0, 0), 1, 0, 2), substitute(f.evaluate(0, 1), 1, 1, 2),
                               substitute(f.evaluate(1, 0), 2, 0, 1)})
                       .scaled(frac(1, 2));
  CHECK(lhs == rhs);
}

TEST_CASE("geometric and combinatorial agree") {
  for (const auto& G : {Group::trivial(), Group::cyclic(2), Group::cyclic(3), parse_group_spec("Z/2xZ/2"), Group::symmetric(3)}) {
    const auto f = random_norton(G, 40 + G.order(), 14);
    for (unsigned n = 1; n <= 6; ++n) {
      CAPTURE(G.name());
      CAPTURE(n);
      const auto r = verify_equivalence(f, n);
      CHECK(r.agrees);
      for (const auto& d : r.deltas) CHECK(d.is_zero());
    }
  }
}

TEST_CASE("T_n of j is the Faber polynomial over n") {
  const auto jj = j_expansion(60);
  const auto j = NortonSeries::constant(Group::trivial(), jj);
  for (unsigned n = 1; n <= 6; ++n) {
    const auto t = hecke_geometric(j, n).at_class(0);
    CHECK(t.scaled(frac(n)).agrees_with(faber(jj, n).series));
    CHECK(t.coefficient(0).is_zero());
  }
}

TEST_CASE("classical formula from replicates") {
  const auto jj = j_expansion(static_cast<unsigned>(replicate_input_order(6, 10).get_num().get_si()));
  const auto reps = extract_replicates(jj, 6);
  REQUIRE(reps.ok());
  const auto j = NortonSeries::constant(Group::trivial(), jj);
  for (unsigned n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto r = verify_equivalence(j, n, &reps.replicates);
    CHECK(r.agrees);
    REQUIRE(r.classical_delta);
    CHECK(r.classical_delta->is_zero());
  }
  CHECK_THROWS(hecke_classical(jj, 4, Replicates{}));
}

TEST_CASE("Hecke operators multiply") {
  const auto j = NortonSeries::constant(Group::trivial(), j_expansion(60));
  CHECK(hecke_geometric(hecke_geometric(j, 2), 3).at_class(0).agrees_with(hecke_geometric(j, 6).at_class(0)));
  const auto f = random_norton(Group::cyclic(2), 8, 40);
  const auto lhs = hecke_geometric(hecke_geometric(f, 3), 2);
  const auto rhs = hecke_geometric(f, 6);
  for (std::size_t i = 0; i < lhs.values().size(); ++i) CHECK(lhs.at_class(i).agrees_with(rhs.at_class(i)));
}

TEST_CASE("short input is reported") {
  const auto j = NortonSeries::constant(Group::trivial(), PuiseuxSeries::monomial(-1, CycloElem(1), Trunc::at(0)));
  CHECK_THROWS_AS(hecke_geometric(j, 5), TruncationError);
}

TEST_CASE("Fricke involution") {
  const auto p = fricke(5, 2);
  CHECK(p.tau_map == Matrix2{0, -1, 5, 0});
  const std::complex<double> fixed(0.0, 1.0 / std::sqrt(5.0));
  CHECK(std::abs(p.apply(fixed) - fixed) < 1e-12);
  const std::complex<double> tau(0.3, 0.7);
  CHECK(std::abs(p.apply(p.apply(tau)) - tau) < 1e-12);
  const auto w2 = fricke_twice(p);
  CHECK(w2.tau_map == Matrix2{-5, 0, 0, -5});
  CHECK(fricke(7, -1).g == 6);
  CHECK_THROWS(fricke(4, 2));
  CHECK_THROWS(fricke(0, 1));
}

}
