#include <doctest.h>

#include "moonshine/power_ops.hpp"

using namespace moonshine;

namespace {

PuiseuxSeries one() { return PuiseuxSeries::constant(CycloElem(1)); }

Rational constant_value(const NortonSeries& f) {
  const auto& v = f.at_class(0);
  REQUIRE(v.terms().size() <= 1);
  return v.is_zero() ? Rational(0) : *v.coefficient(0).try_rational();
}

}  // namespace

TEST_SUITE("power_ops") {

TEST_CASE("symmetric powers of the unit count partitions") {
  const auto f = NortonSeries::constant(Group::trivial(), one());
  const std::vector<int> p{1, 1, 2, 3, 5, 7, 11};
  for (unsigned n = 0; n < p.size(); ++n) CHECK(constant_value(sym_n(f, n)) == p[n]);
}

TEST_CASE("exterior powers of the unit give the pentagonal series") {
  const auto f = NortonSeries::constant(Group::trivial(), one());
  const std::vector<int> e{1, -1, -1, 0, 0, 1, 0};
  for (unsigned n = 0; n < e.size(); ++n) CHECK(constant_value(lambda2_n(f, n)) * (n % 2 ? -1 : 1) == e[n]);
}

TEST_CASE("sym_n agrees with the sum over all commuting pairs") {
  const Group G = Group::cyclic(2);
  const auto f = random_norton(G, 13, 10);
  for (unsigned n = 1; n <= 4; ++n) {
    const Group& S = symmetric_group(n);
    std::optional<NortonSeries> sym, lam;
    for (Elem x = 0; x < S.order(); ++x)
      for (Elem y = 0; y < S.order(); ++y) {
        if (!S.commute(x, y)) continue;
        const auto sigma = S.permutation(x), rho = S.permutation(y);
        const auto term = psi_pair(f, sigma, rho);
        const auto signed_term = scaled(term, Rational(pair_sgn(sigma, rho)));
        sym = sym ? *sym + term : term;
        lam = lam ? *lam + signed_term : signed_term;
      }
    const Rational inv_fact = frac(1, S.order());
    CHECK(sym_n(f, n) == scaled(*sym, inv_fact));
    CHECK(lambda2_n(f, n) == scaled(*lam, inv_fact));
  }
}

TEST_CASE("low degrees") {
  const Group G = Group::symmetric(3);
  const auto f = random_norton(G, 2, 8);
  CHECK(sym_n(f, 0) == NortonSeries::constant(G, one()));
  CHECK(sym_n(f, 1) == f);
  CHECK(lambda2_n(f, 1) == f);
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    CHECK(psi_pair(f, {0, 1}, {0, 1}).at_class(i) == f.at_class(i) * f.at_class(i));
  }
  const auto zero = NortonSeries::constant(G, PuiseuxSeries());
  const auto t = total_sym(zero, 4);
  CHECK(t.coefficients[0] == NortonSeries::constant(G, one()));
  for (unsigned k = 1; k <= 4; ++k) CHECK(t.coefficients[k] == zero);
}

TEST_CASE("symmetric powers from Hecke operators") {
  for (const auto& G : {Group::cyclic(2), Group::cyclic(3)}) {
    const auto r = verify_sym_exp_identity(random_norton(G, 31, 16), 4);
    CHECK(r.agrees);
    for (bool b : r.degree_agrees) CHECK(b);
    for (bool b : r.inverse_ok) CHECK(b);
  }
  const auto j = NortonSeries::constant(Group::trivial(), j_expansion(40));
  CHECK(verify_sym_exp_identity(j, 4).agrees);
}

TEST_CASE("exterior series is the inverse of the symmetric series at -t") {
  const auto f = random_norton(Group::cyclic(2), 77, 12);
  const auto lam = inverse(total_sym(f, 4)).flipped();
  const auto direct = total_lambda(f, 4);
  for (unsigned k = 0; k <= 4; ++k)
    for (std::size_t i = 0; i < f.values().size(); ++i) {
      CHECK(lam.coefficients[k].at_class(i).agrees_with(direct.coefficients[k].at_class(i)));
    }
  const auto e = exp_t(TotalPowerSeries{2, {NortonSeries::constant(Group::trivial(), PuiseuxSeries()),
                                            NortonSeries::constant(Group::trivial(), one()),
                                            NortonSeries::constant(Group::trivial(), PuiseuxSeries())}});
  CHECK(constant_value(e.coefficients[2]) == frac(1, 2));
}

TEST_CASE("replicates of j are j") {
  const Rational order = replicate_input_order(5, 10);
  const auto j = j_expansion(static_cast<unsigned>(order.get_num().get_si()));
  const auto r = extract_replicates(j, 5);
  REQUIRE(r.ok());
  for (unsigned n = 1; n <= 5; ++n) {
    const auto& rep = r.replicates.at(n);
    CHECK(rep.agrees_with(j));
    CHECK(Trunc::at(8) < rep.trunc());
  }
  CHECK(replicate_input_order(6, 8) == 252);
}

TEST_CASE("replicates of exact series") {
  const auto q1 = PuiseuxSeries::monomial(-1, CycloElem(1));
  const auto r = extract_replicates(q1, 6);
  REQUIRE(r.ok());
  for (const auto& [n, rep] : r.replicates) CHECK(rep == q1);
  const auto bad = PuiseuxSeries::laurent(-1, {1, 0, 1, 1});
  const auto f = extract_replicates(bad, 3);
  REQUIRE_FALSE(f.ok());
  CHECK(f.failure->n == 2);
  CHECK(f.failure->exponent == 3);
}

TEST_CASE("replicability") {
  const auto j = verify_replicability(j_expansion(50), 4);
  CHECK(j.all_constant);
  CHECK(j.identity_holds);
  const auto q1 = verify_replicability(PuiseuxSeries::monomial(-1, CycloElem(1), Trunc::at(60)), 4);
  CHECK(q1.identity_holds);
  for (const auto& e : q1.entries) CHECK(e.lambda.is_zero());
  const auto bad = verify_replicability(PuiseuxSeries::laurent(-1, {1, 0, 0, 1}, Trunc::at(60)), 4);
  CHECK_FALSE(bad.identity_holds);
}

TEST_CASE("level-1 operations") {
  const Group T = Group::trivial();
  const ClassFunction unit{1};
  const auto s = level1_total(T, unit, 8);
  for (const auto& c : s) CHECK(c[0] == 1);
  const auto l = level1_total(T, unit, 8, -1);
  for (unsigned k = 0; k <= 8; ++k) {
    Rational acc = 0;
    for (unsigned i = 0; i <= k; ++i) acc += s[i][0] * l[k - i][0];
    CHECK(acc == (k == 0 ? 1 : 0));
  }
  const Group Z2 = Group::cyclic(2);
  CHECK(level1_sym(Z2, {1, -1}, 2) == ClassFunction{1, 1});
  CHECK(level1_sym(Z2, {2, 0}, 2) == ClassFunction{3, 1});
  CHECK(level1_lambda(Z2, {2, 0}, 2) == ClassFunction{1, -1});
  CHECK(partitions(5).size() == 7);
  CHECK(z_lambda({2, 1}) == 2);
  CHECK(z_lambda({2, 2}) == 8);
}

TEST_CASE("level-1 powers against a sum over permutations") {
  const Group G = Group::symmetric(3);
  const ClassFunction chi{2, 0, -1};  // standard representation
  REQUIRE(G.pair_classification().conjugacy_classes().size() == 3);
  for (unsigned n = 1; n <= 4; ++n) {
    const Group& S = symmetric_group(n);
    ClassFunction sym(3, 0), lam(3, 0);
    for (Elem x = 0; x < S.order(); ++x) {
      const auto p = S.permutation(x);
      std::vector<unsigned> cycles;
      std::vector<bool> seen(n, false);
      for (unsigned i = 0; i < n; ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        for (unsigned k = i; !seen[k]; k = p[k]) seen[k] = true, ++len;
        cycles.push_back(len);
      }
      const int sgn = (n - cycles.size()) % 2 ? -1 : 1;
      for (std::size_t c = 0; c < 3; ++c) {
        Rational prod = 1;
        for (unsigned len : cycles) prod *= adams(G, chi, len)[c];
        sym[c] += prod;
        lam[c] += sgn * prod;
      }
    }
    for (auto& v : sym) v /= S.order();
    for (auto& v : lam) v /= S.order();
    CHECK(level1_sym(G, chi, n) == sym);
    CHECK(level1_lambda(G, chi, n) == lam);
  }
}

}
