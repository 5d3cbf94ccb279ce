#include <doctest.h>

#include <complex>

#include "moonshine/norton.hpp"
#include "moonshine/series_io.hpp"

using namespace moonshine;

namespace {

PuiseuxSeries q_pow(const Rational& e, Rational c = 1, Trunc t = Trunc::exact()) {
  return PuiseuxSeries::monomial(e, CycloElem(c), t);
}

PuiseuxSeries one() { return PuiseuxSeries::constant(CycloElem(1)); }

// Z/2 -> S3 sending the generator to (12), and Z/3 -> S3 onto the rotations.
Homomorphism z2_into_s3() {
  const Group S = Group::symmetric(3);
  const Elem t = S.parse_element("[2,1,3]");
  return make_homomorphism(Group::cyclic(2), S, {S.identity(), t});
}

Homomorphism z3_into_s3() {
  const Group S = Group::symmetric(3);
  const Elem c = S.parse_element("[2,3,1]");
  return make_homomorphism(Group::cyclic(3), S, {S.identity(), c, S.mul(c, c)});
}

}  // namespace

TEST_SUITE("norton") {

TEST_CASE("evaluate is a class function") {
  const Group S = Group::symmetric(3);
  const NortonSeries c = NortonSeries::constant(S, one());
  CHECK(c.evaluate(1, 0) == one());
  const NortonSeries f = random_norton(S, 4);
  for (Elem g = 0; g < S.order(); ++g)
    for (Elem h = 0; h < S.order(); ++h) {
      if (!S.commute(g, h)) {
        CHECK_THROWS(f.evaluate(g, h));
        continue;
      }
      for (Elem s = 0; s < S.order(); ++s) CHECK(f.evaluate(S.conj(s, g), S.conj(s, h)) == f.evaluate(g, h));
    }
  CHECK_THROWS(NortonSeries(S, {one()}));
}

TEST_CASE("random fixtures are reproducible") {
  const Group G = Group::cyclic(3);
  CHECK(random_norton(G, 17) == random_norton(G, 17));
  CHECK_FALSE(random_norton(G, 17) == random_norton(G, 18));
  const auto f = random_norton(G, 17, 12);
  CHECK(f.evaluate(0, 1).trunc() == Trunc::at(11));
  CHECK(f.evaluate(1, 0).trunc() == Trunc::at(frac(11, 3)));
}

TEST_CASE("json round trip") {
  const Group G = parse_group_spec("Z/2xZ/2");
  const auto f = random_norton(G, 3);
  CHECK(norton_from_json(norton_to_json(f)) == f);
  const Group S = Group::symmetric(3);
  const Group T = Group::from_table(S.labels(), S.table());
  CHECK(group_from_json(group_to_json(T)) == T);
  const auto g = random_norton(T, 5);
  CHECK(norton_from_json(nlohmann::json::parse(norton_to_json(g).dump())) == g);
  CHECK_THROWS_AS(norton_from_json(nlohmann::json{{"group", "Z/2"}}), ParseError);
  CHECK_THROWS_AS(group_from_json(nlohmann::json{{"labels", {"e"}}}), ParseError);
}

TEST_CASE("twisted json round trip") {
  const Group G = Group::cyclic(2);
  std::vector<PuiseuxSeries> values{one(), one(), q_pow(frac(-1, 4)), q_pow(frac(-1, 4)).scaled(CycloElem::root_of_unity(4, -1))};
  const NortonSeries f(G, values, {{1, twist_data(2, 1)}});
  CHECK(norton_from_json(norton_to_json(f)) == f);
  CHECK_THROWS(NortonSeries(G, values, {{1, twist_data(3, 1)}}));
}

TEST_CASE("T-equivariance of a pullback") {
  const Group G = Group::cyclic(3);
  const auto r = check_T_equivariance(NortonSeries::constant(G, j_expansion(10)));
  CHECK(r.all_agree);
  for (const auto& e : r.entries) {
    CHECK(e.scalar->is_one());
    CHECK(e.monodromy->is_one());
  }
}

TEST_CASE("T-equivariance negative control") {
  const Group G = Group::cyclic(2);
  // classes sorted: (0,0), (0,1), (1,0), (1,1)
  const NortonSeries f(G, {one(), one(), q_pow(frac(1, 2)), q_pow(frac(1, 2), 2)});
  const auto r = check_T_equivariance(f);
  CHECK_FALSE(r.all_agree);
  CHECK_FALSE(r.entries[2].agrees);
}

TEST_CASE("T-equivariance of a twisted sector") {
  // Z/3 with class s = 1 at g = 1: exponents in (1/3)Z + 1/9.
  const Group G = Group::cyclic(3);
  const auto f0 = q_pow(frac(-2, 9)) + q_pow(frac(1, 9), 5) + q_pow(frac(4, 9), -2);
  const auto& classes = G.pair_classes();
  std::vector<PuiseuxSeries> values;
  for (const auto& c : classes) {
    if (c.rep.g == 1) values.push_back(translate(f0, c.rep.h).with_rational_order());
    else values.push_back(one());
  }
  const NortonSeries f(G, values, {{1, twist_data(3, 1)}});
  CHECK(validate_twisted_support(f).all_ok);
  const auto r = check_T_equivariance(f);
  CHECK(r.all_agree);
  const CycloElem expected = CycloElem::root_of_unity(3, -1);  // exp(-2 pi i s/n)
  for (const auto& e : r.entries) {
    if (e.rep.g != 1) continue;
    CHECK(*e.monodromy == expected);
    CHECK(*e.scalar == (e.rep.h == 2 ? expected : CycloElem(1)));
  }
}

TEST_CASE("numeric check") {
  const Group G = Group::trivial();
  const std::vector<std::complex<double>> at_2i{{0.0, 2.0}};
  const auto c = numeric_check(NortonSeries::constant(G, one()), Matrix2::S(), at_2i, 1e-6);
  CHECK(c.passed);
  CHECK(c.max_deviation == 0.0);
  const auto j = NortonSeries::constant(G, j_expansion(39));
  const auto r = numeric_check(j, Matrix2::S(), at_2i, 1e-6);
  CHECK(r.passed);
  CHECK(std::abs(j.at_class(0).evaluate({0.0, 2.0}) - 286752.0) < 1e-3);
  const auto broken = NortonSeries::constant(G, j_expansion(39) + q_pow(1, 1000));
  CHECK_FALSE(numeric_check(broken, Matrix2::S(), at_2i, 1e-6).passed);
  const auto short_j = NortonSeries::constant(G, j_expansion(3));
  const auto d = numeric_check(short_j, Matrix2::S(), at_2i, 1e-6);
  CHECK(d.any_divergent);
  CHECK_FALSE(d.passed);
}

TEST_CASE("restriction") {
  const Group S = Group::symmetric(3);
  const auto f = random_norton(S, 9);
  const auto id = make_homomorphism(S, S, [&] {
    std::vector<Elem> v(S.order());
    for (Elem x = 0; x < S.order(); ++x) v[x] = x;
    return v;
  }());
  CHECK(restrict(f, id) == f);
  const auto c = NortonSeries::constant(S, q_pow(-1) + q_pow(2));
  CHECK(restrict(c, z2_into_s3()) == NortonSeries::constant(Group::cyclic(2), q_pow(-1) + q_pow(2)));
  const auto through_one = restrict(restrict(f, trivial_homomorphism(Group::trivial(), S)), trivial_homomorphism(Group::cyclic(3), Group::trivial()));
  CHECK(through_one == NortonSeries::constant(Group::cyclic(3), f.evaluate(0, 0)));
  CHECK_THROWS(make_homomorphism(Group::cyclic(3), S, {0, 1, 2}));
}

TEST_CASE("induction examples") {
  const Group S = Group::symmetric(3);
  const auto ones = NortonSeries::constant(S, one());
  std::vector<Elem> idv(S.order());
  for (Elem x = 0; x < S.order(); ++x) idv[x] = x;
  CHECK(induce(ones, make_homomorphism(S, S, idv)) == ones);
  const auto to_one = induce(ones, trivial_homomorphism(S, Group::trivial()));
  CHECK(to_one.at_class(0) == PuiseuxSeries::constant(CycloElem(3)));
  const auto from_one = induce(NortonSeries::constant(Group::trivial(), one()), trivial_homomorphism(Group::trivial(), S));
  for (std::size_t i = 0; i < S.pair_classes().size(); ++i) {
    CHECK(from_one.at_class(i) == (i == 0 ? PuiseuxSeries::constant(CycloElem(6)) : PuiseuxSeries()));
  }
}

TEST_CASE("induction from a normal subgroup matches the direct sum") {
  const Group S = Group::symmetric(3);
  const auto a = z3_into_s3();
  const auto f = random_norton(S, 21);
  const auto lhs = induce(restrict(f, a), a);
  std::vector<bool> in_h(S.order(), false);
  for (const Elem x : a.images) in_h[x] = true;
  for (std::size_t i = 0; i < S.pair_classes().size(); ++i) {
    const auto [g1, g2] = S.pair_classes()[i].rep;
    std::vector<PuiseuxSeries> parts;
    for (Elem s = 0; s < S.order(); ++s) {
      const Elem x = S.conj(S.inv(s), g1), y = S.conj(S.inv(s), g2);
      if (in_h[x] && in_h[y]) parts.push_back(f.evaluate(x, y));
    }
    const auto direct = parts.empty() ? PuiseuxSeries::zero(f.common_trunc()) : sum_lifted(parts).scaled(frac(1, 3));
    CHECK(lhs.at_class(i).agrees_with(direct));
  }
}

TEST_CASE("inner product") {
  const auto z2 = NortonSeries::constant(Group::cyclic(2), one());
  CHECK(inner_product(z2, z2) == PuiseuxSeries::constant(CycloElem(2)));
  const auto s3 = NortonSeries::constant(Group::symmetric(3), one());
  CHECK(inner_product(s3, s3) == PuiseuxSeries::constant(CycloElem(3)));
  const auto t = NortonSeries::constant(Group::trivial(), q_pow(-1) + q_pow(1));
  CHECK(inner_product(t, t) == (q_pow(-1) + q_pow(1)) * (q_pow(-1) + q_pow(1)));
  const Group G = Group::cyclic(3);
  const auto a = random_norton(G, 1), b = random_norton(G, 2), c = random_norton(G, 3);
  CHECK(inner_product(a, b) == inner_product(b, a));
  CHECK(inner_product(a + scaled(c, frac(2, 3)), b).agrees_with(inner_product(a, b) + inner_product(c, b).scaled(frac(2, 3))));
  CHECK_THROWS(inner_product(a, z2));
}

TEST_CASE("twisted support") {
  const Group G = Group::cyclic(2);
  const NortonSeries plain = NortonSeries::constant(G, q_pow(frac(1, 2)));
  CHECK(validate_twisted_support(plain).all_ok);
  const NortonSeries untwisted(G, {one(), one(), q_pow(frac(-1, 2)), q_pow(frac(1, 2))}, {{1, twist_data(2, 0)}});
  CHECK(validate_twisted_support(untwisted).all_ok);
  const NortonSeries good(G, {one(), one(), q_pow(frac(-1, 4)) + q_pow(frac(1, 4)), q_pow(frac(3, 4))},
                          {{1, twist_data(2, 1)}});
  CHECK(validate_twisted_support(good).all_ok);
  const NortonSeries bad(G, {one(), one(), q_pow(frac(1, 4)), q_pow(frac(1, 2))}, {{1, twist_data(2, 1)}});
  const auto r = validate_twisted_support(bad);
  CHECK_FALSE(r.all_ok);
  CHECK(r.entries[3].offending_exponent == frac(1, 2));
  const NortonSeries empty(G, {one(), one(), PuiseuxSeries(), PuiseuxSeries()}, {{1, twist_data(2, 1)}});
  CHECK(validate_twisted_support(empty).all_ok);
}

}
