#include <doctest.h>

#include <random>

#include "moonshine/lattice.hpp"

using namespace moonshine;

namespace {

std::int64_t divisor_sum(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t d = 1; d <= n; ++d) s += n % d == 0 ? d : 0;
  return s;
}

Perm cycle_perm(unsigned n, std::vector<std::vector<unsigned>> cycles) {
  Perm p(n);
  for (unsigned i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = static_cast<std::uint8_t>(c[(i + 1) % c.size()]);
  return p;
}

}  // namespace

TEST_SUITE("finite_groups") {

TEST_CASE("canonical triple examples") {
  CHECK(canonical_triple({{2, 0}, {0, 1}}) == Sublattice{1, 0, 2});
  CHECK(canonical_triple({{1, 0}, {0, 1}}) == Sublattice{1, 0, 1});
  CHECK(canonical_triple({{3, 0}, {1, 1}}) == Sublattice{1, 2, 3});
  CHECK_THROWS(canonical_triple({{1, 1}, {2, 2}}));
}

TEST_CASE("canonical triple ignores the choice of generators") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> small(-3, 3);
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (const auto& t : hecke_triples(n)) {
      const LatticeVector v1{t.d, 0}, v2{-t.b, t.a};
      for (int trial = 0; trial < 5; ++trial) {
        // Random unimodular change of basis built from elementary moves.
        LatticeVector w1 = v1, w2 = v2;
        for (int step = 0; step < 4; ++step) {
          const int k = small(rng);
          if (step % 2 == 0) w1 = {w1[0] + k * w2[0], w1[1] + k * w2[1]};
          else w2 = {w2[0] + k * w1[0], w2[1] + k * w1[1]};
        }
        CHECK(canonical_triple({w1, w2}) == t);
        CHECK(canonical_triple({w1, w2, {w1[0] + w2[0], w1[1] + w2[1]}}) == t);
      }
    }
  }
}

TEST_CASE("hecke triples") {
  for (std::int64_t n = 1; n <= 12; ++n) CHECK(static_cast<std::int64_t>(hecke_triples(n).size()) == divisor_sum(n));
  CHECK(hecke_triples(2) == std::vector<Sublattice>{{1, 0, 2}, {1, 1, 2}, {2, 0, 1}});
}

TEST_CASE("orbit decomposition examples") {
  const Perm e{0, 1}, s{1, 0};
  auto single = [](const Perm& a, const Perm& b) {
    const auto o = orbit_decomposition(a, b);
    REQUIRE(o.size() == 1);
    CHECK(o[0].points.size() == 2);
    return o[0].lattice;
  };
  CHECK(single(s, e) == Sublattice{1, 0, 2});
  CHECK(single(e, s) == Sublattice{2, 0, 1});
  CHECK(single(s, s) == Sublattice{1, 1, 2});
  CHECK_THROWS(orbit_decomposition(cycle_perm(3, {{0, 1}}), cycle_perm(3, {{1, 2}})));
}

TEST_CASE("orbit sizes equal lattice indices") {
  const Group& S = symmetric_group(5);
  for (const auto& c : S.pair_classes()) {
    const auto orbits = orbit_decomposition(S.permutation(c.rep.g), S.permutation(c.rep.h));
    std::size_t total = 0;
    for (const auto& o : orbits) {
      CHECK(static_cast<std::int64_t>(o.points.size()) == o.lattice.index());
      total += o.points.size();
    }
    CHECK(total == 5);
  }
}

TEST_CASE("pair sign") {
  CHECK(pair_sgn(Perm{0, 1, 2}, Perm{0, 1, 2}) == 1);
  CHECK(pair_sgn(Perm{1, 0}, Perm{1, 0}) == -1);
  CHECK(pair_sgn(cycle_perm(4, {{0, 1}, {2, 3}}), cycle_perm(4, {})) == 1);
}

TEST_CASE("transitive pairs") {
  const auto one = transitive_pair_classes(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].triple == Sublattice{1, 0, 1});
  for (unsigned n = 1; n <= 7; ++n) {
    CAPTURE(n);
    const auto classes = transitive_pair_classes(n);
    CHECK(static_cast<std::int64_t>(classes.size()) == divisor_sum(n));
    std::vector<Sublattice> triples;
    for (const auto& c : classes) {
      CHECK(c.cls.centralizer_order == n);
      triples.push_back(c.triple);
    }
    std::sort(triples.begin(), triples.end());
    CHECK(triples == hecke_triples(n));
  }
}

TEST_CASE("centralizer of a transitive pair is the group it generates") {
  for (unsigned n = 1; n <= 6; ++n) {
    const Group& S = symmetric_group(n);
    for (const auto& c : transitive_pair_classes(n)) {
      std::vector<Elem> centralizer;
      for (Elem x = 0; x < S.order(); ++x)
        if (S.commute(x, c.cls.rep.g) && S.commute(x, c.cls.rep.h)) centralizer.push_back(x);
      CHECK(centralizer == generated_subgroup(S, {c.cls.rep.g, c.cls.rep.h}));
    }
  }
}

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants({1, 0, 2}) == std::vector<std::int64_t>{2});
  CHECK(abelian_invariants({2, 0, 2}) == std::vector<std::int64_t>{2, 2});
  CHECK(abelian_invariants({1, 1, 2}) == std::vector<std::int64_t>{2});
  CHECK(abelian_invariants({1, 0, 1}).empty());
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (const auto& t : hecke_triples(n)) {
      std::int64_t product = 1;
      for (auto f : abelian_invariants(t)) product *= f;
      CHECK(product == n);
    }
  }
}

TEST_CASE("orbit lattice matches the group generated by the pair") {
  for (unsigned n = 1; n <= 6; ++n) {
    const Group& S = symmetric_group(n);
    for (const auto& c : transitive_pair_classes(n)) {
      const auto sub = generated_subgroup(S, {c.cls.rep.g, c.cls.rep.h});
      CHECK(abelian_invariants_of_subgroup(S, sub) == abelian_invariants(c.triple));
    }
  }
}

}
