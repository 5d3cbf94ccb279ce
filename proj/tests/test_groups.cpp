#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "moonshine/groups.hpp"

using namespace moonshine;

namespace {

// Orbits of commuting pairs under simultaneous conjugation, counted directly.
std::size_t brute_force_pair_classes(const Group& G) {
  std::set<std::pair<Elem, Elem>> seen;
  std::size_t classes = 0;
  for (Elem g = 0; g < G.order(); ++g) {
    for (Elem h = 0; h < G.order(); ++h) {
      if (!G.commute(g, h) || seen.contains({g, h})) continue;
      ++classes;
      for (Elem s = 0; s < G.order(); ++s) seen.insert({G.conj(s, g), G.conj(s, h)});
    }
  }
  return classes;
}

std::uint64_t commuting_pairs(const Group& G) {
  std::uint64_t count = 0;
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h = 0; h < G.order(); ++h) count += G.commute(g, h);
  return count;
}

Group s3_from_table() {
  const Group S = Group::symmetric(3);
  return Group::from_table(S.labels(), S.table());
}

}  // namespace

TEST_SUITE("finite_groups") {

TEST_CASE("pair classes examples") {
  const auto t = Group::trivial().pair_classes();
  REQUIRE(t.size() == 1);
  CHECK(t[0].centralizer_order == 1);
  CHECK(Group::cyclic(2).pair_classes().size() == 4);
  CHECK(Group::symmetric(3).pair_classes().size() == 8);
  CHECK(commuting_pairs(Group::symmetric(3)) == 18);
}

TEST_CASE("pair classes match brute force") {
  for (const std::string spec : {"1", "Z/2", "Z/3", "Z/2xZ/2", "Z/4xZ/2", "S3", "S4"}) {
    const Group G = parse_group_spec(spec);
    CAPTURE(spec);
    const auto& classes = G.pair_classes();
    CHECK(classes.size() == brute_force_pair_classes(G));
    std::uint64_t total = 0;
    for (const auto& c : classes) {
      CHECK(c.class_size * c.centralizer_order == G.order());
      CHECK(G.commute(c.rep.g, c.rep.h));
      total += c.class_size;
    }
    CHECK(total == commuting_pairs(G));
    CHECK(G.pair_classification().commuting_pair_count() == total);
  }
}

TEST_CASE("representatives are minimal and sorted") {
  const Group G = Group::symmetric(4);
  const auto& classes = G.pair_classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto [g, h] = classes[i].rep;
    for (Elem s = 0; s < G.order(); ++s) {
      CHECK(std::pair(g, h) <= std::pair(G.conj(s, g), G.conj(s, h)));
    }
    if (i > 0) CHECK(std::pair(classes[i - 1].rep.g, classes[i - 1].rep.h) < std::pair(g, h));
  }
}

TEST_CASE("abelian groups have singleton classes") {
  for (const std::string spec : {"Z/5", "Z/2xZ/2", "Z/2xZ/3", "Z/2xZ/2xZ/2"}) {
    const Group G = parse_group_spec(spec);
    CHECK(G.pair_classes().size() == static_cast<std::size_t>(G.order()) * G.order());
  }
}

TEST_CASE("index_of is a class function") {
  const Group G = Group::symmetric(4);
  const auto& pc = G.pair_classification();
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<Elem> pick(0, G.order() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Elem g = pick(rng), h = pick(rng), s = pick(rng);
    if (!G.commute(g, h)) {
      CHECK_THROWS(pc.index_of(g, h));
      continue;
    }
    CHECK(pc.index_of(g, h) == pc.index_of(G.conj(s, g), G.conj(s, h)));
  }
}

TEST_CASE("cayley table groups agree with the model") {
  const Group T = s3_from_table();
  CHECK(T.pair_classes().size() == 8);
  CHECK(brute_force_pair_classes(T) == 8);
  CHECK_THROWS(Group::from_table({"a", "b"}, {{0, 1}, {0, 1}}));
  CHECK_THROWS(Group::from_table({"e", "x", "y"}, {{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}));
}

TEST_CASE("reordering elements does not change the classification") {
  const Group S = Group::symmetric(3);
  std::vector<Elem> perm(S.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(7);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  std::vector<Elem> inv(S.order());
  for (Elem i = 0; i < S.order(); ++i) inv[perm[i]] = i;
  std::vector<std::string> labels(S.order());
  std::vector<std::vector<Elem>> table(S.order(), std::vector<Elem>(S.order()));
  for (Elem x = 0; x < S.order(); ++x) {
    labels[inv[x]] = S.element_label(x);
    for (Elem y = 0; y < S.order(); ++y) table[inv[x]][inv[y]] = inv[S.mul(x, y)];
  }
  const Group T = Group::from_table(labels, table);
  std::multiset<std::uint64_t> a, b;
  for (const auto& c : S.pair_classes()) a.insert(c.centralizer_order);
  for (const auto& c : T.pair_classes()) b.insert(c.centralizer_order);
  CHECK(a == b);
  for (Elem g = 0; g < S.order(); ++g)
    for (Elem h = 0; h < S.order(); ++h)
      for (Elem g2 = 0; g2 < S.order(); ++g2)
        for (Elem h2 = 0; h2 < S.order(); ++h2) {
          if (!S.commute(g, h) || !S.commute(g2, h2)) continue;
          const bool same_s = S.pair_classification().index_of(g, h) == S.pair_classification().index_of(g2, h2);
          const bool same_t =
              T.pair_classification().index_of(inv[g], inv[h]) == T.pair_classification().index_of(inv[g2], inv[h2]);
          CHECK(same_s == same_t);
        }
}

TEST_CASE("sl2 action") {
  const Group G = Group::symmetric(3);
  const Elem g = G.parse_element("[2,3,1]"), h = G.parse_element("[3,1,2]");
  CHECK(sl2_act(G, {g, h}, Matrix2::identity()) == CommutingPair{g, h});
  CHECK(sl2_act(G, {g, h}, Matrix2::T()) == CommutingPair{g, G.mul(g, h)});
  CHECK(sl2_act(G, {g, h}, Matrix2::S()) == CommutingPair{G.inv(h), g});
  CHECK_THROWS(sl2_act(G, {g, h}, Matrix2{2, 0, 0, 1}));
}

TEST_CASE("sl2 action is a right action") {
  const Group G = Group::symmetric(4);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Elem> pick(0, G.order() - 1);
  std::uniform_int_distribution<int> len(1, 4), coin(0, 1);
  std::vector<CommutingPair> pairs;
  while (pairs.size() < 20) {
    const Elem g = pick(rng), h = pick(rng);
    if (G.commute(g, h)) pairs.push_back({g, h});
  }
  auto word = [&] {
    Matrix2 m = Matrix2::identity();
    for (int i = len(rng); i > 0; --i) m = m * (coin(rng) ? Matrix2::S() : Matrix2::T());
    return m;
  };
  for (const auto& p : pairs) {
    const Matrix2 a = word(), b = word();
    CHECK(sl2_act(G, sl2_act(G, p, a), b) == sl2_act(G, p, a * b));
  }
}

TEST_CASE("group specs and labels") {
  CHECK(parse_group_spec("trivial").order() == 1);
  CHECK(parse_group_spec("Z/6").order() == 6);
  CHECK(parse_group_spec("Z/2xZ/3").order() == 6);
  CHECK(parse_group_spec("S4").order() == 24);
  CHECK_THROWS(parse_group_spec("Q8"));
  CHECK_THROWS(parse_group_spec("Z/0"));
  const Group A = parse_group_spec("Z/2xZ/3");
  for (Elem x = 0; x < A.order(); ++x) CHECK(A.parse_element(A.element_label(x)) == x);
  const Group S = Group::symmetric(4);
  for (Elem x = 0; x < S.order(); ++x) {
    CHECK(S.parse_element(S.element_label(x)) == x);
    CHECK(S.order() % S.element_order(x) == 0);
  }
  CHECK(S.identity() == 0);
}

TEST_CASE("symmetric cap") {
  CHECK(symmetric_cap() == kDefaultSymmetricCap);
  CHECK_THROWS_AS(Group::symmetric(kDefaultSymmetricCap + 1), CapExceeded);
  CHECK_THROWS_AS(symmetric_group(kDefaultSymmetricCap + 1), CapExceeded);
}

TEST_CASE("permutation helpers") {
  for (std::uint32_t r = 0; r < 24; ++r) CHECK(perm_rank(perm_unrank(r, 4)) == r);
  const Perm p{1, 2, 0}, q{1, 0, 2};
  CHECK(perm_compose(p, q) == Perm{2, 1, 0});
  CHECK(perm_compose(p, perm_inverse(p)) == Perm{0, 1, 2});
}

}
