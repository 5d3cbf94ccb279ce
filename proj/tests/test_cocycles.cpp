#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "moonshine/cocycles.hpp"

using namespace moonshine;

namespace {

// Elements of Z[Z/n] tensor the normalized bar resolution: h . [g1|...|gk] -> coefficient.
using Cell = std::pair<std::int64_t, std::vector<std::int64_t>>;
using Chain = std::map<Cell, std::int64_t>;

struct BarComplex {
  std::int64_t n;

  std::int64_t red(std::int64_t x) const { return floor_mod(x, n); }

  void add(Chain& c, std::int64_t h, std::vector<std::int64_t> cell, std::int64_t coeff) const {
    for (auto& g : cell) g = red(g);
    if (std::find(cell.begin(), cell.end(), 0) != cell.end()) return;  // degenerate cells vanish
    auto& slot = c[{red(h), cell}];
    slot += coeff;
    if (slot == 0) c.erase({red(h), cell});
  }

  Chain d(const Chain& c) const {
    Chain out;
    for (const auto& [cell, coeff] : c) {
      const auto& [h, g] = cell;
      const auto k = g.size();
      add(out, h + g[0], {g.begin() + 1, g.end()}, coeff);
      for (std::size_t i = 0; i + 1 < k; ++i) {
        std::vector<std::int64_t> merged(g.begin(), g.begin() + static_cast<long>(i));
        merged.push_back(g[i] + g[i + 1]);
        merged.insert(merged.end(), g.begin() + static_cast<long>(i) + 2, g.end());
        add(out, h, merged, (i % 2 == 0 ? -1 : 1) * coeff);
      }
      add(out, h, {g.begin(), g.end() - 1}, (k % 2 == 0 ? 1 : -1) * coeff);
    }
    return out;
  }

  // Left multiplication by a group-ring element given as element -> coefficient.
  Chain act(const std::map<std::int64_t, std::int64_t>& x, const Chain& c) const {
    Chain out;
    for (const auto& [t, a] : x)
      for (const auto& [cell, coeff] : c) add(out, t + cell.first, cell.second, a * coeff);
    return out;
  }

  // Chain map from the periodic resolution: f_k(e_k).
  Chain f(int k) const {
    Chain c;
    if (k == 0) add(c, 0, {}, 1);
    if (k == 1) add(c, 0, {1}, 1);
    if (k == 2)
      for (std::int64_t j = 0; j < n; ++j) add(c, 0, {j, 1}, 1);
    if (k == 3)
      for (std::int64_t j = 0; j < n; ++j) add(c, 0, {1, j, 1}, 1);
    return c;
  }

  std::map<std::int64_t, std::int64_t> t_minus_one() const {
    if (n == 1) return {};
    return {{1, 1}, {0, -1}};
  }
  std::map<std::int64_t, std::int64_t> norm() const {
    std::map<std::int64_t, std::int64_t> x;
    for (std::int64_t j = 0; j < n; ++j) x[j] = 1;
    return x;
  }
};

std::int64_t augmentation(const std::map<std::int64_t, std::int64_t>& x) {
  std::int64_t s = 0;
  for (const auto& [g, c] : x) s += c;
  return s;
}

}  // namespace

TEST_SUITE("cocycles") {

TEST_CASE("eval examples") {
  for (std::int64_t s = 0; s < 4; ++s) {
    const CyclicCocycle a(4, s);
    CHECK(a.eval(0, 3, 2) == 0);
    CHECK(a.eval(1, 0, 3) == 0);
    CHECK(a.eval(2, 3, 0) == 0);
  }
  CHECK(CyclicCocycle(2, 1).eval(1, 1, 1) == frac(1, 2));
  CHECK(CyclicCocycle(4, 1).eval(1, 3, 3) == frac(1, 4));
  CHECK(CyclicCocycle(4, 1).eval(5, -1, 7) == frac(1, 4));
}

TEST_CASE("coboundary check") {
  CHECK(coboundary_check(CyclicCocycle(2, 1)));
  CHECK(coboundary_check(CyclicCocycle(6, 5)));
  const CyclicCocycle a(4, 1);
  const CochainTable corrupted = [&](std::int64_t i, std::int64_t j, std::int64_t k) {
    return (i == 1 && j == 2 && k == 3) ? mod_one(a.eval(i, j, k) + frac(1, 3)) : a.eval(i, j, k);
  };
  CHECK_FALSE(coboundary_check(4, corrupted));
  const CochainTable faithful = [&](std::int64_t i, std::int64_t j, std::int64_t k) { return a.eval(i, j, k); };
  CHECK(coboundary_check(4, faithful));
}

TEST_CASE("all small classes") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t s = 0; s < n; ++s) {
      CAPTURE(n);
      CAPTURE(s);
      const CyclicCocycle a(n, s);
      CHECK(coboundary_check(a));
      CHECK(is_normalized(a));
      CHECK(tn_action(a) == frac(s, n));
      const auto h = n / std::gcd(n, s);
      CHECK(order_mod_one(tn_action(a)) == h);
      CHECK(twist_data(n, s).h == h);
      CHECK(restrict_to_power(a, h).s() == 0);
    }
  }
}

TEST_CASE("tn action examples") {
  CHECK(tn_action(CyclicCocycle(5, 0)) == 0);
  CHECK(tn_action(CyclicCocycle(2, 1)) == frac(1, 2));
  CHECK(tn_action(CyclicCocycle(6, 4)) == frac(2, 3));
  CHECK(order_mod_one(tn_action(CyclicCocycle(6, 4))) == 3);
}

TEST_CASE("restriction") {
  CHECK(restrict_to_power(CyclicCocycle(6, 5), 1).s() == 5);
  const auto r = restrict_to_power(CyclicCocycle(4, 2), 2);
  CHECK(r.n() == 2);
  CHECK(r.s() == 0);
  CHECK(restrict_to_power(CyclicCocycle(6, 2), 3).s() == 0);
  CHECK(restrict_to_power(CyclicCocycle(6, 1), 2).s() == 1);
  CHECK(restrict_to_power(CyclicCocycle(8, 3), 2).s() == 3);
  CHECK_THROWS(restrict_to_power(CyclicCocycle(6, 1), 4));
}

TEST_CASE("twist data") {
  const auto t0 = twist_data(5, 0);
  CHECK(t0.h == 1);
  CHECK(t0.N == 5);
  CHECK(t0.admits(frac(2, 5)));
  CHECK_FALSE(t0.admits(frac(1, 10)));
  const auto t = twist_data(2, 1);
  CHECK(t.h == 2);
  CHECK(t.N == 4);
  CHECK(t.admits(frac(1, 4)));
  CHECK(t.admits(frac(-1, 4)));
  CHECK(t.admits(frac(3, 4)));
  CHECK_FALSE(t.admits(frac(1, 2)));
  const auto t6 = twist_data(6, 4);
  CHECK(t6.h == 3);
  CHECK(t6.N == 18);
  CHECK(t6.lattice_offset() == frac(1, 9));
  // T^n multiplies every admissible term by exp(2 pi i s/n).
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (std::int64_t s = 0; s < n; ++s) {
      const auto td = twist_data(n, s);
      CHECK(mod_one(td.lattice_offset() * n) == frac(s, n));
    }
  }
}

TEST_CASE("periodic resolution maps into the bar resolution") {
  for (std::int64_t n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const BarComplex B{n};
    // d f_1(e1) = f_0((t - 1) e0), d f_2(e2) = f_1(N e1), d f_3(e3) = f_2((t - 1) e2).
    CHECK(B.d(B.f(1)) == B.act(B.t_minus_one(), B.f(0)));
    CHECK(B.d(B.f(2)) == B.act(B.norm(), B.f(1)));
    CHECK(B.d(B.f(3)) == B.act(B.t_minus_one(), B.f(2)));
    // On coinvariants the periodic differentials are 0, n, 0.
    CHECK(augmentation(B.t_minus_one()) == 0);
    CHECK(augmentation(B.norm()) == n);
  }
}

TEST_CASE("pairing with the generator cycle") {
  for (std::int64_t n = 1; n <= 10; ++n) {
    const BarComplex B{n};
    std::set<Rational> values;
    for (std::int64_t s = 0; s < n; ++s) {
      const CyclicCocycle a(n, s);
      Rational pairing = 0;
      for (const auto& [cell, coeff] : B.f(3)) pairing += coeff * a.eval(cell.second[0], cell.second[1], cell.second[2]);
      pairing = mod_one(pairing);
      CHECK(pairing == tn_action(a));
      CHECK(mod_one(pairing * n) == 0);
      values.insert(pairing);
    }
    CHECK(static_cast<std::int64_t>(values.size()) == n);
  }
}

}
