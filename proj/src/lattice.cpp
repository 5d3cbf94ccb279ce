#include "moonshine/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "moonshine/rational.hpp"

namespace moonshine {

Sublattice canonical_triple(const std::vector<LatticeVector>& generators) {
  // Euclid on the second coordinates leaves one vector w with w[1] = gcd of
  // all second coordinates; every other combination lands on the x-axis.
  std::optional<LatticeVector> w;
  std::int64_t d = 0;
  for (LatticeVector v : generators) {
    if (v[1] != 0 && !w) {
      w = v;
      continue;
    }
    if (v[1] != 0) {
      LatticeVector u = *w;
      while (v[1] != 0) {
        const std::int64_t q = u[1] / v[1];
        u = {u[0] - q * v[0], u[1] - q * v[1]};
        std::swap(u, v);
      }
      w = u;
    }
    d = std::gcd(d, v[0]);
  }
  if (!w || d == 0) throw std::invalid_argument("lattice generators are rank deficient");
  if ((*w)[1] < 0) w = LatticeVector{-(*w)[0], -(*w)[1]};
  return {(*w)[1], floor_mod(-(*w)[0], d), d};
}

std::vector<std::int64_t> abelian_invariants(const Sublattice& L) {
  const std::int64_t d1 = std::gcd(std::gcd(L.d, L.b), L.a);
  const std::int64_t d2 = L.a * L.d / d1;
  std::vector<std::int64_t> out;
  if (d1 != 1) out.push_back(d1);
  if (d2 != 1) out.push_back(d2);
  return out;
}

std::vector<Sublattice> hecke_triples(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("Hecke index must be positive");
  std::vector<Sublattice> out;
  for (std::int64_t a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    const std::int64_t d = n / a;
    for (std::int64_t b = 0; b < d; ++b) out.push_back({a, b, d});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_commuting(const Perm& sigma, const Perm& rho) {
  if (sigma.size() != rho.size()) throw std::invalid_argument("permutations of different degree");
  if (perm_compose(sigma, rho) != perm_compose(rho, sigma)) throw std::invalid_argument("permutations do not commute");
}

}  // namespace

std::vector<PairOrbit> orbit_decomposition(const Perm& sigma, const Perm& rho) {
  require_commuting(sigma, rho);
  const auto n = static_cast<unsigned>(sigma.size());
  std::vector<bool> seen(n, false);
  std::vector<PairOrbit> out;
  for (unsigned x = 0; x < n; ++x) {
    if (seen[x]) continue;
    PairOrbit orbit;
    std::vector<unsigned> stack{x};
    seen[x] = true;
    while (!stack.empty()) {
      const unsigned y = stack.back();
      stack.pop_back();
      orbit.points.push_back(y);
      for (const unsigned z : {static_cast<unsigned>(sigma[y]), static_cast<unsigned>(rho[y])}) {
        if (!seen[z]) {
          seen[z] = true;
          stack.push_back(z);
        }
      }
    }
    std::sort(orbit.points.begin(), orbit.points.end());

    // sigma-cycle through x, with the step count to reach each point.
    std::map<unsigned, std::int64_t> cycle;
    std::int64_t steps = 0;
    for (unsigned y = x; cycle.emplace(y, steps).second; y = sigma[y]) ++steps;
    const auto d = static_cast<std::int64_t>(cycle.size());
    std::int64_t a = 1;
    unsigned y = rho[x];
    while (!cycle.contains(y)) {
      y = rho[y];
      ++a;
    }
    const std::int64_t p = cycle.at(y);
    orbit.lattice = canonical_triple({{d, 0}, {-p, a}});
    out.push_back(std::move(orbit));
  }
  return out;
}

int pair_sgn(const Perm& sigma, const Perm& rho) {
  int sign = 1;
  for (const auto& o : orbit_decomposition(sigma, rho)) {
    if (o.points.size() % 2 == 0) sign = -sign;
  }
  return sign;
}

std::vector<TransitiveClass> transitive_pair_classes(unsigned n) {
  const Group& S = symmetric_group(n);
  std::vector<TransitiveClass> out;
  for (const auto& cls : S.pair_classes()) {
    Perm sigma = S.permutation(cls.rep.g);
    Perm rho = S.permutation(cls.rep.h);
    const auto orbits = orbit_decomposition(sigma, rho);
    if (orbits.size() != 1) continue;
    out.push_back({cls, std::move(sigma), std::move(rho), orbits[0].lattice});
  }
  return out;
}

std::vector<Elem> generated_subgroup(const Group& G, const std::vector<Elem>& generators) {
  std::vector<bool> in(G.order(), false);
  std::vector<Elem> members{G.identity()};
  in[G.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const Elem s : generators) {
      const Elem y = G.mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::int64_t> abelian_invariants_of_subgroup(const Group& G, const std::vector<Elem>& elements) {
  for (const Elem x : elements) {
    for (const Elem y : elements) {
      if (!G.commute(x, y)) throw std::invalid_argument("subgroup is not abelian");
    }
  }
  std::int64_t size = static_cast<std::int64_t>(elements.size());
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2, m = size; m > 1; ++p) {
    if (m % p != 0) continue;
    primes.push_back(p);
    while (m % p == 0) m /= p;
  }
  // For each p, #{x : x^(p^k) = 1} = p^(sum_i min(k, e_i)) determines the e_i.
  std::vector<std::vector<std::int64_t>> exponents;
  for (const std::int64_t p : primes) {
    std::vector<std::int64_t> counts{1};
    std::int64_t pk = 1;
    std::int64_t total = 1;
    while (total < size && size % (total * p) == 0) {
      pk *= p;
      std::int64_t c = 0;
      for (const Elem x : elements) c += G.pow(x, pk) == G.identity() ? 1 : 0;
      if (c == counts.back()) break;
      counts.push_back(c);
      total = c;
    }
    std::vector<std::int64_t> ranks;  // ranks[k-1] = #{i : e_i >= k}
    for (std::size_t k = 1; k < counts.size(); ++k) {
      std::int64_t r = 0;
      for (std::int64_t q = counts[k] / counts[k - 1]; q > 1; q /= p) ++r;
      ranks.push_back(r);
    }
    std::vector<std::int64_t> e(ranks.empty() ? 0 : static_cast<std::size_t>(ranks[0]), 0);
    for (const auto r : ranks) {
      for (std::int64_t i = 0; i < r; ++i) ++e[static_cast<std::size_t>(i)];
    }
    std::vector<std::int64_t> powers;
    for (const auto ei : e) {
      std::int64_t v = 1;
      for (std::int64_t k = 0; k < ei; ++k) v *= p;
      powers.push_back(v);
    }
    exponents.push_back(std::move(powers));  // descending
  }
  std::size_t width = 0;
  for (const auto& v : exponents) width = std::max(width, v.size());
  std::vector<std::int64_t> factors(width, 1);
  for (const auto& v : exponents) {
    for (std::size_t i = 0; i < v.size(); ++i) factors[i] *= v[i];
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

}  // namespace moonshine
