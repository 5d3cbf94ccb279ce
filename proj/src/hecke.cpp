#include "moonshine/hecke.hpp"

#include <numeric>
#include <stdexcept>

#include "moonshine/lattice.hpp"
#include "moonshine/power_ops.hpp"

namespace moonshine {

namespace {

void require_positive_trunc(const PuiseuxSeries& s, unsigned n) {
  if (!s.trunc().is_exact() && s.trunc().bound() <= 0) {
    throw TruncationError("T_" + std::to_string(n) + " output would be known only below q^" +
                          to_string(s.trunc().bound()) + "; supply a longer input");
  }
}

}  // namespace

NortonSeries hecke_geometric(const NortonSeries& f, unsigned n) {
  if (n == 0) throw std::invalid_argument("Hecke index must be positive");
  const Group& G = f.group();
  const auto triples = hecke_triples(n);
  std::vector<PuiseuxSeries> values;
  for (const auto& cls : G.pair_classes()) {
    const auto [g, h] = cls.rep;
    std::vector<PuiseuxSeries> parts;
    for (const auto& t : triples) {
      const Elem g2 = G.pow(g, t.d);
      const Elem h2 = G.mul(G.pow(g, -t.b), G.pow(h, t.a));
      parts.push_back(substitute(f.evaluate(g2, h2), t.a, t.b, t.d));
    }
    PuiseuxSeries v = sum_lifted(std::move(parts)).scaled(frac(1, n)).with_rational_order();
    require_positive_trunc(v, n);
    values.push_back(std::move(v));
  }
  return NortonSeries(G, std::move(values));
}

NortonSeries hecke_combinatorial(const NortonSeries& f, unsigned n) {
  if (n == 0) throw std::invalid_argument("Hecke index must be positive");
  std::optional<NortonSeries> total;
  for (const auto& tc : transitive_pair_classes(n)) {
    NortonSeries term = psi_pair(f, tc.sigma, tc.rho);
    total = total ? *total + term : term;
  }
  NortonSeries out = scaled(*total, frac(1, n));
  for (const auto& v : out.values()) require_positive_trunc(v, n);
  return out;
}

PuiseuxSeries hecke_classical(const PuiseuxSeries& f, unsigned n, const Replicates& replicates) {
  if (n == 0) throw std::invalid_argument("Hecke index must be positive");
  if (!is_normalized(f)) throw std::invalid_argument("hecke_classical needs f = q^-1 + O(q) with rational coefficients");
  std::map<std::int64_t, Rational> coeffs;
  Trunc out_trunc = Trunc::exact();
  for (unsigned a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    const PuiseuxSeries* fa = &f;
    if (const auto it = replicates.find(a); it != replicates.end()) {
      fa = &it->second;
    } else if (a != 1) {
      throw std::invalid_argument("hecke_classical: missing replicate f^(" + std::to_string(a) + ")");
    }
    // c^(a)(e) q^e feeds q^m with m = e a^2 / n, provided a | m.
    out_trunc = min(out_trunc, fa->trunc().scaled(frac(static_cast<std::int64_t>(a) * a, n)));
    for (const auto& [e, c] : fa->terms()) {
      if (!is_integer(e)) throw std::invalid_argument("hecke_classical needs integral exponents");
      const auto q = c.try_rational();
      if (!q) throw std::invalid_argument("hecke_classical needs rational coefficients");
      const Rational m = e * frac(static_cast<std::int64_t>(a) * a, n);
      if (!is_integer(m) || to_int64(m.get_num()) % a != 0) continue;
      coeffs[to_int64(m.get_num())] += *q / a;
    }
  }
  PuiseuxSeries::Terms terms;
  for (const auto& [m, c] : coeffs) {
    if (c != 0 && out_trunc.admits(frac(m))) terms.emplace(frac(m), CycloElem(c));
  }
  PuiseuxSeries out(1, out_trunc, std::move(terms));
  require_positive_trunc(out, n);
  return out;
}

HeckeReport verify_equivalence(const NortonSeries& f, unsigned n, const Replicates* replicates) {
  HeckeReport report;
  report.n = n;
  const NortonSeries geo = hecke_geometric(f, n);
  const NortonSeries comb = hecke_combinatorial(f, n);
  report.agrees = true;
  report.compared_to = min(geo.common_trunc(), comb.common_trunc());
  for (std::size_t i = 0; i < geo.values().size(); ++i) {
    auto [x, y] = lift_to_common_order(geo.at_class(i), comb.at_class(i));
    PuiseuxSeries delta = x - y;
    report.agrees = report.agrees && delta.is_zero();
    report.deltas.push_back(std::move(delta));
  }
  if (replicates != nullptr && f.group().order() == 1) {
    const PuiseuxSeries classical = hecke_classical(f.at_class(0), n, *replicates);
    auto [x, y] = lift_to_common_order(geo.at_class(0), classical);
    PuiseuxSeries delta = x - y;
    report.compared_to = min(report.compared_to, delta.trunc());
    report.agrees = report.agrees && delta.is_zero();
    report.classical_delta = std::move(delta);
  }
  return report;
}

FrickePoint fricke(std::int64_t n, std::int64_t g) {
  if (n <= 0) throw std::invalid_argument("Fricke level must be positive");
  if (std::gcd(floor_mod(g, n), n) != 1) {
    throw std::invalid_argument(std::to_string(g) + " does not generate Z/" + std::to_string(n));
  }
  return {n, floor_mod(g, n), Matrix2{0, -1, n, 0}};
}

FrickePoint fricke_twice(const FrickePoint& p) {
  return {p.n, p.g, p.tau_map * Matrix2{0, -1, p.n, 0}};
}

}  // namespace moonshine
