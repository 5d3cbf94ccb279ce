#pragma once

// Hecke operators on Norton series, three ways, and the Fricke involution on
// cyclic moduli points.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "moonshine/norton.hpp"

namespace moonshine {

/// Replicates by index a; index 1 defaults to f itself where accepted.
using Replicates = std::map<unsigned, PuiseuxSeries>;

/// (1/n) sum over (a, b, d) of f(g^d, g^-b h^a; (a tau + b)/d) at every class.
NortonSeries hecke_geometric(const NortonSeries& f, unsigned n);

/// (1/n) sum over transitive commuting-pair classes of Sigma_n of psi_(sigma,rho)(f).
NortonSeries hecke_combinatorial(const NortonSeries& f, unsigned n);

/// sum_m sum_{a | (m, n)} (1/a) c^(a)(nm/a^2) q^m from replicate coefficients.
/// f must be normalized with integral exponents; replicates must cover every
/// a | n with a > 1.
PuiseuxSeries hecke_classical(const PuiseuxSeries& f, unsigned n, const Replicates& replicates);

struct HeckeReport {
  unsigned n = 0;
  /// geometric - combinatorial per class.
  std::vector<PuiseuxSeries> deltas;
  /// geometric - classical on the trivial group, when replicates were given.
  std::optional<PuiseuxSeries> classical_delta;
  Trunc compared_to = Trunc::exact();
  bool agrees = false;
};

HeckeReport verify_equivalence(const NortonSeries& f, unsigned n, const Replicates* replicates = nullptr);

/// The moduli point (1, g; W tau) with W = [[0, -1], [n, 0]].
struct FrickePoint {
  std::int64_t n = 1;
  std::int64_t g = 0;  // generator of Z/n
  Matrix2 tau_map;     // acts by Moebius transformation

  std::complex<double> apply(std::complex<double> tau) const { return mobius(tau_map, tau); }
};

/// Throws std::invalid_argument unless gcd(g, n) = 1.
FrickePoint fricke(std::int64_t n, std::int64_t g);
/// W after W: the matrix -n I, which fixes every tau.
FrickePoint fricke_twice(const FrickePoint& p);

}  // namespace moonshine
