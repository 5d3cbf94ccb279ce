#pragma once

// Index-n sublattices of Z^2 and the orbit analysis that turns a commuting
// pair of permutations into a product of Hecke triples.

#include <array>
#include <cstdint>
#include <vector>

#include "moonshine/groups.hpp"

namespace moonshine {

/// The sublattice spanned by (d, 0) and (-b, a); 0 <= b < d.
struct Sublattice {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t d = 1;

  std::int64_t index() const { return a * d; }
  friend bool operator==(const Sublattice&, const Sublattice&) = default;
  friend auto operator<=>(const Sublattice&, const Sublattice&) = default;
};

using LatticeVector = std::array<std::int64_t, 2>;

/// Canonical (a, b, d) of the subgroup generated by `generators`. Throws
/// std::invalid_argument when they do not span a finite-index subgroup.
Sublattice canonical_triple(const std::vector<LatticeVector>& generators);

/// Invariant factors d1 | d2 of Z^2 / L with the factors equal to 1 dropped.
std::vector<std::int64_t> abelian_invariants(const Sublattice& lattice);

/// All (a, b, d) with ad = n and 0 <= b < d, sorted.
std::vector<Sublattice> hecke_triples(std::int64_t n);

struct PairOrbit {
  std::vector<unsigned> points;  // 0-based, sorted
  Sublattice lattice;            // stabilizer of any point in the orbit
};

/// Orbits of <sigma, rho> on {0..n-1} ordered by smallest point, each with the
/// stabilizer lattice {(i, j) : sigma^i rho^j x = x}. Throws on non-commuting input.
std::vector<PairOrbit> orbit_decomposition(const Perm& sigma, const Perm& rho);

/// (-1)^(number of even-size orbits).
int pair_sgn(const Perm& sigma, const Perm& rho);

struct TransitiveClass {
  PairClass cls;  // class in symmetric_group(n)
  Perm sigma;
  Perm rho;
  Sublattice triple;
};

/// Conjugacy classes of commuting pairs acting transitively on n points.
std::vector<TransitiveClass> transitive_pair_classes(unsigned n);

/// Invariant factors of a finite abelian group given by a Cayley-style
/// multiplication on the listed elements (used to cross-check orbit lattices).
std::vector<std::int64_t> abelian_invariants_of_subgroup(const Group& G, const std::vector<Elem>& elements);

/// Elements of the subgroup generated by `generators`, sorted.
std::vector<Elem> generated_subgroup(const Group& G, const std::vector<Elem>& generators);

}  // namespace moonshine
