#pragma once

// Power operations on Norton series (psi, symmetric and exterior powers and
// their generating series), replicate extraction and the replicability
// identity, and the level-1 operations on class functions.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moonshine/hecke.hpp"
#include "moonshine/lattice.hpp"
#include "moonshine/norton.hpp"

namespace moonshine {

/// Product over <sigma, rho>-orbits with triple (a, b, d) of
/// f(g^d, g^-b h^a; (a tau + b)/d), at every class [g, h].
NortonSeries psi_pair(const NortonSeries& f, const Perm& sigma, const Perm& rho);
/// The same product for an explicit list of orbit triples.
NortonSeries psi_triples(const NortonSeries& f, const std::vector<Sublattice>& triples);

/// (1/n!) sum over commuting pairs of Sigma_n of psi, resp. sgn * psi.
NortonSeries sym_n(const NortonSeries& f, unsigned n);
NortonSeries lambda2_n(const NortonSeries& f, unsigned n);

/// Polynomial in t of degree var_order with Norton-series coefficients.
struct TotalPowerSeries {
  unsigned var_order = 0;
  std::vector<NortonSeries> coefficients;  // coefficient of t^k

  /// t -> -t.
  TotalPowerSeries flipped() const;
};

TotalPowerSeries multiply(const TotalPowerSeries& a, const TotalPowerSeries& b);
/// Inverse of a series with coefficient 1 at t^0.
TotalPowerSeries inverse(const TotalPowerSeries& a);
/// exp of a series with zero coefficient at t^0.
TotalPowerSeries exp_t(const TotalPowerSeries& x);

/// 1, sym_1, ..., sym_d.
TotalPowerSeries total_sym(const NortonSeries& f, unsigned d);
/// 1, lambda_1, ..., lambda_d (the coefficients of Lambda_t).
TotalPowerSeries total_lambda(const NortonSeries& f, unsigned d);
/// exp(sum_{k=1}^d T_k(f) t^k) with T_k = hecke_geometric(f, k).
TotalPowerSeries sym_from_hecke(const NortonSeries& f, unsigned d);

struct SymExpReport {
  unsigned var_order = 0;
  /// Per t-degree: direct sym_k agrees with the exp construction.
  std::vector<bool> degree_agrees;
  /// total_sym * total_lambda(-t) == 1 per t-degree.
  std::vector<bool> inverse_ok;
  /// Guaranteed truncation of the compared sym_k.
  std::vector<Trunc> compared_to;
  bool agrees = false;
};

SymExpReport verify_sym_exp_identity(const NortonSeries& f, unsigned d);

// ---------------------------------------------------------------- replicates

struct ReplicateFailure {
  unsigned n = 0;
  Rational exponent;
  std::string reason;
};

struct ReplicateResult {
  /// f^(a) for every a that was extracted; its truncation is the guaranteed order.
  Replicates replicates;
  std::optional<ReplicateFailure> failure;
  bool ok() const { return !failure.has_value(); }
};

/// f^(1) = f and, for n = 2..n_max, f^(n) from
/// Phi_n(f) - sum_{ad=n, d>1} sum_b f^(a)((a tau + b)/d), which must be rational
/// and supported on nZ. Stops at the first failure.
ReplicateResult extract_replicates(const PuiseuxSeries& f, unsigned n_max);

/// Smallest input truncation for which extract_replicates(f, n_max) knows every
/// replicate below `terms_wanted - 1` (exponents -1 .. terms_wanted - 2).
Rational replicate_input_order(unsigned n_max, unsigned terms_wanted);

struct ReplicabilityEntry {
  unsigned n = 0;  // compares the t^n coefficients
  PuiseuxSeries lambda;  // lambda_(n+1)(f)
  bool is_constant = false;
  std::optional<Rational> constant;
  Rational expected;  // (-1)^(n+1) a_n, forced by the identity
  bool matches = false;
};

struct ReplicabilityReport {
  std::vector<ReplicabilityEntry> entries;
  bool all_constant = false;
  bool identity_holds = false;
};

/// Checks f(t) - f(q) = t^-1 Lambda_(-t)(f(q)) coefficientwise through t^order
/// on the trivial group.
ReplicabilityReport verify_replicability(const PuiseuxSeries& f, unsigned order);

// ---------------------------------------------------------------- level 1

/// Values on conjugacy classes, aligned with G.pair_classification().conjugacy_classes().
using ClassFunction = std::vector<Rational>;

ClassFunction adams(const Group& G, const ClassFunction& chi, unsigned n);
/// (1/n!) sum over Sigma_n of prod over cycles c of chi(g^|c|), optionally sign-weighted.
ClassFunction level1_sym(const Group& G, const ClassFunction& chi, unsigned n);
ClassFunction level1_lambda(const Group& G, const ClassFunction& chi, unsigned n);
/// Coefficients [k][class] of exp(sign * sum_{k>=1} psi_k(chi)/k t^k) through t^d.
std::vector<ClassFunction> level1_total(const Group& G, const ClassFunction& chi, unsigned d, int sign = 1);

/// Partitions of n as non-increasing part lists.
std::vector<std::vector<unsigned>> partitions(unsigned n);
/// Size of the centralizer of a permutation of the given cycle type.
Integer z_lambda(const std::vector<unsigned>& partition);

}  // namespace moonshine
