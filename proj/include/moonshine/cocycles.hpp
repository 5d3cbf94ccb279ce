#pragma once

// Normalized 3-cocycles on Z/n with values in Q/Z, and the twist data
// (n, s, h, N) they assign to a cyclic sector.

#include <cstdint>
#include <functional>

#include "moonshine/rational.hpp"

namespace moonshine {

/// The class-s cocycle alpha(i, j, k) = (s/n) i floor((j + k)/n) mod 1.
class CyclicCocycle {
 public:
  CyclicCocycle(std::int64_t n, std::int64_t s);

  std::int64_t n() const { return n_; }
  /// Class in 0..n-1.
  std::int64_t s() const { return s_; }

  /// Value in [0, 1); arguments are reduced mod n first.
  Rational eval(std::int64_t i, std::int64_t j, std::int64_t k) const;

 private:
  std::int64_t n_;
  std::int64_t s_;
};

/// A Q/Z-valued function of three arguments in Z/n.
using CochainTable = std::function<Rational(std::int64_t, std::int64_t, std::int64_t)>;

/// delta(alpha)(a, b, c, d) == 0 mod 1 over all quadruples.
bool coboundary_check(const CyclicCocycle& alpha);
bool coboundary_check(std::int64_t n, const CochainTable& alpha);

/// True iff alpha vanishes whenever one argument is 0.
bool is_normalized(const CyclicCocycle& alpha);

/// Pairing with the cycle sum_{k=0}^{n-1} (g, g^k, g): equals s/n in [0, 1).
Rational tn_action(const CyclicCocycle& alpha);

/// Order of a value in Q/Z.
std::int64_t order_mod_one(const Rational& value);

/// Restriction to the subgroup generated by g^m, read off from its pairing
/// with that subgroup's generator cycle. Throws unless m divides n.
CyclicCocycle restrict_to_power(const CyclicCocycle& alpha, std::int64_t m);

struct TwistData {
  std::int64_t n = 1;
  std::int64_t s = 0;  // class mod n
  std::int64_t h = 1;  // n / gcd(n, s)
  std::int64_t N = 1;  // n h

  /// Offset r of the exponent lattice (1/n)Z + r, in [0, 1/n). Chosen so
  /// that T^n multiplies every term by exp(2 pi i s/n).
  Rational lattice_offset() const;
  /// Whether exponent lies in (1/n)Z + lattice_offset().
  bool admits(const Rational& exponent) const;
};

TwistData twist_data(std::int64_t n, std::int64_t s);

}  // namespace moonshine
