#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_L).
//
// An element of order L is stored in the power basis 1, z, ..., z^(phi(L)-1)
// of Q[x]/Phi_L(x), where z = exp(2 pi i / L). Reduction is always modulo the
// cyclotomic polynomial, so two elements of the same order are equal iff their
// coordinate vectors are equal.

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moonshine/rational.hpp"

namespace moonshine {

/// Coefficient of x^k is stored at index k.
using IntPolynomial = std::vector<Integer>;

/// Minimal polynomial of a primitive L-th root of unity. Throws for L == 0.
IntPolynomial cyclotomic_polynomial(std::uint32_t order);

std::uint32_t euler_phi(std::uint32_t order);

/// Raised when two elements of incompatible order meet in arithmetic.
class OrderMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CycloElem {
 public:
  /// Zero of Q (order 1).
  CycloElem();
  /// The rational `value` represented in order `order`.
  explicit CycloElem(Rational value, std::uint32_t order = 1);
  CycloElem(long value) : CycloElem(Rational(value)) {}  // NOLINT: implicit from integers

  /// Validates that coords has length phi(order).
  static CycloElem from_coords(std::uint32_t order, std::vector<Rational> coords);
  /// zeta_order^power, power taken mod order.
  static CycloElem root_of_unity(std::uint32_t order, std::int64_t power = 1);

  std::uint32_t order() const { return order_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  std::optional<Rational> try_rational() const;

  /// Same complex value in order `target`; requires order() | target.
  CycloElem embed(std::uint32_t target) const;

  /// Multiplicative inverse; throws std::domain_error for zero.
  CycloElem inverse() const;
  CycloElem pow(std::int64_t exponent) const;

  std::complex<double> to_complex() const;

  /// True iff this is a root of unity (every root of unity in Q(zeta_L) has
  /// order dividing lcm(2, L)).
  bool is_root_of_unity() const;

  CycloElem operator-() const;
  CycloElem& operator+=(const CycloElem& other);
  CycloElem& operator-=(const CycloElem& other);
  CycloElem& operator*=(const CycloElem& other);
  CycloElem& operator*=(const Rational& scalar);

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  friend CycloElem operator*(CycloElem a, const Rational& s) { return a *= s; }
  friend CycloElem operator*(const Rational& s, CycloElem a) { return a *= s; }

  /// Compares complex values; differing orders are compared in their lcm.
  friend bool operator==(const CycloElem& a, const CycloElem& b);
  friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

  /// "p/q" for rationals, otherwise "[c0,c1,...;order=L]".
  std::string to_string() const;

 private:
  CycloElem(std::uint32_t order, std::vector<Rational> coords, int);

  bool rational_coords() const;
  // Brings `other` to this order, or both to a common one; throws OrderMismatch.
  void align_with(CycloElem& other);

  std::uint32_t order_;
  std::vector<Rational> coords_;
};

/// Parses the format produced by CycloElem::to_string.
CycloElem parse_cyclo(const std::string& text);

}  // namespace moonshine
