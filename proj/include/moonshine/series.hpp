#pragma once

// Truncated Puiseux series in q with exact cyclotomic coefficients.
//
// A series carries a declared exponent denominator N (every stored exponent
// lies in (1/N)Z), a truncation bound (coefficients at exponents >= trunc are
// unknown), a cyclotomic order shared by all coefficients, and a sparse map of
// nonzero terms. Every operation propagates the truncation bound
// pessimistically and never reads a coefficient at or beyond it.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "moonshine/cyclotomic.hpp"
#include "moonshine/rational.hpp"

namespace moonshine {

/// Raised when a computation would need a coefficient at or beyond a
/// truncation bound, or when an exact series has no terminating result.
class TruncationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exponent bound of a truncated series; `exact()` means nothing is truncated.
class Trunc {
 public:
  static Trunc exact() { return Trunc(); }
  static Trunc at(Rational bound) { return Trunc(std::move(bound)); }

  bool is_exact() const { return !bound_.has_value(); }
  /// Throws std::logic_error for exact bounds.
  const Rational& bound() const;
  bool admits(const Rational& exponent) const { return !bound_ || exponent < *bound_; }

  Trunc shifted(const Rational& delta) const;
  /// Multiplies the bound by a positive factor.
  Trunc scaled(const Rational& factor) const;

  friend Trunc min(const Trunc& a, const Trunc& b);
  friend bool operator==(const Trunc& a, const Trunc& b) { return a.bound_ == b.bound_; }
  friend bool operator!=(const Trunc& a, const Trunc& b) { return !(a == b); }
  friend bool operator<(const Trunc& a, const Trunc& b);

  /// "inf" or "p/q".
  std::string to_string() const;

 private:
  Trunc() = default;
  explicit Trunc(Rational bound) : bound_(std::move(bound)) {}
  std::optional<Rational> bound_;
};

Trunc parse_trunc(const std::string& text);

class PuiseuxSeries {
 public:
  using Terms = std::map<Rational, CycloElem>;

  /// Exact zero.
  PuiseuxSeries();
  /// Validates the invariants: exponents in (1/denom)Z and below trunc,
  /// coefficients of order `order`. Zero coefficients are dropped.
  PuiseuxSeries(std::uint32_t denom, Trunc trunc, Terms terms, std::uint32_t order = 1);

  static PuiseuxSeries zero(Trunc trunc = Trunc::exact(), std::uint32_t order = 1);
  static PuiseuxSeries constant(const CycloElem& value);
  static PuiseuxSeries monomial(const Rational& exponent, const CycloElem& coeff,
                                Trunc trunc = Trunc::exact());
  /// coeffs[k] is the coefficient of q^(lowest + k); integral exponents.
  static PuiseuxSeries laurent(std::int64_t lowest, const std::vector<Rational>& coeffs,
                               Trunc trunc = Trunc::exact());

  std::uint32_t denom() const { return denom_; }
  const Trunc& trunc() const { return trunc_; }
  std::uint32_t order() const { return order_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> valuation() const;
  /// Lowest exponent that may carry a nonzero coefficient: the valuation, or
  /// the truncation bound for a zero series.
  Trunc valuation_bound() const;
  /// Throws TruncationError if the exponent is not below trunc.
  CycloElem coefficient(const Rational& exponent) const;
  bool has_rational_coefficients() const;

  PuiseuxSeries embed(std::uint32_t target_order) const;
  /// Re-declares the exponent denominator; must be a multiple of the current one.
  PuiseuxSeries with_denom(std::uint32_t denom) const;
  /// Lowers the truncation bound (never raises it).
  PuiseuxSeries truncated(const Trunc& trunc) const;
  /// Same terms with the smallest denominator that fits them.
  PuiseuxSeries with_minimal_denom() const;
  /// Order 1 when every coefficient is rational, else unchanged.
  PuiseuxSeries with_rational_order() const;

  PuiseuxSeries scaled(const CycloElem& factor) const;
  PuiseuxSeries scaled(const Rational& factor) const;

  PuiseuxSeries operator-() const;
  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  PuiseuxSeries& operator+=(const PuiseuxSeries& other) { return *this = *this + other; }
  PuiseuxSeries& operator-=(const PuiseuxSeries& other) { return *this = *this - other; }
  PuiseuxSeries& operator*=(const PuiseuxSeries& other) { return *this = *this * other; }

  /// Same truncation and the same complex coefficients; the declared
  /// denominator and cyclotomic order are representation details.
  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend bool operator!=(const PuiseuxSeries& a, const PuiseuxSeries& b) { return !(a == b); }

  /// True iff a - b vanishes below min(trunc(a), trunc(b)).
  bool agrees_with(const PuiseuxSeries& other) const;

  /// Sum of c * exp(2 pi i r tau) over the stored terms.
  std::complex<double> evaluate(std::complex<double> tau) const;

 private:
  struct Unchecked {};
  PuiseuxSeries(Unchecked, std::uint32_t denom, Trunc trunc, Terms terms, std::uint32_t order);

  std::uint32_t denom_ = 1;
  Trunc trunc_ = Trunc::exact();
  std::uint32_t order_ = 1;
  Terms terms_;
};

/// Embeds every series into the lcm of their cyclotomic orders.
void lift_to_common_order(std::vector<PuiseuxSeries>& series);
std::pair<PuiseuxSeries, PuiseuxSeries> lift_to_common_order(const PuiseuxSeries& a,
                                                              const PuiseuxSeries& b);
/// Sum of series of possibly different orders, embedded into their lcm.
PuiseuxSeries sum_lifted(std::vector<PuiseuxSeries> series);
/// Product with both factors embedded into their common order.
PuiseuxSeries multiply_lifted(const PuiseuxSeries& a, const PuiseuxSeries& b);

PuiseuxSeries power(const PuiseuxSeries& f, unsigned exponent);

/// Inverse of a series whose lowest coefficient is nonzero.
PuiseuxSeries invert_unit(const PuiseuxSeries& a);

/// exp(a) for valuation(a) > 0. Exact nonzero input needs `bound`, the
/// truncation to compute to; otherwise the result keeps a's truncation.
PuiseuxSeries exp_series(const PuiseuxSeries& a, std::optional<Rational> bound = std::nullopt);
/// log(a) for a with constant term 1 and no negative exponents.
PuiseuxSeries log_series(const PuiseuxSeries& a, std::optional<Rational> bound = std::nullopt);

/// f(tau) -> f((a tau + b)/d): c q^r -> c exp(2 pi i r b/d) q^(r a/d).
PuiseuxSeries substitute(const PuiseuxSeries& f, std::int64_t a, std::int64_t b, std::int64_t d);
/// f(tau) -> f(tau + shift).
PuiseuxSeries translate(const PuiseuxSeries& f, std::int64_t shift);
/// c q^r -> c q^(r * factor), factor > 0.
PuiseuxSeries rescale_exponents(const PuiseuxSeries& f, const Rational& factor);

struct FaberResult {
  unsigned n = 0;
  /// coefficients[k] multiplies f^k.
  std::vector<Rational> coefficients;
  PuiseuxSeries series;
};

/// q^-1 + O(q), rational coefficients, no constant term.
bool is_normalized(const PuiseuxSeries& f);

/// Faber polynomials Phi_1..Phi_n of a normalized series, by leading-term
/// elimination.
std::vector<FaberResult> faber_sequence(const PuiseuxSeries& f, unsigned n);
FaberResult faber(const PuiseuxSeries& f, unsigned n);

/// j - 744 through q^order, from E4^3 / Delta.
PuiseuxSeries j_expansion(unsigned order);

}  // namespace moonshine
