#pragma once

// Norton series: one q-series per simultaneous-conjugacy class of commuting
// pairs, with optional twist data per cyclic sector.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "moonshine/cocycles.hpp"
#include "moonshine/groups.hpp"
#include "moonshine/series.hpp"

namespace moonshine {

class NortonSeries {
 public:
  /// values[i] belongs to group.pair_classes()[i]. Twist data is keyed by the
  /// representative of g's conjugacy class and must have n = |g|.
  NortonSeries(Group group, std::vector<PuiseuxSeries> values, std::map<Elem, TwistData> twist = {});

  /// The same series at every class.
  static NortonSeries constant(Group group, const PuiseuxSeries& value);

  const Group& group() const { return group_; }
  const std::vector<PuiseuxSeries>& values() const { return values_; }
  const std::map<Elem, TwistData>& twist() const { return twist_; }
  std::optional<TwistData> twist_for(Elem g) const;

  /// Value at the class of (g, h); throws std::invalid_argument if gh != hg.
  const PuiseuxSeries& evaluate(Elem g, Elem h) const;
  const PuiseuxSeries& at_class(std::size_t index) const { return values_.at(index); }

  /// Minimum truncation over all classes.
  Trunc common_trunc() const;

  friend bool operator==(const NortonSeries& a, const NortonSeries& b);

 private:
  Group group_;
  std::vector<PuiseuxSeries> values_;
  std::map<Elem, TwistData> twist_;
};

/// Classwise arithmetic over one group; twist data is dropped.
NortonSeries operator+(const NortonSeries& a, const NortonSeries& b);
NortonSeries operator-(const NortonSeries& a, const NortonSeries& b);
NortonSeries operator*(const NortonSeries& a, const NortonSeries& b);
NortonSeries scaled(const NortonSeries& f, const Rational& factor);
/// True iff every class difference vanishes below the common truncation.
bool agrees_with(const NortonSeries& a, const NortonSeries& b);

// ---------------------------------------------------------------- T-equivariance

struct TClassEntry {
  std::size_t class_index = 0;
  CommutingPair rep;
  /// f(g, gh; tau) = scalar * f(g, h; tau + 1) when agrees.
  bool agrees = false;
  std::optional<CycloElem> scalar;
  /// Product of the scalars along (g, g^k h), k = 0..|g|-1: the action of T^|g|.
  std::optional<CycloElem> monodromy;
  std::string note;
};

struct TReport {
  std::vector<TClassEntry> entries;
  Trunc compared_to = Trunc::exact();
  bool all_agree = true;
};

TReport check_T_equivariance(const NortonSeries& f);

// ---------------------------------------------------------------- numeric check

struct NumericClassEntry {
  std::size_t class_index = 0;
  CommutingPair rep;
  CommutingPair image;
  std::complex<double> scalar = 1.0;
  double max_deviation = 0.0;
  bool divergent = false;
};

struct NumericReport {
  Matrix2 gamma;
  std::vector<NumericClassEntry> entries;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool any_divergent = false;
  bool passed = false;
};

/// Compares f(sl2_act((g,h), gamma); tau) with f(g, h; gamma tau) at each
/// sample after fitting one unimodular scalar per class. A class is flagged
/// divergent when its highest stored term exceeds `tol` in absolute value at
/// some evaluation point.
NumericReport numeric_check(const NortonSeries& f, const Matrix2& gamma,
                            const std::vector<std::complex<double>>& samples, double tol);

std::complex<double> mobius(const Matrix2& gamma, std::complex<double> tau);

// ---------------------------------------------------------------- functoriality

struct Homomorphism {
  Group source;
  Group target;
  std::vector<Elem> images;

  Elem operator()(Elem x) const { return images.at(x); }
};

/// Verifies a(xy) = a(x)a(y) on all of source x source.
Homomorphism make_homomorphism(Group source, Group target, std::vector<Elem> images);
/// The map H -> G sending everything to the identity.
Homomorphism trivial_homomorphism(Group source, Group target);

/// Value at [h1, h2] is f at [a(h1), a(h2)]. Twist data is not carried over.
NortonSeries restrict(const NortonSeries& f, const Homomorphism& a);

/// |C_G(g1,g2)| / |H| times the sum of f(h1, h2) over commuting pairs of H whose
/// image is conjugate to (g1, g2).
NortonSeries induce(const NortonSeries& f, const Homomorphism& a);

/// (1/|G|) sum over commuting pairs of f1 * f2.
PuiseuxSeries inner_product(const NortonSeries& f1, const NortonSeries& f2);

// ---------------------------------------------------------------- twisted support

struct SupportEntry {
  std::size_t class_index = 0;
  CommutingPair rep;
  bool ok = true;
  std::optional<Rational> offending_exponent;
};

struct SupportReport {
  std::vector<SupportEntry> entries;
  bool all_ok = true;
};

/// Checks every exponent at classes with twist data against its lattice
/// (1/n)Z + offset. Classes without twist data pass.
SupportReport validate_twisted_support(const NortonSeries& f);

// ---------------------------------------------------------------- fixtures and I/O

/// Seeded random class values: exponents k/|g| for k = -1..terms-2, each
/// coefficient p/q with |p| <= 5, 1 <= q <= 3, truncated at (terms-1)/|g|.
NortonSeries random_norton(const Group& group, std::uint64_t seed, unsigned terms = 12);

nlohmann::json group_to_json(const Group& group);
Group group_from_json(const nlohmann::json& j);

nlohmann::json norton_to_json(const NortonSeries& f);
NortonSeries norton_from_json(const nlohmann::json& j);

}  // namespace moonshine
