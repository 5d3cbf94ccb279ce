#pragma once

// Finite groups with enumerated carriers, commuting pairs and their
// simultaneous-conjugacy classes, and the SL2(Z) action on pairs.
//
// Elements are indices 0..|G|-1 and the enumeration order is fixed per model:
// integers for Z/n, mixed radix for products of cyclics, lexicographic order
// of one-line words for symmetric groups (identity first), and row order for
// Cayley tables. Class representatives are the minimal pair in this order.

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace moonshine {

using Elem = std::uint32_t;
/// 0-based one-line notation: perm[x] is the image of x.
using Perm = std::vector<std::uint8_t>;

/// Raised when a symmetric-group enumeration exceeds the configured cap.
class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr unsigned kDefaultSymmetricCap = 8;
/// Largest n for which Sigma_n may be enumerated. Raising it past 8 is
/// allowed but the classification cost grows like n! * (number of classes).
unsigned symmetric_cap();
void set_symmetric_cap(unsigned cap);

/// Integer 2x2 matrix [[a, b], [c, d]].
struct Matrix2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const { return a * d - b * c; }
  static Matrix2 identity() { return {1, 0, 0, 1}; }
  static Matrix2 S() { return {0, 1, -1, 0}; }
  static Matrix2 T() { return {1, 1, 0, 1}; }

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

struct CommutingPair {
  Elem g = 0;
  Elem h = 0;
  friend bool operator==(const CommutingPair&, const CommutingPair&) = default;
  friend auto operator<=>(const CommutingPair&, const CommutingPair&) = default;
};

struct PairClass {
  CommutingPair rep;
  std::uint64_t class_size = 0;
  std::uint64_t centralizer_order = 0;
};

struct ConjugacyClass {
  Elem rep = 0;
  std::uint64_t size = 0;
  std::uint64_t centralizer_order = 0;
};

class PairClassification;

class Group {
 public:
  enum class Kind { Cyclic, Abelian, Symmetric, Table };

  static Group trivial();
  static Group cyclic(std::uint32_t n);
  /// Z/m1 x Z/m2 x ...; elements in mixed radix with the last factor fastest.
  static Group abelian(std::vector<std::uint32_t> moduli);
  /// Throws CapExceeded above symmetric_cap().
  static Group symmetric(unsigned n);
  /// table[x][y] = x*y. Axioms are verified; throws std::invalid_argument.
  static Group from_table(std::vector<std::string> labels, std::vector<std::vector<Elem>> table);

  Kind kind() const;
  std::uint32_t order() const;
  Elem identity() const;
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;
  Elem pow(Elem x, std::int64_t k) const;
  Elem conj(Elem c, Elem x) const { return mul(mul(c, x), inv(c)); }
  bool commute(Elem x, Elem y) const { return mul(x, y) == mul(y, x); }
  std::uint32_t element_order(Elem x) const;

  /// "1", "Z/6", "Z/2xZ/2", "S3" or "table(|G|)".
  std::string name() const;
  std::string element_label(Elem x) const;
  /// Inverse of element_label; throws std::invalid_argument.
  Elem parse_element(const std::string& label) const;

  /// Cyclic factors for Cyclic/Abelian groups.
  const std::vector<std::uint32_t>& moduli() const;
  /// Degree of a symmetric group.
  unsigned degree() const;
  /// Permutation of a symmetric-group element.
  Perm permutation(Elem x) const;
  Elem from_permutation(const Perm& p) const;
  /// Cayley-table labels and entries; also materialized for other kinds.
  std::vector<std::string> labels() const;
  std::vector<std::vector<Elem>> table() const;

  /// Computed once per group and shared by copies.
  const PairClassification& pair_classification() const;
  const std::vector<PairClass>& pair_classes() const;

  /// Same model and parameters (tables compared entrywise).
  friend bool operator==(const Group& a, const Group& b);
  friend bool operator!=(const Group& a, const Group& b) { return !(a == b); }

  struct Impl;

 private:
  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Simultaneous-conjugacy classes of commuting pairs, sorted by representative.
class PairClassification {
 public:
  const std::vector<PairClass>& classes() const { return classes_; }
  const std::vector<ConjugacyClass>& conjugacy_classes() const { return conj_classes_; }

  /// Index into classes() of the class of (g, h); throws if gh != hg.
  std::size_t index_of(Elem g, Elem h) const;
  /// Index into conjugacy_classes().
  std::size_t conjugacy_index(Elem g) const { return elem_class_[g]; }
  /// Some c with c g c^-1 equal to the representative of g's class.
  Elem conjugator_to_rep(Elem g) const { return conj_to_rep_[g]; }
  std::uint64_t commuting_pair_count() const;

 private:
  friend class Group;
  struct RepData {
    std::vector<Elem> centralizer;      // sorted
    std::vector<std::uint32_t> pair_of;  // pair-class index per centralizer element
  };

  const Group::Impl* impl_ = nullptr;
  std::vector<PairClass> classes_;
  std::vector<ConjugacyClass> conj_classes_;
  std::vector<std::uint32_t> elem_class_;
  std::vector<Elem> conj_to_rep_;
  std::vector<RepData> rep_data_;  // per conjugacy class
};

/// "1"/"trivial", "Z/<n>", "Z/<a>xZ/<b>[x...]", "S<n>". Throws std::invalid_argument.
Group parse_group_spec(const std::string& spec);

/// Sigma_n with its classification computed at most once per process.
const Group& symmetric_group(unsigned n);

/// (g, h) -> (g^a h^c, g^b h^d) for gamma = [[a, b], [c, d]], det gamma = 1.
CommutingPair sl2_act(const Group& G, CommutingPair p, const Matrix2& gamma);

/// Rank of a permutation in lexicographic order; inverse of perm_unrank.
std::uint32_t perm_rank(const Perm& p);
Perm perm_unrank(std::uint32_t rank, unsigned n);
/// (p q)(x) = p(q(x)).
Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);

}  // namespace moonshine
