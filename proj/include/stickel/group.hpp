#ifndef STICKEL_GROUP_HPP
#define STICKEL_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stickel/arith.hpp"

namespace stickel {

/// Default upper bound on group orders accepted by the builtin catalog and
/// the character-table routines.
inline constexpr int kMaxGroupOrder = 200;

/// Raised when a Cayley table or a group file violates a group axiom. The
/// message always names the failed axiom.
class GroupAxiomError : public DomainError {
 public:
  GroupAxiomError(std::string axiom, const std::string& detail)
      : DomainError("group axiom '" + axiom + "' failed: " + detail), axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

/// Raised when a group or table exceeds the configured size bound.
class SizeCapError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// How faithfully to treat q as a residue-field order.
enum class Strictness { strict, permissive };

struct ConjugacyClass {
  int representative = 0;  // least element index in the class
  std::vector<int> elements;  // sorted
  int size() const { return static_cast<int>(elements.size()); }
};

/// Permutation of {0, ..., d-1} as an image list.
using Permutation = std::vector<int>;

/// A finite group given by its Cayley table on indices 0..n-1, index 0 the identity.
/// Validated on construction, immutable afterwards.
class FiniteGroup {
 public:
  /// Validates closure, identity, associativity and inverses (in that order).
  static FiniteGroup from_cayley_table(std::vector<std::vector<int>> table, std::string name = {},
                                       std::vector<std::string> labels = {});

  /// Closure of the generators under composition, (p*q)(x) = p(q(x)). Elements
  /// are numbered in breadth-first order from the identity.
  static FiniteGroup from_permutations(const std::vector<Permutation>& generators, std::string name = {},
                                       int max_order = kMaxGroupOrder);

  int order() const { return static_cast<int>(table_.size()); }
  static constexpr int identity() { return 0; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int pow(int a, int64_t k) const;
  /// x^{-1} g x
  int conjugate(int g, int x) const { return mul(mul(inv(x), g), x); }
  int commutator(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  int element_order(int a) const { return orders_[a]; }
  int exponent() const { return exponent_; }
  bool is_abelian() const;

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(int g) const { return class_index_[g]; }
  /// Class of g^k for g in class c.
  int power_class(int c, int64_t k) const { return class_of(pow(classes_[c].representative, k)); }

  /// s^0, s^1, ..., s^{|s|-1}
  std::vector<int> cyclic_subgroup(int s) const;
  /// Sorted element list of the subgroup generated by `generators`.
  std::vector<int> generated_subgroup(const std::vector<int>& generators) const;

  const std::string& name() const { return name_; }
  const std::string& label(int g) const { return labels_[g]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  FiniteGroup() = default;
  void finish_construction();

  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
  int exponent_ = 1;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_index_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Orbit partition of the conjugation action, classes ordered by representative.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

/// Homomorphism given by its image table; multiplicativity checked on construction.
class GroupHom {
 public:
  GroupHom(GroupPtr source, GroupPtr target, std::vector<int> images);
  int operator()(int g) const { return images_[g]; }
  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int> kernel() const;

 private:
  GroupPtr source_, target_;
  std::vector<int> images_;
};

struct Abelianization {
  std::vector<int> derived;  // G', sorted
  GroupPtr quotient;         // G^{ab} = G/G'
  GroupHom projection;       // G -> G^{ab}
};

Abelianization derived_and_abelianization(const GroupPtr& g);

/// { s in G : s^q is conjugate to s }. In strict mode q must be a prime power.
std::vector<int> sigma_set(const FiniteGroup& g, int64_t q, Strictness strictness = Strictness::strict);

/// Abstract isomorphism test by generator-image search (intended for small groups).
bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

// Builtin catalog ---------------------------------------------------------

FiniteGroup cyclic_group(int n);
/// Dihedral group of order 2n, elements r^a s^b.
FiniteGroup dihedral_group(int n);
FiniteGroup symmetric_group(int n, int max_order = kMaxGroupOrder);
FiniteGroup alternating_group(int n, int max_order = kMaxGroupOrder);
FiniteGroup quaternion_group();

/// Resolves "C<n>", "D<n>", "S<n>", "A4", "A5", "Q8" (also "A<n>" for n <= 5).
FiniteGroup builtin_group(std::string_view name, int max_order = kMaxGroupOrder);

/// Catalog used by the all-catalog verification run, in a fixed order.
const std::vector<std::string>& verification_catalog();

/// Parses the text group format:
///   group n=<order>
///   perm <k>: (1,2,3)(4,5)      one line per generator, or
///   table:                      followed by n rows of n indices
/// Blank lines and lines starting with '#' are ignored.
FiniteGroup parse_group_file(std::string_view text, std::string name = "file", int max_order = kMaxGroupOrder);

/// Builtin name, or "file:<path>".
FiniteGroup load_group(std::string_view source, int max_order = kMaxGroupOrder);

}  // namespace stickel

#endif  // STICKEL_GROUP_HPP
