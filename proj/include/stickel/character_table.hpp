#ifndef STICKEL_CHARACTER_TABLE_HPP
#define STICKEL_CHARACTER_TABLE_HPP

#include <memory>
#include <string>
#include <vector>

#include "stickel/cyclotomic.hpp"
#include "stickel/group.hpp"

namespace stickel {

/// Irreducible characters of a finite group, one row per character and one
/// column per conjugacy class (in the group's class order). Values are stored
/// at level exp(G). Rows are ordered by degree, then by value tuple in
/// decreasing lexicographic order, so the trivial character comes first.
class CharacterTable {
 public:
  /// Wraps rows without validation; see validate_table().
  CharacterTable(GroupPtr group, std::vector<std::vector<Cyclotomic>> rows);

  const GroupPtr& group() const { return group_; }
  int size() const { return static_cast<int>(rows_.size()); }
  int exponent() const { return group_->exponent(); }
  const std::vector<std::vector<Cyclotomic>>& rows() const { return rows_; }
  const std::vector<Cyclotomic>& row(int i) const { return rows_[i]; }
  const Cyclotomic& value(int irr, int cls) const { return rows_[irr][cls]; }
  /// First-column value as an integer (throws when not a positive integer).
  int degree(int irr) const;

  friend bool operator==(const CharacterTable& a, const CharacterTable& b) { return a.rows_ == b.rows_; }

 private:
  GroupPtr group_;
  std::vector<std::vector<Cyclotomic>> rows_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

enum class TableMethod { dixon, burnside };

/// Burnside-Dixon: common eigenvectors of the class matrices over F_p with
/// p = 1 (mod exp G), lifted to exact cyclotomic values through eigenvalue
/// multiplicities.
CharacterTable dixon_character_table(const GroupPtr& g, int max_order = kMaxGroupOrder);

/// Exact route over Q(zeta_e): eigenvalues of the class matrices are found by
/// enumerating every candidate h * (sum of d roots of unity) / d and testing it
/// against the characteristic polynomial. Exponential in the group order, so
/// bounded by `max_order` (default 24).
CharacterTable burnside_character_table(const GroupPtr& g, int max_order = 24);

CharacterTable character_table(const GroupPtr& g, TableMethod method = TableMethod::dixon,
                               int max_order = kMaxGroupOrder);

/// Class structure constants c[j][k][l] = #{(x, y) in C_j x C_k : xy = rep(C_l)}.
std::vector<std::vector<std::vector<int64_t>>> class_structure_constants(const FiniteGroup& g);

/// Sorts rows into the canonical order used by CharacterTable.
void sort_character_rows(std::vector<std::vector<Cyclotomic>>& rows);

struct TableDefect {
  std::string check;   // row_count, field, degree, row_orthogonality, column_orthogonality, degree_sum
  std::string detail;  // human-readable counterexample
};

/// Exact validity checks; an empty result means the table is a valid character table shape.
std::vector<TableDefect> validate_table(const CharacterTable& t);

}  // namespace stickel

#endif  // STICKEL_CHARACTER_TABLE_HPP
