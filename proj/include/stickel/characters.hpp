#ifndef STICKEL_CHARACTERS_HPP
#define STICKEL_CHARACTERS_HPP

#include <vector>

#include "stickel/character_table.hpp"
#include "stickel/integer_matrix.hpp"

namespace stickel {

/// A Q-linear combination of irreducible characters. Coordinates over Irr(G)
/// are authoritative; class values are derived once on construction.
class VirtualCharacter {
 public:
  VirtualCharacter(TablePtr table, std::vector<Rational> coords);

  static VirtualCharacter zero(TablePtr table);
  static VirtualCharacter irreducible(TablePtr table, int index);
  static VirtualCharacter from_integers(TablePtr table, const std::vector<long>& coords);
  /// Class function given by its values; coordinates are recovered by inner
  /// products. Throws DomainError when the values leave the Q-span of Irr(G).
  static VirtualCharacter from_values(TablePtr table, const std::vector<Cyclotomic>& values);

  const TablePtr& table() const { return table_; }
  const FiniteGroup& group() const { return *table_->group(); }
  const std::vector<Rational>& coords() const { return coords_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& class_value(int cls) const { return values_[cls]; }
  const Cyclotomic& operator()(int g) const { return values_[group().class_of(g)]; }

  Rational degree() const;
  /// True for elements of R_G (integer coordinates).
  bool is_integral() const;
  std::vector<Integer> integer_coords() const;

  /// Value-wise galois_act(k, .); k must be coprime to exp(G).
  VirtualCharacter galois_twist(int64_t k) const;

  VirtualCharacter operator-() const;
  friend VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b);
  friend VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b);
  friend VirtualCharacter operator*(const Rational& c, const VirtualCharacter& a);
  friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) { return a.coords_ == b.coords_; }

 private:
  TablePtr table_;
  std::vector<Rational> coords_;
  std::vector<Cyclotomic> values_;
};

/// (1/|G|) sum_g chi(g) conj(psi(g)). Throws DomainError on a group mismatch.
Rational inner_product(const VirtualCharacter& chi, const VirtualCharacter& psi);

/// Same inner product on raw class functions of g (class-indexed values).
Cyclotomic class_function_inner_product(const FiniteGroup& g, const std::vector<Cyclotomic>& a,
                                        const std::vector<Cyclotomic>& b);

/// Multiplicities (a_0, ..., a_{m-1}) of chi restricted to <s> over the
/// characters xi_s^j, where xi_s(s^i) = zeta_m^i and m = |s|.
std::vector<Rational> restrict_to_cyclic(const VirtualCharacter& chi, int s);

/// Class values of sum_j eta[j] xi_s^j on s^0, ..., s^{m-1}.
std::vector<Cyclotomic> cyclic_character_values(const std::vector<Rational>& eta, int64_t m);

/// Induction of sum_j eta[j] xi_s^j from <s> to G, by the Frobenius formula.
VirtualCharacter induce_from_cyclic(const std::vector<Rational>& eta, int s, const TablePtr& table);

/// Inner product on <s> of two multiplicity vectors over xi_s^j.
Rational cyclic_inner_product(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// A linear character of G, recorded as exponents: value at class c is zeta_e^{k_c}.
struct AbelianCharacter {
  int64_t exponent = 1;
  std::vector<int64_t> class_exponents;

  Cyclotomic value(int cls) const { return Cyclotomic::zeta(exponent, class_exponents[cls]); }
  bool is_trivial() const;
  friend AbelianCharacter operator*(const AbelianCharacter& a, const AbelianCharacter& b);
  friend bool operator==(const AbelianCharacter& a, const AbelianCharacter& b) = default;
};

/// det(chi)(g) = zeta_{|g|}^{sum_j j a_j} from the restriction multiplicities.
/// Requires integer coordinates.
AbelianCharacter det_character(const VirtualCharacter& chi);

/// The kernel of det on the coordinate lattice Z^{|Irr(G)|}.
class AGLattice {
 public:
  explicit AGLattice(TablePtr table);

  const TablePtr& table() const { return table_; }
  /// Hermite-reduced basis, one row per generator.
  const IntMatrix& basis() const { return basis_; }
  const Integer& index() const { return index_; }
  /// Classes x irreducibles matrix of det exponents (mod exp G).
  const IntMatrix& det_matrix() const { return det_matrix_; }

  bool contains(const std::vector<Integer>& coords) const;
  bool contains(const VirtualCharacter& chi) const;

 private:
  TablePtr table_;
  IntMatrix det_matrix_;
  IntMatrix basis_;
  Integer index_;
};

inline AGLattice ag_kernel(const TablePtr& table) { return AGLattice(table); }

}  // namespace stickel

#endif  // STICKEL_CHARACTERS_HPP
