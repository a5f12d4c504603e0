#ifndef STICKEL_STICKELBERGER_HPP
#define STICKEL_STICKELBERGER_HPP

#include <utility>
#include <vector>

#include "stickel/characters.hpp"
#include "stickel/local_field.hpp"

namespace stickel {

/// <chi, g>: restriction to <g> extended Q-linearly from <xi_g^a, g> = a/|g|,
/// i.e. sum_j a_j j / |g|.
Rational stick_pair(const VirtualCharacter& chi, int g);

/// Xi(s) for |s| = m as multiplicities (0, 1/m, ..., (m-1)/m) over xi_s^j.
std::vector<Rational> xi_element(int64_t m);

/// (chi, Ind_{<s>}^G Xi(s))_G
Rational stick_pair_via_induction(const VirtualCharacter& chi, int s);

/// An element sum_g c_g g of QG.
class GroupRingQ {
 public:
  GroupRingQ(GroupPtr group, std::vector<Rational> coefficients);

  const GroupPtr& group() const { return group_; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  const Rational& coefficient(int g) const { return coefficients_[g]; }
  bool is_central() const;
  bool is_integral() const;
  /// Common coefficient on each class; throws DomainError unless central.
  std::vector<Rational> class_coefficients() const;
  /// First (element, element) pair in a class with different coefficients.
  std::optional<std::pair<int, int>> centrality_witness() const;

 private:
  GroupPtr group_;
  std::vector<Rational> coefficients_;
};

/// Theta(chi) = sum_g <chi, g> g, computed element by element.
GroupRingQ theta_map(const VirtualCharacter& chi);

/// (<chi_1, s>, ..., <chi_r, s>) over the rows of the table.
std::vector<Rational> class_fingerprint(const TablePtr& table, int s);

/// (<chi^k, g>, <chi, g^k>) with chi^k the value-wise Galois twist.
std::pair<Rational, Rational> galois_twist_pair_check(const VirtualCharacter& chi, int g, int64_t k);

/// A function on conjugacy classes with LocalElement values, constant on the
/// orbits of c -> c^q. The orbit condition is checked on classes whose element
/// order is coprime to q.
class LambdaFunction {
 public:
  LambdaFunction(GroupPtr group, int64_t q, std::vector<LocalElement> values);

  const GroupPtr& group() const { return group_; }
  int64_t q() const { return q_; }
  const std::vector<LocalElement>& values() const { return values_; }
  const LocalElement& operator()(int cls) const { return values_[cls]; }

 private:
  GroupPtr group_;
  int64_t q_;
  std::vector<LocalElement> values_;
};

/// f_{q,s}: w on c(s) when s != 1, the constant 1 elsewhere. Requires s in Sigma_q(G).
LambdaFunction f_element(const GroupPtr& group, int64_t q, int s, Strictness strictness = Strictness::strict);

/// f(Theta(alpha)) = prod_c f(c)^{n_c}, n_c the coefficient of Theta(alpha) on
/// class c. Requires alpha in A_G.
LocalElement theta_transpose(const LambdaFunction& f, const std::vector<Integer>& alpha, const AGLattice& lattice);

}  // namespace stickel

#endif  // STICKEL_STICKELBERGER_HPP
