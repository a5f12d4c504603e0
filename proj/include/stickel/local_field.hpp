#ifndef STICKEL_LOCAL_FIELD_HPP
#define STICKEL_LOCAL_FIELD_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stickel/characters.hpp"
#include "stickel/cyclotomic.hpp"
#include "stickel/group.hpp"

namespace stickel {

/// A finite formal sum  sum_a c_a w^a  with w a formal uniformiser carrying a
/// compatible system of roots w^{1/m}, exponents a rational and coefficients
/// cyclotomic. q is the residue field order. Zero coefficients are pruned, so
/// equality is termwise.
///
/// Exponents may be negative: determinants of virtual characters need
/// inverses of monomials. Only monomials c w^a are invertible.
class LocalElement {
 public:
  explicit LocalElement(int64_t q);  // zero
  LocalElement(int64_t q, const Cyclotomic& constant);

  /// c w^a
  static LocalElement monomial(int64_t q, const Rational& exponent, const Cyclotomic& c = Cyclotomic(1L));

  int64_t q() const { return q_; }
  const std::map<Rational, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Exponent a when the element is exactly w^a.
  std::optional<Rational> pure_power() const;
  /// The single exponent of a monomial.
  std::optional<Rational> monomial_exponent() const;

  LocalElement& operator+=(const LocalElement& rhs);
  LocalElement& operator-=(const LocalElement& rhs);
  friend LocalElement operator+(LocalElement a, const LocalElement& b) { return a += b; }
  friend LocalElement operator-(LocalElement a, const LocalElement& b) { return a -= b; }
  friend LocalElement operator*(const LocalElement& a, const LocalElement& b);
  friend LocalElement operator*(const Cyclotomic& c, const LocalElement& a);
  friend bool operator==(const LocalElement& a, const LocalElement& b);

  /// Negative exponents are only defined for monomials (DomainError otherwise).
  LocalElement pow(const Integer& e) const;

  /// local(q; a1:cyclo(...), a2:cyclo(...)) with exponents in increasing order.
  std::string to_string() const;
  static LocalElement parse(std::string_view text);

 private:
  void add_term(const Rational& exponent, const Cyclotomic& c);
  void check_same_q(const LocalElement& other) const;

  int64_t q_;
  std::map<Rational, Cyclotomic> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LocalElement& x) { return os << x.to_string(); }

/// Throws DomainError unless every exponent denominator and every coefficient
/// level (after lowering) is coprime to q.
void require_tame(const LocalElement& x);

/// sigma: w^{1/m} -> zeta_m w^{1/m}, fixing roots of unity. Strict mode first runs require_tame.
LocalElement sigma_op(const LocalElement& x, Strictness strictness = Strictness::strict);
/// sigma^k for any integer k.
LocalElement sigma_pow(const LocalElement& x, int64_t k, Strictness strictness = Strictness::strict);
/// phi: zeta_m -> zeta_m^q, fixing every w^{1/m}. Coefficient levels must be
/// coprime to q in either mode; strict mode also checks exponent denominators.
LocalElement phi_op(const LocalElement& x, Strictness strictness = Strictness::strict);
LocalElement phi_inverse_op(const LocalElement& x, Strictness strictness = Strictness::strict);

/// (1/m) sum_{i<m} w^{i/m}; requires gcd(m, q) = 1.
LocalElement beta(int64_t m, int64_t q);

/// A group-algebra element sum_g r_g g with LocalElement coefficients.
class Resolvend {
 public:
  Resolvend(GroupPtr group, int64_t q);  // zero
  Resolvend(GroupPtr group, std::vector<LocalElement> coefficients);

  /// r_G(a) = sum_g a(g) g^{-1}
  static Resolvend from_function(GroupPtr group, const std::vector<LocalElement>& values);

  const GroupPtr& group() const { return group_; }
  int64_t q() const { return q_; }
  const LocalElement& coefficient(int g) const { return coefficients_[g]; }
  const std::vector<LocalElement>& coefficients() const { return coefficients_; }
  std::vector<int> support() const;

  /// g^{-1} r g
  Resolvend conjugated_by(int g) const;

  friend Resolvend operator*(const Resolvend& a, const Resolvend& b);
  friend bool operator==(const Resolvend& a, const Resolvend& b);

 private:
  GroupPtr group_;
  int64_t q_;
  std::vector<LocalElement> coefficients_;
};

/// phi_{q,s}: s^i -> sigma^i(beta_{|s|}), zero off <s>, with its resolvend.
struct PhiMap {
  int s;
  std::vector<LocalElement> values;
  Resolvend resolvend;
};

/// Requires s in Sigma_q(G).
PhiMap phi_map(const GroupPtr& group, int64_t q, int s, Strictness strictness = Strictness::strict);

/// Det of a resolvend supported in a cyclic subgroup <s>, evaluated at chi:
///   prod_j (sum_k r_{s^k} zeta_m^{jk})^{a_j},  (a_j) = restrict_to_cyclic(chi, s).
/// When `s` is omitted, the least element index whose cyclic subgroup contains
/// the support is used; the value does not depend on that choice.
LocalElement det_resolvend_cyclic(const Resolvend& r, const VirtualCharacter& chi, std::optional<int> s = std::nullopt);

/// True iff the Det values of the phi resolvends of s1 and s2 agree on every irreducible.
bool det_distinguishes_classes(const TablePtr& table, int64_t q, int s1, int s2,
                               Strictness strictness = Strictness::strict);

}  // namespace stickel

#endif  // STICKEL_LOCAL_FIELD_HPP
