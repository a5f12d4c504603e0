#ifndef STICKEL_CYCLOTOMIC_HPP
#define STICKEL_CYCLOTOMIC_HPP

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "stickel/arith.hpp"

namespace stickel {

/// An element of Q(zeta_N) stored as sum_i c_i zeta_N^i over 0 <= i < phi(N),
/// reduced modulo the N-th cyclotomic polynomial.
///
/// All roots of unity are taken from one compatible system: zeta_{mn}^m = zeta_n.
/// Binary operations work at the lcm of the operand levels and never lower the
/// result; use lower() explicitly. Equality compares field elements, so values
/// expressed at different levels compare equal when they coincide after raising.
class Cyclotomic {
 public:
  Cyclotomic();  // zero at level 1
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Integer& value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// Builds an element from a full coefficient vector of length phi(level).
  Cyclotomic(int64_t level, std::vector<Rational> coeffs);

  /// zeta_n^k at level n.
  static Cyclotomic zeta(int64_t n, int64_t k = 1);

  /// sum_i weights[i] * zeta_n^i for 0 <= i < weights.size() (weights.size() <= n).
  static Cyclotomic from_root_weights(int64_t n, const std::vector<Rational>& weights);

  int64_t level() const { return level_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// The rational value when the element lies in Q.
  std::optional<Rational> rational() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend Cyclotomic operator/(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs /= rhs; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Multiplicative inverse; throws DomainError on zero.
  Cyclotomic inverse() const;
  /// Integer power; negative exponents invert.
  Cyclotomic pow(int64_t e) const;
  /// Complex conjugation, i.e. the automorphism zeta -> zeta^{-1}.
  Cyclotomic conj() const { return galois_act(-1, *this); }

  friend Cyclotomic raise(const Cyclotomic& x, int64_t target_level);
  friend Cyclotomic galois_act(int64_t k, const Cyclotomic& x);

  /// `cyclo(N; c_0, ..., c_{phi(N)-1})`
  std::string to_string() const;
  static Cyclotomic parse(std::string_view text);

 private:
  void check_invariants() const;

  int64_t level_ = 1;
  std::vector<Rational> coeffs_;
};

/// The same field element expressed at level `target_level`, a multiple of x.level().
Cyclotomic raise(const Cyclotomic& x, int64_t target_level);

/// The element expressed at level d (d dividing x.level()), or nullopt when x
/// does not lie in Q(zeta_d).
std::optional<Cyclotomic> lower(const Cyclotomic& x, int64_t d);

/// The smallest level d dividing x.level() such that x lies in Q(zeta_d).
Cyclotomic lower_to_minimal_level(const Cyclotomic& x);

/// Automorphism zeta_N -> zeta_N^k; requires gcd(k, N) = 1 for N = x.level().
Cyclotomic galois_act(int64_t k, const Cyclotomic& x);

/// Lexicographic comparison of coefficient vectors at the common level.
std::strong_ordering compare(const Cyclotomic& a, const Cyclotomic& b);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<int64_t>& cyclotomic_polynomial(int64_t n);

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

}  // namespace stickel

#endif  // STICKEL_CYCLOTOMIC_HPP
