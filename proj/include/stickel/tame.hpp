#ifndef STICKEL_TAME_HPP
#define STICKEL_TAME_HPP

#include <optional>
#include <string>
#include <vector>

#include "stickel/group.hpp"

namespace stickel {

/// The finite quotient of the tame Galois group generated by sigma (order M)
/// and phi (order N) with phi sigma phi^{-1} = sigma^q. The word sigma^m phi^n
/// is the pair (m, n), stored at index m + M n, and
///   (m1, n1)(m2, n2) = (m1 + m2 q^{n1} mod M, n1 + n2 mod N).
class TameQuotient {
 public:
  /// Requires q >= 2, M, N >= 1 and q^N = 1 (mod M).
  TameQuotient(int64_t q, int64_t M, int64_t N);

  int64_t q() const { return q_; }
  int64_t M() const { return M_; }
  int64_t N() const { return N_; }
  int order() const { return static_cast<int>(M_ * N_); }

  int index(int64_t m, int64_t n) const { return static_cast<int>(mod(m, M_) + M_ * mod(n, N_)); }
  int64_t sigma_exponent(int w) const { return w % M_; }
  int64_t phi_exponent(int w) const { return w / M_; }
  int mul(int a, int b) const;
  std::string label(int w) const;

  /// The Cayley table as a validated FiniteGroup (axioms checked on construction).
  FiniteGroup to_group() const;

 private:
  int64_t q_, M_, N_;
  std::vector<int64_t> q_powers_;  // q^n mod M
};

struct FactorisationCheck {
  std::string name;  // homomorphism, unramified_homomorphism, factorisation, cocycle
  bool passed = true;
  long cases = 0;
  std::optional<std::pair<int, int>> counterexample;  // word indices (second = -1 for pointwise checks)
};

/// pi(sigma^m phi^n) = s^m t^n, pi_r = s^m, pi_nr = t^n, with every contract
/// checked over all words or word pairs.
struct Factorisation {
  int64_t q, M, N;
  int s, t;
  std::vector<int> pi, pi_r, pi_nr;
  std::vector<FactorisationCheck> checks;
  bool all_passed() const;
};

/// Throws DomainError naming (s, t) when s^M != e, t^N != e or t s t^{-1} != s^q.
Factorisation factorise_hom(const TameQuotient& quotient, const FiniteGroup& g, int s, int t);

/// (|s| - 1) |G| / |s|
Rational disc_valuation(const FiniteGroup& g, int s);

}  // namespace stickel

#endif  // STICKEL_TAME_HPP
