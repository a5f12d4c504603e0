#ifndef STICKEL_ARITH_HPP
#define STICKEL_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stickel {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an operation's documented precondition does not hold.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by the text parsers.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int64_t gcd(int64_t a, int64_t b);
int64_t lcm(int64_t a, int64_t b);
/// Least non-negative residue of a modulo m (m > 0).
int64_t mod(int64_t a, int64_t m);
int64_t euler_phi(int64_t n);
int64_t pow_mod(int64_t base, int64_t exp, int64_t m);
/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
int64_t inverse_mod(int64_t a, int64_t m);
/// Multiplicative order of a modulo m (gcd(a, m) = 1 required; order mod 1 is 1).
int64_t multiplicative_order(int64_t a, int64_t m);
bool is_prime(int64_t n);
bool is_prime_power(int64_t n);
std::vector<int64_t> divisors(int64_t n);

/// num/den in lowest terms (den != 0).
Rational ratio(const Integer& num, const Integer& den);
inline Rational ratio(long num, long den) { return ratio(Integer(num), Integer(den)); }

/// Rational in lowest terms as "p" or "p/q".
std::string to_string(const Rational& x);
/// Accepts "p", "-p", "p/q" with optional surrounding blanks.
Rational parse_rational(std::string_view text);

/// Integer value of x; throws DomainError when x is not integral.
Integer to_integer(const Rational& x);
bool is_integral(const Rational& x);
/// Fractional part in [0, 1).
Rational fractional_part(const Rational& x);

}  // namespace stickel

#endif  // STICKEL_ARITH_HPP
