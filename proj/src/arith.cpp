#include "stickel/arith.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

namespace stickel {

int64_t gcd(int64_t a, int64_t b) { return std::gcd(a, b); }

int64_t lcm(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

int64_t mod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int64_t euler_phi(int64_t n) {
  int64_t result = n;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int64_t pow_mod(int64_t base, int64_t exp, int64_t m) {
  if (m == 1) return 0;
  __int128 result = 1;
  __int128 b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<int64_t>(result);
}

int64_t inverse_mod(int64_t a, int64_t m) {
  int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    int64_t quotient = old_r / r;
    int64_t tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1 && m != 1) {
    throw DomainError("inverse_mod: " + std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  return mod(old_s, m);
}

int64_t multiplicative_order(int64_t a, int64_t m) {
  if (m == 1) return 1;
  if (gcd(mod(a, m), m) != 1) {
    throw DomainError("multiplicative_order: " + std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  }
  int64_t x = mod(a, m);
  int64_t order = 1;
  while (x != 1) {
    x = static_cast<int64_t>(static_cast<__int128>(x) * mod(a, m) % m);
    ++order;
  }
  return order;
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

bool is_prime_power(int64_t n) {
  if (n < 2) return false;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1;
  }
  return true;
}

std::vector<int64_t> divisors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string token(text.substr(begin, end - begin));
  if (token.empty()) throw ParseError("empty rational");
  size_t slash = token.find('/');
  auto valid_integer = [](const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  std::string num = token.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : token.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational '" + token + "'");
  }
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in '" + token + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

bool is_integral(const Rational& x) { return x.get_den() == 1; }

Integer to_integer(const Rational& x) {
  if (!is_integral(x)) throw DomainError("rational " + x.get_str() + " is not an integer");
  return x.get_num();
}

Rational fractional_part(const Rational& x) {
  Integer floor_value;
  mpz_fdiv_q(floor_value.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rational(floor_value);
}

}  // namespace stickel
