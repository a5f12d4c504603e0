#include "stickel/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace stickel {
namespace {

// Per-level reduction data: Phi_n and the canonical coordinates of zeta_n^i
// for every 0 <= i < n (all integral because Phi_n is monic).
struct LevelData {
  int64_t n = 1;
  int64_t degree = 1;
  std::vector<int64_t> poly;
  std::vector<std::vector<int64_t>> powers;
};

std::vector<int64_t> poly_mul(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
  std::vector<int64_t> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact division of x^n - 1 by the product of Phi_d over the proper divisors.
std::vector<int64_t> compute_cyclotomic_polynomial(int64_t n) {
  std::vector<int64_t> divisor_product{1};
  for (int64_t d = 1; d < n; ++d) {
    if (n % d == 0) divisor_product = poly_mul(divisor_product, cyclotomic_polynomial(d));
  }
  std::vector<int64_t> rem(static_cast<size_t>(n) + 1, 0);
  rem[0] = -1;
  rem[static_cast<size_t>(n)] = 1;
  const size_t dd = divisor_product.size() - 1;
  std::vector<int64_t> quotient(rem.size() - dd, 0);
  for (size_t i = rem.size(); i-- > dd;) {
    int64_t c = rem[i];  // divisor_product is monic
    quotient[i - dd] = c;
    for (size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * divisor_product[j];
  }
  return quotient;
}

std::mutex& level_mutex() {
  static std::mutex m;
  return m;
}

const LevelData& level_data(int64_t n) {
  static std::map<int64_t, std::unique_ptr<LevelData>> cache;
  {
    std::lock_guard<std::mutex> lock(level_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto data = std::make_unique<LevelData>();
  data->n = n;
  data->poly = cyclotomic_polynomial(n);
  data->degree = static_cast<int64_t>(data->poly.size()) - 1;
  const size_t deg = static_cast<size_t>(data->degree);
  data->powers.assign(static_cast<size_t>(n), std::vector<int64_t>(deg, 0));
  std::vector<int64_t> current(deg, 0);
  current[0] = 1;
  for (int64_t i = 0; i < n; ++i) {
    data->powers[static_cast<size_t>(i)] = current;
    // multiply by x and reduce with x^deg = -sum poly_k x^k
    int64_t top = current[deg - 1];
    for (size_t k = deg - 1; k > 0; --k) current[k] = current[k - 1] - top * data->poly[k];
    current[0] = -top * data->poly[0];
  }
  std::lock_guard<std::mutex> lock(level_mutex());
  auto [it, inserted] = cache.emplace(n, std::move(data));
  return *it->second;
}

// Reduces sum_i acc[i] zeta_n^i (0 <= i < n) to canonical coordinates.
std::vector<Rational> reduce(const LevelData& data, const std::vector<Rational>& acc) {
  std::vector<Rational> out(static_cast<size_t>(data.degree));
  for (size_t i = 0; i < acc.size(); ++i) {
    if (sgn(acc[i]) == 0) continue;
    const auto& row = data.powers[i];
    for (size_t k = 0; k < row.size(); ++k) {
      if (row[k] != 0) out[k] += acc[i] * row[k];
    }
  }
  return out;
}

void require_positive_level(int64_t n) {
  if (n < 1) throw DomainError("cyclotomic level must be positive, got " + std::to_string(n));
}

}  // namespace

const std::vector<int64_t>& cyclotomic_polynomial(int64_t n) {
  require_positive_level(n);
  static std::map<int64_t, std::vector<int64_t>> cache;
  static std::mutex m;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<int64_t> poly = n == 1 ? std::vector<int64_t>{-1, 1} : compute_cyclotomic_polynomial(n);
  std::lock_guard<std::mutex> lock(m);
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic() : level_(1), coeffs_(1) {}
Cyclotomic::Cyclotomic(long value) : level_(1), coeffs_{Rational(value)} {}
Cyclotomic::Cyclotomic(const Integer& value) : level_(1), coeffs_{Rational(value)} {}
Cyclotomic::Cyclotomic(const Rational& value) : level_(1), coeffs_{value} {}

Cyclotomic::Cyclotomic(int64_t level, std::vector<Rational> coeffs) : level_(level), coeffs_(std::move(coeffs)) {
  check_invariants();
}

void Cyclotomic::check_invariants() const {
  require_positive_level(level_);
  if (static_cast<int64_t>(coeffs_.size()) != euler_phi(level_)) {
    throw DomainError("cyclotomic level " + std::to_string(level_) + " needs " + std::to_string(euler_phi(level_)) +
                      " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

Cyclotomic Cyclotomic::zeta(int64_t n, int64_t k) {
  require_positive_level(n);
  const LevelData& data = level_data(n);
  const auto& row = data.powers[static_cast<size_t>(mod(k, n))];
  std::vector<Rational> coeffs(row.begin(), row.end());
  return Cyclotomic(n, std::move(coeffs));
}

Cyclotomic Cyclotomic::from_root_weights(int64_t n, const std::vector<Rational>& weights) {
  require_positive_level(n);
  if (static_cast<int64_t>(weights.size()) > n) throw DomainError("from_root_weights: more weights than roots");
  return Cyclotomic(n, reduce(level_data(n), weights));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const {
  auto r = rational();
  return r && *r == 1;
}

std::optional<Rational> Cyclotomic::rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return std::nullopt;
  }
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.level_ != level_) {
    int64_t common = lcm(level_, rhs.level_);
    if (common != level_) *this = raise(*this, common);
    if (common != rhs.level_) return *this += raise(rhs, common);
  }
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (auto r = rhs.rational()) {
    Cyclotomic out = lhs;
    if (rhs.level_ != lhs.level_ && lcm(lhs.level_, rhs.level_) != lhs.level_) {
      out = raise(out, lcm(lhs.level_, rhs.level_));
    }
    for (auto& c : out.coeffs_) c *= *r;
    return out;
  }
  if (lhs.rational()) return rhs * lhs;
  const int64_t n = lcm(lhs.level_, rhs.level_);
  const Cyclotomic a = lhs.level_ == n ? lhs : raise(lhs, n);
  const Cyclotomic b = rhs.level_ == n ? rhs : raise(rhs, n);
  std::vector<Rational> acc(static_cast<size_t>(n));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      acc[(i + j) % static_cast<size_t>(n)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Cyclotomic(n, reduce(level_data(n), acc));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this = *this * rhs.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.level_ == b.level_) return a.coeffs_ == b.coeffs_;
  const int64_t n = lcm(a.level_, b.level_);
  return raise(a, n).coeffs_ == raise(b, n).coeffs_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero cyclotomic");
  if (auto r = rational()) return Cyclotomic(Rational(1) / *r);
  // x^{-1} = (prod of the other conjugates) / norm
  Cyclotomic others(1L);
  for (int64_t k = 2; k < level_; ++k) {
    if (gcd(k, level_) == 1) others *= galois_act(k, *this);
  }
  Cyclotomic norm = *this * others;
  auto n = norm.rational();
  if (!n) throw std::logic_error("cyclotomic norm is not rational");
  Cyclotomic out = others;
  if (out.level_ != level_) out = raise(out, level_);
  for (auto& c : out.coeffs_) c /= *n;
  return out;
}

Cyclotomic Cyclotomic::pow(int64_t e) const {
  Cyclotomic base = e < 0 ? inverse() : *this;
  uint64_t k = e < 0 ? static_cast<uint64_t>(-e) : static_cast<uint64_t>(e);
  Cyclotomic result(1L);
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Cyclotomic raise(const Cyclotomic& x, int64_t target_level) {
  require_positive_level(target_level);
  if (target_level % x.level_ != 0) {
    throw DomainError("cannot raise level " + std::to_string(x.level_) + " to " + std::to_string(target_level) +
                      ": not a multiple");
  }
  if (target_level == x.level_) return x;
  const int64_t scale = target_level / x.level_;
  std::vector<Rational> acc(static_cast<size_t>(target_level));
  for (size_t i = 0; i < x.coeffs_.size(); ++i) acc[i * static_cast<size_t>(scale)] = x.coeffs_[i];
  return Cyclotomic(target_level, reduce(level_data(target_level), acc));
}

Cyclotomic galois_act(int64_t k, const Cyclotomic& x) {
  const int64_t n = x.level_;
  if (gcd(mod(k, n), n) != 1) {
    throw DomainError("galois_act: k=" + std::to_string(k) + " is not coprime to level " + std::to_string(n));
  }
  if (n <= 2) return x;
  std::vector<Rational> acc(static_cast<size_t>(n));
  for (size_t i = 0; i < x.coeffs_.size(); ++i) {
    acc[static_cast<size_t>(mod(static_cast<int64_t>(i) * k, n))] = x.coeffs_[i];
  }
  return Cyclotomic(n, reduce(level_data(n), acc));
}

std::optional<Cyclotomic> lower(const Cyclotomic& x, int64_t d) {
  require_positive_level(d);
  if (x.level() % d != 0) {
    throw DomainError("cannot lower level " + std::to_string(x.level()) + " to non-divisor " + std::to_string(d));
  }
  if (d == x.level()) return x;
  // Solve sum_k b_k raise(zeta_d^k) = x for b in Q^{phi(d)}; columns are known rows of the power table.
  const LevelData& data = level_data(x.level());
  const size_t rows = x.coeffs().size();
  const size_t cols = static_cast<size_t>(euler_phi(d));
  const size_t step = static_cast<size_t>(x.level() / d);
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (size_t k = 0; k < cols; ++k) {
    const auto& column = data.powers[k * step];
    for (size_t r = 0; r < rows; ++r) m[r][k] = column[r];
  }
  for (size_t r = 0; r < rows; ++r) m[r][cols] = x.coeffs()[r];
  size_t pivot_row = 0;
  std::vector<size_t> pivot_cols;
  for (size_t c = 0; c < cols && pivot_row < rows; ++c) {
    size_t p = pivot_row;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[pivot_row]);
    Rational inv = 1 / m[pivot_row][c];
    for (auto& v : m[pivot_row]) v *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c];
      for (size_t k = c; k <= cols; ++k) m[r][k] -= f * m[pivot_row][k];
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  for (size_t r = pivot_row; r < rows; ++r) {
    if (sgn(m[r][cols]) != 0) return std::nullopt;
  }
  std::vector<Rational> b(cols);
  for (size_t i = 0; i < pivot_cols.size(); ++i) b[pivot_cols[i]] = m[i][cols];
  return Cyclotomic(d, std::move(b));
}

Cyclotomic lower_to_minimal_level(const Cyclotomic& x) {
  for (int64_t d : divisors(x.level())) {
    if (auto y = lower(x, d)) return *y;
  }
  return x;
}

std::strong_ordering compare(const Cyclotomic& a, const Cyclotomic& b) {
  const int64_t n = lcm(a.level(), b.level());
  const Cyclotomic ra = raise(a, n), rb = raise(b, n);
  for (size_t i = 0; i < ra.coeffs().size(); ++i) {
    int c = cmp(ra.coeffs()[i], rb.coeffs()[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  os << "cyclo(" << level_ << ";";
  for (size_t i = 0; i < coeffs_.size(); ++i) os << (i == 0 ? " " : ", ") << coeffs_[i].get_str();
  os << ")";
  return os.str();
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return ParseError("malformed cyclotomic '" + std::string(text) + "': " + why);
  };
  size_t start = text.find_first_not_of(" \t");
  if (start == std::string_view::npos || text.substr(start, 6) != "cyclo(") throw fail("expected 'cyclo('");
  size_t close = text.find_last_of(')');
  if (close == std::string_view::npos || close < start + 6) throw fail("missing ')'");
  if (text.find_first_not_of(" \t\r\n", close + 1) != std::string_view::npos) throw fail("trailing characters");
  std::string_view body = text.substr(start + 6, close - start - 6);
  size_t semi = body.find(';');
  if (semi == std::string_view::npos) throw fail("missing ';'");
  Rational level_value = parse_rational(body.substr(0, semi));
  if (!is_integral(level_value) || level_value < 1 || level_value > 1000000) throw fail("bad level");
  const int64_t level = level_value.get_num().get_si();
  std::vector<Rational> coeffs;
  std::string_view rest = body.substr(semi + 1);
  while (true) {
    size_t comma = rest.find(',');
    coeffs.push_back(parse_rational(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (static_cast<int64_t>(coeffs.size()) != euler_phi(level)) throw fail("wrong number of coefficients");
  return Cyclotomic(level, std::move(coeffs));
}

}  // namespace stickel
