#include "stickel/local_field.hpp"

#include <algorithm>
#include <cctype>

namespace stickel {
namespace {

int64_t small(const Integer& x) {
  if (!x.fits_slong_p()) throw DomainError("integer out of range: " + x.get_str());
  return x.get_si();
}

// zeta_b^a for the exponent a/b in lowest terms.
Cyclotomic root_for_exponent(const Rational& exponent, int64_t k) {
  const int64_t b = small(exponent.get_den());
  const int64_t a = small(exponent.get_num());
  if (b == 1) return Cyclotomic(1L);
  return Cyclotomic::zeta(b, mod(mod(a, b) * mod(k, b), b));
}

Cyclotomic act_on_coefficient(int64_t k, const Cyclotomic& c) {
  if (gcd(k, c.level()) == 1) return galois_act(k, c);
  Cyclotomic lowered = lower_to_minimal_level(c);
  if (gcd(k, lowered.level()) != 1) {
    throw DomainError("coefficient " + lowered.to_string() + " has level sharing a factor with q = " +
                      std::to_string(k));
  }
  return galois_act(k, lowered);
}

}  // namespace

LocalElement::LocalElement(int64_t q) : q_(q) {
  if (q < 2) throw DomainError("residue order q must be at least 2");
}

LocalElement::LocalElement(int64_t q, const Cyclotomic& constant) : LocalElement(q) { add_term(0, constant); }

LocalElement LocalElement::monomial(int64_t q, const Rational& exponent, const Cyclotomic& c) {
  LocalElement out(q);
  out.add_term(exponent, c);
  return out;
}

void LocalElement::add_term(const Rational& exponent, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void LocalElement::check_same_q(const LocalElement& other) const {
  if (q_ != other.q_) throw DomainError("local elements over different residue orders");
}

bool LocalElement::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

std::optional<Rational> LocalElement::pure_power() const {
  if (terms_.size() != 1 || !(terms_.begin()->second == Cyclotomic(1L))) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<Rational> LocalElement::monomial_exponent() const {
  if (terms_.size() != 1) return std::nullopt;
  return terms_.begin()->first;
}

LocalElement& LocalElement::operator+=(const LocalElement& rhs) {
  check_same_q(rhs);
  for (const auto& [a, c] : rhs.terms_) add_term(a, c);
  return *this;
}

LocalElement& LocalElement::operator-=(const LocalElement& rhs) {
  check_same_q(rhs);
  for (const auto& [a, c] : rhs.terms_) add_term(a, -c);
  return *this;
}

LocalElement operator*(const LocalElement& x, const LocalElement& y) {
  x.check_same_q(y);
  LocalElement out(x.q_);
  for (const auto& [a, c] : x.terms_) {
    for (const auto& [b, d] : y.terms_) out.add_term(a + b, c * d);
  }
  return out;
}

LocalElement operator*(const Cyclotomic& c, const LocalElement& x) {
  LocalElement out(x.q_);
  for (const auto& [a, d] : x.terms_) out.add_term(a, c * d);
  return out;
}

bool operator==(const LocalElement& x, const LocalElement& y) {
  if (x.q_ != y.q_ || x.terms_.size() != y.terms_.size()) return false;
  auto it = y.terms_.begin();
  for (const auto& [a, c] : x.terms_) {
    if (a != it->first || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

LocalElement LocalElement::pow(const Integer& e) const {
  if (e < 0) {
    auto exponent = monomial_exponent();
    if (!exponent) throw DomainError("only monomials are invertible: " + to_string());
    const Cyclotomic c = terms_.begin()->second.pow(small(e));
    return monomial(q_, *exponent * Rational(e), c);
  }
  if (auto exponent = monomial_exponent()) {
    return monomial(q_, *exponent * Rational(e), terms_.begin()->second.pow(small(e)));
  }
  LocalElement result(q_, Cyclotomic(1L));
  LocalElement base = *this;
  Integer k = e;
  while (k > 0) {
    if (k % 2 == 1) result = result * base;
    k /= 2;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string LocalElement::to_string() const {
  std::string out = "local(" + std::to_string(q_) + ";";
  bool first = true;
  for (const auto& [a, c] : terms_) {
    out += first ? " " : ", ";
    first = false;
    out += stickel::to_string(a) + ":" + lower_to_minimal_level(c).to_string();
  }
  return out + ")";
}

LocalElement LocalElement::parse(std::string_view text) {
  auto fail = [&](const std::string& why) { return ParseError("bad local element '" + std::string(text) + "': " + why); };
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.substr(0, 6) != "local(" || s.back() != ')') throw fail("expected local(q; ...)");
  s = s.substr(6, s.size() - 7);
  const size_t semi = s.find(';');
  if (semi == std::string_view::npos) throw fail("missing ';'");
  const Rational q = parse_rational(s.substr(0, semi));
  if (!is_integral(q) || q < 2) throw fail("q must be an integer >= 2");
  LocalElement out(small(q.get_num()));
  std::string_view rest = trim(s.substr(semi + 1));
  while (!rest.empty()) {
    const size_t colon = rest.find(':');
    if (colon == std::string_view::npos) throw fail("missing ':'");
    const Rational exponent = parse_rational(rest.substr(0, colon));
    rest = trim(rest.substr(colon + 1));
    const size_t close = rest.find(')');
    if (close == std::string_view::npos) throw fail("unterminated coefficient");
    const Cyclotomic c = Cyclotomic::parse(rest.substr(0, close + 1));
    if (out.terms_.count(exponent)) throw fail("repeated exponent");
    if (c.is_zero()) throw fail("zero coefficient");
    out.add_term(exponent, c);
    rest = trim(rest.substr(close + 1));
    if (rest.empty()) break;
    if (rest.front() != ',') throw fail("expected ','");
    rest = trim(rest.substr(1));
    if (rest.empty()) throw fail("trailing ','");
  }
  return out;
}

void require_tame(const LocalElement& x) {
  for (const auto& [a, c] : x.terms()) {
    const int64_t b = small(a.get_den());
    if (gcd(b, x.q()) != 1) {
      throw DomainError("wild exponent " + to_string(a) + ": denominator shares a factor with q = " +
                        std::to_string(x.q()));
    }
    if (gcd(c.level(), x.q()) != 1) {
      const Cyclotomic lowered = lower_to_minimal_level(c);
      if (gcd(lowered.level(), x.q()) != 1) {
        throw DomainError("wild coefficient " + lowered.to_string() + ": level shares a factor with q = " +
                          std::to_string(x.q()));
      }
    }
  }
}

LocalElement sigma_pow(const LocalElement& x, int64_t k, Strictness strictness) {
  if (strictness == Strictness::strict) require_tame(x);
  LocalElement out(x.q());
  for (const auto& [a, c] : x.terms()) out += LocalElement::monomial(x.q(), a, root_for_exponent(a, k) * c);
  return out;
}

LocalElement sigma_op(const LocalElement& x, Strictness strictness) { return sigma_pow(x, 1, strictness); }

LocalElement phi_op(const LocalElement& x, Strictness strictness) {
  if (strictness == Strictness::strict) require_tame(x);
  LocalElement out(x.q());
  for (const auto& [a, c] : x.terms()) out += LocalElement::monomial(x.q(), a, act_on_coefficient(x.q(), c));
  return out;
}

LocalElement phi_inverse_op(const LocalElement& x, Strictness strictness) {
  if (strictness == Strictness::strict) require_tame(x);
  LocalElement out(x.q());
  for (const auto& [a, c] : x.terms()) {
    Cyclotomic d = gcd(x.q(), c.level()) == 1 ? c : lower_to_minimal_level(c);
    if (gcd(x.q(), d.level()) != 1) {
      throw DomainError("coefficient " + d.to_string() + " has level sharing a factor with q = " + std::to_string(x.q()));
    }
    const Cyclotomic image = d.level() <= 2 ? d : galois_act(inverse_mod(mod(x.q(), d.level()), d.level()), d);
    out += LocalElement::monomial(x.q(), a, image);
  }
  return out;
}

LocalElement beta(int64_t m, int64_t q) {
  if (m < 1) throw DomainError("beta needs a positive order");
  if (gcd(m, q) != 1) throw DomainError("beta_" + std::to_string(m) + " needs gcd(m, q) = 1, q = " + std::to_string(q));
  LocalElement out(q);
  const Cyclotomic c(ratio(1, m));
  for (int64_t i = 0; i < m; ++i) {
    out += LocalElement::monomial(q, ratio(i, m), c);
  }
  return out;
}

Resolvend::Resolvend(GroupPtr group, int64_t q)
    : group_(std::move(group)), q_(q), coefficients_(group_->order(), LocalElement(q)) {}

Resolvend::Resolvend(GroupPtr group, std::vector<LocalElement> coefficients)
    : group_(std::move(group)), q_(0), coefficients_(std::move(coefficients)) {
  if (static_cast<int>(coefficients_.size()) != group_->order()) throw DomainError("one coefficient per element required");
  q_ = coefficients_.empty() ? 2 : coefficients_[0].q();
  for (const auto& c : coefficients_) {
    if (c.q() != q_) throw DomainError("resolvend coefficients over different residue orders");
  }
}

Resolvend Resolvend::from_function(GroupPtr group, const std::vector<LocalElement>& values) {
  const FiniteGroup& g = *group;
  if (static_cast<int>(values.size()) != g.order()) throw DomainError("one value per element required");
  std::vector<LocalElement> coefficients(values.size(), LocalElement(values.at(0).q()));
  for (int x = 0; x < g.order(); ++x) coefficients[g.inv(x)] = values[x];
  return Resolvend(std::move(group), std::move(coefficients));
}

std::vector<int> Resolvend::support() const {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(coefficients_.size()); ++x) {
    if (!coefficients_[x].is_zero()) out.push_back(x);
  }
  return out;
}

Resolvend Resolvend::conjugated_by(int g) const {
  const FiniteGroup& grp = *group_;
  std::vector<LocalElement> out(coefficients_.size(), LocalElement(q_));
  for (int x = 0; x < grp.order(); ++x) out[grp.conjugate(x, g)] = coefficients_[x];
  return Resolvend(group_, std::move(out));
}

Resolvend operator*(const Resolvend& a, const Resolvend& b) {
  if (a.group_ != b.group_) throw DomainError("resolvends over different groups");
  const FiniteGroup& g = *a.group_;
  std::vector<LocalElement> out(a.coefficients_.size(), LocalElement(a.q_));
  const auto sa = a.support(), sb = b.support();
  for (int x : sa) {
    for (int y : sb) out[g.mul(x, y)] += a.coefficients_[x] * b.coefficients_[y];
  }
  return Resolvend(a.group_, std::move(out));
}

bool operator==(const Resolvend& a, const Resolvend& b) {
  return a.group_ == b.group_ && a.coefficients_ == b.coefficients_;
}

PhiMap phi_map(const GroupPtr& group, int64_t q, int s, Strictness strictness) {
  const FiniteGroup& g = *group;
  const auto sigma = sigma_set(g, q, strictness);
  if (!std::binary_search(sigma.begin(), sigma.end(), s)) {
    throw DomainError("element " + g.label(s) + " is not in Sigma_" + std::to_string(q));
  }
  const int64_t m = g.element_order(s);
  std::vector<LocalElement> values(g.order(), LocalElement(q));
  const LocalElement b = beta(m, q);
  for (int64_t i = 0; i < m; ++i) values[g.pow(s, i)] = sigma_pow(b, i, strictness);
  Resolvend r = Resolvend::from_function(group, values);
  return PhiMap{s, std::move(values), std::move(r)};
}

LocalElement det_resolvend_cyclic(const Resolvend& r, const VirtualCharacter& chi, std::optional<int> s) {
  const FiniteGroup& g = *r.group();
  if (chi.table()->group() != r.group()) throw DomainError("character and resolvend over different groups");
  const auto support = r.support();
  if (support.empty()) throw DomainError("zero resolvend has no determinant");
  auto contains_support = [&](int x) {
    std::vector<int> h = g.cyclic_subgroup(x);
    std::sort(h.begin(), h.end());
    return std::all_of(support.begin(), support.end(), [&](int y) { return std::binary_search(h.begin(), h.end(), y); });
  };
  if (s) {
    if (!contains_support(*s)) throw DomainError("resolvend support is not contained in <" + g.label(*s) + ">");
  } else {
    for (int x = 0; x < g.order() && !s; ++x) {
      if (contains_support(x)) s = x;
    }
    if (!s) throw DomainError("resolvend support is not contained in a cyclic subgroup");
  }
  const int64_t m = g.element_order(*s);
  const auto a = restrict_to_cyclic(chi, *s);
  LocalElement result(r.q(), Cyclotomic(1L));
  for (int64_t j = 0; j < m; ++j) {
    if (a[j] == 0) continue;
    if (!is_integral(a[j])) throw DomainError("restriction multiplicity " + to_string(a[j]) + " is not an integer");
    LocalElement rho(r.q());
    for (int64_t k = 0; k < m; ++k) {
      const LocalElement& c = r.coefficient(g.pow(*s, k));
      if (!c.is_zero()) rho += Cyclotomic::zeta(m, mod(j * k, m)) * c;
    }
    if (rho.is_zero()) {
      throw DomainError("resolvend factor for xi^" + std::to_string(j) + " vanishes; the resolvend is not invertible");
    }
    result = result * rho.pow(a[j].get_num());
  }
  return result;
}

bool det_distinguishes_classes(const TablePtr& table, int64_t q, int s1, int s2, Strictness strictness) {
  const GroupPtr& g = table->group();
  const PhiMap p1 = phi_map(g, q, s1, strictness);
  const PhiMap p2 = phi_map(g, q, s2, strictness);
  for (int i = 0; i < table->size(); ++i) {
    const auto chi = VirtualCharacter::irreducible(table, i);
    if (!(det_resolvend_cyclic(p1.resolvend, chi, s1) == det_resolvend_cyclic(p2.resolvend, chi, s2))) return false;
  }
  return true;
}

}  // namespace stickel
