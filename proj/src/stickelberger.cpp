#include "stickel/stickelberger.hpp"

#include <algorithm>

namespace stickel {

Rational stick_pair(const VirtualCharacter& chi, int g) {
  const auto a = restrict_to_cyclic(chi, g);
  const long m = static_cast<long>(a.size());
  Rational acc = 0;
  for (long j = 1; j < m; ++j) acc += a[j] * j;
  return acc / m;
}

std::vector<Rational> xi_element(int64_t m) {
  if (m < 1) throw DomainError("element order must be positive");
  std::vector<Rational> out;
  for (int64_t j = 0; j < m; ++j) out.push_back(ratio(j, m));
  return out;
}

Rational stick_pair_via_induction(const VirtualCharacter& chi, int s) {
  const auto induced = induce_from_cyclic(xi_element(chi.group().element_order(s)), s, chi.table());
  return inner_product(chi, induced);
}

GroupRingQ::GroupRingQ(GroupPtr group, std::vector<Rational> coefficients)
    : group_(std::move(group)), coefficients_(std::move(coefficients)) {
  if (static_cast<int>(coefficients_.size()) != group_->order()) throw DomainError("one coefficient per element required");
}

std::optional<std::pair<int, int>> GroupRingQ::centrality_witness() const {
  for (const auto& cls : group_->classes()) {
    for (int x : cls.elements) {
      if (coefficients_[x] != coefficients_[cls.representative]) return std::make_pair(cls.representative, x);
    }
  }
  return std::nullopt;
}

bool GroupRingQ::is_central() const { return !centrality_witness(); }

bool GroupRingQ::is_integral() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Rational& c) { return stickel::is_integral(c); });
}

std::vector<Rational> GroupRingQ::class_coefficients() const {
  if (auto w = centrality_witness()) {
    throw DomainError("group ring element is not central: coefficients differ at " + group_->label(w->first) + " and " +
                      group_->label(w->second));
  }
  std::vector<Rational> out;
  for (const auto& cls : group_->classes()) out.push_back(coefficients_[cls.representative]);
  return out;
}

GroupRingQ theta_map(const VirtualCharacter& chi) {
  const FiniteGroup& g = chi.group();
  std::vector<Rational> coefficients;
  for (int x = 0; x < g.order(); ++x) coefficients.push_back(stick_pair(chi, x));
  return GroupRingQ(chi.table()->group(), std::move(coefficients));
}

std::vector<Rational> class_fingerprint(const TablePtr& table, int s) {
  std::vector<Rational> out;
  for (int i = 0; i < table->size(); ++i) out.push_back(stick_pair(VirtualCharacter::irreducible(table, i), s));
  return out;
}

std::pair<Rational, Rational> galois_twist_pair_check(const VirtualCharacter& chi, int g, int64_t k) {
  const FiniteGroup& grp = chi.group();
  if (gcd(k, grp.exponent()) != 1) {
    throw DomainError("k = " + std::to_string(k) + " is not coprime to exp(G) = " + std::to_string(grp.exponent()));
  }
  return {stick_pair(chi.galois_twist(k), g), stick_pair(chi, grp.pow(g, mod(k, grp.exponent())))};
}

LambdaFunction::LambdaFunction(GroupPtr group, int64_t q, std::vector<LocalElement> values)
    : group_(std::move(group)), q_(q), values_(std::move(values)) {
  const FiniteGroup& g = *group_;
  if (static_cast<int>(values_.size()) != g.num_classes()) throw DomainError("one value per conjugacy class required");
  for (int c = 0; c < g.num_classes(); ++c) {
    if (values_[c].q() != q_) throw DomainError("value over a different residue order");
    if (gcd(g.element_order(g.classes()[c].representative), q_) != 1) continue;
    const int image = g.power_class(c, q_);
    if (!(values_[c] == values_[image])) {
      throw DomainError("function is not constant on the Galois orbit of class " + std::to_string(c) + " (maps to " +
                        std::to_string(image) + ")");
    }
  }
}

LambdaFunction f_element(const GroupPtr& group, int64_t q, int s, Strictness strictness) {
  const FiniteGroup& g = *group;
  const auto sigma = sigma_set(g, q, strictness);
  if (!std::binary_search(sigma.begin(), sigma.end(), s)) {
    throw DomainError("element " + g.label(s) + " is not in Sigma_" + std::to_string(q));
  }
  std::vector<LocalElement> values(g.num_classes(), LocalElement(q, Cyclotomic(1L)));
  if (s != g.identity()) values[g.class_of(s)] = LocalElement::monomial(q, 1);
  return LambdaFunction(group, q, std::move(values));
}

LocalElement theta_transpose(const LambdaFunction& f, const std::vector<Integer>& alpha, const AGLattice& lattice) {
  if (lattice.table()->group() != f.group()) throw DomainError("function and lattice over different groups");
  if (!lattice.contains(alpha)) throw DomainError("alpha is not in A_G");
  std::vector<Rational> coords(alpha.begin(), alpha.end());
  const GroupRingQ theta = theta_map(VirtualCharacter(lattice.table(), std::move(coords)));
  if (!theta.is_integral()) throw DomainError("Theta(alpha) is not integral although alpha lies in A_G");
  const auto n = theta.class_coefficients();
  LocalElement result(f.q(), Cyclotomic(1L));
  for (size_t c = 0; c < n.size(); ++c) {
    if (n[c] != 0) result = result * f(static_cast<int>(c)).pow(n[c].get_num());
  }
  return result;
}

}  // namespace stickel
