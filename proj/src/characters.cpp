#include "stickel/characters.hpp"

namespace stickel {
namespace {

Rational require_rational(const Cyclotomic& x, const char* what) {
  auto r = lower_to_minimal_level(x).rational();
  if (!r) throw DomainError(std::string(what) + " is not rational: " + x.to_string());
  return *r;
}

std::vector<Cyclotomic> combine_rows(const CharacterTable& t, const std::vector<Rational>& coords) {
  const int r = t.group()->num_classes();
  std::vector<Cyclotomic> values(r, Cyclotomic(0L));
  for (int i = 0; i < t.size(); ++i) {
    if (coords[i] == 0) continue;
    const Cyclotomic c(coords[i]);
    for (int k = 0; k < r; ++k) values[k] += c * t.value(i, k);
  }
  const int64_t e = t.exponent();
  for (auto& v : values) {
    if (v.level() != e) v = raise(v, e);
  }
  return values;
}

}  // namespace

VirtualCharacter::VirtualCharacter(TablePtr table, std::vector<Rational> coords)
    : table_(std::move(table)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != table_->size()) {
    throw DomainError("expected " + std::to_string(table_->size()) + " coordinates, got " +
                      std::to_string(coords_.size()));
  }
  values_ = combine_rows(*table_, coords_);
}

VirtualCharacter VirtualCharacter::zero(TablePtr table) {
  const int n = table->size();
  return VirtualCharacter(std::move(table), std::vector<Rational>(n));
}

VirtualCharacter VirtualCharacter::irreducible(TablePtr table, int index) {
  std::vector<Rational> coords(table->size());
  coords.at(index) = 1;
  return VirtualCharacter(std::move(table), std::move(coords));
}

VirtualCharacter VirtualCharacter::from_integers(TablePtr table, const std::vector<long>& coords) {
  std::vector<Rational> q(coords.begin(), coords.end());
  return VirtualCharacter(std::move(table), std::move(q));
}

VirtualCharacter VirtualCharacter::from_values(TablePtr table, const std::vector<Cyclotomic>& values) {
  const FiniteGroup& g = *table->group();
  if (static_cast<int>(values.size()) != g.num_classes()) throw DomainError("class function has the wrong length");
  std::vector<Rational> coords;
  for (int i = 0; i < table->size(); ++i) {
    coords.push_back(require_rational(class_function_inner_product(g, values, table->row(i)), "inner product"));
  }
  VirtualCharacter out(std::move(table), std::move(coords));
  for (int k = 0; k < g.num_classes(); ++k) {
    if (!(out.values_[k] == values[k])) throw DomainError("class function is not a Q-combination of irreducibles");
  }
  return out;
}

Rational VirtualCharacter::degree() const { return require_rational(values_[0], "degree"); }

bool VirtualCharacter::is_integral() const {
  for (const auto& c : coords_) {
    if (!stickel::is_integral(c)) return false;
  }
  return true;
}

std::vector<Integer> VirtualCharacter::integer_coords() const {
  std::vector<Integer> out;
  for (const auto& c : coords_) out.push_back(to_integer(c));
  return out;
}

VirtualCharacter VirtualCharacter::galois_twist(int64_t k) const {
  const int64_t e = table_->exponent();
  if (gcd(k, e) != 1) throw DomainError("galois twist by " + std::to_string(k) + " not coprime to " + std::to_string(e));
  std::vector<Cyclotomic> twisted;
  for (const auto& v : values_) twisted.push_back(galois_act(mod(k, e), v));
  return from_values(table_, twisted);
}

VirtualCharacter VirtualCharacter::operator-() const { return Rational(-1) * *this; }

VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b) {
  if (a.table_ != b.table_) throw DomainError("characters of different tables");
  std::vector<Rational> c(a.coords_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
  return VirtualCharacter(a.table_, std::move(c));
}

VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b) { return a + (-b); }

VirtualCharacter operator*(const Rational& s, const VirtualCharacter& a) {
  std::vector<Rational> c(a.coords_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = s * a.coords_[i];
  return VirtualCharacter(a.table_, std::move(c));
}

Cyclotomic class_function_inner_product(const FiniteGroup& g, const std::vector<Cyclotomic>& a,
                                        const std::vector<Cyclotomic>& b) {
  Cyclotomic acc;
  for (int k = 0; k < g.num_classes(); ++k) {
    acc += Cyclotomic(static_cast<long>(g.classes()[k].size())) * a[k] * b[k].conj();
  }
  return acc * Cyclotomic(ratio(1, g.order()));
}

Rational inner_product(const VirtualCharacter& chi, const VirtualCharacter& psi) {
  if (chi.group().order() != psi.group().order() || chi.table()->group() != psi.table()->group()) {
    throw DomainError("inner product of characters of different groups");
  }
  return require_rational(class_function_inner_product(chi.group(), chi.values(), psi.values()), "inner product");
}

std::vector<Rational> restrict_to_cyclic(const VirtualCharacter& chi, int s) {
  const FiniteGroup& g = chi.group();
  const int64_t m = g.element_order(s);
  std::vector<Cyclotomic> on_cyclic;
  for (int i = 0; i < m; ++i) on_cyclic.push_back(chi(g.pow(s, i)));
  std::vector<Rational> out;
  for (int64_t j = 0; j < m; ++j) {
    Cyclotomic acc;
    for (int64_t i = 0; i < m; ++i) acc += on_cyclic[i] * Cyclotomic::zeta(m, mod(-i * j, m));
    out.push_back(require_rational(acc, "restriction multiplicity") / Rational(Integer(static_cast<long>(m))));
  }
  return out;
}

std::vector<Cyclotomic> cyclic_character_values(const std::vector<Rational>& eta, int64_t m) {
  std::vector<Cyclotomic> out;
  for (int64_t i = 0; i < m; ++i) {
    std::vector<Rational> weights(static_cast<size_t>(m));
    for (int64_t j = 0; j < static_cast<int64_t>(eta.size()); ++j) weights[mod(i * j, m)] += eta[j];
    out.push_back(Cyclotomic::from_root_weights(m, weights));
  }
  return out;
}

VirtualCharacter induce_from_cyclic(const std::vector<Rational>& eta, int s, const TablePtr& table) {
  const FiniteGroup& g = *table->group();
  const int64_t m = g.element_order(s);
  if (static_cast<int64_t>(eta.size()) != m) throw DomainError("multiplicity vector length must equal |s|");
  const std::vector<Cyclotomic> on_cyclic = cyclic_character_values(eta, m);
  std::vector<int> power_index(g.order(), -1);  // element -> i with s^i = element
  for (int i = 0; i < m; ++i) power_index[g.pow(s, i)] = i;
  std::vector<Cyclotomic> values;
  const Cyclotomic scale(ratio(1, m));
  for (const auto& cls : g.classes()) {
    Cyclotomic acc;
    for (int x = 0; x < g.order(); ++x) {
      const int y = g.mul(g.mul(x, cls.representative), g.inv(x));
      if (power_index[y] >= 0) acc += on_cyclic[power_index[y]];
    }
    values.push_back(acc * scale);
  }
  return VirtualCharacter::from_values(table, values);
}

Rational cyclic_inner_product(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw DomainError("cyclic characters of different lengths");
  Rational acc = 0;
  for (size_t j = 0; j < a.size(); ++j) acc += a[j] * b[j];
  return acc;
}

bool AbelianCharacter::is_trivial() const {
  for (auto k : class_exponents) {
    if (mod(k, exponent) != 0) return false;
  }
  return true;
}

AbelianCharacter operator*(const AbelianCharacter& a, const AbelianCharacter& b) {
  if (a.exponent != b.exponent || a.class_exponents.size() != b.class_exponents.size()) {
    throw DomainError("linear characters of different groups");
  }
  AbelianCharacter out{a.exponent, a.class_exponents};
  for (size_t c = 0; c < out.class_exponents.size(); ++c) {
    out.class_exponents[c] = mod(out.class_exponents[c] + b.class_exponents[c], a.exponent);
  }
  return out;
}

AbelianCharacter det_character(const VirtualCharacter& chi) {
  if (!chi.is_integral()) throw DomainError("det is defined on integer coordinates only");
  const FiniteGroup& g = chi.group();
  const int64_t e = g.exponent();
  AbelianCharacter out{e, {}};
  for (const auto& cls : g.classes()) {
    const int s = cls.representative;
    const int64_t m = g.element_order(s);
    const auto a = restrict_to_cyclic(chi, s);
    Integer total = 0;
    for (int64_t j = 0; j < m; ++j) total += j * to_integer(a[j]);
    Integer k = total * static_cast<long>(e / m);
    out.class_exponents.push_back(mod(Integer(k % e).get_si(), e));
  }
  return out;
}

AGLattice::AGLattice(TablePtr table) : table_(std::move(table)) {
  const FiniteGroup& g = *table_->group();
  const int r = table_->size();
  det_matrix_.assign(g.num_classes(), IntVector(r, 0));
  for (int i = 0; i < r; ++i) {
    const auto det = det_character(VirtualCharacter::irreducible(table_, i));
    for (int c = 0; c < g.num_classes(); ++c) det_matrix_[c][i] = det.class_exponents[c];
  }
  basis_ = kernel_modulo(det_matrix_, static_cast<size_t>(r), Integer(static_cast<long>(g.exponent())));
  index_ = absolute_determinant(basis_);
}

bool AGLattice::contains(const std::vector<Integer>& coords) const {
  return lattice_coordinates(basis_, coords).has_value();
}

bool AGLattice::contains(const VirtualCharacter& chi) const {
  return chi.is_integral() && contains(chi.integer_coords());
}

}  // namespace stickel
