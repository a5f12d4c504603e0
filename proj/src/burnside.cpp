// Exact character table route over Q(zeta_e), independent of the modular one.

#include <algorithm>
#include <functional>

#include "stickel/character_table.hpp"
#include "stickel/linalg.hpp"

namespace stickel {
namespace {

// Every value h * (zeta_o^{k_1} + ... + zeta_o^{k_d}) / d for admissible degrees d.
std::vector<Cyclotomic> eigenvalue_candidates(int64_t class_size, int64_t element_order, int64_t group_order) {
  std::vector<Cyclotomic> roots;
  for (int64_t k = 0; k < element_order; ++k) roots.push_back(Cyclotomic::zeta(element_order, k));
  std::vector<Cyclotomic> out;
  for (int64_t d = 1; d * d <= group_order; ++d) {
    if (group_order % d != 0) continue;
    const Rational scale = ratio(class_size, d);
    std::vector<int64_t> multiset(static_cast<size_t>(d), 0);
    std::function<void(size_t, int64_t, Cyclotomic)> walk = [&](size_t depth, int64_t start, Cyclotomic partial) {
      if (depth == multiset.size()) {
        out.push_back(partial * Cyclotomic(scale));
        return;
      }
      for (int64_t k = start; k < element_order; ++k) walk(depth + 1, k, partial + roots[static_cast<size_t>(k)]);
    };
    walk(0, 0, Cyclotomic());
  }
  std::sort(out.begin(), out.end(), [](const Cyclotomic& a, const Cyclotomic& b) { return compare(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

CharacterTable burnside_character_table(const GroupPtr& gp, int max_order) {
  const FiniteGroup& g = *gp;
  if (g.order() > max_order) {
    throw SizeCapError("exact fallback table is limited to order " + std::to_string(max_order) + ", got " +
                       std::to_string(g.order()));
  }
  const int64_t n = g.order();
  const int r = g.num_classes();
  const int64_t e = g.exponent();
  const CyclotomicField f;

  const auto c = class_structure_constants(g);
  std::vector<FieldMatrix<CyclotomicField>> matrices;
  std::vector<std::vector<Cyclotomic>> candidates;
  for (int j = 1; j < r; ++j) {
    FieldMatrix<CyclotomicField> m(r, std::vector<Cyclotomic>(r));
    for (int k = 0; k < r; ++k) {
      for (int l = 0; l < r; ++l) m[k][l] = Cyclotomic(static_cast<long>(c[j][k][l]));
    }
    matrices.push_back(std::move(m));
    const int rep = g.classes()[j].representative;
    candidates.push_back(eigenvalue_candidates(g.classes()[j].size(), g.element_order(rep), n));
  }
  auto roots = [&](size_t index, const std::vector<Cyclotomic>& poly) {
    std::vector<Cyclotomic> out;
    for (const auto& lambda : candidates[index]) {
      if (evaluate_polynomial(f, poly, lambda).is_zero()) out.push_back(lambda);
    }
    return out;
  };
  FieldMatrix<CyclotomicField> vectors = common_eigenvectors<CyclotomicField>(f, matrices, static_cast<size_t>(r), roots);

  std::vector<std::vector<Cyclotomic>> rows;
  for (auto& v : vectors) {
    const Cyclotomic scale = v[0].inverse();
    for (auto& x : v) x = x * scale;
    Cyclotomic s;
    for (int l = 0; l < r; ++l) {
      const int inverse_class = g.class_of(g.inv(g.classes()[l].representative));
      s += v[l] * v[inverse_class] * Cyclotomic(ratio(1, g.classes()[l].size()));
    }
    auto s_value = s.rational();
    if (!s_value || *s_value <= 0) throw std::runtime_error("burnside: degree sum is not a positive rational");
    const Rational d2 = Rational(Integer(static_cast<long>(n))) / *s_value;
    if (!is_integral(d2)) throw std::runtime_error("burnside: squared degree is not an integer");
    Integer degree = sqrt(d2.get_num());
    if (degree * degree != d2.get_num()) throw std::runtime_error("burnside: squared degree is not a square");
    std::vector<Cyclotomic> row;
    for (int l = 0; l < r; ++l) {
      row.push_back(v[l] * Cyclotomic(ratio(degree, Integer(g.classes()[l].size()))));
    }
    for (auto& x : row) {
      if (x.level() != e) x = raise(x, lcm(x.level(), e));
      if (auto lowered = lower(x, e)) x = *lowered;
    }
    rows.push_back(std::move(row));
  }
  sort_character_rows(rows);
  return CharacterTable(gp, std::move(rows));
}

}  // namespace stickel
