#include "stickel/verify.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "stickel/random.hpp"
#include "stickel/tame.hpp"

namespace stickel {
namespace {

const std::map<std::string, std::string>& anchors() {
  static const std::map<std::string, std::string> table = [] {
    std::map<std::string, std::string> m;
    for (const auto& [id, anchor] : check_registry()) m.emplace(id, anchor);
    return m;
  }();
  return table;
}

class Check {
 public:
  Check(CheckResult& result, Json context) : result_(result), context_(std::move(context)) {}

  void expect(bool ok, const std::function<Json()>& counterexample) {
    ++result_.cases;
    if (!ok) fail(counterexample());
  }

  void fail(Json detail) {
    if (result_.passed) {
      Json ce = context_;
      for (auto& [key, value] : detail.items()) ce[key] = value;
      result_.counterexample = std::move(ce);
    }
    result_.passed = false;
  }

 private:
  CheckResult& result_;
  Json context_;
};

void run_check(VerificationReport& report, const std::string& id, const std::string& group,
               const std::function<void(Check&)>& body) {
  auto it = anchors().find(id);
  if (it == anchors().end()) throw std::logic_error("unregistered check id " + id);
  report.checks.push_back(CheckResult{id, it->second, group, true, 0, nullptr});
  CheckResult& result = report.checks.back();
  Check check(result, Json{{"group", group}});
  try {
    body(check);
  } catch (const std::exception& e) {
    check.fail(Json{{"error", e.what()}});
  }
}

std::string label(const FiniteGroup& g, int x) { return g.label(x); }

Json coords_json(const VirtualCharacter& chi) { return rationals_json(chi.coords()); }

std::vector<long> random_vector(SeededRng& rng, size_t n) {
  std::vector<long> v(n);
  for (auto& x : v) x = rng.uniform(-5, 5);
  return v;
}

Cyclotomic random_cyclotomic(SeededRng& rng, int64_t level) {
  std::vector<Rational> c(static_cast<size_t>(euler_phi(level)));
  for (auto& x : c) x = ratio(rng.uniform(-6, 6), rng.uniform(1, 4));
  return Cyclotomic(level, std::move(c));
}

struct GroupContext {
  std::string name;
  GroupPtr group;
  TablePtr table;
  std::vector<VirtualCharacter> irreducibles;
  std::optional<AGLattice> lattice;
};

// ---------------------------------------------------------------- global

void cyclo_checks(VerificationReport& report, uint64_t seed) {
  run_check(report, "cyclo.field_axioms", "-", [&](Check& c) {
    SeededRng rng(seed, "cyclo.field_axioms");
    for (int trial = 0; trial < 60; ++trial) {
      const int64_t n1 = rng.uniform(1, 24), n2 = rng.uniform(1, 24), n3 = rng.uniform(1, 24);
      const Cyclotomic x = random_cyclotomic(rng, n1), y = random_cyclotomic(rng, n2), z = random_cyclotomic(rng, n3);
      auto ce = [&] { return Json{{"x", x.to_string()}, {"y", y.to_string()}, {"z", z.to_string()}}; };
      c.expect((x * y) * z == x * (y * z), ce);
      c.expect(x * (y + z) == x * y + x * z, ce);
      c.expect(x * y == y * x && x + y == y + x, ce);
      if (!x.is_zero()) c.expect((x * x.inverse()).is_one() || x * x.inverse() == Cyclotomic(1L), ce);
    }
  });
  run_check(report, "cyclo.galois_composition", "-", [&](Check& c) {
    SeededRng rng(seed, "cyclo.galois_composition");
    for (int64_t n = 1; n <= 24; ++n) {
      const Cyclotomic x = random_cyclotomic(rng, n);
      for (int64_t k1 = 1; k1 <= n; ++k1) {
        if (gcd(k1, n) != 1) continue;
        for (int64_t k2 = 1; k2 <= n; ++k2) {
          if (gcd(k2, n) != 1) continue;
          c.expect(galois_act(k1, galois_act(k2, x)) == galois_act(mod(k1 * k2, n), x), [&] {
            return Json{{"x", x.to_string()}, {"k1", k1}, {"k2", k2}};
          });
        }
      }
    }
  });
  run_check(report, "cyclo.norm", "-", [&](Check& c) {
    for (int64_t n = 1; n <= 24; ++n) {
      Cyclotomic product(1L);
      for (int64_t k = 1; k <= n; ++k) {
        if (gcd(k, n) == 1) product *= galois_act(k, Cyclotomic::zeta(n));
      }
      const long expected = (euler_phi(n) % 2 == 0 ? 1 : -1) * cyclotomic_polynomial(n)[0];
      c.expect(product == Cyclotomic(expected), [&] { return Json{{"N", n}, {"product", cyclo_text(product)}}; });
    }
  });
}

void tame_global_checks(VerificationReport& report, const VerifyConfig& config) {
  run_check(report, "localtame.operator_relation", "-", [&](Check& c) {
    for (int64_t q : config.qs) {
      SeededRng rng(config.seed, "localtame.operator_relation/" + std::to_string(q));
      std::vector<int64_t> orders;
      for (int64_t m = 1; m <= 12; ++m) {
        if (gcd(m, q) == 1) orders.push_back(m);
      }
      for (int trial = 0; trial < config.random_local_elements; ++trial) {
        LocalElement x(q);
        const int terms = static_cast<int>(rng.uniform(1, 4));
        for (int k = 0; k < terms; ++k) {
          const int64_t m = orders[rng.uniform(0, static_cast<int64_t>(orders.size()) - 1)];
          const int64_t level = orders[rng.uniform(0, static_cast<int64_t>(orders.size()) - 1)];
          x += LocalElement::monomial(q, ratio(rng.uniform(0, 2 * m), m), random_cyclotomic(rng, level));
        }
        const LocalElement lhs = phi_op(sigma_op(phi_inverse_op(x, config.strictness), config.strictness), config.strictness);
        const LocalElement rhs = sigma_pow(x, q, config.strictness);
        c.expect(lhs == rhs, [&] { return Json{{"q", q}, {"x", x.to_string()}}; });
      }
    }
  });
  run_check(report, "localtame.beta_projection", "-", [&](Check& c) {
    for (int64_t q : config.qs) {
      for (int64_t m = 1; m <= 12; ++m) {
        if (gcd(m, q) != 1) continue;
        const LocalElement b = beta(m, q);
        for (int64_t k = 0; k < m; ++k) {
          LocalElement acc(q);
          for (int64_t i = 0; i < m; ++i) acc += Cyclotomic::zeta(m, mod(-k * i, m)) * sigma_pow(b, i, config.strictness);
          c.expect(acc == LocalElement::monomial(q, ratio(k, m)), [&] {
            return Json{{"q", q}, {"m", m}, {"k", k}, {"got", acc.to_string()}};
          });
        }
      }
    }
  });
  run_check(report, "localtame.tame_quotient", "-", [&](Check& c) {
    const TameQuotient t(2, 3, 2);
    c.expect(are_isomorphic(t.to_group(), symmetric_group(3)), [] { return Json{{"q", 2}, {"M", 3}, {"N", 2}}; });
    const int sigma = t.index(1, 0), phi = t.index(0, 1);
    c.expect(t.mul(sigma, phi) != t.mul(phi, sigma), [] { return Json{{"detail", "sigma and phi commute"}}; });
    c.expect(t.mul(t.mul(phi, sigma), t.index(0, -1)) == t.index(2, 0),
             [] { return Json{{"detail", "phi sigma phi^-1 != sigma^q"}}; });
  });
}

// ---------------------------------------------------------------- per group

void group_checks(VerificationReport& report, const GroupContext& ctx, const VerifyConfig& config) {
  const FiniteGroup& g = *ctx.group;
  const std::string& name = ctx.name;

  run_check(report, "grp.class_partition", name, [&](Check& c) {
    std::vector<int> seen(g.order(), 0);
    long total = 0;
    for (const auto& cls : g.classes()) {
      total += cls.size();
      c.expect(g.order() % cls.size() == 0, [&] { return Json{{"class", label(g, cls.representative)}}; });
      std::vector<int> orbit;
      for (int x = 0; x < g.order(); ++x) orbit.push_back(g.conjugate(cls.representative, x));
      std::sort(orbit.begin(), orbit.end());
      orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
      c.expect(orbit == cls.elements && orbit.front() == cls.representative,
               [&] { return Json{{"class", label(g, cls.representative)}, {"detail", "not a conjugation orbit"}}; });
      for (int x : cls.elements) ++seen[x];
    }
    c.expect(total == g.order() && std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }),
             [&] { return Json{{"detail", "classes do not partition the group"}}; });
  });

  run_check(report, "grp.sigma_sets", name, [&](Check& c) {
    for (int64_t q : config.qs) {
      const auto sigma = sigma_set(g, q, config.strictness);
      for (int s : sigma) {
        c.expect(gcd(g.element_order(s), q) == 1, [&] { return Json{{"q", q}, {"s", label(g, s)}}; });
        for (int x : g.classes()[g.class_of(s)].elements) {
          c.expect(std::binary_search(sigma.begin(), sigma.end(), x),
                   [&] { return Json{{"q", q}, {"s", label(g, s)}, {"missing_conjugate", label(g, x)}}; });
        }
      }
      for (int s = 0; s < g.order(); ++s) {
        const bool member = std::binary_search(sigma.begin(), sigma.end(), s);
        c.expect(member == (g.class_of(g.pow(s, q)) == g.class_of(s)), [&] { return Json{{"q", q}, {"s", label(g, s)}}; });
      }
    }
  });

  run_check(report, "grp.abelianization", name, [&](Check& c) {
    const Abelianization ab = derived_and_abelianization(ctx.group);
    std::vector<int> commutators;
    for (int a = 0; a < g.order(); ++a) {
      for (int b = 0; b < g.order(); ++b) commutators.push_back(g.commutator(a, b));
    }
    c.expect(g.generated_subgroup(commutators) == ab.derived, [] { return Json{{"detail", "derived subgroup"}}; });
    c.expect(ab.quotient->is_abelian(), [] { return Json{{"detail", "quotient not abelian"}}; });
    auto kernel = ab.projection.kernel();
    std::sort(kernel.begin(), kernel.end());
    c.expect(kernel == ab.derived, [] { return Json{{"detail", "kernel of projection differs from G'"}}; });
  });

  run_check(report, "chartab.table_valid", name, [&](Check& c) {
    const auto defects = validate_table(*ctx.table);
    c.expect(defects.empty(), [&] { return Json{{"check", defects[0].check}, {"detail", defects[0].detail}}; });
  });

  bool table_ok = false;
  try {
    table_ok = validate_table(*ctx.table).empty();
  } catch (const std::exception&) {
  }
  if (!table_ok) return;  // every later check presumes a genuine character table

  if (g.order() <= 24) {
    run_check(report, "chartab.exact_route", name, [&](Check& c) {
      const CharacterTable exact = burnside_character_table(ctx.group);
      c.expect(exact == *ctx.table, [&] {
        for (int i = 0; i < exact.size(); ++i) {
          for (int k = 0; k < g.num_classes(); ++k) {
            if (!(exact.value(i, k) == ctx.table->value(i, k))) {
              return Json{{"chi", i}, {"class", label(g, g.classes()[k].representative)},
                          {"modular", cyclo_text(ctx.table->value(i, k))}, {"exact", cyclo_text(exact.value(i, k))}};
            }
          }
        }
        return Json{{"detail", "tables differ in shape"}};
      });
    });
  }

  run_check(report, "chartab.frobenius_reciprocity", name, [&](Check& c) {
    for (const auto& cls : g.classes()) {
      const int s = cls.representative;
      const int64_t m = g.element_order(s);
      std::vector<std::vector<Rational>> etas;
      for (int64_t j = 0; j < m; ++j) {
        std::vector<Rational> eta(m);
        eta[j] = 1;
        etas.push_back(std::move(eta));
      }
      etas.push_back(xi_element(m));
      for (const auto& eta : etas) {
        const VirtualCharacter induced = induce_from_cyclic(eta, s, ctx.table);
        Rational expected_degree = 0;
        for (const auto& x : eta) expected_degree += x;
        expected_degree *= g.order() / m;
        c.expect(induced.degree() == expected_degree, [&] { return Json{{"s", label(g, s)}, {"eta", rationals_json(eta)}}; });
        for (const auto& chi : ctx.irreducibles) {
          c.expect(inner_product(induced, chi) == cyclic_inner_product(eta, restrict_to_cyclic(chi, s)), [&] {
            return Json{{"s", label(g, s)}, {"eta", rationals_json(eta)}, {"chi", coords_json(chi)}};
          });
        }
      }
    }
  });

  run_check(report, "chartab.galois_rows", name, [&](Check& c) {
    const int64_t e = g.exponent();
    for (int64_t k = 1; k < std::max<int64_t>(e, 2); ++k) {
      if (gcd(k, e) != 1) continue;
      for (int i = 0; i < ctx.table->size(); ++i) {
        std::vector<Cyclotomic> twisted;
        for (const auto& x : ctx.table->row(i)) twisted.push_back(galois_act(k, x));
        bool found = false;
        for (int j = 0; j < ctx.table->size() && !found; ++j) found = twisted == ctx.table->row(j);
        c.expect(found, [&] { return Json{{"chi", i}, {"k", k}}; });
      }
    }
  });

  run_check(report, "chartab.det_multiplicative", name, [&](Check& c) {
    SeededRng rng(config.seed, name + "/chartab.det_multiplicative");
    for (int trial = 0; trial < 20; ++trial) {
      const auto chi = VirtualCharacter::from_integers(ctx.table, random_vector(rng, ctx.table->size()));
      const auto psi = VirtualCharacter::from_integers(ctx.table, random_vector(rng, ctx.table->size()));
      c.expect(det_character(chi + psi) == det_character(chi) * det_character(psi),
               [&] { return Json{{"chi", coords_json(chi)}, {"psi", coords_json(psi)}}; });
    }
  });

  if (!ctx.lattice) {
    run_check(report, "chartab.ag_index", name, [](Check& c) { c.fail(Json{{"error", "A_G lattice unavailable"}}); });
    return;
  }
  const AGLattice& lattice = *ctx.lattice;
  run_check(report, "chartab.ag_index", name, [&](Check& c) {
    const int ab = derived_and_abelianization(ctx.group).quotient->order();
    c.expect(lattice.index() == ab, [&] { return Json{{"index", lattice.index().get_str()}, {"abelianization_order", ab}}; });
    for (const auto& row : lattice.basis()) {
      const auto chi = VirtualCharacter(ctx.table, std::vector<Rational>(row.begin(), row.end()));
      c.expect(det_character(chi).is_trivial(), [&] { return Json{{"basis_vector", integers_json(row)}}; });
    }
  });

  run_check(report, "chartab.ag_membership", name, [&](Check& c) {
    SeededRng rng(config.seed, name + "/chartab.ag_membership");
    for (int trial = 0; trial < config.random_characters; ++trial) {
      const auto chi = VirtualCharacter::from_integers(ctx.table, random_vector(rng, ctx.table->size()));
      c.expect(lattice.contains(chi) == det_character(chi).is_trivial(), [&] { return Json{{"chi", coords_json(chi)}}; });
    }
  });

  run_check(report, "stick.pairing_routes", name, [&](Check& c) {
    for (const auto& chi : ctx.irreducibles) {
      for (int s = 0; s < g.order(); ++s) {
        const Rational a = stick_pair(chi, s), b = stick_pair_via_induction(chi, s);
        c.expect(a == b, [&] {
          return Json{{"chi", coords_json(chi)}, {"s", label(g, s)}, {"restriction", to_string(a)}, {"induction", to_string(b)}};
        });
      }
    }
  });

  run_check(report, "stick.fingerprint", name, [&](Check& c) {
    std::vector<std::vector<Rational>> prints;
    for (const auto& cls : g.classes()) prints.push_back(class_fingerprint(ctx.table, cls.representative));
    for (int s = 0; s < g.order(); ++s) {
      c.expect(class_fingerprint(ctx.table, s) == prints[g.class_of(s)], [&] { return Json{{"s", label(g, s)}}; });
    }
    for (int a = 0; a < g.num_classes(); ++a) {
      for (int b = a + 1; b < g.num_classes(); ++b) {
        c.expect(prints[a] != prints[b], [&] {
          return Json{{"class_a", label(g, g.classes()[a].representative)}, {"class_b", label(g, g.classes()[b].representative)}};
        });
      }
    }
  });

  run_check(report, "stick.theta_central", name, [&](Check& c) {
    SeededRng rng(config.seed, name + "/stick.theta_central");
    std::vector<VirtualCharacter> sample = ctx.irreducibles;
    for (int trial = 0; trial < 10; ++trial) {
      sample.push_back(VirtualCharacter::from_integers(ctx.table, random_vector(rng, ctx.table->size())));
    }
    for (const auto& chi : sample) {
      const auto witness = theta_map(chi).centrality_witness();
      c.expect(!witness, [&] {
        return Json{{"chi", coords_json(chi)}, {"g", label(g, witness->first)}, {"h", label(g, witness->second)}};
      });
    }
  });

  run_check(report, "stick.theta_integrality", name, [&](Check& c) {
    SeededRng rng(config.seed, name + "/stick.theta_integrality");
    for (int trial = 0; trial < config.random_characters; ++trial) {
      const auto chi = VirtualCharacter::from_integers(ctx.table, random_vector(rng, ctx.table->size()));
      c.expect(theta_map(chi).is_integral() == lattice.contains(chi), [&] { return Json{{"chi", coords_json(chi)}}; });
    }
  });

  run_check(report, "stick.galois_equivariance", name, [&](Check& c) {
    const int64_t e = g.exponent();
    for (int64_t k = 1; k < std::max<int64_t>(e, 2); ++k) {
      if (gcd(k, e) != 1) continue;
      for (const auto& chi : ctx.irreducibles) {
        const VirtualCharacter twisted = chi.galois_twist(k);
        for (int x = 0; x < g.order(); ++x) {
          const Rational lhs = stick_pair(twisted, x), rhs = stick_pair(chi, g.pow(x, k));
          c.expect(lhs == rhs, [&] {
            return Json{{"chi", coords_json(chi)}, {"g", label(g, x)}, {"k", k}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
          });
        }
      }
    }
  });

  run_check(report, "stick.det_pairing_link", name, [&](Check& c) {
    for (const auto& chi : ctx.irreducibles) {
      const AbelianCharacter det = det_character(chi);
      for (int x = 0; x < g.order(); ++x) {
        const int64_t m = g.element_order(x);
        const Rational scaled = stick_pair(chi, x) * m;
        const int64_t k = mod(to_integer(scaled).get_si(), m);
        c.expect(det.value(g.class_of(x)) == Cyclotomic::zeta(m, k), [&] { return Json{{"chi", coords_json(chi)}, {"g", label(g, x)}}; });
      }
    }
  });

  // Sigma_q sets and phi resolvends shared by the local checks.
  struct Local {
    int64_t q;
    std::vector<int> sigma;
    std::map<int, PhiMap> phi;
  };
  std::vector<Local> locals;
  for (int64_t q : config.qs) {
    Local l{q, {}, {}};
    try {
      l.sigma = sigma_set(g, q, config.strictness);
      for (int s : l.sigma) l.phi.emplace(s, phi_map(ctx.group, q, s, config.strictness));
    } catch (const std::exception&) {
      l.sigma.clear();
      l.phi.clear();
    }
    locals.push_back(std::move(l));
  }

  run_check(report, "stick.transpose_bridge", name, [&](Check& c) {
    for (const auto& l : locals) {
      if (l.sigma.empty()) (void)sigma_set(g, l.q, config.strictness);  // surfaces the error
      for (int s : l.sigma) {
        SeededRng rng(config.seed, name + "/stick.transpose_bridge/" + std::to_string(l.q) + "/" + std::to_string(s));
        std::vector<std::vector<Integer>> alphas(lattice.basis().begin(), lattice.basis().end());
        for (int trial = 0; trial < config.random_ag_vectors; ++trial) {
          std::vector<Integer> alpha(ctx.table->size(), 0);
          for (const auto& row : lattice.basis()) {
            const long k = rng.uniform(-5, 5);
            for (size_t i = 0; i < alpha.size(); ++i) alpha[i] += k * row[i];
          }
          alphas.push_back(std::move(alpha));
        }
        const LambdaFunction f = f_element(ctx.group, l.q, s, config.strictness);
        for (const auto& alpha : alphas) {
          const LocalElement lhs = theta_transpose(f, alpha, lattice);
          const LocalElement rhs = det_resolvend_cyclic(
              l.phi.at(s).resolvend, VirtualCharacter(ctx.table, std::vector<Rational>(alpha.begin(), alpha.end())));
          c.expect(lhs == rhs, [&] {
            return Json{{"q", l.q}, {"s", label(g, s)}, {"alpha", integers_json(alpha)},
                        {"transpose", lhs.to_string()}, {"det", rhs.to_string()}};
          });
        }
      }
    }
  });

  run_check(report, "localtame.phi_value", name, [&](Check& c) {
    for (const auto& l : locals) {
      if (l.sigma.empty()) (void)sigma_set(g, l.q, config.strictness);
      for (int s : l.sigma) {
        for (const auto& chi : ctx.irreducibles) {
          const LocalElement det = det_resolvend_cyclic(l.phi.at(s).resolvend, chi);
          const LocalElement expected = LocalElement::monomial(l.q, stick_pair(chi, s));
          c.expect(det == expected, [&] {
            return Json{{"q", l.q}, {"s", label(g, s)}, {"chi", coords_json(chi)}, {"det", det.to_string()},
                        {"expected", expected.to_string()}};
          });
        }
      }
    }
  });

  run_check(report, "localtame.class_detection", name, [&](Check& c) {
    for (const auto& l : locals) {
      if (l.sigma.empty()) (void)sigma_set(g, l.q, config.strictness);
      for (int s1 : l.sigma) {
        for (int s2 : l.sigma) {
          const bool same = det_distinguishes_classes(ctx.table, l.q, s1, s2, config.strictness);
          c.expect(same == (g.class_of(s1) == g.class_of(s2)),
                   [&] { return Json{{"q", l.q}, {"s1", label(g, s1)}, {"s2", label(g, s2)}}; });
        }
      }
    }
  });

  run_check(report, "localtame.det_multiplicative", name, [&](Check& c) {
    for (const auto& l : locals) {
      for (int s : l.sigma) {
        const Resolvend& r = l.phi.at(s).resolvend;
        std::vector<LocalElement> shift(g.order(), LocalElement(l.q));
        shift[s] = LocalElement(l.q, Cyclotomic(1L));
        const Resolvend u(ctx.group, shift);
        for (const auto& [a, b] : {std::pair{r, r}, std::pair{r, u}, std::pair{u, r * r}}) {
          const Resolvend ab = a * b;
          for (const auto& chi : ctx.irreducibles) {
            c.expect(det_resolvend_cyclic(ab, chi, s) == det_resolvend_cyclic(a, chi, s) * det_resolvend_cyclic(b, chi, s),
                     [&] { return Json{{"q", l.q}, {"s", label(g, s)}, {"chi", coords_json(chi)}}; });
          }
        }
      }
    }
  });

  run_check(report, "localtame.conjugate_resolvend", name, [&](Check& c) {
    for (const auto& l : locals) {
      for (int s : l.sigma) {
        for (int x = 0; x < g.order(); ++x) {
          const int conj = g.conjugate(s, x);
          c.expect(l.phi.at(conj).resolvend == l.phi.at(s).resolvend.conjugated_by(x),
                   [&] { return Json{{"q", l.q}, {"s", label(g, s)}, {"g", label(g, x)}}; });
        }
      }
    }
  });

  run_check(report, "localtame.factorisation", name, [&](Check& c) {
    for (int64_t q : config.qs) {
      if (q != 2 && q != 3) continue;
      for (int s = 0; s < g.order(); ++s) {
        const int64_t M = g.element_order(s);
        if (gcd(M, q) != 1) continue;
        const int64_t N = multiplicative_order(q, M);
        const TameQuotient quotient(q, M, N);
        for (int t = 0; t < g.order(); ++t) {
          if (g.pow(t, N) != g.identity() || g.mul(g.mul(t, s), g.inv(t)) != g.pow(s, q)) continue;
          const Factorisation f = factorise_hom(quotient, g, s, t);
          for (const auto& check : f.checks) {
            c.expect(check.passed, [&] {
              Json ce{{"q", q}, {"M", M}, {"N", N}, {"s", label(g, s)}, {"t", label(g, t)}, {"contract", check.name}};
              if (check.counterexample) {
                ce["word_1"] = quotient.label(check.counterexample->first);
                if (check.counterexample->second >= 0) ce["word_2"] = quotient.label(check.counterexample->second);
              }
              return ce;
            });
          }
        }
      }
    }
  });

  run_check(report, "localtame.disc_valuation", name, [&](Check& c) {
    for (int s = 0; s < g.order(); ++s) {
      const Rational v = disc_valuation(g, s);
      const long h = static_cast<long>(g.cyclic_subgroup(s).size());
      const Rational oracle = Rational(g.order()) - ratio(g.order(), h);
      c.expect(is_integral(v) && v == oracle && (v == 0) == (s == g.identity()),
               [&] { return Json{{"s", label(g, s)}, {"valuation", to_string(v)}}; });
    }
  });
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& check_registry() {
  static const std::vector<std::pair<std::string, std::string>> registry{
      {"cyclo.field_axioms", "cyclo: field axioms on random elements"},
      {"cyclo.galois_composition", "cyclo: zeta -> zeta^k1 after zeta -> zeta^k2 is zeta -> zeta^(k1 k2)"},
      {"cyclo.norm", "cyclo: product of the conjugates of zeta_N against the constant term of Phi_N"},
      {"localtame.operator_relation", "localtame: phi sigma phi^-1 = sigma^q on formal elements"},
      {"localtame.beta_projection", "localtame: sum_i zeta_m^(-ki) sigma^i(beta_m) = w^(k/m)"},
      {"localtame.tame_quotient", "localtame: word law of the tame quotient, T(2,3,2) isomorphic to S3"},
      {"grp.class_partition", "grp: classes are the conjugation orbits and partition G"},
      {"grp.sigma_sets", "grp: Sigma_q(G) = {s : s^q in c(s)} is a union of classes prime to q"},
      {"grp.abelianization", "grp: G' generated by commutators, G/G' abelian"},
      {"chartab.table_valid", "chartab: orthogonality relations and sum of squared degrees"},
      {"chartab.exact_route", "chartab: modular and exact character tables coincide"},
      {"chartab.frobenius_reciprocity", "chartab: (Ind eta, chi)_G = (eta, Res chi)_<s>"},
      {"chartab.galois_rows", "chartab: Galois conjugation permutes Irr(G)"},
      {"chartab.det_multiplicative", "chartab: det(chi + psi) = det(chi) det(psi)"},
      {"chartab.ag_index", "chartab: det is onto Irr(G^ab), so [Z^Irr : A_G] = |G^ab|"},
      {"chartab.ag_membership", "chartab: A_G membership agrees with triviality of det"},
      {"stick.pairing_routes", "stick: <chi, s> = (chi, Ind Xi(s))"},
      {"stick.fingerprint", "stick: pairings against R_G separate conjugacy classes"},
      {"stick.theta_central", "stick: Theta(chi) lies in the centre of QG"},
      {"stick.theta_integrality", "stick: Theta(chi) in ZG exactly when chi in A_G"},
      {"stick.galois_equivariance", "stick: <chi^k, g> = <chi, g^k>"},
      {"stick.det_pairing_link", "stick: det(chi)(g) = zeta_|g|^(|g| <chi, g>)"},
      {"stick.transpose_bridge", "stick: Theta^t(f_{q,s}) = Det r(phi_{q,s}) on A_G"},
      {"localtame.phi_value", "localtame: Det r(phi_{q,s})(chi) = w^<chi, s>"},
      {"localtame.class_detection", "localtame: Det r(phi_{q,s}) determines c(s)"},
      {"localtame.det_multiplicative", "localtame: Det of a product of <s>-supported resolvends"},
      {"localtame.conjugate_resolvend", "localtame: r(phi_{q, g^-1 s g}) = g^-1 r(phi_{q,s}) g"},
      {"localtame.factorisation", "localtame: pi = pi_r pi_nr, pi_nr a homomorphism, cocycle identity for pi_r"},
      {"localtame.disc_valuation", "localtame: discriminant valuation (|s|-1)|G|/|s|"},
  };
  return registry;
}

long VerificationReport::passed() const {
  return std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

long VerificationReport::failed() const { return static_cast<long>(checks.size()) - passed(); }

Json VerificationReport::to_json() const {
  Json qs = Json::array();
  for (auto q : config.qs) qs.push_back(q);
  Json groups = Json::array();
  for (const auto& g : config.groups) groups.push_back(g);
  Json list = Json::array();
  for (const auto& c : checks) {
    list.push_back({{"id", c.id},
                    {"anchor", c.anchor},
                    {"group", c.group},
                    {"status", c.passed ? "pass" : "fail"},
                    {"cases", c.cases},
                    {"counterexample", c.counterexample}});
  }
  return Json{{"schema", 1},
              {"command", "verify"},
              {"seed", config.seed},
              {"strict", config.strictness == Strictness::strict},
              {"q", std::move(qs)},
              {"groups", std::move(groups)},
              {"checks", std::move(list)},
              {"summary", {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}}}};
}

std::vector<Section> VerificationReport::sections() const {
  Section s{"verification", {"status", "id", "group", "cases", "anchor", "counterexample"}, {}};
  for (const auto& c : checks) {
    s.rows.push_back({c.passed ? "pass" : "FAIL", c.id, c.group, std::to_string(c.cases), c.anchor,
                      c.counterexample.is_null() ? "" : c.counterexample.dump()});
  }
  Section summary{"summary", {"total", "passed", "failed"}, {}};
  summary.rows.push_back({std::to_string(checks.size()), std::to_string(passed()), std::to_string(failed())});
  return {s, summary};
}

VerificationReport run_verification(const VerifyConfig& config) {
  VerificationReport report{config, {}};
  if (config.table_path && config.groups.size() != 1) throw DomainError("--table needs exactly one group");
  cyclo_checks(report, config.seed);
  tame_global_checks(report, config);
  for (const auto& name : config.groups) {
    GroupContext ctx{name, nullptr, nullptr, {}, std::nullopt};
    try {
      ctx.group = std::make_shared<const FiniteGroup>(load_group(name));
      if (config.table_path) {
        std::ifstream in(*config.table_path);
        if (!in) throw ParseError("cannot read table file " + *config.table_path);
        ctx.table = std::make_shared<const CharacterTable>(table_from_json(Json::parse(in), ctx.group));
      } else {
        ctx.table = std::make_shared<const CharacterTable>(character_table(ctx.group));
      }
    } catch (const std::exception& e) {
      run_check(report, "chartab.table_valid", name, [&](Check& c) { c.fail(Json{{"error", e.what()}}); });
      continue;
    }
    try {
      if (validate_table(*ctx.table).empty()) {
        for (int i = 0; i < ctx.table->size(); ++i) ctx.irreducibles.push_back(VirtualCharacter::irreducible(ctx.table, i));
        ctx.lattice.emplace(ctx.table);
      }
    } catch (const std::exception&) {
    }
    group_checks(report, ctx, config);
  }
  return report;
}

}  // namespace stickel
