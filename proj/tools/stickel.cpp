// stickel: command-line front end for the character, pairing and tame local computations.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stickel/emit.hpp"
#include "stickel/tame.hpp"
#include "stickel/verify.hpp"

using namespace stickel;

namespace {

struct RunConfig {
  std::string command;
  std::string group;
  std::vector<int64_t> qs;
  std::string format = "pretty";
  uint64_t seed = 0;
  bool strict = true;
  std::string out;
  std::string chi;
  std::string s, t;
  int64_t M = 0, N = 0;
  bool all_catalog = false;
  std::string table;

  Strictness strictness() const { return strict ? Strictness::strict : Strictness::permissive; }
};

struct Output {
  Json json;
  std::vector<Section> sections;
  int status = 0;
};

GroupPtr require_group(const RunConfig& c) {
  if (c.group.empty()) throw DomainError("--group is required");
  return std::make_shared<const FiniteGroup>(load_group(c.group));
}

TablePtr table_for(const GroupPtr& g) { return std::make_shared<const CharacterTable>(character_table(g)); }

std::vector<int64_t> q_list(const RunConfig& c, std::vector<int64_t> fallback) {
  std::vector<int64_t> qs = c.qs.empty() ? std::move(fallback) : c.qs;
  for (auto q : qs) {
    if (q < 2) throw DomainError("q values must be at least 2, got " + std::to_string(q));
  }
  return qs;
}

int find_element(const FiniteGroup& g, const std::string& text) {
  if (!text.empty() && std::all_of(text.begin(), text.end(), ::isdigit)) {
    const long k = std::stol(text);
    if (k < 0 || k >= g.order()) throw DomainError("element index " + text + " out of range");
    return static_cast<int>(k);
  }
  for (int x = 0; x < g.order(); ++x) {
    if (g.label(x) == text) return x;
  }
  throw DomainError("no element labelled '" + text + "' in " + g.name());
}

VirtualCharacter parse_chi(const TablePtr& t, const std::string& text) {
  std::vector<Rational> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(parse_rational(item));
  if (static_cast<int>(coords.size()) != t->size()) {
    throw DomainError("--chi needs " + std::to_string(t->size()) + " coordinates, got " + std::to_string(coords.size()));
  }
  return VirtualCharacter(t, std::move(coords));
}

std::vector<VirtualCharacter> characters_for(const RunConfig& c, const TablePtr& t) {
  if (!c.chi.empty()) return {parse_chi(t, c.chi)};
  std::vector<VirtualCharacter> out;
  for (int i = 0; i < t->size(); ++i) out.push_back(VirtualCharacter::irreducible(t, i));
  return out;
}

std::string chi_text(const VirtualCharacter& chi) {
  std::string out;
  for (size_t i = 0; i < chi.coords().size(); ++i) out += (i ? "," : "") + to_string(chi.coords()[i]);
  return out;
}

std::vector<std::string> irr_header(const CharacterTable& t) {
  std::vector<std::string> h;
  for (int i = 0; i < t.size(); ++i) h.push_back("chi" + std::to_string(i));
  return h;
}

Json header(const std::string& command, const FiniteGroup& g) {
  return Json{{"schema", 1}, {"command", command}, {"group", g.name()}, {"order", g.order()}};
}

// ------------------------------------------------------------------ commands

Output cmd_table(const RunConfig& c) {
  const auto g = require_group(c);
  const auto t = table_for(g);
  Json j = header("table", *g);
  const Json body = table_json(*t);
  for (auto& [k, v] : body.items()) {
    if (k != "schema" && k != "group" && k != "order") j[k] = v;
  }
  return {std::move(j), {table_section(*t, c.format == "pretty")}};
}

Section pairing_section(const TablePtr& t, const std::string& title, Json& rows_json) {
  const FiniteGroup& g = *t->group();
  Section s{title, {"class", "size"}, {}};
  for (auto& h : irr_header(*t)) s.header.push_back(h);
  rows_json = Json::array();
  for (const auto& cls : g.classes()) {
    const auto print = class_fingerprint(t, cls.representative);
    std::vector<std::string> row{g.label(cls.representative), std::to_string(cls.size())};
    for (const auto& x : print) row.push_back(to_string(x));
    s.rows.push_back(std::move(row));
    rows_json.push_back({{"class", g.label(cls.representative)}, {"values", rationals_json(print)}});
  }
  return s;
}

Section theta_section(const std::vector<VirtualCharacter>& chars, const AGLattice& ag, Json& out) {
  out = Json::array();
  Section s{"Theta(chi), nonzero class coefficients", {"chi", "class", "coefficient"}, {}};
  for (const auto& chi : chars) {
    const FiniteGroup& g = chi.group();
    const GroupRingQ theta = theta_map(chi);
    const auto coeffs = theta.class_coefficients();
    Json terms = Json::array();
    for (int k = 0; k < g.num_classes(); ++k) {
      if (coeffs[k] == 0) continue;
      const std::string cls = g.label(g.classes()[k].representative);
      s.rows.push_back({chi_text(chi), cls, to_string(coeffs[k])});
      terms.push_back({{"class", cls}, {"coefficient", to_string(coeffs[k])}});
    }
    out.push_back({{"chi", rationals_json(chi.coords())},
                   {"terms", std::move(terms)},
                   {"integral", theta.is_integral()},
                   {"in_AG", ag.contains(chi)}});
  }
  return s;
}

Section ag_section(const AGLattice& ag, const FiniteGroup& g, Json& out) {
  const int ab = derived_and_abelianization(ag.table()->group()).quotient->order();
  Section s{"A_G basis, index " + ag.index().get_str() + ", |G^ab| = " + std::to_string(ab), irr_header(*ag.table()), {}};
  for (const auto& row : ag.basis()) {
    std::vector<std::string> r;
    for (const auto& x : row) r.push_back(x.get_str());
    s.rows.push_back(std::move(r));
  }
  out = Json{{"index", integers_json({ag.index()})[0]}, {"abelianization_order", ab}, {"basis", integer_matrix_json(ag.basis())}};
  (void)g;
  return s;
}

Section sigma_section(const FiniteGroup& g, const std::vector<int64_t>& qs, Strictness strictness, Json& out) {
  out = Json::array();
  Section s{"Sigma_q(G)", {"q", "elements", "classes"}, {}};
  for (auto q : qs) {
    const auto sigma = sigma_set(g, q, strictness);
    std::string elements, classes;
    Json e = Json::array(), cl = Json::array();
    for (int x : sigma) {
      elements += (elements.empty() ? "" : " ") + g.label(x);
      e.push_back(g.label(x));
      if (g.classes()[g.class_of(x)].representative == x) {
        classes += (classes.empty() ? "" : " ") + g.label(x);
        cl.push_back(g.label(x));
      }
    }
    s.rows.push_back({std::to_string(q), elements, classes});
    out.push_back({{"q", q}, {"elements", std::move(e)}, {"class_representatives", std::move(cl)}});
  }
  return s;
}

Output cmd_pairing(const RunConfig& c) {
  const auto g = require_group(c);
  const auto t = table_for(g);
  const AGLattice ag(t);
  Output o{header("pairing", *g), {}};
  o.json["classes"] = class_list_json(*g);
  Json rows, theta, lattice, sigma;
  o.sections.push_back(pairing_section(t, "pairing <chi, s> (rows: classes, columns: irreducibles)", rows));
  o.sections.push_back(theta_section(characters_for(c, t), ag, theta));
  o.sections.push_back(ag_section(ag, *g, lattice));
  o.sections.push_back(sigma_section(*g, q_list(c, {2, 3, 5, 7}), c.strictness(), sigma));
  o.json["pairing"] = std::move(rows);
  o.json["theta"] = std::move(theta);
  o.json["ag"] = std::move(lattice);
  o.json["sigma"] = std::move(sigma);
  return o;
}

Output cmd_theta(const RunConfig& c) {
  const auto g = require_group(c);
  const auto t = table_for(g);
  const AGLattice ag(t);
  Output o{header("theta", *g), {}};
  Json theta;
  o.sections.push_back(theta_section(characters_for(c, t), ag, theta));
  o.json["theta"] = std::move(theta);
  return o;
}

Output cmd_ag(const RunConfig& c) {
  const auto g = require_group(c);
  const AGLattice ag(table_for(g));
  Output o{header("ag", *g), {}};
  Json lattice;
  o.sections.push_back(ag_section(ag, *g, lattice));
  o.json["ag"] = std::move(lattice);
  return o;
}

Output cmd_sigma(const RunConfig& c) {
  const auto g = require_group(c);
  Output o{header("sigma", *g), {}};
  Json sigma;
  o.sections.push_back(sigma_section(*g, q_list(c, {2, 3, 5, 7}), c.strictness(), sigma));
  o.json["sigma"] = std::move(sigma);
  return o;
}

Output cmd_fingerprint(const RunConfig& c) {
  const auto g = require_group(c);
  const auto t = table_for(g);
  Output o{header("fingerprint", *g), {}};
  Json rows;
  o.sections.push_back(pairing_section(t, "class fingerprints", rows));
  bool injective = true;
  for (size_t a = 0; a < rows.size(); ++a) {
    for (size_t b = a + 1; b < rows.size(); ++b) injective = injective && rows[a]["values"] != rows[b]["values"];
  }
  o.json["fingerprints"] = std::move(rows);
  o.json["injective"] = injective;
  o.sections.push_back(Section{"", {"injective"}, {{injective ? "true" : "false"}}});
  return o;
}

Output cmd_det_resolvend(const RunConfig& c) {
  const auto g = require_group(c);
  const auto t = table_for(g);
  const auto qs = q_list(c, {7});
  Output o{header("det-resolvend", *g), {}};
  Section s{"Det r(phi_{q,s})(chi)", {"q", "s", "chi", "det", "w^<chi,s>", "match"}, {}};
  Json list = Json::array();
  for (auto q : qs) {
    std::vector<int> elements;
    if (!c.s.empty()) {
      elements.push_back(find_element(*g, c.s));
    } else {
      for (int x : sigma_set(*g, q, c.strictness())) {
        if (g->classes()[g->class_of(x)].representative == x) elements.push_back(x);
      }
    }
    for (int s_elem : elements) {
      const PhiMap phi = phi_map(g, q, s_elem, c.strictness());
      for (const auto& chi : characters_for(c, t)) {
        const LocalElement det = det_resolvend_cyclic(phi.resolvend, chi, s_elem);
        const LocalElement expected = LocalElement::monomial(q, stick_pair(chi, s_elem));
        const bool match = det == expected;
        if (!match) o.status = 1;
        s.rows.push_back({std::to_string(q), g->label(s_elem), chi_text(chi), det.to_string(), expected.to_string(),
                          match ? "yes" : "no"});
        list.push_back({{"q", q}, {"s", g->label(s_elem)}, {"chi", rationals_json(chi.coords())},
                        {"det", det.to_string()}, {"expected", expected.to_string()}, {"match", match}});
      }
    }
  }
  o.json["values"] = std::move(list);
  o.sections.push_back(std::move(s));
  return o;
}

Output cmd_factorise(const RunConfig& c) {
  const auto g = require_group(c);
  const auto qs = q_list(c, {2});
  if (c.s.empty() || c.t.empty()) throw DomainError("factorise needs --s and --t");
  const int64_t q = qs.front();
  const int s = find_element(*g, c.s), t = find_element(*g, c.t);
  const int64_t M = c.M > 0 ? c.M : g->element_order(s);
  const int64_t N = c.N > 0 ? c.N : multiplicative_order(mod(q, M), M);
  const TameQuotient quotient(q, M, N);
  const Factorisation f = factorise_hom(quotient, *g, s, t);
  Output o{header("factorise", *g), {}};
  o.json["q"] = q;
  o.json["M"] = M;
  o.json["N"] = N;
  o.json["s"] = g->label(s);
  o.json["t"] = g->label(t);
  Json checks = Json::array();
  Section sec{"factorisation pi = pi_r pi_nr", {"check", "status", "cases", "counterexample"}, {}};
  for (const auto& check : f.checks) {
    Json ce = nullptr;
    std::string ce_text;
    if (check.counterexample) {
      ce = Json{{"word_1", quotient.label(check.counterexample->first)}};
      if (check.counterexample->second >= 0) ce["word_2"] = quotient.label(check.counterexample->second);
      ce_text = ce.dump();
    }
    checks.push_back({{"name", check.name}, {"status", check.passed ? "pass" : "fail"}, {"cases", check.cases},
                      {"counterexample", ce}});
    sec.rows.push_back({check.name, check.passed ? "pass" : "FAIL", std::to_string(check.cases), ce_text});
  }
  o.json["checks"] = std::move(checks);
  o.status = f.all_passed() ? 0 : 1;
  Section words{"words sigma^m phi^n -> (pi, pi_r, pi_nr)", {"word", "pi", "pi_r", "pi_nr"}, {}};
  for (int w = 0; w < quotient.order(); ++w) {
    words.rows.push_back({quotient.label(w), g->label(f.pi[w]), g->label(f.pi_r[w]), g->label(f.pi_nr[w])});
  }
  o.sections = {std::move(sec), std::move(words)};
  return o;
}

Output cmd_disc(const RunConfig& c) {
  const auto g = require_group(c);
  Output o{header("disc", *g), {}};
  std::vector<int> elements;
  if (!c.s.empty()) {
    elements.push_back(find_element(*g, c.s));
  } else {
    for (const auto& cls : g->classes()) elements.push_back(cls.representative);
  }
  Section s{"discriminant valuations (|s|-1)|G|/|s|", {"s", "order", "valuation"}, {}};
  Json list = Json::array();
  for (int x : elements) {
    const Rational v = disc_valuation(*g, x);
    s.rows.push_back({g->label(x), std::to_string(g->element_order(x)), to_string(v)});
    list.push_back({{"s", g->label(x)}, {"order", g->element_order(x)}, {"valuation", to_string(v)}});
  }
  o.json["valuations"] = std::move(list);
  o.sections.push_back(std::move(s));
  return o;
}

Output cmd_verify(const RunConfig& c) {
  VerifyConfig config;
  if (c.all_catalog) {
    config.groups = verification_catalog();
  } else if (!c.group.empty()) {
    config.groups = {c.group};
  } else {
    throw DomainError("verify needs --group or --all-catalog");
  }
  config.qs = q_list(c, {2, 3, 5, 7});
  config.seed = c.seed;
  config.strictness = c.strictness();
  if (!c.table.empty()) config.table_path = c.table;
  const auto start = std::chrono::steady_clock::now();
  const VerificationReport report = run_verification(config);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream note;
  note.precision(3);
  note << std::fixed << "verify: " << report.passed() << " passed, " << report.failed() << " failed in " << elapsed
       << " s\n";
  std::cerr << note.str();
  return {report.to_json(), report.sections(), report.ok() ? 0 : 1};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact character tables, Stickelberger pairings and tame resolvends of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  app.add_option("--group", c.group, "builtin group (C<n>, D<n>, S<n>, A<n>, Q8) or file:<path>");
  app.add_option("--q", c.qs, "residue orders q >= 2, comma separated")->delimiter(',');
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"pretty", "json", "csv"}));
  app.add_option("--seed", c.seed, "seed for randomized suites");
  app.add_flag("--strict,!--no-strict", c.strict, "reject wild exponents and non prime power q (default on)");
  app.add_option("--out", c.out, "write output to this path");
  app.add_option("--chi", c.chi, "character coordinates over Irr(G), comma separated rationals");
  app.add_option("--s", c.s, "element index or label");
  app.add_option("--t", c.t, "element index or label");
  app.add_option("--M", c.M, "order bound for sigma (default |s|)");
  app.add_option("--N", c.N, "order bound for phi (default order of q mod M)");
  app.add_flag("--all-catalog", c.all_catalog, "verify every catalog group");
  app.add_option("--table", c.table, "character table JSON to verify instead of the computed one");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"table", "character table"},
      {"pairing", "pairing matrix, Theta images, A_G and Sigma_q"},
      {"theta", "Theta(chi) as class coefficients"},
      {"ag", "basis and index of A_G"},
      {"sigma", "the sets Sigma_q(G)"},
      {"fingerprint", "class fingerprints"},
      {"det-resolvend", "Det of phi resolvends against characters"},
      {"factorise", "factorisation of a tame homomorphism"},
      {"disc", "discriminant valuations"},
      {"verify", "run the verification suites"},
  };
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)->callback([&c, name = name] { c.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    Output o;
    if (c.command == "table") o = cmd_table(c);
    else if (c.command == "pairing") o = cmd_pairing(c);
    else if (c.command == "theta") o = cmd_theta(c);
    else if (c.command == "ag") o = cmd_ag(c);
    else if (c.command == "sigma") o = cmd_sigma(c);
    else if (c.command == "fingerprint") o = cmd_fingerprint(c);
    else if (c.command == "det-resolvend") o = cmd_det_resolvend(c);
    else if (c.command == "factorise") o = cmd_factorise(c);
    else if (c.command == "disc") o = cmd_disc(c);
    else o = cmd_verify(c);

    std::string text;
    if (c.format == "json") text = o.json.dump(2) + "\n";
    else if (c.format == "csv") text = to_csv(o.sections);
    else text = to_pretty(o.sections);
    if (c.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(c.out, std::ios::binary);
      if (!f) throw ParseError("cannot write " + c.out);
      f << text;
    }
    return o.status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
