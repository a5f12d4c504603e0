#include <cctype>
#include <fstream>
#include <sstream>

#include "stickel/group.hpp"

namespace stickel {
namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int parse_int(const std::string& token, int line_no) {
  if (token.empty()) throw ParseError("line " + std::to_string(line_no) + ": expected an integer");
  size_t i = 0;
  int value = 0;
  for (; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i])) || value > 1000000) {
      throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + token + "'");
    }
    value = value * 10 + (token[i] - '0');
  }
  return value;
}

// "(1,2,3)(4,5)" with 1-based points -> list of cycles
std::vector<std::vector<int>> parse_cycles(const std::string& text, int line_no) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    return ParseError("line " + std::to_string(line_no) + ": bad cycle notation '" + text + "': " + why);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw fail("expected '('");
    size_t close = text.find(')', i);
    if (close == std::string::npos) throw fail("unbalanced parenthesis");
    std::string inner = text.substr(i + 1, close - i - 1);
    for (char& ch : inner) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream is(inner);
    std::vector<int> cycle;
    std::string tok;
    while (is >> tok) {
      int point = parse_int(tok, line_no);
      if (point < 1) throw fail("points are numbered from 1");
      cycle.push_back(point - 1);
    }
    cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  return cycles;
}

}  // namespace

FiniteGroup parse_group_file(std::string_view text, std::string name, int max_order) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int declared = -1;
  bool in_table = false;
  std::vector<std::vector<std::vector<int>>> generators;
  std::vector<std::vector<int>> table;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (declared < 0) {
      if (t.rfind("group", 0) != 0) throw ParseError("line " + std::to_string(line_no) + ": expected 'group n=<order>'");
      size_t eq = t.find("n=");
      if (eq == std::string::npos) throw ParseError("line " + std::to_string(line_no) + ": missing 'n='");
      declared = parse_int(trim(t.substr(eq + 2)), line_no);
      if (declared < 1) throw ParseError("group order must be positive");
      if (declared > max_order) {
        throw SizeCapError("declared order " + std::to_string(declared) + " exceeds the bound " +
                           std::to_string(max_order));
      }
      continue;
    }
    if (in_table) {
      for (char& ch : t) {
        if (ch == ',') ch = ' ';
      }
      std::istringstream row_in(t);
      std::vector<int> row;
      std::string tok;
      while (row_in >> tok) row.push_back(parse_int(tok, line_no));
      table.push_back(std::move(row));
      continue;
    }
    if (t.rfind("table:", 0) == 0) {
      if (!generators.empty()) throw ParseError("line " + std::to_string(line_no) + ": cannot mix perm and table");
      in_table = true;
      continue;
    }
    if (t.rfind("perm", 0) == 0) {
      size_t colon = t.find(':');
      if (colon == std::string::npos) throw ParseError("line " + std::to_string(line_no) + ": expected 'perm <k>: <cycles>'");
      parse_int(trim(t.substr(4, colon - 4)), line_no);
      generators.push_back(parse_cycles(t.substr(colon + 1), line_no));
      continue;
    }
    throw ParseError("line " + std::to_string(line_no) + ": unrecognised directive '" + t + "'");
  }
  if (declared < 0) throw ParseError("missing 'group n=<order>' header");

  if (in_table) {
    if (static_cast<int>(table.size()) != declared) {
      throw ParseError("table has " + std::to_string(table.size()) + " rows, declared order is " +
                       std::to_string(declared));
    }
    return FiniteGroup::from_cayley_table(std::move(table), std::move(name));
  }
  int degree = 1;
  for (const auto& gen : generators) {
    for (const auto& cycle : gen) {
      for (int p : cycle) degree = std::max(degree, p + 1);
    }
  }
  std::vector<Permutation> perms;
  for (const auto& gen : generators) {
    Permutation p(degree);
    for (int x = 0; x < degree; ++x) p[x] = x;
    for (const auto& cycle : gen) {
      // right-to-left composition of the listed cycles
      Permutation c(degree);
      for (int x = 0; x < degree; ++x) c[x] = x;
      for (size_t k = 0; k < cycle.size(); ++k) {
        if (c[cycle[k]] != cycle[k]) throw ParseError("repeated point inside a cycle");
        c[cycle[k]] = cycle[(k + 1) % cycle.size()];
      }
      Permutation composed(degree);
      for (int x = 0; x < degree; ++x) composed[x] = p[c[x]];
      p = composed;
    }
    perms.push_back(std::move(p));
  }
  FiniteGroup g = FiniteGroup::from_permutations(perms, std::move(name), std::max(max_order, declared));
  if (g.order() != declared) {
    throw ParseError("generators produce a group of order " + std::to_string(g.order()) + ", declared n=" +
                     std::to_string(declared));
  }
  return g;
}

FiniteGroup load_group(std::string_view source, int max_order) {
  if (source.rfind("file:", 0) == 0) {
    std::string path(source.substr(5));
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_group_file(buffer.str(), path, max_order);
  }
  return builtin_group(source, max_order);
}

}  // namespace stickel
