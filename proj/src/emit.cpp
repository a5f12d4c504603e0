#include "stickel/emit.hpp"

#include <algorithm>
#include <sstream>

namespace stickel {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_line(std::ostringstream& os, const std::vector<std::string>& fields) {
  for (size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
  os << "\n";
}

}  // namespace

std::string to_csv(const std::vector<Section>& sections) {
  std::ostringstream os;
  for (size_t k = 0; k < sections.size(); ++k) {
    if (k) os << "\n";
    csv_line(os, sections[k].header);
    for (const auto& row : sections[k].rows) csv_line(os, row);
  }
  return os.str();
}

std::string to_pretty(const std::vector<Section>& sections) {
  std::ostringstream os;
  for (size_t k = 0; k < sections.size(); ++k) {
    const Section& s = sections[k];
    if (k) os << "\n";
    if (!s.title.empty()) os << s.title << "\n";
    std::vector<size_t> width(s.header.size(), 0);
    auto measure = [&](const std::vector<std::string>& row) {
      for (size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    measure(s.header);
    for (const auto& row : s.rows) measure(row);
    auto line = [&](const std::vector<std::string>& row) {
      std::string text;
      for (size_t i = 0; i < row.size(); ++i) {
        text += row[i];
        if (i + 1 < row.size()) text += std::string(width[i] - row[i].size() + 2, ' ');
      }
      os << "  " << text << "\n";
    };
    line(s.header);
    for (const auto& row : s.rows) line(row);
  }
  return os.str();
}

std::string cyclo_text(const Cyclotomic& x) { return lower_to_minimal_level(x).to_string(); }

std::string readable(const Cyclotomic& x) {
  const Cyclotomic low = lower_to_minimal_level(x);
  if (auto r = low.rational()) return to_string(*r);
  return low.to_string();
}

Json class_list_json(const FiniteGroup& g) {
  Json out = Json::array();
  for (int c = 0; c < g.num_classes(); ++c) {
    const int rep = g.classes()[c].representative;
    out.push_back({{"index", c},
                   {"representative", g.label(rep)},
                   {"size", g.classes()[c].size()},
                   {"element_order", g.element_order(rep)}});
  }
  return out;
}

Json table_json(const CharacterTable& t) {
  const FiniteGroup& g = *t.group();
  Json rows = Json::array();
  for (const auto& row : t.rows()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(cyclo_text(x));
    rows.push_back(std::move(r));
  }
  return Json{{"schema", 1},
              {"group", g.name()},
              {"order", g.order()},
              {"exponent", g.exponent()},
              {"classes", class_list_json(g)},
              {"characters", std::move(rows)}};
}

Section table_section(const CharacterTable& t, bool readable_values) {
  const FiniteGroup& g = *t.group();
  Section s{"character table of " + g.name(), {"chi"}, {}};
  for (const auto& cls : g.classes()) s.header.push_back(g.label(cls.representative));
  for (int i = 0; i < t.size(); ++i) {
    std::vector<std::string> row{"chi" + std::to_string(i)};
    for (const auto& x : t.row(i)) row.push_back(readable_values ? readable(x) : cyclo_text(x));
    s.rows.push_back(std::move(row));
  }
  return s;
}

CharacterTable table_from_json(const Json& j, const GroupPtr& group) {
  if (!j.is_object() || !j.contains("characters") || !j["characters"].is_array()) {
    throw ParseError("character table JSON needs a \"characters\" array");
  }
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& r : j["characters"]) {
    if (!r.is_array()) throw ParseError("each character must be an array of values");
    std::vector<Cyclotomic> row;
    for (const auto& x : r) {
      if (x.is_string()) {
        row.push_back(Cyclotomic::parse(x.get<std::string>()));
      } else if (x.is_number_integer()) {
        row.push_back(Cyclotomic(static_cast<long>(x.get<int64_t>())));
      } else {
        throw ParseError("character values must be cyclo strings or integers");
      }
    }
    rows.push_back(std::move(row));
  }
  return CharacterTable(group, std::move(rows));
}

Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json integers_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) {
      out.push_back(x.get_si());
    } else {
      out.push_back(x.get_str());
    }
  }
  return out;
}

Json integer_matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(integers_json(row));
  return out;
}

}  // namespace stickel
