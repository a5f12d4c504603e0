#ifndef STICKEL_EMIT_HPP
#define STICKEL_EMIT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "stickel/character_table.hpp"
#include "stickel/characters.hpp"
#include "stickel/local_field.hpp"
#include "stickel/stickelberger.hpp"

namespace stickel {

using Json = nlohmann::ordered_json;

/// A titled grid of strings; the common shape behind the csv and pretty formats.
struct Section {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// RFC 4180 quoting where needed; sections separated by one blank line.
std::string to_csv(const std::vector<Section>& sections);
/// Left-aligned columns under a title line.
std::string to_pretty(const std::vector<Section>& sections);

/// Cyclotomic value at its minimal level, in cyclo(...) form.
std::string cyclo_text(const Cyclotomic& x);
/// Plain rational when the value is rational, cyclo(...) otherwise.
std::string readable(const Cyclotomic& x);

Json class_list_json(const FiniteGroup& g);
Json table_json(const CharacterTable& t);
Section table_section(const CharacterTable& t, bool readable_values);

/// Rebuilds a table for `group` from table_json output (or any object with a
/// "characters" array of cyclo strings). Values are not validated.
CharacterTable table_from_json(const Json& j, const GroupPtr& group);

Json rationals_json(const std::vector<Rational>& v);
Json integers_json(const std::vector<Integer>& v);
Json integer_matrix_json(const IntMatrix& m);

}  // namespace stickel

#endif  // STICKEL_EMIT_HPP
