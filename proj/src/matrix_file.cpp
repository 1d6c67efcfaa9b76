#include "valiant/matrix_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "valiant/oracles.hpp"

namespace valiant {

using json = nlohmann::ordered_json;

SemiringKind semiring_from_name(std::string_view name) {
  if (name == "bool") return SemiringKind::boolean;
  if (name == "minplus") return SemiringKind::minplus;
  throw MatrixFileError("unknown semiring '" + std::string(name) +
                        "' (expected bool or minplus)");
}

std::string semiring_name(SemiringKind kind) {
  return kind == SemiringKind::boolean ? "bool" : "minplus";
}

ClosureMethod closure_method_from_name(std::string_view name) {
  if (name == "valiant") return ClosureMethod::valiant;
  if (name == "kleene") return ClosureMethod::kleene;
  if (name == "cyk") return ClosureMethod::cyk;
  throw MatrixFileError("unknown oracle '" + std::string(name) +
                        "' (expected valiant, kleene or cyk)");
}

bool parse_bool_value(const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw MatrixFileError("bool entry must be true or false, got '" + text + "'");
}

Cost parse_cost_value(const std::string& text) {
  if (text == "inf") return Cost::infinity();
  if (text.empty() || text.size() > 18 ||
      !std::all_of(text.begin(), text.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; }))
    throw MatrixFileError("minplus entry must be a non-negative integer or \"inf\", got '" +
                          text + "'");
  return Cost(std::stoull(text));
}

namespace {

std::string canonical_value(SemiringKind kind, const json& v) {
  if (kind == SemiringKind::boolean) {
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) {
      auto s = v.get<std::string>();
      parse_bool_value(s);
      return s;
    }
    throw MatrixFileError("bool entry must be true or false");
  }
  if (v.is_number_unsigned()) {
    auto s = std::to_string(v.get<std::uint64_t>());
    parse_cost_value(s);
    return s;
  }
  if (v.is_string()) {
    auto s = v.get<std::string>();
    const Cost c = parse_cost_value(s);
    return c.is_infinite() ? "inf" : std::to_string(c.value());
  }
  throw MatrixFileError("minplus entry must be a non-negative integer or \"inf\"");
}

}  // namespace

MatrixFile parse_matrix_file(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw MatrixFileError(std::string("matrix file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MatrixFileError("matrix file must be a JSON object");
  for (const char* key : {"semiring", "size", "entries"})
    if (!doc.contains(key)) throw MatrixFileError(std::string("missing field '") + key + "'");
  if (!doc["semiring"].is_string()) throw MatrixFileError("'semiring' must be a string");
  if (!doc["size"].is_number_unsigned() || doc["size"].get<std::uint64_t>() == 0)
    throw MatrixFileError("'size' must be a positive integer");
  if (!doc["entries"].is_array()) throw MatrixFileError("'entries' must be an array");

  MatrixFile file;
  file.semiring = semiring_from_name(doc["semiring"].get<std::string>());
  file.size = doc["size"].get<std::size_t>();
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : doc["entries"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned())
      throw MatrixFileError("each entry must be [i, j, value] with non-negative indices");
    const auto i = e[0].get<std::size_t>();
    const auto j = e[1].get<std::size_t>();
    if (!(i < j && j < file.size))
      throw MatrixFileError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not strictly upper triangular within size " +
                            std::to_string(file.size));
    if (!seen.emplace(i, j).second)
      throw MatrixFileError("duplicate entry (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
    file.entries.push_back({i, j, canonical_value(file.semiring, e[2])});
  }
  return file;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MatrixFileError("cannot open matrix file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_file(buf.str());
}

std::string write_matrix_file(const MatrixFile& file) {
  auto entries = file.entries;
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::pair(a.row, a.col) < std::pair(b.row, b.col);
  });
  json arr = json::array();
  for (const auto& e : entries) {
    json value;
    if (file.semiring == SemiringKind::boolean)
      value = parse_bool_value(e.value);
    else if (e.value == "inf")
      value = "inf";
    else
      value = parse_cost_value(e.value).value();
    arr.push_back(json::array({e.row, e.col, value}));
  }
  json doc;
  doc["semiring"] = semiring_name(file.semiring);
  doc["size"] = file.size;
  doc["entries"] = std::move(arr);
  return doc.dump() + "\n";
}

namespace {

template <SemiNearRing S>
MatrixFile close_with(const S& snr, const MatrixFile& file, ClosureMethod method) {
  const auto w = to_triangle(snr, file);
  UpperTri<typename S::Elem> c;
  switch (method) {
    case ClosureMethod::valiant:
      c = closure(snr, w);
      break;
    case ClosureMethod::kleene:
      c = kleene_closure(snr, w);
      break;
    case ClosureMethod::cyk:
      c = cyk_closure(snr, w);
      break;
  }
  return from_triangle(snr, file.semiring, c);
}

}  // namespace

MatrixFile close_matrix_file(const MatrixFile& file, ClosureMethod method) {
  if (file.semiring == SemiringKind::boolean) return close_with(BoolSnr{}, file, method);
  return close_with(MinPlusSnr{}, file, method);
}

}  // namespace valiant
