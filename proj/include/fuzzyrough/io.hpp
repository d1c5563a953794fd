#ifndef FUZZYROUGH_IO_HPP
#define FUZZYROUGH_IO_HPP

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fuzzyrough/core.hpp"
#include "fuzzyrough/relation.hpp"

namespace fuzzyrough {

/// A relation file: labels, a square grid of degrees, optional name.
struct RelationDocument {
  std::optional<std::string> name;
  FuzzyRelation relation;
};

namespace detail {

inline Degree parse_entry(std::string_view text, std::size_t row, std::size_t col, std::size_t base_offset) {
  try {
    return Degree::parse(text);
  } catch (const ParseError& e) {
    throw ParseError("mu[" + std::to_string(row) + "][" + std::to_string(col) + "]: " + e.what(),
                     base_offset == ParseError::npos ? ParseError::npos : base_offset);
  } catch (const DegreeOutOfRange& e) {
    throw DegreeOutOfRange("mu[" + std::to_string(row) + "][" + std::to_string(col) + "]: " + e.what());
  }
}

inline RelationDocument parse_json_document(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed relation document: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  if (!doc.is_object()) throw ParseError("relation document must be an object", 0);
  if (!doc.contains("universe") || !doc["universe"].is_array()) throw ParseError("missing array field 'universe'");
  if (!doc.contains("mu") || !doc["mu"].is_array()) throw ParseError("missing array field 'mu'");

  std::vector<std::string> labels;
  for (const auto& l : doc["universe"]) {
    if (!l.is_string()) throw ParseError("universe labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  UniversePtr u;
  try {
    u = Universe::make(std::move(labels));
  } catch (const PreconditionViolated& e) {
    throw ParseError(e.what());
  }

  const auto& grid = doc["mu"];
  const auto n = u->size();
  if (grid.size() != n)
    throw DimensionMismatch("mu has " + std::to_string(grid.size()) + " rows for " + std::to_string(n) + " labels");
  std::vector<Degree> mu;
  mu.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = grid[i];
    if (!row.is_array()) throw ParseError("mu[" + std::to_string(i) + "] is not an array");
    if (row.size() != n)
      throw DimensionMismatch("mu[" + std::to_string(i) + "] has " + std::to_string(row.size()) + " entries, expected " +
                              std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      const auto& cell = row[j];
      if (cell.is_string()) {
        mu.push_back(parse_entry(cell.get_ref<const std::string&>(), i, j, ParseError::npos));
      } else if (cell.is_number_unsigned() || cell.is_number_integer()) {
        const auto v = cell.get<long long>();
        if (v < 0 || v > 1) throw DegreeOutOfRange("mu[" + std::to_string(i) + "][" + std::to_string(j) + "] is outside [0,1]");
        mu.push_back(v == 1 ? Degree::one() : Degree::zero());
      } else {
        throw ParseError("mu[" + std::to_string(i) + "][" + std::to_string(j) +
                         "]: fractional degrees must be written as strings, e.g. \"0.5\" or \"1/2\"");
      }
    }
  }
  std::optional<std::string> name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  return {std::move(name), FuzzyRelation(std::move(u), std::move(mu))};
}

struct CsvLine {
  std::size_t offset;
  std::vector<std::string> cells;
};

inline std::string trim(std::string_view s) {
  const auto lo = s.find_first_not_of(" \t\r");
  if (lo == std::string_view::npos) return {};
  const auto hi = s.find_last_not_of(" \t\r");
  return std::string(s.substr(lo, hi - lo + 1));
}

inline std::vector<CsvLine> split_csv(std::string_view text) {
  std::vector<CsvLine> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(start, end - start);
    if (!trim(line).empty()) {
      CsvLine l{start, {}};
      std::size_t c = 0;
      while (true) {
        const auto comma = line.find(',', c);
        l.cells.push_back(trim(line.substr(c, comma == std::string_view::npos ? std::string_view::npos : comma - c)));
        if (comma == std::string_view::npos) break;
        c = comma + 1;
      }
      lines.push_back(std::move(l));
    }
    start = end + 1;
  }
  return lines;
}

/// Header row: corner cell then labels. Each data row: its label then n
/// degrees, in header order.
inline RelationDocument parse_csv_document(std::string_view text) {
  const auto lines = split_csv(text);
  if (lines.empty()) throw ParseError("empty relation file", 0);
  const auto& header = lines.front();
  if (header.cells.size() < 2) throw ParseError("CSV header needs a corner cell and at least one label", header.offset);
  std::vector<std::string> labels(header.cells.begin() + 1, header.cells.end());
  UniversePtr u;
  try {
    u = Universe::make(labels);
  } catch (const PreconditionViolated& e) {
    throw ParseError(e.what(), header.offset);
  }
  const auto n = u->size();
  if (lines.size() - 1 != n)
    throw DimensionMismatch("CSV has " + std::to_string(lines.size() - 1) + " data rows for " + std::to_string(n) + " labels");
  std::vector<Degree> mu;
  mu.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& line = lines[i + 1];
    if (line.cells.size() != n + 1)
      throw DimensionMismatch("CSV row " + std::to_string(i + 1) + " has " + std::to_string(line.cells.size() - 1) +
                              " degrees, expected " + std::to_string(n));
    if (line.cells[0] != labels[i])
      throw ParseError("CSV row " + std::to_string(i + 1) + " is labelled '" + line.cells[0] + "', expected '" + labels[i] + "'",
                       line.offset);
    for (std::size_t j = 0; j < n; ++j) mu.push_back(parse_entry(line.cells[j + 1], i, j, line.offset));
  }
  return {std::nullopt, FuzzyRelation(std::move(u), std::move(mu))};
}

} // namespace detail

/// Accepts the JSON object form or the CSV matrix form (chosen by the
/// first non-blank character).
inline RelationDocument parse_relation_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return detail::parse_json_document(text);
  return detail::parse_csv_document(text);
}

inline FuzzyRelation parse_relation(std::string_view text) { return parse_relation_document(text).relation; }

/// Canonical JSON form, one matrix row per line. Degrees are reduced rationals.
inline std::string emit_relation(const FuzzyRelation& r, const std::optional<std::string>& name = std::nullopt) {
  std::ostringstream os;
  const auto n = r.size();
  os << "{\n";
  if (name) os << "  \"name\": " << nlohmann::json(*name).dump() << ",\n";
  os << "  \"universe\": [";
  for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << nlohmann::json(r.universe()->label(i)).dump();
  os << "],\n  \"mu\": [\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << "    [";
    for (std::size_t j = 0; j < n; ++j) os << (j ? ", " : "") << '"' << r(i, j).str() << '"';
    os << (i + 1 < n ? "],\n" : "]\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

/// "a,b,c" -> {a,b,c}; blank text or "{}" is the empty set.
inline CrispSet parse_label_set(const UniversePtr& u, std::string_view text) {
  std::string t = detail::trim(text);
  if (t.size() >= 2 && t.front() == '{' && t.back() == '}') t = detail::trim(std::string_view(t).substr(1, t.size() - 2));
  std::vector<std::string> labels;
  if (!t.empty()) {
    std::size_t c = 0;
    while (true) {
      const auto comma = t.find(',', c);
      auto l = detail::trim(std::string_view(t).substr(c, comma == std::string::npos ? std::string::npos : comma - c));
      if (l.empty()) throw ParseError("empty label in set '" + std::string(text) + "'", c);
      labels.push_back(std::move(l));
      if (comma == std::string::npos) break;
      c = comma + 1;
    }
  }
  return CrispSet::from_labels(u, labels);
}

} // namespace fuzzyrough

#endif // FUZZYROUGH_IO_HPP
