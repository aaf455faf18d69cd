#include "ebcf/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>

namespace ebcf {

namespace {

std::string double_str(double d) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), d);
  (void)ec;
  return std::string(buf, ptr);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "";
        if constexpr (std::is_same_v<T, std::string>) return csv_quote(v);
        if constexpr (std::is_same_v<T, long>) return std::to_string(v);
        if constexpr (std::is_same_v<T, Int>) return v.get_str();
        if constexpr (std::is_same_v<T, Rat>) return rat_str(v);
        if constexpr (std::is_same_v<T, double>) return double_str(v);
        if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
      },
      c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        if constexpr (std::is_same_v<T, std::string>) return v;
        if constexpr (std::is_same_v<T, long>) return v;
        if constexpr (std::is_same_v<T, Int>) return v.get_str();
        if constexpr (std::is_same_v<T, Rat>) return rat_str(v);
        if constexpr (std::is_same_v<T, double>) {
          if (std::isnan(v) || std::isinf(v)) return nullptr;
          return v;
        }
        if constexpr (std::is_same_v<T, bool>) return v;
      },
      c);
}

}  // namespace

OutFormat parse_format(const std::string& s) {
  if (s == "csv") return OutFormat::csv;
  if (s == "json") return OutFormat::json;
  fail(Errc::parse_error, "unknown format: " + s + " (expected csv or json)");
}

std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_quote(t.columns[i]);
  }
  out += '\n';
  for (const std::vector<Cell>& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = t.command;
  j["rows"] = nlohmann::ordered_json::array();
  for (const std::vector<Cell>& row : t.rows) {
    nlohmann::ordered_json o;
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i)
      o[t.columns[i]] = json_cell(row[i]);
    j["rows"].push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

void write_table(const Table& t, OutFormat f, const std::string& out_path) {
  std::string rendered = f == OutFormat::csv ? to_csv(t) : to_json(t);
  if (out_path.empty() || out_path == "-") {
    std::cout << rendered;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) fail(Errc::parse_error, "cannot open output file: " + out_path);
  os << rendered;
}

}  // namespace ebcf
