#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ebcf/ints.hpp"

namespace ebcf {

// Machine-readable table output shared by the CLI subcommands.  Every row
// is rendered either as CSV (header row, LF endings, minimal quoting) or as
// a versioned JSON envelope {"schema_version", "command", "rows": [...]}.
// Exact integers and rationals are kept in full precision (JSON strings);
// NaN renders as "nan" in CSV and null in JSON.

inline constexpr int kSchemaVersion = 1;

enum class OutFormat { csv, json };
OutFormat parse_format(const std::string& s);

// One cell; monostate renders as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, std::string, long, Int, Rat, double, bool>;

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;  // each row as long as columns
};

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

// Render and write to path ("" or "-" means stdout).
void write_table(const Table& t, OutFormat f, const std::string& out_path);

// "p" or "p/q" in canonical form.
std::string rat_str(const Rat& r);

}  // namespace ebcf
