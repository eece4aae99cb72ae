#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace bfwave {

// One emitted artifact: a provenance comment, a header row naming the
// columns, and rows of numbers or labels.  Numbers are always formatted with
// 17 significant digits so identical configurations give byte-identical
// output.
struct Table {
  std::string provenance;
  std::vector<std::string> columns;
  using Cell = std::variant<double, std::string>;
  std::vector<std::vector<Cell>> rows;
};

std::string format_value(double v);

void write_csv(std::ostream& out, const Table& t);

// Same content as the CSV, one object per row; NaN cells become null.
void write_json(std::ostream& out, const Table& t);

// format is "csv" or "json", anything else throws std::invalid_argument.
void write_table(std::ostream& out, const Table& t, const std::string& format);

}  // namespace bfwave
