#include "bfwave/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace bfwave {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const Table& t) {
  out << "# " << t.provenance << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out << ',';
    out << t.columns[i];
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (const double* d = std::get_if<double>(&row[i]))
        out << format_value(*d);
      else
        out << std::get<std::string>(row[i]);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& t) {
  nlohmann::ordered_json doc;
  doc["provenance"] = t.provenance;
  doc["columns"] = t.columns;
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto& jrow = rows.emplace_back(nlohmann::ordered_json::array());
    for (const auto& cell : row) {
      if (const double* d = std::get_if<double>(&cell)) {
        if (std::isnan(*d))
          jrow.push_back(nullptr);
        else
          jrow.push_back(*d);
      } else {
        jrow.push_back(std::get<std::string>(cell));
      }
    }
  }
  out << doc.dump(2) << '\n';
}

void write_table(std::ostream& out, const Table& t, const std::string& format) {
  if (format == "csv")
    write_csv(out, t);
  else if (format == "json")
    write_json(out, t);
  else
    throw std::invalid_argument("unknown output format: " + format);
}

}  // namespace bfwave
