#include "cvtele/table_io.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <json.hpp>

namespace cvtele {

std::optional<OutputFormat> parse_output_format(std::string_view name) noexcept {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string format_number(double value) { return fmt::format("{:.17g}", value); }

void write_csv(const SweepTable& table, std::ostream& out) {
  out << fmt::format("{}\n", fmt::join(table.header, ","));
  for (Eigen::Index r = 0; r < table.values.rows(); ++r) {
    for (Eigen::Index c = 0; c < table.values.cols(); ++c) {
      if (c > 0) out << ',';
      out << format_number(table.values(r, c));
    }
    out << '\n';
  }
}

void write_json(const SweepTable& table, std::ostream& out) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < table.values.rows(); ++r) {
    nlohmann::ordered_json row;
    for (Eigen::Index c = 0; c < table.values.cols(); ++c) {
      row[table.header[static_cast<std::size_t>(c)]] = table.values(r, c);
    }
    rows.push_back(std::move(row));
  }
  out << rows.dump(2) << '\n';
}

void write_table(const SweepTable& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    write_json(table, out);
  } else {
    write_csv(table, out);
  }
}

}  // namespace cvtele
