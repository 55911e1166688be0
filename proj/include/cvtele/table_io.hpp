#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "cvtele/sweep.hpp"

namespace cvtele {

enum class OutputFormat { Csv, Json };

std::optional<OutputFormat> parse_output_format(std::string_view name) noexcept;

/// 17 significant digits, '.' decimal separator: round-trips every double.
std::string format_number(double value);

/// Header row, then one line per grid point; LF line endings.
void write_csv(const SweepTable& table, std::ostream& out);

/// Array of flat objects keyed by the header names.
void write_json(const SweepTable& table, std::ostream& out);

void write_table(const SweepTable& table, OutputFormat format, std::ostream& out);

}  // namespace cvtele
