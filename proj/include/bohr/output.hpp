#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace bohr {

using Json = nlohmann::ordered_json;

enum class Provenance { Computed, Cited };
enum class OutputFormat { Text, Json, Csv };

const char* to_string(Provenance p) noexcept;
/// Throws InvalidArgument for anything but text, json or csv.
OutputFormat parse_output_format(const std::string& name);

/// One CLI result. Every record carries the same six fields regardless of
/// format so downstream tooling can rely on the schema.
struct OutputRecord {
  std::string command;
  Json parameters = Json::object();
  /// A number or a structured payload.
  Json value;
  std::optional<double> error_bound;
  std::vector<std::string> citations;
  Provenance provenance = Provenance::Computed;

  /// Floating-point numbers are rounded to `digits` significant digits.
  Json to_json(int digits) const;
};

/// Rounds to `digits` significant decimal digits.
double round_to_digits(double v, int digits);
std::string format_number(double v, int digits);

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, OutputFormat format,
                   int digits);

}  // namespace bohr
