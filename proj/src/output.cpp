#include "bohr/output.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "bohr/enclosure.hpp"
#include "bohr/errors.hpp"

namespace bohr {
namespace {

Json round_numbers(const Json& j, int digits) {
  if (j.is_number_float()) return round_to_digits(j.get<double>(), digits);
  if (j.is_array() || j.is_object()) {
    Json out = j;
    for (auto it = out.begin(); it != out.end(); ++it) *it = round_numbers(*it, digits);
    return out;
  }
  return j;
}

std::string render_scalar(const Json& j, int digits) {
  if (j.is_number_float()) return format_number(j.get<double>(), digits);
  if (j.is_string()) return j.get<std::string>();
  return round_numbers(j, digits).dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Enclosure& e) {
  return os << e.value << " +/- " << e.error;
}

const char* to_string(Provenance p) noexcept { return p == Provenance::Cited ? "cited" : "computed"; }

OutputFormat parse_output_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw InvalidArgument("unknown output format '" + name + "'");
}

double round_to_digits(double v, int digits) { return std::strtod(format_number(v, digits).c_str(), nullptr); }

std::string format_number(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

Json OutputRecord::to_json(int digits) const {
  Json j;
  j["command"] = command;
  j["parameters"] = round_numbers(parameters, digits);
  j["value"] = round_numbers(value, digits);
  j["error_bound"] = error_bound ? Json(round_to_digits(*error_bound, digits)) : Json(nullptr);
  j["citations"] = citations;
  j["provenance"] = to_string(provenance);
  return j;
}

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, OutputFormat format,
                   int digits) {
  switch (format) {
    case OutputFormat::Json: {
      if (records.size() == 1) {
        out << records.front().to_json(digits).dump(2) << '\n';
      } else {
        Json all = Json::array();
        for (const auto& r : records) all.push_back(r.to_json(digits));
        out << all.dump(2) << '\n';
      }
      break;
    }
    case OutputFormat::Csv: {
      out << "command,value,error_bound,provenance,citations,parameters\n";
      for (const auto& r : records) {
        out << csv_field(r.command) << ',' << csv_field(render_scalar(r.value, digits)) << ','
            << (r.error_bound ? format_number(*r.error_bound, digits) : "") << ',' << to_string(r.provenance)
            << ',' << csv_field(join(r.citations, "; ")) << ','
            << csv_field(round_numbers(r.parameters, digits).dump()) << '\n';
      }
      break;
    }
    case OutputFormat::Text: {
      for (const auto& r : records) {
        out << r.command << " [" << to_string(r.provenance) << "]\n";
        if (!r.parameters.empty()) {
          std::vector<std::string> params;
          for (const auto& [key, val] : r.parameters.items()) params.push_back(key + "=" + render_scalar(val, digits));
          out << "  parameters: " << join(params, ", ") << '\n';
        }
        if (r.value.is_object()) {
          for (const auto& [key, val] : r.value.items()) out << "  " << key << ": " << render_scalar(val, digits) << '\n';
        } else {
          out << "  value: " << render_scalar(r.value, digits) << '\n';
        }
        if (r.error_bound) out << "  error_bound: " << format_number(*r.error_bound, digits) << '\n';
        if (!r.citations.empty()) out << "  citations: " << join(r.citations, "; ") << '\n';
      }
      break;
    }
  }
}

}  // namespace bohr
