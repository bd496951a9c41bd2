#include "bgl/record.hpp"

#include <charconv>
#include <cmath>

#include <nlohmann/json.hpp>

#include "bgl/errors.hpp"

namespace bgl {
namespace {

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

nlohmann::json record_json(const ExperimentRecord& r) {
  nlohmann::json j;
  j["experiment_id"] = r.experiment_id;
  j["subcommand"] = r.subcommand;
  j["params"] = r.params;
  j["outputs"] = r.outputs;
  j["runtime_ms"] = r.runtime_ms;
  j["artifact_version"] = r.artifact_version;
  return j;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_int(std::int64_t v) { return std::to_string(v); }
std::string format_uint(std::uint64_t v) { return std::to_string(v); }

void write_csv(std::ostream& os, std::span<const ExperimentRecord> records) {
  if (records.empty()) {
    os << "\n";
    return;
  }
  const auto& first = records.front().outputs;
  std::string header;
  for (const auto& [key, value] : first) {
    if (!header.empty()) header += ',';
    header += csv_quote(key);
  }
  os << header << "\n";
  for (const auto& rec : records) {
    if (rec.outputs.size() != first.size()) {
      throw InternalError("write_csv: heterogeneous records");
    }
    std::string line;
    auto it = first.begin();
    for (const auto& [key, value] : rec.outputs) {
      if (key != it->first) {
        throw InternalError("write_csv: heterogeneous records");
      }
      ++it;
      if (!line.empty()) line += ',';
      line += csv_quote(value);
    }
    os << line << "\n";
  }
}

void write_json_lines(std::ostream& os,
                      std::span<const ExperimentRecord> records) {
  for (const auto& rec : records) {
    os << record_json(rec).dump() << "\n";
  }
}

std::string manifest_json(const std::string& subcommand,
                          const std::map<std::string, std::string>& params,
                          std::size_t record_count) {
  nlohmann::json j;
  j["artifact_version"] = kArtifactVersion;
  j["subcommand"] = subcommand;
  j["params"] = params;
  j["records"] = record_count;
  return j.dump(2) + "\n";
}

}  // namespace bgl
