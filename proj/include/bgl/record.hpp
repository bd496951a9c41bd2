#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>

namespace bgl {

inline constexpr char kArtifactVersion[] = "1.0.0";

// One reproducible result row. Replaying `params` through the same
// subcommand reproduces `outputs` bit-for-bit. CSV streams carry only the
// outputs (timings live in the JSON form and the manifest, so CSV bytes are
// scheduling-independent).
struct ExperimentRecord {
  std::string experiment_id;
  std::string subcommand;
  std::map<std::string, std::string> params;
  std::map<std::string, std::string> outputs;
  std::int64_t runtime_ms = 0;
  std::string artifact_version = kArtifactVersion;
};

// Shortest round-trip decimal form; deterministic and locale-free.
std::string format_double(double v);
std::string format_int(std::int64_t v);
std::string format_uint(std::uint64_t v);

// RFC 4180 CSV: header from the sorted output keys, LF line endings, UTF-8.
// Rows are emitted in the given order (callers keep records sorted by their
// primary key). InternalError when records disagree on their key sets.
void write_csv(std::ostream& os, std::span<const ExperimentRecord> records);

// Full records, one JSON object per line.
void write_json_lines(std::ostream& os,
                      std::span<const ExperimentRecord> records);

// Run manifest: subcommand, params, artifact version, record count.
std::string manifest_json(const std::string& subcommand,
                          const std::map<std::string, std::string>& params,
                          std::size_t record_count);

}  // namespace bgl
