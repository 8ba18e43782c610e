#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace induction::cli {

std::string artifact_version();

/// ISO-8601 UTC time of the run. SOURCE_DATE_EPOCH, when set, replaces the
/// wall clock so reruns can be made byte-identical.
std::string utc_timestamp();

struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::optional<std::uint64_t> seed;
  std::string artifact_version;
  std::string timestamp;

  [[nodiscard]] nlohmann::json to_json() const;
};

}  // namespace induction::cli
