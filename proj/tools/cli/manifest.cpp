#include "cli/manifest.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>

namespace induction::cli {

std::string artifact_version() {
#ifdef INDUCTION_VERSION
  return INDUCTION_VERSION;
#else
  return "unknown";
#endif
}

std::string utc_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
    char* end = nullptr;
    const long long value = std::strtoll(epoch, &end, 10);
    if (end != nullptr && *end == '\0') t = static_cast<std::time_t>(value);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  j["artifact_version"] = artifact_version;
  j["timestamp"] = timestamp;
  return j;
}

}  // namespace induction::cli
