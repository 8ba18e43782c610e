#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace induction::cli {

/// Reads `key = value` lines; blank lines and lines starting with '#' or ';'
/// are skipped. Throws std::runtime_error if the file cannot be read or a
/// line has no '='.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path);

/// Returns `args` with `--key value` appended for every config entry whose
/// flag is not already present, so command-line flags take precedence. The
/// config path is taken from a `--config <path>` (or `--config=<path>`)
/// argument; without one the arguments are returned unchanged.
std::vector<std::string> merge_config_arguments(std::vector<std::string> args);

}  // namespace induction::cli
