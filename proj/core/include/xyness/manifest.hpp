// manifest.hpp: manifest.json written into every output directory

#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace xyness {

struct RunManifest {
    std::string command;     // "solve", "sweep", "size-scan", "oracle-check"
    std::string config_json; // echo of the effective configuration (JSON text)
    std::string config_hash; // 16 hex digits, FNV-1a of config_json
    std::vector<std::pair<std::string, double>> timings; // stage -> seconds
    std::vector<std::string> warnings;
    int exit_status{0};
};

// FNV-1a 64-bit hash rendered as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& text);

std::string version_string();

// Writes dir/manifest.json (creates dir). Throws IoError.
void write_manifest(const std::filesystem::path& dir, const RunManifest& manifest);

} // namespace xyness
