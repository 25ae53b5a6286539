#include "xyness/manifest.hpp"

#include "xyness/error.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace xyness {

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string version_string() { return XYNESS_VERSION; }

namespace {
std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}
} // namespace

void write_manifest(const std::filesystem::path& dir, const RunManifest& m) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

    nlohmann::ordered_json j;
    j["command"] = m.command;
    j["version"] = version_string();
    j["created_utc"] = utc_timestamp();
    j["config_hash"] = m.config_hash;
    if (!m.config_json.empty()) j["config"] = nlohmann::json::parse(m.config_json);
    nlohmann::ordered_json timings = nlohmann::ordered_json::object();
    for (const auto& [stage, seconds] : m.timings) timings[stage] = seconds;
    j["timings_seconds"] = timings;
    j["warnings"] = m.warnings;
    j["exit_status"] = m.exit_status;

    std::ofstream out(dir / "manifest.json", std::ios::trunc);
    if (!out) throw IoError("cannot write " + (dir / "manifest.json").string());
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed: " + (dir / "manifest.json").string());
}

} // namespace xyness
