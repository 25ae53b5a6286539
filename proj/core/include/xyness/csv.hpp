// csv.hpp: Locale-independent CSV output with round-trippable doubles

#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

namespace xyness::csv {

// Shortest text that round-trips at 17 significant digits; "nan"/"inf"/"-inf" otherwise.
std::string format_double(double x);

class Writer {
public:
    // Opens (truncates) `path`; throws IoError on failure.
    Writer(const std::filesystem::path& path, const std::vector<std::string>& header);

    Writer& cell(const std::string& text);
    Writer& cell(double x);
    Writer& cell(long long x);
    Writer& cell(int x) { return cell(static_cast<long long>(x)); }
    void end_row();
    void close();

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::size_t columns_{0};
    std::size_t in_row_{0};
};

} // namespace xyness::csv
