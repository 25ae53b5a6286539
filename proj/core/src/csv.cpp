#include "xyness/csv.hpp"

#include "xyness/error.hpp"

#include <charconv>
#include <cmath>

namespace xyness::csv {

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

Writer::Writer(const std::filesystem::path& path, const std::vector<std::string>& header)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc), columns_(header.size()) {
    if (!out_) throw IoError("cannot open " + path.string() + " for writing");
    for (const auto& h : header) cell(h);
    end_row();
}

Writer& Writer::cell(const std::string& text) {
    if (in_row_++ > 0) out_ << ',';
    if (text.find_first_of(",\"\n") != std::string::npos) {
        out_ << '"';
        for (char ch : text) {
            if (ch == '"') out_ << '"';
            out_ << ch;
        }
        out_ << '"';
    } else {
        out_ << text;
    }
    return *this;
}

Writer& Writer::cell(double x) { return cell(format_double(x)); }

Writer& Writer::cell(long long x) { return cell(std::to_string(x)); }

void Writer::end_row() {
    if (in_row_ != columns_)
        throw IoError(path_.string() + ": row has " + std::to_string(in_row_) + " cells, expected " +
                      std::to_string(columns_));
    out_ << '\n';
    in_row_ = 0;
    if (!out_) throw IoError("write failed: " + path_.string());
}

void Writer::close() {
    out_.close();
    if (out_.fail()) throw IoError("close failed: " + path_.string());
}

} // namespace xyness::csv
