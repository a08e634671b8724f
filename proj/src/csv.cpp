#include "leosim/csv.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace leosim {

std::string fmt_g6(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string fmt_int(long long v) { return std::to_string(v); }

CsvWriter::CsvWriter(const std::string& path, const std::string& header) : path_(path) {
    out_.open(path, std::ios::binary);  // binary keeps '\n' endings everywhere
    if (!out_) throw std::runtime_error("cannot open output file: " + path);
    out_ << header << '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
}

bool CsvWriter::close() {
    out_.flush();
    const bool ok = out_.good();
    out_.close();
    return ok;
}

}  // namespace leosim
