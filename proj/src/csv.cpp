// SPDX-License-Identifier: Apache-2.0
#include "leosim/csv.hpp"

#include <cstdio>

#include "leosim/util.hpp"

namespace leosim {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path,
                     const std::vector<std::string>& header)
    : out_(path, std::ios::binary) {
    require(out_.good(), "csv: cannot open " + path.string());
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out_ << ',';
        out_ << header[i];
    }
    out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out_ << ',';
        out_ << format_number(values[i]);
    }
    out_ << '\n';
}

}  // namespace leosim
