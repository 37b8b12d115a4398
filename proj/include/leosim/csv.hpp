// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace leosim {

// Plain CSV writer with fixed numeric formatting ("%.*g", 12 significant
// digits), so identical data always produces identical bytes.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
    void row(const std::vector<double>& values);

private:
    std::ofstream out_;
};

std::string format_number(double v);

}  // namespace leosim
