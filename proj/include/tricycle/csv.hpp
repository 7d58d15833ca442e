#pragma once

#include <string>
#include <vector>

namespace tricycle {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::size_t column(const std::string& name) const;  // throws if absent
};

/// Write with 17 significant digits (lossless double round-trip).
/// The file is written to a temporary path and renamed into place.
void write_csv(const std::string& path, const CsvTable& table);

CsvTable read_csv(const std::string& path);

}  // namespace tricycle
