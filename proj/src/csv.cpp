#include "tricycle/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tricycle {

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw std::out_of_range("csv: no column named " + name);
}

void write_csv(const std::string& path, const CsvTable& table) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc);
        if (!os) throw std::runtime_error("csv: cannot open " + tmp);
        for (std::size_t i = 0; i < table.header.size(); ++i) {
            if (i) os << ',';
            os << table.header[i];
        }
        os << '\n';
        char buf[40];
        for (const auto& row : table.rows) {
            if (row.size() != table.header.size()) {
                throw std::invalid_argument("csv: row width does not match header");
            }
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) os << ',';
                std::snprintf(buf, sizeof(buf), "%.17g", row[i]);
                os << buf;
            }
            os << '\n';
        }
        if (!os.good()) throw std::runtime_error("csv: write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

CsvTable read_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("csv: cannot open " + path);
    CsvTable table;
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("csv: empty file " + path);
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) table.header.push_back(cell);
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != table.header.size()) {
            throw std::runtime_error("csv: ragged row in " + path);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace tricycle
