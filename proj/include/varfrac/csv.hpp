#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace varfrac {

/// Round-trip decimal formatting; fixed so reruns produce byte-identical files.
inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string fmt(std::size_t v) { return std::to_string(v); }
inline std::string fmt(int v) { return std::to_string(v); }

/// Accumulates rows and writes them atomically (temp file + rename).
class CsvFile {
public:
    explicit CsvFile(std::string header) : header_(std::move(header)) {}

    void add_row(const std::string& row) { rows_.push_back(row); }
    std::size_t row_count() const { return rows_.size(); }

    void write(const std::filesystem::path& path) const {
        std::string text = header_;
        text += '\n';
        for (const auto& r : rows_) {
            text += r;
            text += '\n';
        }
        write_file_atomic(path, text);
    }

    static void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
        const std::filesystem::path tmp = path.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write " + tmp.string());
            out << text;
        }
        std::filesystem::rename(tmp, path);
    }

private:
    std::string header_;
    std::vector<std::string> rows_;
};

/// Joins cells with commas. Cells must not contain commas or newlines;
/// parameter lists inside a cell use ';' separators instead.
inline std::string csv_row(const std::vector<std::string>& cells) {
    std::string row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) row += ',';
        row += cells[i];
    }
    return row;
}

}  // namespace varfrac
