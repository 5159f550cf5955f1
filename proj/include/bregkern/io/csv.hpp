#pragma once

#include "bregkern/io/files.hpp"

#include <fmt/format.h>

#include <filesystem>
#include <string>
#include <vector>

namespace bregkern {

/// Header row plus numeric rows, ',' separated, 17 significant digits.
[[nodiscard]] inline std::string render_csv(const std::vector<std::string>& header,
                                            const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i)
            out += ',';
        out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw ArgumentError("CSV row has " + std::to_string(row.size()) + " fields, header has " +
                                std::to_string(header.size()));
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            out += fmt::format("{:.17g}", row[i]);
        }
        out += '\n';
    }
    return out;
}

inline void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows) {
    write_text_file(path, render_csv(header, rows));
}

} // namespace bregkern
