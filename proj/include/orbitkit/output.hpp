#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace orbitkit {

struct OutputConfig {
    enum class Format { Csv, Json };

    Format format = Format::Csv;
    int digits = 12;
    std::optional<std::string> path;
};

// Small integers become JSON numbers; everything else (big integers,
// rationals, fixed-point reals) is carried as text in both formats.
using Cell = std::variant<std::int64_t, std::string>;

/// A self-describing result table. CSV: header line, one line per row, then
/// "# key=value" metadata lines. JSON: {"meta": {...}, "rows": [{...}, ...]}.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, std::string>> meta;

    void add_meta(std::string key, std::string value) { meta.emplace_back(std::move(key), std::move(value)); }
};

void write_table(const ResultTable& table, const OutputConfig& config, std::ostream& out);

} // namespace orbitkit
