#include "orbitkit/output.hpp"

#include <ostream>

#include <json.hpp>

#include "orbitkit/errors.hpp"

namespace orbitkit {

namespace {

struct CsvCell {
    std::ostream& out;

    void operator()(std::int64_t v) const { out << v; }
    void operator()(const std::string& v) const
    {
        if (v.find_first_of(",\"\n") == std::string::npos) {
            out << v;
            return;
        }
        out << '"';
        for (char c : v) {
            out << (c == '"' ? "\"\"" : std::string(1, c));
        }
        out << '"';
    }
};

void write_csv(const ResultTable& table, std::ostream& out)
{
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "");
            std::visit(CsvCell{out}, row[i]);
        }
        out << '\n';
    }
    for (const auto& [key, value] : table.meta) {
        out << "# " << key << '=' << value << '\n';
    }
}

void write_json(const ResultTable& table, std::ostream& out)
{
    nlohmann::ordered_json doc;
    doc["meta"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.meta) {
        doc["meta"][key] = value;
    }
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit([&](const auto& v) { obj[table.columns[i]] = v; }, row[i]);
        }
        doc["rows"].push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

} // namespace

void write_table(const ResultTable& table, const OutputConfig& config, std::ostream& out)
{
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw InternalError("write_table: row width does not match header");
        }
    }
    if (config.format == OutputConfig::Format::Json) {
        write_json(table, out);
    } else {
        write_csv(table, out);
    }
}

} // namespace orbitkit
