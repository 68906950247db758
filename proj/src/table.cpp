#include "partlayers/table.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace partlayers {

namespace {

std::string csv_field(const Cell& cell)
{
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& s) const
        {
            if (s.find_first_of(",\"\n") == std::string::npos)
                return s;
            std::string out = "\"";
            for (char ch : s) {
                if (ch == '"')
                    out += '"';
                out += ch;
            }
            return out + '"';
        }
    };
    return std::visit(Visitor{}, cell);
}

void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out)
        throw std::runtime_error("write to " + path.string() + " failed");
}

} // namespace

std::string to_csv(const Table& table)
{
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i)
            out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            out += csv_field(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table)
{
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i)
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, std::monostate>)
                        obj[table.columns[i]] = nullptr;
                    else
                        obj[table.columns[i]] = v;
                },
                row[i]);
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

void write_table(const Table& table, const std::filesystem::path& dir, OutputFormat format)
{
    if (format != OutputFormat::json)
        write_file(dir / (table.stem + ".csv"), to_csv(table));
    if (format != OutputFormat::csv)
        write_file(dir / (table.stem + ".json"), to_json(table));
}

} // namespace partlayers
