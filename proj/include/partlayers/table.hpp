#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace partlayers {

/// One output value. monostate is written as an empty CSV field and as JSON
/// null.
using Cell = std::variant<std::monostate, std::int64_t, std::string, bool>;

/// A named dataset with fixed columns, written as `<stem>.csv` and/or
/// `<stem>.json` (array of objects keyed by column name).
struct Table {
    std::string stem;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    template <typename... Ts>
    void add(Ts&&... values)
    {
        rows.push_back({to_cell(std::forward<Ts>(values))...});
    }

private:
    template <typename T>
    static Cell to_cell(T&& v)
    {
        using U = std::remove_cvref_t<T>;
        if constexpr (std::is_same_v<U, bool> || std::is_same_v<U, std::monostate>)
            return Cell{v};
        else if constexpr (std::is_integral_v<U>)
            return Cell{static_cast<std::int64_t>(v)};
        else
            return Cell{std::string(std::forward<T>(v))};
    }
};

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

enum class OutputFormat { csv, json, both };

/// Writes the table under `dir` in the requested format(s). Throws
/// std::runtime_error if a file cannot be written.
void write_table(const Table& table, const std::filesystem::path& dir, OutputFormat format);

} // namespace partlayers
