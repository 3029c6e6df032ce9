#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "caustic/enumerator.hpp"

namespace caustic {

// A table column: mirror passports (m- and m+ exchanged) of equal size share one column.
struct TableColumn {
    std::vector<std::pair<int, int>> labels;  // (M, m_minus)
    std::size_t size = 0;
    bool operator==(const TableColumn&) const = default;
};

std::vector<TableColumn> table_columns(const Enumeration& e);

// {class, total, components: [{size, passport, all_real}], stats: [{M, m_minus, sizes}]}
nlohmann::json to_json(const Enumeration& e);
// Two rows as in the published statistics tables: passport data, then sizes.
std::string to_csv(const Enumeration& e);

// Published values.
struct PublishedTotals {
    std::size_t total;
    std::size_t components;
    std::size_t all_real_components;
    std::vector<TableColumn> columns;
};
const PublishedTotals& published_e7();
const PublishedTotals& published_e8();

struct TableEntry {
    int table = 0;
    std::string row;   // class or column label
    std::string what;  // quantity compared
    nlohmann::json published, computed;
    bool ok = false;
};

// Table 1: predicted component counts against recipe books (and enumerations where a seed ships).
std::vector<TableEntry> table1_entries(const EnumerateOptions& opt = {});
// Tables 2 and 3: E7 and E8 statistics against an enumeration.
std::vector<TableEntry> statistics_entries(int table, const Enumeration& e);

nlohmann::json to_json(const TableEntry& t);

}  // namespace caustic
