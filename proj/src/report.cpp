#include "caustic/report.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>

#include "caustic/catalog.hpp"
#include "caustic/critlab.hpp"
#include "caustic/errors.hpp"
#include "caustic/json_io.hpp"

namespace caustic {

namespace {

std::pair<int, int> passport_data(const Passport& p) {
    int M = 0;
    for (int m : p) M += m;
    return {M, p.empty() ? 0 : p[0]};
}

std::string label_str(const std::vector<std::pair<int, int>>& labels) {
    std::string s;
    for (auto& [M, m] : labels) {
        if (!s.empty()) s += " ";
        s += "(" + std::to_string(M) + "," + std::to_string(m) + ")";
    }
    return s;
}

nlohmann::json columns_json(const std::vector<TableColumn>& cols) {
    auto j = nlohmann::json::array();
    for (auto& c : cols) j.push_back({{"passport_data", label_str(c.labels)}, {"size", c.size}});
    return j;
}

}  // namespace

std::vector<TableColumn> table_columns(const Enumeration& e) {
    std::vector<bool> used(e.components.size(), false);
    std::vector<TableColumn> out;
    for (std::size_t i = 0; i < e.components.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        auto& c = e.components[i];
        TableColumn col{{passport_data(c.passport)}, c.size};
        Passport mirror(c.passport.rbegin(), c.passport.rend());
        if (mirror != c.passport)
            for (std::size_t j = i + 1; j < e.components.size(); ++j)
                if (!used[j] && e.components[j].passport == mirror && e.components[j].size == c.size) {
                    used[j] = true;
                    col.labels.push_back(passport_data(mirror));
                    break;
                }
        std::sort(col.labels.begin(), col.labels.end(),
                  [](auto& a, auto& b) { return std::pair(a.second, a.first) < std::pair(b.second, b.first); });
        out.push_back(col);
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.labels[0] < b.labels[0]; });
    return out;
}

nlohmann::json to_json(const Enumeration& e) {
    nlohmann::json j;
    j["class"] = e.cls;
    j["total"] = e.total();
    auto comps = nlohmann::json::array();
    for (auto& c : e.components)
        comps.push_back({{"size", c.size}, {"passport", c.passport}, {"all_real", c.all_real}});
    j["components"] = comps;
    auto st = nlohmann::json::array();
    for (auto& r : stats(e)) st.push_back({{"M", r.M}, {"m_minus", r.m_minus}, {"sizes", r.sizes}});
    j["stats"] = st;
    return j;
}

std::string to_csv(const Enumeration& e) {
    auto cols = table_columns(e);
    std::ostringstream a, b;
    a << "(M m_minus)";
    b << "number";
    for (auto& c : cols) {
        a << "," << label_str(c.labels);
        b << "," << c.size;
    }
    return a.str() + "\n" + b.str() + "\n";
}

const PublishedTotals& published_e7() {
    static const PublishedTotals t{8648,
                                   10,
                                   4,
                                   {{{{1, 0}}, 260},
                                    {{{3, 0}, {3, 1}}, 312},
                                    {{{5, 0}, {5, 2}}, 636},
                                    {{{5, 1}}, 348},
                                    {{{7, 0}, {7, 3}}, 2384},
                                    {{{7, 1}, {7, 2}}, 688}}};
    return t;
}

const PublishedTotals& published_e8() {
    static const PublishedTotals t{51468,
                                   15,
                                   5,
                                   {{{{0, 0}}, 1200},
                                    {{{2, 0}, {2, 1}}, 819},
                                    {{{4, 0}, {4, 2}}, 1195},
                                    {{{4, 1}}, 790},
                                    {{{6, 0}, {6, 3}}, 3227},
                                    {{{6, 1}, {6, 2}}, 1246},
                                    {{{8, 0}, {8, 4}}, 13599},
                                    {{{8, 1}, {8, 3}}, 3690},
                                    {{{8, 2}}, 1926}}};
    return t;
}

std::vector<TableEntry> table1_entries(const EnumerateOptions& opt) {
    std::vector<TableEntry> out;
    const char* classes[] = {"A1",  "A2",  "A3",  "A4",  "A5",  "A6",  "D4-", "D6-", "D8-", "D10-", "D4+",
                             "D6+", "D8+", "D5",  "-D5", "D7",  "D9",  "E6",  "-E6", "E7",  "E8"};
    for (const char* name : classes) {
        auto c = parse_class(name);
        const int published = predicted_components(c);
        auto rep = verify_recipes(c, true);
        out.push_back({1, name, "components (recipe passports)", published, rep.distinct,
                       rep.ok && rep.distinct == published});
        std::string seed = data_dir() + "/seeds/" + std::string(name) + ".json";
        if (std::filesystem::exists(seed)) {
            auto e = enumerate_all(load_seed(seed), opt);
            out.push_back({1, name, "components (enumeration)", published, e.components.size(),
                           static_cast<int>(e.components.size()) == published});
        }
    }
    return out;
}

std::vector<TableEntry> statistics_entries(int table, const Enumeration& e) {
    if (table != 2 && table != 3) throw Error(ErrorCode::ParseError, "statistics tables are 2 and 3");
    const auto& pub = table == 2 ? published_e7() : published_e8();
    std::vector<TableEntry> out;
    const std::string cls = table == 2 ? "E7" : "E8";
    out.push_back({table, cls, "total", pub.total, e.total(), e.total() == pub.total});
    out.push_back({table, cls, "components", pub.components, e.components.size(), e.components.size() == pub.components});
    std::size_t all_real = 0;
    for (auto& c : e.components) all_real += c.all_real;
    out.push_back({table, cls, "all-real components", pub.all_real_components, all_real,
                   all_real == pub.all_real_components});
    auto cols = table_columns(e);
    for (auto& p : pub.columns) {
        auto it = std::find_if(cols.begin(), cols.end(), [&](auto& c) { return c.labels == p.labels; });
        nlohmann::json got = nullptr;
        if (it != cols.end()) got = it->size;
        out.push_back({table, label_str(p.labels), "size", p.size, got, it != cols.end() && it->size == p.size});
    }
    out.push_back({table, cls, "columns", columns_json(pub.columns), columns_json(cols), cols == pub.columns});
    return out;
}

nlohmann::json to_json(const TableEntry& t) {
    return {{"table", t.table}, {"row", t.row},           {"quantity", t.what},
            {"published", t.published}, {"computed", t.computed}, {"ok", t.ok}};
}

}  // namespace caustic
