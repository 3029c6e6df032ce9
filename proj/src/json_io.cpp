#include <cctype>
#include "caustic/json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "caustic/errors.hpp"

#ifndef CAUSTIC_DATA_DIR
#define CAUSTIC_DATA_DIR "data"
#endif

namespace caustic {

namespace {

json square(const std::vector<int>& m, int n) {
    json rows = json::array();
    for (int i = 0; i < n; ++i) rows.push_back(std::vector<int>(m.begin() + i * n, m.begin() + (i + 1) * n));
    return rows;
}

std::vector<int> flat(const json& rows, int n) {
    std::vector<int> m;
    if (!rows.is_array() || (int)rows.size() != n) throw Error(ErrorCode::InvalidSeed, "matrix must be mu x mu");
    for (auto& r : rows) {
        if (!r.is_array() || (int)r.size() != n) throw Error(ErrorCode::InvalidSeed, "matrix must be mu x mu");
        for (auto& v : r) m.push_back(v.get<int>());
    }
    return m;
}

}  // namespace

json to_json(const VirtualMorsification& vm) {
    json reality = json::array();
    for (int i = 0; i < vm.mu; ++i) {
        if (vm.partner[i] < 0) reality.push_back("real");
        else reality.push_back(vm.partner[i] > i ? "upper" : "lower");
    }
    return {{"class", vm.cls},
            {"mu", vm.mu},
            {"intersections", square(vm.intersections, vm.mu)},
            {"conjugation", square(vm.conjugation, vm.mu)},
            {"reality", reality},
            {"morse_indices", vm.morse_indices},
            {"negatives", vm.negatives},
            {"gradient_index", vm.gradient_index}};
}

VirtualMorsification vm_from_json(const json& j) {
    try {
        VirtualMorsification vm;
        vm.cls = j.value("class", "");
        vm.mu = j.at("mu").get<int>();
        if (vm.mu < 1 || vm.mu > kMaxRank) throw Error(ErrorCode::InvalidSeed, "mu out of range");
        vm.intersections = flat(j.at("intersections"), vm.mu);
        vm.morse_indices = j.at("morse_indices").get<std::vector<int>>();
        vm.partner.assign(vm.mu, -1);
        if (j.contains("reality")) {
            auto r = j.at("reality").get<std::vector<std::string>>();
            if ((int)r.size() != vm.mu) throw Error(ErrorCode::InvalidSeed, "reality has wrong length");
            for (int i = 0; i < vm.mu; ++i) {
                if (r[i] == "upper") vm.partner[i] = i + 1;
                else if (r[i] == "lower") vm.partner[i] = i - 1;
                else if (r[i] != "real") throw Error(ErrorCode::InvalidSeed, "unknown reality marker " + r[i]);
            }
        }
        if (j.contains("conjugation")) vm.conjugation = flat(j.at("conjugation"), vm.mu);
        else if ((int)vm.morse_indices.size() == vm.mu)
            vm.conjugation = real_conjugation(vm.mu, vm.intersections, vm.morse_indices);
        else throw Error(ErrorCode::InvalidSeed, "conjugation required for a seed with non-real elements");
        vm.negatives = j.value("negatives", 0);
        vm.gradient_index = 0;
        for (int i : vm.morse_indices) vm.gradient_index += (i % 2 == 0) ? 1 : -1;
        if (j.contains("gradient_index") && j["gradient_index"].get<int>() != vm.gradient_index)
            throw Error(ErrorCode::InvalidSeed, "gradient_index disagrees with the Morse indices");
        validate(vm);
        return vm;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidSeed, e.what());
    }
}

json to_json(const Divide& d) {
    json regions = json::array(), corners = json::array(), edges = json::array();
    for (auto& r : d.regions) regions.push_back({{"id", r.id}, {"sign", r.sign}});
    for (auto& c : d.corners) corners.push_back({{"dp", c.dp}, {"region", c.region}, {"position", c.position}});
    for (auto& e : d.edges) edges.push_back({{"region_a", e.region_a}, {"region_b", e.region_b}});
    return {{"class", d.cls}, {"double_points", d.double_points}, {"regions", regions}, {"corners", corners}, {"edges", edges}};
}

Divide divide_from_json(const json& j) {
    try {
        Divide d;
        d.cls = j.value("class", "");
        d.double_points = j.at("double_points").get<std::vector<int>>();
        for (auto& r : j.at("regions")) d.regions.push_back({r.at("id").get<int>(), r.at("sign").get<int>()});
        for (auto& c : j.at("corners"))
            d.corners.push_back({c.at("dp").get<int>(), c.at("region").get<int>(), c.at("position").get<int>()});
        if (j.contains("edges"))
            for (auto& e : j.at("edges")) d.edges.push_back({e.at("region_a").get<int>(), e.at("region_b").get<int>()});
        return d;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidDivide, e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << j.dump(2) << "\n";
}

std::string data_dir() {
    if (const char* d = std::getenv("CAUSTIC_DATA")) return d;
    return CAUSTIC_DATA_DIR;
}

VirtualMorsification load_seed(const std::string& what) {
    namespace fs = std::filesystem;
    std::string path = what;
    if (!fs::exists(path)) {
        // shipped seeds by class name or file name, any letter case ("E7", "seeds/e7.json")
        std::string stem = fs::path(what).stem().string();
        auto lower = [](std::string s) {
            for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            return s;
        };
        path.clear();
        if (fs::is_directory(data_dir() + "/seeds"))
            for (auto& e : fs::directory_iterator(data_dir() + "/seeds"))
                if (lower(e.path().stem().string()) == lower(stem)) path = e.path().string();
        if (path.empty()) throw Error(ErrorCode::InvalidSeed, "no seed file or shipped seed named " + what);
    }
    json j = read_json_file(path);
    if (j.contains("double_points")) return seed_from_divide(divide_from_json(j));
    return vm_from_json(j);
}

}  // namespace caustic
