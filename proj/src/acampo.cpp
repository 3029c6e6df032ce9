#include "caustic/acampo.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "caustic/errors.hpp"

namespace caustic {

VirtualMorsification seed_from_divide(const Divide& d) {
    auto bad = [](const std::string& m) { throw Error(ErrorCode::InvalidDivide, m); };
    std::map<int, int> region_sign;
    for (auto& r : d.regions) {
        if (r.sign != 1 && r.sign != -1) bad("region sign must be +1 or -1");
        if (!region_sign.emplace(r.id, r.sign).second) bad("duplicate region id");
    }
    std::set<int> dps(d.double_points.begin(), d.double_points.end());
    if (dps.size() != d.double_points.size()) bad("duplicate double point id");

    std::vector<int> order;  // vertex ids: regions as (id), double points as (-1 - id)
    std::vector<int> idx;
    for (auto& r : d.regions)
        if (r.sign < 0) order.push_back(r.id), idx.push_back(0);
    for (int p : d.double_points) order.push_back(-1 - p), idx.push_back(1);
    for (auto& r : d.regions)
        if (r.sign > 0) order.push_back(r.id), idx.push_back(2);
    const int mu = static_cast<int>(order.size());
    if (mu == 0 || mu > kMaxRank) bad("divide size out of range");
    std::map<int, int> pos;
    for (int i = 0; i < mu; ++i) pos[order[i]] = i;

    std::vector<int> G(mu * mu, 0);
    for (int i = 0; i < mu; ++i) G[i * mu + i] = -2;
    std::map<int, std::map<int, int>> seen;  // dp -> position -> sign
    for (auto& c : d.corners) {
        if (!dps.count(c.dp)) bad("corner refers to unknown double point");
        auto rs = region_sign.find(c.region);
        if (rs == region_sign.end()) bad("corner refers to unknown region");
        if (c.position < 0 || c.position > 3) bad("corner position must be 0..3");
        auto& at = seen[c.dp];
        if (at.count(c.position)) bad("corner position used twice");
        at[c.position] = rs->second;
        for (auto& [q, s] : at)
            if ((q - c.position) % 2 == 0 ? s != rs->second : s == rs->second)
                bad("region signs must alternate around a double point");
        int a = pos[-1 - c.dp], b = pos[c.region];
        G[a * mu + b] += 1;
        G[b * mu + a] += 1;
    }
    for (auto& e : d.edges) {
        auto a = region_sign.find(e.region_a), b = region_sign.find(e.region_b);
        if (a == region_sign.end() || b == region_sign.end()) bad("edge refers to unknown region");
        if (a->second == b->second) bad("edge joins regions of equal sign");
        int i = pos[e.region_a], j = pos[e.region_b];
        G[i * mu + j] -= 1;
        G[j * mu + i] -= 1;
    }

    VirtualMorsification vm;
    vm.cls = d.cls;
    vm.mu = mu;
    vm.intersections = G;
    vm.morse_indices = idx;
    vm.partner.assign(mu, -1);
    vm.conjugation = real_conjugation(mu, G, idx);
    vm.negatives = static_cast<int>(std::count(idx.begin(), idx.end(), 0));
    for (int i : idx) vm.gradient_index += (i % 2 == 0) ? 1 : -1;
    try {
        validate(vm);
    } catch (const Error& e) {
        bad(std::string("divide does not give a consistent seed: ") + e.what());
    }
    return vm;
}

Divide symmetrize(const Divide& d) {
    Divide r = d;
    if (!r.cls.empty()) r.cls = r.cls[0] == '-' ? r.cls.substr(1) : "-" + r.cls;
    for (auto& g : r.regions) g.sign = -g.sign;
    return r;
}

}  // namespace caustic
