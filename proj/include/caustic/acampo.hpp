#pragma once

#include <string>
#include <vector>

#include "caustic/virtualmorse.hpp"

namespace caustic {

struct Divide {
    struct Region {
        int id;
        int sign;  // -1 region where the function is negative (a minimum), +1 a maximum
    };
    struct Corner {
        int dp;
        int region;
        int position;  // 0..3 counterclockwise around the double point
    };
    struct Edge {
        int region_a, region_b;
    };
    std::string cls;
    std::vector<int> double_points;
    std::vector<Region> regions;
    std::vector<Corner> corners;
    std::vector<Edge> edges;
};

// Vertices ordered minima, double points, maxima. Double point / region entries
// count shared corners, region / region entries are minus the shared edges.
VirtualMorsification seed_from_divide(const Divide& d);

// Divide of -f: region signs reversed.
Divide symmetrize(const Divide& d);

}  // namespace caustic
