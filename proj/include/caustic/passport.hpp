#pragma once

#include <string>
#include <vector>

namespace caustic {

// Counts of real Morse critical points by index.
using Passport = std::vector<int>;

inline std::string passport_str(const Passport& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

}  // namespace caustic
