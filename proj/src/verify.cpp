#include <set>

#include "caustic/critlab.hpp"
#include "caustic/errors.hpp"

namespace caustic {

RecipeReport verify_recipes(const SingularityClass& c, bool collect_only, const CritOptions& opt) {
    RecipeReport rep;
    rep.cls = c;
    rep.predicted = predicted_components(c);
    std::set<Passport> seen;
    std::set<int> indices;
    bool all = true;
    for (auto& r : recipes(c)) {
        RecipeCheck ch;
        ch.name = r.name;
        ch.expected = r.expected;
        try {
            auto pts = critical_points(r.polynomial, opt);
            ch.complex_points = static_cast<int>(pts.size());
            ch.computed = passport(pts, 2);
            ch.gradient_index = gradient_index(ch.computed);
            ch.ok = ch.computed == ch.expected && ch.complex_points == c.mu;
            if (!ch.ok)
                ch.error = "computed " + passport_str(ch.computed) + " with " + std::to_string(ch.complex_points) +
                           " points, expected " + passport_str(ch.expected) + " with " + std::to_string(c.mu);
            seen.insert(ch.computed);
            indices.insert(ch.gradient_index);
        } catch (const Error& e) {
            ch.error = e.what();
        }
        all = all && ch.ok;
        if (!ch.ok && !collect_only)
            throw Error(ErrorCode::RecipeMismatch, c.name() + " recipe '" + r.name + "': " + ch.error);
        rep.checks.push_back(std::move(ch));
    }
    rep.distinct = static_cast<int>(seen.size());
    rep.ok = all && rep.distinct == rep.predicted && static_cast<int>(rep.checks.size()) == rep.predicted &&
             indices.size() == 1;
    if (!rep.ok && !collect_only)
        throw Error(ErrorCode::RecipeMismatch, c.name() + ": " + std::to_string(rep.distinct) +
                                                   " distinct passports, expected " + std::to_string(rep.predicted));
    return rep;
}

nlohmann::json to_json(const RecipeReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (auto& c : r.checks) {
        nlohmann::json j{{"name", c.name}, {"expected", c.expected}, {"computed", c.computed},
                         {"critical_points", c.complex_points}, {"gradient_index", c.gradient_index}, {"ok", c.ok}};
        if (!c.error.empty()) j["error"] = c.error;
        checks.push_back(j);
    }
    return {{"class", r.cls.name()}, {"recipes", checks}, {"distinct", r.distinct}, {"predicted", r.predicted},
            {"ok", r.ok}};
}

}  // namespace caustic
