#include "uavplace/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace uavplace {

ValidationResult validate_scenario(const Scenario& s) {
    ValidationResult r;

    bool area_ok = std::isfinite(s.area.xmin) && std::isfinite(s.area.xmax) &&
                   std::isfinite(s.area.ymin) && std::isfinite(s.area.ymax) &&
                   s.area.xmin <= s.area.xmax && s.area.ymin <= s.area.ymax;
    if (!area_ok) r.violations.push_back("invalid area");

    if (s.k < 1 || static_cast<std::size_t>(s.k) > s.users.size())
        r.violations.push_back("k out of range");

    std::set<std::string> seen;
    for (const User& u : s.users) {
        if (!seen.insert(u.id).second)
            r.violations.push_back("duplicate id '" + u.id + "'");
        if (!(std::isfinite(u.x) && std::isfinite(u.y)))
            r.violations.push_back("non-finite position for user '" + u.id + "'");
        else if (area_ok && !s.area.contains(u.x, u.y))
            r.violations.push_back("user '" + u.id + "' outside area");
        if (!(u.load > 0.0) || !std::isfinite(u.load))
            r.violations.push_back("non-positive load for user '" + u.id + "'");
    }
    return r;
}

double median_load(const Scenario& s) {
    std::vector<double> loads;
    loads.reserve(s.users.size());
    for (const User& u : s.users) loads.push_back(u.load);
    std::sort(loads.begin(), loads.end());
    std::size_t n = loads.size();
    if (n == 0) return 0.0;
    if (n % 2 == 1) return loads[n / 2];
    return 0.5 * (loads[n / 2 - 1] + loads[n / 2]);
}

std::vector<std::size_t> order_by_id(const Scenario& s) {
    std::vector<std::size_t> idx(s.users.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return s.users[a].id < s.users[b].id;
    });
    return idx;
}

}  // namespace uavplace
