#include "uavplace/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "uavplace/errors.hpp"
#include "uavplace/rng.hpp"

namespace uavplace::scenario {

namespace {

std::string user_id(int i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "u%04d", i);
    return buf;
}

void check_common(int n_users, const Rect& area, int k) {
    if (n_users < 1) throw InvalidParams("n_users must be at least 1");
    if (k < 1 || k > n_users) throw InvalidParams("k out of range: need 1 <= k <= n_users");
    if (!(area.xmin < area.xmax) || !(area.ymin < area.ymax))
        throw InvalidParams("area must have positive extent");
    if (!std::isfinite(area.xmin) || !std::isfinite(area.xmax) || !std::isfinite(area.ymin) ||
        !std::isfinite(area.ymax))
        throw InvalidParams("area bounds must be finite");
}

double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

}  // namespace

Scenario generate(std::uint64_t seed, int n_users, const Rect& area, double low_load,
                  double high_load, double high_fraction, int k) {
    check_common(n_users, area, k);
    if (!(low_load > 0.0) || !(high_load > 0.0))
        throw InvalidParams("load levels must be positive");
    if (high_load < low_load) throw InvalidParams("high_load must be >= low_load");
    if (high_fraction < 0.0 || high_fraction > 1.0)
        throw InvalidParams("high_fraction must lie in [0, 1]");

    SplitMix64 rng(seed);
    Scenario s;
    s.area = area;
    s.k = k;
    s.users.reserve(static_cast<std::size_t>(n_users));
    for (int i = 0; i < n_users; ++i) {
        User u;
        u.id = user_id(i);
        u.x = rng.next_in(area.xmin, area.xmax);
        u.y = rng.next_in(area.ymin, area.ymax);
        u.load = rng.next_unit() < high_fraction ? high_load : low_load;
        s.users.push_back(std::move(u));
    }
    return s;
}

Scenario generate_border_stress(std::uint64_t seed, int n_users, const Rect& area, int k,
                                int n_border_highload, double low_load, double high_load) {
    check_common(n_users, area, k);
    if (n_border_highload < 0 || n_border_highload > n_users)
        throw InvalidParams("n_border_highload must lie in [0, n_users]");
    if (n_border_highload > 0 && k < 2)
        throw InvalidParams("border users need at least two groups (k >= 2)");
    if (!(low_load > 0.0) || !(high_load >= low_load))
        throw InvalidParams("load levels must be positive with high_load >= low_load");

    SplitMix64 rng(seed);
    Scenario s;
    s.area = area;
    s.k = k;
    s.users.reserve(static_cast<std::size_t>(n_users));

    // group centers evenly spaced along the horizontal midline; each group is a
    // square of half-extent 0.3 * slot so neighboring groups stay separated by
    // 40% of the slot width
    const double slot = area.width() / k;
    const double ymid = 0.5 * (area.ymin + area.ymax);
    const double half = std::min(0.3 * slot, 0.45 * area.height());
    auto group_cx = [&](int g) { return area.xmin + (g + 0.5) * slot; };

    const int n_regular = n_users - n_border_highload;
    for (int i = 0; i < n_regular; ++i) {
        int g = i % k;
        User u;
        u.id = user_id(i);
        u.x = rng.next_in(group_cx(g) - half, group_cx(g) + half);
        u.y = rng.next_in(ymid - half, ymid + half);
        u.load = low_load;
        s.users.push_back(std::move(u));
    }

    // border users around the midpoint of an adjacent-center pair, offset at
    // most 10% of the inter-group distance on each axis
    const double inter = slot;  // distance between adjacent group centers
    for (int b = 0; b < n_border_highload; ++b) {
        int pair = k >= 2 ? b % (k - 1) : 0;
        double mx = 0.5 * (group_cx(pair) + group_cx(pair + 1));
        User u;
        u.id = user_id(n_regular + b);
        u.x = clamp(mx + (rng.next_unit() - 0.5) * 0.2 * inter, area.xmin, area.xmax);
        u.y = clamp(ymid + (rng.next_unit() - 0.5) * 0.2 * inter, area.ymin, area.ymax);
        u.load = high_load;
        s.users.push_back(std::move(u));
    }
    return s;
}

}  // namespace uavplace::scenario
