#pragma once

#include <cstdint>

#include "uavplace/model.hpp"

namespace uavplace::scenario {

// Uniform user positions over `area` with two-level loads: each user is
// independently high-load with probability high_fraction. Per user the draw
// order is x, y, level; ids are "u0000", "u0001", ... in draw order. Fully
// determined by seed.
Scenario generate(std::uint64_t seed, int n_users, const Rect& area, double low_load,
                  double high_load, double high_fraction, int k);

// The border-stress construction: k well-separated uniform user groups plus
// n_border_highload high-load users placed within 10% of the inter-group
// distance around the midpoints between adjacent group centers. Group users
// carry low_load, border users high_load.
Scenario generate_border_stress(std::uint64_t seed, int n_users, const Rect& area, int k,
                                int n_border_highload, double low_load = 1.0,
                                double high_load = 8.0);

}  // namespace uavplace::scenario
