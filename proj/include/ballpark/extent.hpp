#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ballpark/hull.hpp"
#include "ballpark/types.hpp"

namespace ballpark {

struct DiameterResult {
    double value = 0.0;
    std::pair<std::size_t, std::size_t> pair{0, 0};
    double shortest = 0.0;
    std::pair<std::size_t, std::size_t> shortest_pair{0, 0};
};

// Exact farthest and nearest pair by full enumeration. Needs n >= 2.
DiameterResult diameter(const PointSet& points);

struct WidthResult {
    double value = 0.0;
    Point direction;     // unit vector realizing the slab
    bool exact = false;  // true when the candidate set is provably complete
};

// Width of the convex hull. Exact for d <= 3 (facet normals plus, in
// d = 3, edge-edge perpendiculars), for simplex vertex sets in any d
// (complementary vertex bipartitions), and for flat sets (width 0).
// Anything else gets a seeded sampled upper bound with local refinement.
WidthResult width(const PointSet& points, std::uint64_t seed = 0);

// Largest ball inside the halfspace intersection: maximize r subject to
// <a_i, c> + r <= b_i. Throws LpInfeasible / LpUnbounded.
Ball chebyshev_inball(const std::vector<Halfspace>& facets);

struct ExtentProfile {
    double circumradius = 0.0;
    std::optional<double> inradius;  // empty outside supported dimensions
    double diameter = 0.0;
    double width = 0.0;
    bool width_exact = false;
    std::pair<std::size_t, std::size_t> diameter_pair{0, 0};
    Point width_direction;
    double shortest_pair = 0.0;  // nearest-pair distance, reported alongside
};

// All four measures of one set; flat sets report width 0 and inradius 0.
ExtentProfile extent_profile(const PointSet& points, std::uint64_t seed = 0);

}  // namespace ballpark
