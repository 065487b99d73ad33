#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ballpark/types.hpp"

namespace ballpark {

struct MebResult {
    Ball ball;
    std::vector<std::size_t> support;  // indices of the determining points, <= d+1
    std::size_t iterations = 0;        // support-ball recomputations
};

// Exact minimum enclosing ball via a randomized incremental walk with
// move-to-front, the recursion replaced by an explicit frame stack.
// The result is independent of the seed up to floating-point noise.
MebResult minimum_enclosing_ball(const PointSet& points, std::uint64_t seed = 0);

// Independent check: branch-and-bound enumeration over circumballs of
// affinely independent subsets of size <= d+1 (subset circumradius is
// monotone under inclusion, so branches above the incumbent are cut).
// Intended for small instances; throws InstanceTooLarge beyond n = 40 or
// d = 6.
MebResult meb_oracle(const PointSet& points);

struct EnclosureReport {
    double max_violation = 0.0;                // max over points of dist - radius
    std::optional<std::size_t> worst_index;    // point attaining it (n >= 1)
    bool enclosed = false;                     // max_violation within tolerance
};

EnclosureReport verify_enclosure(const Ball& ball, const PointSet& points,
                                 const Tolerance& tol = {});

}  // namespace ballpark
