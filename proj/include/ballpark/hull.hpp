#pragma once

#include <cstddef>
#include <vector>

#include "ballpark/types.hpp"

namespace ballpark {

// Closed halfspace {x : <normal, x> <= offset}, normal of unit length.
struct Halfspace {
    Point normal;
    double offset = 0.0;

    double signed_distance(const Point& p) const { return dot(normal, p) - offset; }
};

// Facet halfspaces of the convex hull. Supported inputs: any point set in
// d <= 3 with full-dimensional hull, or exactly the vertex set of a
// full-dimensional simplex in any d. Throws UnsupportedDimension /
// DegenerateHull otherwise.
std::vector<Halfspace> convex_hull_facets(const PointSet& points, const Tolerance& tol = {});

// Edges of the hull as index pairs (d = 2 or 3 only); used for the exact
// width search in d = 3.
std::vector<std::pair<std::size_t, std::size_t>> convex_hull_edges(const PointSet& points,
                                                                   const Tolerance& tol = {});

// Rank of the point set's affine hull (0 for a single point).
std::size_t affine_rank(const PointSet& points, double rel_tol = 1e-9);

}  // namespace ballpark
