#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "ballpark/hull.hpp"
#include "ballpark/types.hpp"

namespace ballpark {

struct HullProjection {
    Point point;                  // nearest point of conv(pts) to the target
    std::vector<double> weights;  // convex coefficients over all of pts
    double dist = 0.0;
};

// Nearest point of the convex hull of `pts` to `target`, by Wolfe's
// min-norm-point algorithm on the translated set. Exact up to the small
// linear solves it performs.
HullProjection project_onto_hull(const std::vector<Point>& pts, const Point& target);

double distance_to_hull(const std::vector<Point>& pts, const Point& target);

// Projection of z onto {x : <a_i,x> <= b_i} by a primal active-set method
// started from a feasible point. Throws LpInfeasible on empty polyhedra.
Point project_onto_polyhedron(const std::vector<Halfspace>& facets, const Point& z);

// A convex set in one of three concrete representations.
struct ConvexSetHandle {
    std::variant<PointSet, std::vector<Halfspace>, Ball> rep;

    static ConvexSetHandle hull(PointSet ps) { return {std::move(ps)}; }
    static ConvexSetHandle polytope(std::vector<Halfspace> hs) { return {std::move(hs)}; }
    static ConvexSetHandle ball(Ball b) { return {std::move(b)}; }

    bool lp_representable() const { return !std::holds_alternative<Ball>(rep); }
    std::size_t dim() const;
    Point project(const Point& p) const;
    double distance(const Point& p) const;
    Point some_point() const;
};

// A point lying in every set (within 1e-9 * scale), or nullopt. Families
// of hulls and polytopes go through one exact linear feasibility solve;
// families containing balls fall back to cyclic projections.
std::optional<Point> hulls_common_point(const std::vector<ConvexSetHandle>& sets);

// Projection of z onto the intersection of the sets via Dykstra's
// alternating scheme; returns nullopt when the iteration does not reach
// a point within `tol` of every set.
std::optional<Point> project_onto_intersection(const std::vector<ConvexSetHandle>& sets,
                                               const Point& z, double tol,
                                               std::size_t max_sweeps = 2000);

}  // namespace ballpark
