#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ballpark/extent.hpp"
#include "ballpark/types.hpp"

namespace ballpark {

// One certified inequality: `holds` when quantity <= bound up to the
// relative slack threshold.
struct BoundReport {
    std::string bound_name;
    double quantity = 0.0;
    double bound = 0.0;
    double slack = 0.0;  // bound - quantity
    bool holds = false;
    std::string note;    // active branch, warnings, etc.
};

BoundReport make_bound_report(std::string name, double quantity, double bound,
                              double rel_eps = 1e-9);

// Circumradius against sqrt(d/(2(d+1))) * diameter.
BoundReport jung_check(const PointSet& points, std::uint64_t seed = 0);

// Parity lower bound for the inradius in terms of the width; `quantity`
// carries the bound expression and `bound` the measured inradius.
BoundReport steinhagen_check(const PointSet& points, std::uint64_t seed = 0);

// Supremum of barycentric circumradii over all affinely independent
// subsets of size 2..d+1. Exhaustive; refuses sets larger than `cutoff`.
double barycentric_circumradius_of_set(const PointSet& points, std::size_t cutoff = 30);

// Circumradius against min(barycentric circumradius of the set, the
// dimension-based diameter bound); the note names the active branch.
BoundReport variant_jung_check(const PointSet& points, std::size_t cutoff = 30,
                               std::uint64_t seed = 0);

// The two computable extremes of the outer/inner radii quotient chain:
// R_d/r_1 against sqrt(2d/(d+1)) and R_1/r_d against the parity bound.
// Both also respect the coarse i+1 cap, recorded in the notes.
std::pair<BoundReport, BoundReport> perelman_pukhov_extremes(const PointSet& points,
                                                             std::uint64_t seed = 0);

// The six always-true inequalities among the four extent measures.
std::vector<BoundReport> eggleston_checks(const ExtentProfile& profile);

enum class PolytopeKind { RegularSimplex, Cube, CrossPolytope };

struct PolytopeRadii {
    PolytopeKind kind = PolytopeKind::RegularSimplex;
    std::size_t d = 0;
    std::size_t j = 0;
    double inner = 0.0;  // r_j at circumradius 1
    double outer = 0.0;  // R_j at circumradius 1
    std::string consistency_note;  // nonempty when a direct check disagrees
};

// Closed-form inner/outer j-radii of the three regular polytopes, scaled
// to circumradius 1, evaluated exactly as printed. Where a direct
// geometric value is available it is probed, and disagreement is flagged
// in consistency_note rather than silently corrected.
PolytopeRadii regular_polytope_radii(PolytopeKind kind, std::size_t d, std::size_t j);

}  // namespace ballpark
