#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ballpark/convex.hpp"
#include "ballpark/types.hpp"

namespace ballpark {

struct PartitionCertificate {
    std::vector<std::vector<std::size_t>> parts;  // disjoint, covering
    Point witness;
    double residual = 0.0;   // max over parts of dist(witness, conv(part))
    bool exhaustive = true;  // false when a heuristic search stood in
};

struct ConvexCombination {
    std::vector<std::size_t> indices;
    std::vector<double> weights;
    double reconstruction_error = 0.0;
};

// Split d+2 points by the sign of a nontrivial affine dependence; the
// witness lies in both part hulls.
PartitionCertificate radon_partition(const PointSet& points);

// Rewrite a as a convex combination of at most d+1 points of P: start
// from any feasible combination, then repeatedly cancel a point against
// an affine dependence among the active ones.
ConvexCombination caratheodory_reduce(const PointSet& points, const Point& a);

// The elimination half of the above, starting from given weights over
// the whole set (nonnegative, summing to 1, reconstructing a).
ConvexCombination reduce_combination(const PointSet& points, const Point& a,
                                     std::vector<double> weights);

// One point per color class whose hull still contains a, by plain
// enumeration of transversals. Product of class sizes capped at 1e6.
std::vector<std::size_t> colorful_caratheodory_bruteforce(
    const std::vector<PointSet>& classes, const Point& a);

struct HellyReport {
    bool hypothesis_holds = false;                    // all (d+1)-subfamilies meet
    std::vector<std::size_t> failing_subfamily;       // witness of a failed hypothesis
    std::optional<Point> global_witness;              // present when the family meets
};

// Check every (d+1)-subfamily for a common point and, when all succeed,
// produce a point of the whole family. At most 12 sets.
HellyReport helly_check(const std::vector<ConvexSetHandle>& family, std::size_t dim);

// First partition of the points into p parts whose hulls share a point,
// in lexicographic restricted-growth-string order.
PartitionCertificate tverberg_bruteforce(const PointSet& points, std::size_t p);

struct NdCaratheodoryResult {
    std::vector<std::size_t> subset;  // exactly r indices
    double achieved_distance = 0.0;
    double bound = 0.0;               // diam(P)/sqrt(2r)
};

// Greedy r-point subset whose hull approaches a: each step adds the point
// minimizing the linearized distance estimate, then re-projects.
NdCaratheodoryResult nd_caratheodory(const PointSet& points, const Point& a, std::size_t r);

// Partition into k parts with a point near all part hulls; exhaustive for
// small partition counts, seeded balanced heuristics beyond that.
PartitionCertificate nd_tverberg_search(const PointSet& points, std::size_t k,
                                        std::uint64_t seed = 0);

// Point q close to all sets once every k-subfamily meets the unit ball at
// b. Throws HypothesisFailed with the offending subfamily indices.
Point nd_helly_point(const std::vector<ConvexSetHandle>& family, std::size_t k,
                     const Point& b);

// Number of partitions of n items into exactly p nonempty parts, capped.
std::size_t partition_count(std::size_t n, std::size_t p, std::size_t cap);

}  // namespace ballpark
