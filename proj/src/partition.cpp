#include "ballpark/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "ballpark/errors.hpp"
#include "ballpark/extent.hpp"
#include "ballpark/linalg.hpp"
#include "ballpark/meb.hpp"

namespace ballpark {

namespace {

double hull_distance(const PointSet& points, const std::vector<std::size_t>& part,
                     const Point& q) {
    std::vector<Point> pts;
    pts.reserve(part.size());
    for (std::size_t i : part) pts.push_back(points[i]);
    return distance_to_hull(pts, q);
}

double certificate_residual(const PointSet& points, const PartitionCertificate& cert) {
    double worst = 0.0;
    for (const auto& part : cert.parts)
        worst = std::max(worst, hull_distance(points, part, cert.witness));
    return worst;
}

// Rough minimizer of max_i dist(q, set_i): averaged projections to get a
// good basin, then shrinking steps toward the worst set.
Point minimax_point(const std::vector<ConvexSetHandle>& sets, Point q,
                    std::size_t sweeps = 120, std::size_t polish_steps = 200) {
    const std::size_t k = sets.size();
    std::vector<Point> proj(k);
    for (std::size_t sweep = 0; sweep < sweeps; ++sweep) {
        Point avg(q.size(), 0.0);
        for (const ConvexSetHandle& s : sets) axpy(avg, 1.0 / static_cast<double>(k), s.project(q));
        q = std::move(avg);
    }
    Point best = q;
    double best_val = std::numeric_limits<double>::infinity();
    double step = 0.5;
    for (std::size_t it = 0; it < polish_steps; ++it) {
        std::size_t worst = 0;
        double val = -1.0;
        for (std::size_t i = 0; i < k; ++i) {
            proj[i] = sets[i].project(q);
            const double di = distance(proj[i], q);
            if (di > val) { val = di; worst = i; }
        }
        if (val < best_val) { best_val = val; best = q; }
        if (val <= 1e-14) break;
        for (std::size_t c = 0; c < q.size(); ++c)
            q[c] += step * (proj[worst][c] - q[c]);
        step *= 0.985;
    }
    return best;
}

}  // namespace

std::size_t partition_count(std::size_t n, std::size_t p, std::size_t cap) {
    if (p == 0 || p > n) return 0;
    // Stirling numbers of the second kind, saturating at the cap.
    std::vector<std::size_t> row(p + 1, 0);
    row[0] = 1;  // S(0,0)
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = std::min(i, p); j >= 1; --j) {
            const std::size_t carry = (j <= i - 1) ? row[j] : 0;
            const std::size_t prev = row[j - 1];
            std::size_t v = prev + j * carry;
            if (carry > 0 && v / j < carry) v = cap + 1;  // overflow guard
            row[j] = std::min(v, cap + 1);
        }
        row[0] = 0;
    }
    return row[p];
}

PartitionCertificate radon_partition(const PointSet& points) {
    const std::size_t d = points.dim;
    const std::size_t n = points.size();
    if (n != d + 2)
        throw PreconditionFailed("the two-part split needs exactly d+2 points");

    // Nontrivial affine dependence: coordinates stacked over a row of ones.
    Matrix A(d + 1, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < d; ++i) A(i, j) = points[j][i];
        A(d, j) = 1.0;
    }
    auto alpha = null_space_vector(A);
    if (!alpha) throw DegenerateInput("no usable affine dependence found");
    double largest = 0.0;
    for (double a : *alpha) largest = std::max(largest, std::abs(a));
    if (largest < 1e-12) throw DegenerateInput("affine dependence is numerically null");

    PartitionCertificate cert;
    cert.parts.assign(2, {});
    double positive_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if ((*alpha)[i] > 0.0) {
            cert.parts[0].push_back(i);
            positive_sum += (*alpha)[i];
        } else {
            cert.parts[1].push_back(i);
        }
    }
    if (cert.parts[0].empty() || cert.parts[1].empty() || positive_sum <= 0.0)
        throw DegenerateInput("affine dependence has only one sign");

    cert.witness.assign(d, 0.0);
    for (std::size_t i : cert.parts[0]) axpy(cert.witness, (*alpha)[i] / positive_sum, points[i]);
    cert.residual = certificate_residual(points, cert);
    return cert;
}

ConvexCombination reduce_combination(const PointSet& points, const Point& a,
                                     std::vector<double> weights) {
    const std::size_t d = points.dim;
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i] > 1e-14) active.push_back(i);

    // Cancel one point at a time against an affine dependence until at
    // most d+1 remain.
    while (active.size() > d + 1) {
        Matrix A(d + 1, active.size());
        for (std::size_t j = 0; j < active.size(); ++j) {
            for (std::size_t i = 0; i < d; ++i) A(i, j) = points[active[j]][i];
            A(d, j) = 1.0;
        }
        auto gamma = null_space_vector(A);
        if (!gamma) break;
        // Ensure some positive coefficient to step against.
        bool has_positive = false;
        for (double g : *gamma)
            if (g > 1e-14) { has_positive = true; break; }
        if (!has_positive)
            for (double& g : *gamma) g = -g;

        double t = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < active.size(); ++j)
            if ((*gamma)[j] > 1e-14)
                t = std::min(t, weights[active[j]] / (*gamma)[j]);
        std::vector<std::size_t> next;
        for (std::size_t j = 0; j < active.size(); ++j) {
            weights[active[j]] -= t * (*gamma)[j];
            if (weights[active[j]] > 1e-12) next.push_back(active[j]);
        }
        if (next.size() == active.size()) break;  // numerical stall
        active = std::move(next);
    }

    ConvexCombination out;
    double sum = 0.0;
    for (std::size_t i : active) sum += weights[i];
    Point rec(d, 0.0);
    for (std::size_t i : active) {
        out.indices.push_back(i);
        out.weights.push_back(weights[i] / sum);
        axpy(rec, weights[i] / sum, points[i]);
    }
    out.reconstruction_error = distance(rec, a);
    return out;
}

ConvexCombination caratheodory_reduce(const PointSet& points, const Point& a) {
    if (a.size() != points.dim)
        throw DimensionMismatch("query point dimension differs from the set");
    const double scale = std::max(coordinate_scale(points), norm(a));
    const HullProjection proj = project_onto_hull(points.points, a);
    if (proj.dist > 1e-9 * scale)
        throw NotInHull("the point is not in the convex hull of the set");
    return reduce_combination(points, a, proj.weights);
}

std::vector<std::size_t> colorful_caratheodory_bruteforce(
    const std::vector<PointSet>& classes, const Point& a) {
    const std::size_t d = a.size();
    if (classes.size() != d + 1)
        throw PreconditionFailed("need exactly d+1 color classes");

    double scale = norm(a);
    std::size_t product = 1;
    for (const PointSet& c : classes) {
        if (c.dim != d) throw DimensionMismatch("color class dimension differs");
        scale = std::max(scale, coordinate_scale(c));
        if (product > 1'000'000 / c.size())
            throw InstanceTooLarge("transversal enumeration capped at 1e6");
        product *= c.size();
    }
    const double tol = 1e-9 * std::max(1.0, scale);
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (distance_to_hull(classes[i].points, a) > tol)
            throw PreconditionFailed("class " + std::to_string(i) +
                                     " does not contain the point in its hull");

    std::vector<std::size_t> pick(classes.size(), 0);
    std::vector<Point> transversal(classes.size());
    for (;;) {
        for (std::size_t i = 0; i < classes.size(); ++i)
            transversal[i] = classes[i][pick[i]];
        if (distance_to_hull(transversal, a) <= tol) return pick;
        // odometer
        std::size_t i = 0;
        while (i < pick.size()) {
            if (++pick[i] < classes[i].size()) break;
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size())
            throw SearchFailed("no transversal hull contains the point (numerical)");
    }
}

HellyReport helly_check(const std::vector<ConvexSetHandle>& family, std::size_t dim) {
    const std::size_t k = family.size();
    if (k < dim + 1)
        throw PreconditionFailed("need at least d+1 sets");
    if (k > 12) throw InstanceTooLarge("subfamily enumeration capped at 12 sets");

    HellyReport report;
    const std::size_t s = dim + 1;
    std::vector<std::size_t> pick(s);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        std::vector<ConvexSetHandle> sub;
        sub.reserve(s);
        for (std::size_t i : pick) sub.push_back(family[i]);
        if (!hulls_common_point(sub)) {
            report.hypothesis_holds = false;
            report.failing_subfamily = pick;
            return report;
        }
        // next s-combination out of k
        std::size_t i = s;
        bool advanced = false;
        while (i-- > 0) {
            if (pick[i] + 1 <= k - (s - i)) {
                ++pick[i];
                for (std::size_t j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    report.hypothesis_holds = true;
    report.global_witness = hulls_common_point(family);
    return report;
}

namespace {

// Lexicographic restricted-growth strings with exactly p blocks.
template <typename Callback>
bool enumerate_partitions(std::size_t n, std::size_t p, Callback&& cb) {
    std::vector<std::size_t> rgs(n, 0);
    auto recurse = [&](auto&& self, std::size_t i, std::size_t used) -> bool {
        if (i == n) return used == p ? cb(rgs) : false;
        if (used + (n - i) < p) return false;  // cannot open enough blocks
        const std::size_t top = std::min(used, p - 1);
        for (std::size_t v = 0; v <= top; ++v) {
            rgs[i] = v;
            if (self(self, i + 1, std::max(used, v + 1))) return true;
        }
        return false;
    };
    if (n == 0) return false;
    rgs[0] = 0;
    return recurse(recurse, 1, 1);
}

std::vector<std::vector<std::size_t>> blocks_of(const std::vector<std::size_t>& rgs,
                                                std::size_t p) {
    std::vector<std::vector<std::size_t>> parts(p);
    for (std::size_t i = 0; i < rgs.size(); ++i) parts[rgs[i]].push_back(i);
    return parts;
}

}  // namespace

PartitionCertificate tverberg_bruteforce(const PointSet& points, std::size_t p) {
    const std::size_t n = points.size();
    const std::size_t d = points.dim;
    if (p < 1) throw PreconditionFailed("need at least one part");
    if (n < (p - 1) * (d + 1) + 1)
        throw TooFewPoints("need at least (p-1)(d+1)+1 points, have " + std::to_string(n));
    if (partition_count(n, p, 100'000) > 100'000)
        throw InstanceTooLarge("partition enumeration capped at 1e5");

    PartitionCertificate cert;
    const bool found = enumerate_partitions(n, p, [&](const std::vector<std::size_t>& rgs) {
        auto parts = blocks_of(rgs, p);
        std::vector<ConvexSetHandle> handles;
        handles.reserve(p);
        for (const auto& part : parts) {
            std::vector<Point> pts;
            for (std::size_t i : part) pts.push_back(points[i]);
            handles.push_back(ConvexSetHandle::hull(PointSet(std::move(pts))));
        }
        const auto witness = hulls_common_point(handles);
        if (!witness) return false;
        cert.parts = std::move(parts);
        cert.witness = *witness;
        return true;
    });
    if (!found)
        throw SearchFailed("no partition with intersecting hulls was found (numerical)");
    cert.residual = certificate_residual(points, cert);
    cert.exhaustive = true;
    return cert;
}

NdCaratheodoryResult nd_caratheodory(const PointSet& points, const Point& a, std::size_t r) {
    const std::size_t n = points.size();
    if (r < 1 || r > n) throw PreconditionFailed("need 1 <= r <= n");
    const double scale = std::max(coordinate_scale(points), norm(a));
    if (distance_to_hull(points.points, a) > 1e-9 * scale)
        throw NotInHull("the point is not in the convex hull of the set");

    NdCaratheodoryResult out;
    out.bound = diameter(points).value / std::sqrt(2.0 * static_cast<double>(r));

    // Greedy with full re-projection: at step k add the point minimizing
    // 2(k-1) <x - a, p - a> + |p - a|^2, then project a back onto the
    // running hull.
    std::vector<std::size_t> chosen;
    std::vector<Point> chosen_pts;
    Point x = a;
    for (std::size_t k = 1; k <= r; ++k) {
        const double w = 2.0 * static_cast<double>(k - 1);
        std::size_t best = 0;
        double best_val = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            const Point pa = sub(points[i], a);
            const double val = w * dot(sub(x, a), pa) + squared_norm(pa);
            if (val < best_val) {
                best_val = val;
                best = i;
            }
        }
        if (std::find(chosen.begin(), chosen.end(), best) == chosen.end()) {
            chosen.push_back(best);
            chosen_pts.push_back(points[best]);
        }
        x = project_onto_hull(chosen_pts, a).point;
    }
    // Top up with unused indices; a larger hull only gets closer.
    for (std::size_t i = 0; i < n && chosen.size() < r; ++i)
        if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) {
            chosen.push_back(i);
            chosen_pts.push_back(points[i]);
        }
    out.subset = chosen;
    out.achieved_distance = distance_to_hull(chosen_pts, a);
    return out;
}

PartitionCertificate nd_tverberg_search(const PointSet& points, std::size_t k,
                                        std::uint64_t seed) {
    const std::size_t n = points.size();
    if (k < 1 || k > n) throw PreconditionFailed("need 1 <= k <= n");

    PartitionCertificate cert;
    if (k == 1) {
        cert.parts.assign(1, {});
        for (std::size_t i = 0; i < n; ++i) cert.parts[0].push_back(i);
        cert.witness = points[0];
        cert.residual = certificate_residual(points, cert);
        return cert;
    }
    if (k == n) {
        // Singleton parts: the minimax point over points is the center of
        // the minimum enclosing ball.
        const MebResult meb = minimum_enclosing_ball(points, seed);
        cert.parts.assign(n, {});
        for (std::size_t i = 0; i < n; ++i) cert.parts[i].push_back(i);
        cert.witness = meb.ball.center;
        cert.residual = certificate_residual(points, cert);
        return cert;
    }

    Point centroid(points.dim, 0.0);
    for (const Point& p : points.points) axpy(centroid, 1.0 / static_cast<double>(n), p);
    const double zero_tol = 1e-9 * coordinate_scale(points);

    auto handles_of = [&](const std::vector<std::vector<std::size_t>>& parts) {
        std::vector<ConvexSetHandle> handles;
        handles.reserve(parts.size());
        for (const auto& part : parts) {
            std::vector<Point> pts;
            for (std::size_t i : part) pts.push_back(points[i]);
            handles.push_back(ConvexSetHandle::hull(PointSet(std::move(pts))));
        }
        return handles;
    };
    auto worst_distance = [](const std::vector<ConvexSetHandle>& handles, const Point& q) {
        double worst = 0.0;
        for (const auto& h : handles) worst = std::max(worst, h.distance(q));
        return worst;
    };

    // Scan partitions with a cheap minimax estimate; partitions whose
    // hulls actually intersect are confirmed with the exact feasibility
    // solve and end the search, since zero residual cannot be beaten.
    double best_residual = std::numeric_limits<double>::infinity();
    auto consider = [&](std::vector<std::vector<std::size_t>> parts) -> bool {
        const auto handles = handles_of(parts);
        Point q = minimax_point(handles, centroid, 20, 40);
        double res = worst_distance(handles, q);
        if (res <= 1e-5 * std::max(1.0, coordinate_scale(points))) {
            if (auto exact = hulls_common_point(handles)) {
                q = *exact;
                res = worst_distance(handles, q);
            }
        }
        if (res < best_residual) {
            best_residual = res;
            cert.parts = std::move(parts);
            cert.witness = std::move(q);
        }
        return best_residual <= zero_tol;  // cannot improve on zero
    };

    if (partition_count(n, k, 100'000) <= 100'000) {
        cert.exhaustive = true;
        enumerate_partitions(n, k, [&](const std::vector<std::size_t>& rgs) {
            return consider(blocks_of(rgs, k));
        });
    } else {
        cert.exhaustive = false;
        std::mt19937_64 rng(seed);
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        for (int trial = 0; trial < 200; ++trial) {
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<std::vector<std::size_t>> parts(k);
            for (std::size_t i = 0; i < n; ++i) parts[i % k].push_back(order[i]);
            for (auto& part : parts) std::sort(part.begin(), part.end());
            if (consider(std::move(parts))) break;
        }
    }

    // Deeper polish on the winner.
    if (best_residual > zero_tol) {
        const auto handles = handles_of(cert.parts);
        const Point q = minimax_point(handles, cert.witness, 200, 400);
        if (worst_distance(handles, q) < best_residual) cert.witness = q;
    }
    cert.residual = certificate_residual(points, cert);
    return cert;
}

namespace {

enum class BallMeeting { Holds, Fails, Unknown };

// Does the intersection of the sets meet the unit ball at b? A cyclic
// projection run certifies the common cases cheaply; Dykstra's exact
// projection settles near-boundary ones; a stalled, clearly-positive
// residual indicates an empty intersection.
BallMeeting intersection_meets_unit_ball(const std::vector<ConvexSetHandle>& sets,
                                         const Point& b) {
    const double scale = std::max(1.0, norm(b));
    Point x = b;
    double stale_residual = std::numeric_limits<double>::infinity();
    double residual = stale_residual;
    for (std::size_t sweep = 0; sweep < 300; ++sweep) {
        residual = 0.0;
        for (const ConvexSetHandle& s : sets) {
            residual = std::max(residual, s.distance(x));
            x = s.project(x);
        }
        if (residual <= 1e-8 * scale && distance(x, b) <= 1.0 + 1e-8)
            return BallMeeting::Holds;
        if (sweep % 100 == 99) {
            if (residual > 0.99 * stale_residual) break;  // stalled
            stale_residual = residual;
        }
    }
    if (const auto proj = project_onto_intersection(sets, b, 1e-9 * scale, 4000))
        return distance(*proj, b) <= 1.0 + 1e-9 ? BallMeeting::Holds : BallMeeting::Fails;
    if (residual >= 1e-6 * scale && residual > 0.99 * stale_residual)
        return BallMeeting::Fails;  // iterates pinned away from feasibility
    return BallMeeting::Unknown;
}

}  // namespace

Point nd_helly_point(const std::vector<ConvexSetHandle>& family, std::size_t k,
                     const Point& b) {
    const std::size_t n = family.size();
    if (n == 0) throw EmptyInput();
    if (n > 12) throw InstanceTooLarge("subfamily enumeration capped at 12 sets");
    if (k < 1 || k > n) throw PreconditionFailed("need 1 <= k <= family size");

    // Hypothesis: every k-subfamily intersection meets the unit ball at b.
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        std::vector<ConvexSetHandle> sub;
        for (std::size_t i : pick) sub.push_back(family[i]);
        const BallMeeting meeting = intersection_meets_unit_ball(sub, b);
        if (meeting == BallMeeting::Fails)
            throw HypothesisFailed("a k-subfamily intersection misses the unit ball", pick);
        if (meeting == BallMeeting::Unknown)
            throw SearchFailed("hypothesis check did not settle for a subfamily");
        // next combination
        std::size_t i = k;
        bool advanced = false;
        while (i-- > 0) {
            if (pick[i] + 1 <= n - (k - i)) {
                ++pick[i];
                for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }

    Point q = minimax_point(family, b, 200);
    double worst = 0.0;
    for (const ConvexSetHandle& s : family) worst = std::max(worst, s.distance(q));
    if (worst > 1.0 / std::sqrt(static_cast<double>(k)) + 1e-12)
        throw SearchFailed("minimax search did not reach the guaranteed distance");
    return q;
}

}  // namespace ballpark
