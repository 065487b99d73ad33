#include "ballpark/extent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "ballpark/errors.hpp"
#include "ballpark/linalg.hpp"
#include "ballpark/lp.hpp"
#include "ballpark/meb.hpp"

namespace ballpark {

DiameterResult diameter(const PointSet& points) {
    if (points.size() < 2)
        throw UndefinedMeasure("diameter needs at least two points");
    DiameterResult out;
    double best = -1.0;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const double d2 = squared_distance(points[i], points[j]);
            if (d2 > best) {
                best = d2;
                out.pair = {i, j};
            }
            if (d2 < worst) {
                worst = d2;
                out.shortest_pair = {i, j};
            }
        }
    }
    out.value = std::sqrt(best);
    out.shortest = std::sqrt(worst);
    return out;
}

namespace {

double extent_along(const PointSet& points, const Point& u) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Point& p : points.points) {
        const double t = dot(u, p);
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    return hi - lo;
}

// Distance between the affine hulls of two vertex groups, together with
// the (unit) common perpendicular when it exists.
std::pair<double, Point> affine_gap(const std::vector<Point>& A, const std::vector<Point>& B) {
    const std::size_t d = A[0].size();
    const std::size_t cols = (A.size() - 1) + (B.size() - 1);
    const Point w = sub(B[0], A[0]);
    if (cols == 0) return {norm(w), normalized(w)};

    Matrix M(d, cols);
    std::size_t c = 0;
    for (std::size_t j = 1; j < A.size(); ++j, ++c)
        for (std::size_t i = 0; i < d; ++i) M(i, c) = A[j][i] - A[0][i];
    for (std::size_t j = 1; j < B.size(); ++j, ++c)
        for (std::size_t i = 0; i < d; ++i) M(i, c) = -(B[j][i] - B[0][i]);

    const std::vector<double> coef = least_squares(M, w);
    Point residual = w;
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < d; ++i) residual[i] -= M(i, j) * coef[j];
    const double gap = norm(residual);
    return {gap, gap > 0.0 ? normalized(residual) : Point(d, 0.0)};
}

// Exact width of a full-dimensional simplex: scan all complementary
// vertex bipartitions and take the smallest affine-hull gap.
WidthResult simplex_width(const PointSet& points) {
    const std::size_t n = points.size();
    WidthResult out;
    out.value = std::numeric_limits<double>::infinity();
    out.exact = true;

    std::vector<Point> A, B;
    const std::uint64_t limit = (1ull << (n - 1));  // fix vertex 0 in A
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        A.clear();
        B.clear();
        A.push_back(points[0]);
        for (std::size_t j = 1; j < n; ++j)
            ((mask >> (j - 1)) & 1u ? B : A).push_back(points[j]);
        if (B.empty()) continue;
        auto [gap, dir] = affine_gap(A, B);
        if (gap < out.value) {
            out.value = gap;
            out.direction = dir;
        }
    }
    return out;
}

WidthResult flat_width(const PointSet& points, const Tolerance& tol) {
    // Rank-deficient set: a direction orthogonal to the affine hull gives
    // a zero-width slab.
    const std::size_t d = points.dim;
    const std::size_t n = points.size();
    Matrix A(n - 1, d);
    for (std::size_t r = 1; r < n; ++r)
        for (std::size_t c = 0; c < d; ++c) A(r - 1, c) = points[r][c] - points[0][c];
    auto nv = null_space_vector(A, tol.rel_eps);
    WidthResult out;
    out.value = 0.0;
    out.exact = true;
    out.direction = nv ? normalized(*nv) : Point(d, 0.0);
    return out;
}

WidthResult sampled_width(const PointSet& points, std::uint64_t seed) {
    const std::size_t d = points.dim;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    auto random_unit = [&]() {
        Point u(d);
        double n2 = 0.0;
        do {
            for (auto& c : u) c = gauss(rng);
            n2 = squared_norm(u);
        } while (n2 < 1e-12);
        return scale(u, 1.0 / std::sqrt(n2));
    };

    WidthResult out;
    out.value = std::numeric_limits<double>::infinity();
    out.exact = false;
    for (int s = 0; s < 512; ++s) {
        const Point u = random_unit();
        const double w = extent_along(points, u);
        if (w < out.value) {
            out.value = w;
            out.direction = u;
        }
    }
    // Local refinement: shrinking random perturbations around the best.
    double sigma = 0.5;
    for (int round = 0; round < 60; ++round) {
        bool improved = false;
        for (int k = 0; k < 24; ++k) {
            Point u = out.direction;
            for (auto& c : u) c += sigma * gauss(rng);
            u = normalized(u);
            const double w = extent_along(points, u);
            if (w < out.value) {
                out.value = w;
                out.direction = u;
                improved = true;
            }
        }
        if (!improved) sigma *= 0.6;
        if (sigma < 1e-10) break;
    }
    return out;
}

}  // namespace

WidthResult width(const PointSet& points, std::uint64_t seed) {
    if (points.size() < 2)
        throw UndefinedMeasure("width needs at least two points");
    const std::size_t d = points.dim;
    const Tolerance tol;

    if (affine_rank(points) < d) return flat_width(points, tol);
    if (points.size() == d + 1) return simplex_width(points);

    if (d == 1) {
        WidthResult out;
        out.value = extent_along(points, {1.0});
        out.direction = {1.0};
        out.exact = true;
        return out;
    }

    if (d == 2 || d == 3) {
        WidthResult out;
        out.value = std::numeric_limits<double>::infinity();
        out.exact = true;
        for (const Halfspace& h : convex_hull_facets(points, tol)) {
            const double w = extent_along(points, h.normal);
            if (w < out.value) {
                out.value = w;
                out.direction = h.normal;
            }
        }
        if (d == 3) {
            const auto edges = convex_hull_edges(points, tol);
            for (std::size_t i = 0; i < edges.size(); ++i) {
                const Point u = sub(points[edges[i].second], points[edges[i].first]);
                for (std::size_t j = i + 1; j < edges.size(); ++j) {
                    const Point v = sub(points[edges[j].second], points[edges[j].first]);
                    Point c{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                            u[0] * v[1] - u[1] * v[0]};
                    const double n2 = squared_norm(c);
                    if (n2 < 1e-20) continue;
                    c = scale(c, 1.0 / std::sqrt(n2));
                    const double w = extent_along(points, c);
                    if (w < out.value) {
                        out.value = w;
                        out.direction = c;
                    }
                }
            }
        }
        return out;
    }

    return sampled_width(points, seed);
}

Ball chebyshev_inball(const std::vector<Halfspace>& facets) {
    if (facets.empty()) throw LpUnbounded();
    const std::size_t d = facets.front().normal.size();

    // Variables (c_1..c_d, r); maximize r.
    std::vector<double> obj(d + 1, 0.0);
    obj[d] = -1.0;
    std::vector<LpRow> rows;
    rows.reserve(facets.size());
    for (const Halfspace& h : facets) {
        LpRow row;
        row.coeffs = h.normal;
        row.coeffs.push_back(1.0);
        row.rhs = h.offset;
        rows.push_back(std::move(row));
    }
    const LpResult res = solve_lp(obj, rows);
    if (res.status == LpStatus::Infeasible) throw LpInfeasible();
    if (res.status == LpStatus::Unbounded) throw LpUnbounded();
    // A negative optimal radius means the halfspaces have no common point.
    if (res.x[d] < -1e-9) throw LpInfeasible();

    Point center(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(d));
    return Ball(std::move(center), std::max(0.0, res.x[d]));
}

ExtentProfile extent_profile(const PointSet& points, std::uint64_t seed) {
    if (points.size() < 2)
        throw UndefinedMeasure("extent profile needs at least two points");

    ExtentProfile out;
    const DiameterResult diam = diameter(points);
    out.diameter = diam.value;
    out.diameter_pair = diam.pair;
    out.shortest_pair = diam.shortest;

    out.circumradius = minimum_enclosing_ball(points, seed).ball.radius;

    const WidthResult w = width(points, seed);
    out.width = w.value;
    out.width_exact = w.exact;
    out.width_direction = w.direction;

    const std::size_t d = points.dim;
    if (affine_rank(points) < d) {
        out.inradius = 0.0;
        out.width = 0.0;
        out.width_exact = true;
    } else if (d <= 3 || points.size() == d + 1) {
        out.inradius = chebyshev_inball(convex_hull_facets(points)).radius;
    }
    return out;
}

}  // namespace ballpark
