#include "ballpark/convex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ballpark/errors.hpp"
#include "ballpark/linalg.hpp"
#include "ballpark/lp.hpp"

namespace ballpark {

namespace {

// Affine min-norm point over the chosen corral: minimize |sum a_s q_s|
// subject to sum a_s = 1, parameterized around the first member so that
// rank-deficient corrals degrade gracefully.
std::vector<double> affine_min_norm(const std::vector<Point>& q,
                                    const std::vector<std::size_t>& corral) {
    const std::size_t k = corral.size();
    if (k == 1) return {1.0};
    const std::size_t d = q[corral[0]].size();
    Matrix B(d, k - 1);
    for (std::size_t j = 1; j < k; ++j)
        for (std::size_t i = 0; i < d; ++i)
            B(i, j - 1) = q[corral[j]][i] - q[corral[0]][i];
    std::vector<double> rhs(d);
    for (std::size_t i = 0; i < d; ++i) rhs[i] = -q[corral[0]][i];
    const std::vector<double> beta = least_squares(B, rhs);
    std::vector<double> alpha(k);
    double sum = 0.0;
    for (std::size_t j = 1; j < k; ++j) {
        alpha[j] = beta[j - 1];
        sum += beta[j - 1];
    }
    alpha[0] = 1.0 - sum;
    return alpha;
}

}  // namespace

HullProjection project_onto_hull(const std::vector<Point>& pts, const Point& target) {
    if (pts.empty()) throw EmptyInput();
    const std::size_t n = pts.size();
    const std::size_t d = target.size();

    std::vector<Point> q(n);
    double scale2 = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        q[i] = sub(pts[i], target);
        scale2 = std::max(scale2, squared_norm(q[i]));
    }
    const double opt_tol = 1e-13 * scale2;

    // Wolfe's algorithm: grow/shrink a corral until the minimum-norm
    // point of its affine hull is a convex combination optimal over all
    // of q.
    std::size_t start = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (squared_norm(q[i]) < squared_norm(q[start])) start = i;

    std::vector<std::size_t> corral{start};
    std::vector<double> lambda{1.0};
    Point x = q[start];

    const std::size_t major_cap = 8 * (n + d) + 64;
    for (std::size_t major = 0; major < major_cap; ++major) {
        // Best improving vertex.
        std::size_t j = n;
        double best = squared_norm(x) - opt_tol;
        for (std::size_t i = 0; i < n; ++i) {
            const double v = dot(x, q[i]);
            if (v < best) {
                best = v;
                j = i;
            }
        }
        if (j == n) break;  // optimal
        if (std::find(corral.begin(), corral.end(), j) != corral.end()) break;
        corral.push_back(j);
        lambda.push_back(0.0);

        for (std::size_t minor = 0; minor < n + 4; ++minor) {
            std::vector<double> alpha = affine_min_norm(q, corral);
            bool interior = true;
            for (double a : alpha)
                if (a < -1e-12) { interior = false; break; }
            if (interior) {
                lambda = std::move(alpha);
                break;
            }
            // Walk back toward the last feasible weights until a weight
            // hits zero, then drop those members.
            double theta = 1.0;
            for (std::size_t i = 0; i < corral.size(); ++i) {
                const double denom = lambda[i] - alpha[i];
                if (denom > 1e-15 && alpha[i] < 0.0)
                    theta = std::min(theta, lambda[i] / denom);
            }
            for (std::size_t i = 0; i < corral.size(); ++i)
                lambda[i] = (1.0 - theta) * lambda[i] + theta * alpha[i];
            std::vector<std::size_t> next_corral;
            std::vector<double> next_lambda;
            for (std::size_t i = 0; i < corral.size(); ++i) {
                if (lambda[i] > 1e-13) {
                    next_corral.push_back(corral[i]);
                    next_lambda.push_back(lambda[i]);
                }
            }
            if (next_corral.empty()) {
                next_corral.push_back(corral[0]);
                next_lambda.push_back(1.0);
            }
            corral = std::move(next_corral);
            lambda = std::move(next_lambda);
        }
        x.assign(d, 0.0);
        for (std::size_t i = 0; i < corral.size(); ++i) axpy(x, lambda[i], q[corral[i]]);
    }

    HullProjection out;
    out.weights.assign(n, 0.0);
    double wsum = 0.0;
    for (std::size_t i = 0; i < corral.size(); ++i) {
        out.weights[corral[i]] = std::max(0.0, lambda[i]);
        wsum += out.weights[corral[i]];
    }
    if (wsum > 0.0)
        for (double& w : out.weights) w /= wsum;
    out.point = target;
    Point acc(d, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        if (out.weights[i] != 0.0) axpy(acc, out.weights[i], pts[i]);
    out.point = acc;
    out.dist = distance(out.point, target);
    return out;
}

double distance_to_hull(const std::vector<Point>& pts, const Point& target) {
    return project_onto_hull(pts, target).dist;
}

namespace {

// Primal active-set attempt at min |x - z|^2 s.t. Ax <= b from a feasible
// start. Returns false when it hits the iteration cap without a clean
// KKT exit (near-parallel constraint pairs can make it cycle).
bool active_set_projection(const std::vector<Halfspace>& facets, const Point& z,
                           Point& x) {
    const std::size_t m = facets.size();
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < m; ++i)
        if (std::abs(facets[i].signed_distance(x)) <= 1e-10) active.push_back(i);

    for (std::size_t iter = 0; iter < 50 * (m + 1); ++iter) {
        const std::size_t k = active.size();
        Point p = sub(z, x);
        std::vector<double> mu(k, 0.0);
        if (k > 0) {
            Matrix G(k, k);
            std::vector<double> rhs(k);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j)
                    G(i, j) = dot(facets[active[i]].normal, facets[active[j]].normal);
                rhs[i] = dot(facets[active[i]].normal, p);
            }
            mu = least_squares(G, rhs);
            for (std::size_t i = 0; i < k; ++i) axpy(p, -mu[i], facets[active[i]].normal);
        }

        if (norm(p) <= 1e-12 * std::max(1.0, norm(z))) {
            std::size_t drop = k;
            double most_negative = -1e-10;
            for (std::size_t i = 0; i < k; ++i)
                if (mu[i] < most_negative) { most_negative = mu[i]; drop = i; }
            if (drop == k) return true;
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(drop));
            continue;
        }

        double alpha = 1.0;
        std::size_t blocker = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (std::find(active.begin(), active.end(), i) != active.end()) continue;
            const double ap = dot(facets[i].normal, p);
            if (ap > 1e-14) {
                const double t = std::max(0.0, facets[i].offset - dot(facets[i].normal, x)) / ap;
                if (t < alpha) {
                    alpha = t;
                    blocker = i;
                }
            }
        }
        axpy(x, alpha, p);
        if (blocker != m) active.push_back(blocker);
    }
    return false;
}

// Dykstra/Hildreth iteration over the individual halfspaces; slower but
// immune to ill-conditioned active sets.
Point dykstra_halfspaces(const std::vector<Halfspace>& facets, const Point& z) {
    Point x = z;
    std::vector<double> correction(facets.size(), 0.0);
    const double scale = std::max(1.0, norm(z));
    for (std::size_t sweep = 0; sweep < 20000; ++sweep) {
        double moved = 0.0;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            // With y = x + c_i n_i, the projection of y leaves the new
            // correction as max(0, <n_i,y> - b_i) * n_i.
            const double excess = facets[i].signed_distance(x) + correction[i];
            const double step = std::max(0.0, excess);
            const double delta = correction[i] - step;
            axpy(x, delta, facets[i].normal);
            correction[i] = step;
            moved = std::max(moved, std::abs(delta));
        }
        double worst = 0.0;
        for (const Halfspace& h : facets) worst = std::max(worst, h.signed_distance(x));
        if (worst <= 1e-12 * scale && moved <= 1e-13 * scale) break;
    }
    return x;
}

}  // namespace

Point project_onto_polyhedron(const std::vector<Halfspace>& facets, const Point& z) {
    const std::size_t d = z.size();
    const std::size_t m = facets.size();

    auto violation = [&](const Point& p) {
        double worst = 0.0;
        for (const Halfspace& h : facets) worst = std::max(worst, h.signed_distance(p));
        return worst;
    };
    if (violation(z) <= 1e-12) return z;

    // Feasible start from the phase-1 solve.
    std::vector<LpRow> rows;
    rows.reserve(m);
    for (const Halfspace& h : facets) rows.push_back({h.normal, LpRowKind::LessEqual, h.offset});
    const LpResult feas = lp_feasible_point(d, rows);
    if (feas.status != LpStatus::Optimal) throw LpInfeasible();

    Point x = feas.x;
    if (active_set_projection(facets, z, x) && violation(x) <= 1e-9 * std::max(1.0, norm(z)))
        return x;
    return dykstra_halfspaces(facets, z);
}

std::size_t ConvexSetHandle::dim() const {
    if (const auto* ps = std::get_if<PointSet>(&rep)) return ps->dim;
    if (const auto* hs = std::get_if<std::vector<Halfspace>>(&rep))
        return hs->empty() ? 0 : hs->front().normal.size();
    return std::get<Ball>(rep).center.size();
}

Point ConvexSetHandle::project(const Point& p) const {
    if (const auto* ps = std::get_if<PointSet>(&rep))
        return project_onto_hull(ps->points, p).point;
    if (const auto* hs = std::get_if<std::vector<Halfspace>>(&rep))
        return project_onto_polyhedron(*hs, p);
    const Ball& b = std::get<Ball>(rep);
    const double dist = ballpark::distance(p, b.center);
    if (dist <= b.radius) return p;
    Point out = b.center;
    axpy(out, b.radius / dist, sub(p, b.center));
    return out;
}

double ConvexSetHandle::distance(const Point& p) const {
    if (const auto* b = std::get_if<Ball>(&rep))
        return std::max(0.0, ballpark::distance(p, b->center) - b->radius);
    return ballpark::distance(project(p), p);
}

Point ConvexSetHandle::some_point() const {
    if (const auto* ps = std::get_if<PointSet>(&rep)) return ps->points.front();
    if (const auto* b = std::get_if<Ball>(&rep)) return b->center;
    const auto& hs = std::get<std::vector<Halfspace>>(rep);
    if (hs.empty()) throw DegenerateInput("empty halfspace list has no anchor point");
    const LpResult feas = lp_feasible_point(hs.front().normal.size(),
                                            [&] {
                                                std::vector<LpRow> rows;
                                                for (const Halfspace& h : hs)
                                                    rows.push_back({h.normal, LpRowKind::LessEqual,
                                                                    h.offset});
                                                return rows;
                                            }());
    if (feas.status != LpStatus::Optimal) throw LpInfeasible();
    return feas.x;
}

std::optional<Point> hulls_common_point(const std::vector<ConvexSetHandle>& sets) {
    if (sets.empty()) return std::nullopt;
    const std::size_t d = sets.front().dim();

    bool all_lp = true;
    for (const ConvexSetHandle& s : sets)
        if (!s.lp_representable()) { all_lp = false; break; }

    if (all_lp) {
        // Variables: x in R^d, then one weight block per hull set.
        std::size_t num_vars = d;
        std::vector<std::pair<std::size_t, const PointSet*>> hulls;  // (var offset, set)
        for (const ConvexSetHandle& s : sets) {
            if (const auto* ps = std::get_if<PointSet>(&s.rep)) {
                hulls.emplace_back(num_vars, ps);
                num_vars += ps->size();
            }
        }
        std::vector<LpRow> rows;
        double scale = 1.0;
        for (const ConvexSetHandle& s : sets)
            if (const auto* hs = std::get_if<std::vector<Halfspace>>(&s.rep))
                for (const Halfspace& h : *hs) scale = std::max(scale, std::abs(h.offset));
        for (const auto& [offset, ps] : hulls) {
            scale = std::max(scale, coordinate_scale(*ps));
            // x - sum w_i p_i = 0, coordinates one row each.
            for (std::size_t c = 0; c < d; ++c) {
                LpRow row;
                row.coeffs.assign(num_vars, 0.0);
                row.coeffs[c] = 1.0;
                for (std::size_t i = 0; i < ps->size(); ++i)
                    row.coeffs[offset + i] = -(*ps)[i][c];
                row.kind = LpRowKind::Equal;
                row.rhs = 0.0;
                rows.push_back(std::move(row));
            }
            // Weights sum to one...
            LpRow sum_row;
            sum_row.coeffs.assign(num_vars, 0.0);
            for (std::size_t i = 0; i < ps->size(); ++i) sum_row.coeffs[offset + i] = 1.0;
            sum_row.kind = LpRowKind::Equal;
            sum_row.rhs = 1.0;
            rows.push_back(std::move(sum_row));
            // ...and stay nonnegative.
            for (std::size_t i = 0; i < ps->size(); ++i) {
                LpRow nn;
                nn.coeffs.assign(num_vars, 0.0);
                nn.coeffs[offset + i] = -1.0;
                nn.rhs = 0.0;
                rows.push_back(std::move(nn));
            }
        }
        for (const ConvexSetHandle& s : sets) {
            if (const auto* hs = std::get_if<std::vector<Halfspace>>(&s.rep)) {
                for (const Halfspace& h : *hs) {
                    LpRow row;
                    row.coeffs.assign(num_vars, 0.0);
                    for (std::size_t c = 0; c < d; ++c) row.coeffs[c] = h.normal[c];
                    row.rhs = h.offset;
                    rows.push_back(std::move(row));
                }
            }
        }
        const LpResult res = lp_feasible_point(num_vars, rows);
        if (res.status != LpStatus::Optimal) return std::nullopt;
        Point x(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(d));
        // Report honestly against the handles themselves.
        for (const ConvexSetHandle& s : sets)
            if (s.distance(x) > 1e-9 * scale) return std::nullopt;
        return x;
    }

    // Mixed families with balls: cyclic projections from a set anchor.
    Point x = sets.front().some_point();
    double scale = 1.0;
    for (double c : x) scale = std::max(scale, std::abs(c));
    const double tol = 1e-10 * scale;
    double prev_residual = std::numeric_limits<double>::infinity();
    for (std::size_t sweep = 0; sweep < 5000; ++sweep) {
        double residual = 0.0;
        for (const ConvexSetHandle& s : sets) {
            residual = std::max(residual, s.distance(x));
            x = s.project(x);
        }
        if (residual <= tol) return x;
        if (sweep % 100 == 99) {
            if (residual > 0.999 * prev_residual) return std::nullopt;  // stalled
            prev_residual = residual;
        }
    }
    double residual = 0.0;
    for (const ConvexSetHandle& s : sets) residual = std::max(residual, s.distance(x));
    if (residual <= tol) return x;
    return std::nullopt;
}

std::optional<Point> project_onto_intersection(const std::vector<ConvexSetHandle>& sets,
                                               const Point& z, double tol,
                                               std::size_t max_sweeps) {
    // Dykstra's corrections keep the limit the true projection instead of
    // just some point of the intersection.
    const std::size_t k = sets.size();
    Point x = z;
    std::vector<Point> corrections(k, Point(z.size(), 0.0));
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        double moved = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            Point y = add(x, corrections[i]);
            Point px = sets[i].project(y);
            corrections[i] = sub(y, px);
            moved = std::max(moved, squared_distance(px, x));
            x = std::move(px);
        }
        double residual = 0.0;
        for (const ConvexSetHandle& s : sets) residual = std::max(residual, s.distance(x));
        if (residual <= tol && moved <= tol * tol) return x;
    }
    double residual = 0.0;
    for (const ConvexSetHandle& s : sets) residual = std::max(residual, s.distance(x));
    if (residual <= tol) return x;
    return std::nullopt;
}

}  // namespace ballpark
