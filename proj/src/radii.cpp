#include "ballpark/radii.hpp"

#include <algorithm>
#include <cmath>

#include "ballpark/errors.hpp"
#include "ballpark/linalg.hpp"
#include "ballpark/meb.hpp"
#include "ballpark/simplex.hpp"

namespace ballpark {

BoundReport make_bound_report(std::string name, double quantity, double bound,
                              double rel_eps) {
    BoundReport r;
    r.bound_name = std::move(name);
    r.quantity = quantity;
    r.bound = bound;
    r.slack = bound - quantity;
    r.holds = r.slack >= -(rel_eps * std::max(1.0, std::abs(bound)));
    return r;
}

namespace {

double jung_factor(std::size_t d) {
    const double dd = static_cast<double>(d);
    return std::sqrt(dd / (2.0 * (dd + 1.0)));
}

// Parity lower-bound factor on the inradius in terms of the width.
double steinhagen_factor(std::size_t d) {
    const double dd = static_cast<double>(d);
    return d % 2 == 1 ? 1.0 / (2.0 * std::sqrt(dd))
                      : std::sqrt(dd + 2.0) / (2.0 * dd + 2.0);
}

}  // namespace

BoundReport jung_check(const PointSet& points, std::uint64_t seed) {
    if (points.size() < 2)
        throw UndefinedMeasure("the diameter bound needs at least two points");
    const double radius = minimum_enclosing_ball(points, seed).ball.radius;
    const double diam = diameter(points).value;
    return make_bound_report("jung", radius, jung_factor(points.dim) * diam);
}

BoundReport steinhagen_check(const PointSet& points, std::uint64_t seed) {
    const ExtentProfile profile = extent_profile(points, seed);
    if (!profile.inradius)
        throw UnsupportedDimension("inradius is not computable for this input");
    const double expr = steinhagen_factor(points.dim) * profile.width;
    BoundReport r = make_bound_report("steinhagen", expr, *profile.inradius);
    r.note = points.dim % 2 == 1 ? "odd-dimension branch" : "even-dimension branch";
    return r;
}

double barycentric_circumradius_of_set(const PointSet& points, std::size_t cutoff) {
    const std::size_t n = points.size();
    const std::size_t d = points.dim;
    if (n < 2) throw UndefinedMeasure("needs at least two points");
    if (n > cutoff)
        throw InstanceTooLarge("exhaustive barycentric circumradius limited to n <= " +
                               std::to_string(cutoff));

    double best = 0.0;
    std::vector<std::size_t> subset;
    std::vector<Point> pts;

    // All affinely independent subsets of 2..d+1 points; dependent
    // subsets are skipped (their supersets are dependent too, so the
    // whole branch is cut).
    auto extend = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t j = start; j < n; ++j) {
            pts.push_back(points[j]);
            subset.push_back(j);
            if (!affinely_independent(pts)) {
                pts.pop_back();
                subset.pop_back();
                continue;
            }
            if (pts.size() >= 2) {
                try {
                    best = std::max(best, barycentric_circumradius(Simplex(pts)));
                } catch (const DegenerateSimplex&) {
                    // tolerance mismatch between the two rank tests; skip
                }
            }
            if (pts.size() < d + 1) self(self, j + 1);
            pts.pop_back();
            subset.pop_back();
        }
    };
    extend(extend, 0);
    return best;
}

BoundReport variant_jung_check(const PointSet& points, std::size_t cutoff,
                               std::uint64_t seed) {
    const double radius = minimum_enclosing_ball(points, seed).ball.radius;
    const double beta = barycentric_circumradius_of_set(points, cutoff);
    const double jung = jung_factor(points.dim) * diameter(points).value;
    BoundReport r = make_bound_report("variant-jung", radius, std::min(beta, jung));
    r.note = beta <= jung ? "barycentric branch active" : "diameter branch active";
    return r;
}

std::pair<BoundReport, BoundReport> perelman_pukhov_extremes(const PointSet& points,
                                                             std::uint64_t seed) {
    const ExtentProfile profile = extent_profile(points, seed);
    if (!profile.inradius)
        throw UnsupportedDimension("inradius is not computable for this input");
    const std::size_t d = points.dim;
    const double dd = static_cast<double>(d);

    // Outer d-radius over inner 1-radius: circumradius over half diameter.
    const double ratio_d = profile.circumradius / (profile.diameter / 2.0);
    BoundReport outer = make_bound_report("outer-over-inner (k = d)", ratio_d,
                                          std::sqrt(2.0 * dd / (dd + 1.0)));
    outer.note = ratio_d <= 2.0 + 1e-9 ? "coarse cap 2 respected" : "coarse cap 2 violated";

    // Outer 1-radius over inner d-radius: half width over inradius.
    const double ratio_1 = (profile.width / 2.0) / *profile.inradius;
    const double parity = d % 2 == 1 ? std::sqrt(dd) : (dd + 1.0) / std::sqrt(dd + 2.0);
    BoundReport inner = make_bound_report("outer-over-inner (k = 1)", ratio_1, parity);
    inner.note = ratio_1 <= dd + 1.0 + 1e-9 ? "coarse cap d+1 respected"
                                            : "coarse cap d+1 violated";
    return {outer, inner};
}

std::vector<BoundReport> eggleston_checks(const ExtentProfile& p) {
    std::vector<BoundReport> out;
    const double inr = p.inradius.value_or(0.0);
    out.push_back(make_bound_report("inradius <= circumradius", inr, p.circumradius));
    out.push_back(make_bound_report("inradius <= width/2", inr, p.width / 2.0));
    out.push_back(make_bound_report("diameter <= 2 circumradius", p.diameter,
                                    2.0 * p.circumradius));
    out.push_back(make_bound_report("width <= diameter", p.width, p.diameter));
    out.push_back(make_bound_report("inradius <= diameter/2", inr, p.diameter / 2.0));
    out.push_back(make_bound_report("width <= 2 circumradius", p.width, 2.0 * p.circumradius));
    return out;
}

PolytopeRadii regular_polytope_radii(PolytopeKind kind, std::size_t d, std::size_t j) {
    if (d < 1 || j < 1 || j > d)
        throw DegenerateInput("polytope radii need 1 <= j <= d");
    const double dd = static_cast<double>(d);
    const double jj = static_cast<double>(j);

    PolytopeRadii out;
    out.kind = kind;
    out.d = d;
    out.j = j;

    if (kind == PolytopeKind::RegularSimplex) {
        out.inner = std::sqrt((dd + 1.0) / (jj * (jj + 1.0) * dd));
        if (d % 2 == 0 && j == 1)
            out.outer = (dd + 1.0) / dd * std::sqrt(1.0 / (dd + 2.0));
        else if (d % 2 == 0 && j == d - 1)
            out.outer = (2.0 * dd - 1.0) / (2.0 * dd);
        else
            out.outer = std::sqrt(jj / dd);
        if (j == d) {
            // Directly checkable: inradius over circumradius of the
            // regular simplex is 1/d.
            const double direct = 1.0 / dd;
            if (std::abs(out.inner - direct) > 1e-9)
                out.consistency_note = "inner radius at j = d disagrees with inradius/circumradius = 1/d";
        }
    } else {
        out.inner = std::sqrt(1.0 / (jj * (dd + 1.0)));
        out.outer = std::sqrt(jj / dd);
        if (j == d) {
            // Direct value for cube and cross-polytope at circumradius 1:
            // the inscribed ball has radius 1/sqrt(d). The printed j = d
            // formula gives sqrt(1/(d(d+1))) instead; flag it, keep it.
            const double direct = 1.0 / std::sqrt(dd);
            if (std::abs(out.inner - direct) > 1e-9)
                out.consistency_note =
                    "inner radius formula at j = d gives " + std::to_string(out.inner) +
                    " but the inscribed-ball radius is " + std::to_string(direct);
        }
    }
    return out;
}

}  // namespace ballpark
