#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ballpark/convex.hpp"
#include "ballpark/errors.hpp"
#include "ballpark/lp.hpp"

using namespace ballpark;

namespace {

std::vector<Point> square_corners() {
    return {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
}

std::vector<Halfspace> box(double x0, double x1, double y0, double y1) {
    return {Halfspace{{1.0, 0.0}, x1}, Halfspace{{-1.0, 0.0}, -x0},
            Halfspace{{0.0, 1.0}, y1}, Halfspace{{0.0, -1.0}, -y0}};
}

}  // namespace

TEST_CASE("solve_lp basic optimum") {
    // min -x - y st x <= 2, y <= 3, x + y <= 4.
    const LpResult r = solve_lp({-1.0, -1.0}, {{{1.0, 0.0}, LpRowKind::LessEqual, 2.0},
                                               {{0.0, 1.0}, LpRowKind::LessEqual, 3.0},
                                               {{1.0, 1.0}, LpRowKind::LessEqual, 4.0}});
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.objective == doctest::Approx(-4.0));
}

TEST_CASE("solve_lp detects infeasible and unbounded problems") {
    const LpResult inf = solve_lp({1.0}, {{{1.0}, LpRowKind::LessEqual, 0.0},
                                          {{-1.0}, LpRowKind::LessEqual, -1.0}});
    CHECK(inf.status == LpStatus::Infeasible);

    const LpResult unb = solve_lp({1.0}, {{{1.0}, LpRowKind::LessEqual, 5.0}});
    CHECK(unb.status == LpStatus::Unbounded);
}

TEST_CASE("solve_lp honors equality rows and negative rhs") {
    // min x + y st x + y = -2, x - y <= 0  ->  objective -2.
    const LpResult r = solve_lp({1.0, 1.0}, {{{1.0, 1.0}, LpRowKind::Equal, -2.0},
                                             {{1.0, -1.0}, LpRowKind::LessEqual, 0.0}});
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.objective == doctest::Approx(-2.0));
    CHECK(r.x[0] + r.x[1] == doctest::Approx(-2.0));
}

TEST_CASE("hull projection: interior, vertex and face cases") {
    const auto corners = square_corners();

    const HullProjection inside = project_onto_hull(corners, {0.5, 0.5});
    CHECK(inside.dist == doctest::Approx(0.0).epsilon(1e-12));

    const HullProjection outside = project_onto_hull(corners, {2.0, 0.5});
    CHECK(outside.dist == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(outside.point[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(outside.point[1] == doctest::Approx(0.5).epsilon(1e-9));

    const HullProjection corner = project_onto_hull(corners, {-1.0, -1.0});
    CHECK(corner.dist == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("hull projection weights reconstruct the projection") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = 1 + rng() % 5;
        const std::size_t n = 1 + rng() % 12;
        std::vector<Point> pts(n, Point(d));
        for (auto& p : pts)
            for (auto& c : p) c = coord(rng);
        Point target(d);
        for (auto& c : target) c = 2.0 * coord(rng);

        const HullProjection proj = project_onto_hull(pts, target);
        double wsum = 0.0;
        Point rec(d, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(proj.weights[i] >= 0.0);
            wsum += proj.weights[i];
            axpy(rec, proj.weights[i], pts[i]);
        }
        CHECK(wsum == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(distance(rec, proj.point) <= 1e-9);

        // No vertex may be strictly closer than the reported projection.
        for (const Point& p : pts) CHECK(proj.dist <= distance(p, target) + 1e-9);
        // Optimality: the target-projection segment supports the hull.
        const Point g = sub(target, proj.point);
        for (const Point& p : pts)
            CHECK(dot(g, sub(p, proj.point)) <= 1e-7 * std::max(1.0, norm(g)));
    }
}

TEST_CASE("polyhedron projection onto a box") {
    const auto facets = box(0.0, 1.0, 0.0, 1.0);
    const Point p = project_onto_polyhedron(facets, {2.0, -1.0});
    CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(p[1] == doctest::Approx(0.0).epsilon(1e-9));

    const Point inside = project_onto_polyhedron(facets, {0.25, 0.75});
    CHECK(inside[0] == doctest::Approx(0.25));
    CHECK(inside[1] == doctest::Approx(0.75));

    CHECK_THROWS_AS(project_onto_polyhedron({Halfspace{{1.0}, 0.0}, Halfspace{{-1.0}, -1.0}},
                                            {5.0}),
                    LpInfeasible);
}

TEST_CASE("polyhedron projection against oblique constraints") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        // Random bounded polytope around the origin plus a random query.
        std::vector<Halfspace> facets = box(-1.0, 1.0, -1.0, 1.0);
        for (int extra = 0; extra < 3; ++extra) {
            Point n{coord(rng), coord(rng)};
            if (norm(n) < 0.1) continue;
            n = normalized(n);
            facets.push_back(Halfspace{n, 0.3 + 0.7 * std::abs(coord(rng))});
        }
        const Point z{2.0 * coord(rng), 2.0 * coord(rng)};
        const Point p = project_onto_polyhedron(facets, z);
        for (const Halfspace& h : facets) CHECK(h.signed_distance(p) <= 1e-8);
        // Projection optimality via the variational inequality at feasible
        // probe points.
        for (int probe = 0; probe < 10; ++probe) {
            Point y{coord(rng) * 0.3, coord(rng) * 0.3};
            bool ok = true;
            for (const Halfspace& h : facets)
                if (h.signed_distance(y) > 0.0) ok = false;
            if (!ok) continue;
            CHECK(dot(sub(z, p), sub(y, p)) <= 1e-7);
        }
    }
}

TEST_CASE("common point of hull families") {
    // Two triangles sharing the centroid of the square corners.
    const auto common = hulls_common_point(
        {ConvexSetHandle::hull(PointSet({{0.0, 0.0}, {1.0, 0.0}, {0.5, 1.0}})),
         ConvexSetHandle::hull(PointSet({{0.0, 1.0}, {1.0, 1.0}, {0.5, 0.0}}))});
    REQUIRE(common.has_value());
    CHECK((*common)[1] <= 1.0);

    const auto disjoint = hulls_common_point(
        {ConvexSetHandle::hull(PointSet({{0.0}, {1.0}})),
         ConvexSetHandle::hull(PointSet({{2.0}, {3.0}}))});
    CHECK(!disjoint.has_value());

    const auto single = hulls_common_point({ConvexSetHandle::hull(PointSet({{4.0, 2.0}}))});
    REQUIRE(single.has_value());
    CHECK((*single)[0] == doctest::Approx(4.0));
}

TEST_CASE("common point of mixed families with balls") {
    const auto concentric = hulls_common_point({ConvexSetHandle::ball(Ball({1.0, 1.0}, 1.0)),
                                                ConvexSetHandle::ball(Ball({1.0, 1.0}, 0.25)),
                                                ConvexSetHandle::ball(Ball({1.0, 1.0}, 2.0))});
    REQUIRE(concentric.has_value());
    CHECK(distance(*concentric, {1.0, 1.0}) <= 0.25 + 1e-9);

    const auto mixed = hulls_common_point(
        {ConvexSetHandle::ball(Ball({0.0, 0.0}, 1.0)),
         ConvexSetHandle::hull(PointSet({{0.5, 0.0}, {3.0, 0.0}, {0.5, 3.0}}))});
    REQUIRE(mixed.has_value());
    CHECK(distance(*mixed, {0.0, 0.0}) <= 1.0 + 1e-8);

    const auto far = hulls_common_point({ConvexSetHandle::ball(Ball({0.0, 0.0}, 1.0)),
                                         ConvexSetHandle::ball(Ball({5.0, 0.0}, 1.0))});
    CHECK(!far.has_value());
}

TEST_CASE("dykstra projection onto an intersection") {
    const std::vector<ConvexSetHandle> sets{
        ConvexSetHandle::polytope(box(0.0, 2.0, 0.0, 2.0)),
        ConvexSetHandle::polytope(box(1.0, 3.0, -1.0, 1.0))};
    const auto p = project_onto_intersection(sets, {0.0, -2.0}, 1e-10);
    REQUIRE(p.has_value());
    // Intersection is [1,2]x[0,1]; nearest point to (0,-2) is (1,0).
    CHECK((*p)[0] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK((*p)[1] == doctest::Approx(0.0).epsilon(1e-6));

    const std::vector<ConvexSetHandle> empty{
        ConvexSetHandle::polytope(box(0.0, 1.0, 0.0, 1.0)),
        ConvexSetHandle::polytope(box(2.0, 3.0, 0.0, 1.0))};
    CHECK(!project_onto_intersection(empty, {0.0, 0.0}, 1e-10, 400).has_value());
}
