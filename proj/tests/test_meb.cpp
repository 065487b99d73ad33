#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ballpark/errors.hpp"
#include "ballpark/meb.hpp"
#include "ballpark/simplex.hpp"

using namespace ballpark;

namespace {

PointSet random_points(std::mt19937_64& rng, std::size_t n, std::size_t d,
                       double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> coord(lo, hi);
    std::vector<Point> pts(n, Point(d));
    for (auto& p : pts)
        for (auto& c : p) c = coord(rng);
    return PointSet(std::move(pts));
}

double set_diameter(const PointSet& ps) {
    double best = 0.0;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            best = std::max(best, squared_distance(ps[i], ps[j]));
    return std::sqrt(best);
}

}  // namespace

TEST_CASE("two-point set") {
    const PointSet ps({{0.0, 0.0}, {4.0, 0.0}});
    const MebResult r = minimum_enclosing_ball(ps);
    CHECK(r.ball.center[0] == doctest::Approx(2.0));
    CHECK(r.ball.center[1] == doctest::Approx(0.0));
    CHECK(r.ball.radius == doctest::Approx(2.0));
    CHECK(r.support.size() == 2);
}

TEST_CASE("obtuse triangle is carried by its long side") {
    const PointSet ps({{0.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}});
    const MebResult r = minimum_enclosing_ball(ps);
    CHECK(r.ball.center[0] == doctest::Approx(1.0));
    CHECK(r.ball.center[1] == doctest::Approx(0.0));
    CHECK(r.ball.radius == doctest::Approx(1.0));

    const MebResult oracle = meb_oracle(ps);
    CHECK(oracle.ball.radius == doctest::Approx(1.0));
}

TEST_CASE("regular tetrahedron hits the closed-form radius") {
    const Simplex s = regular_simplex(3, 1.0);
    const PointSet ps(s.vertices());
    const MebResult r = minimum_enclosing_ball(ps);
    CHECK(r.ball.radius == doctest::Approx(0.6123724356957945).epsilon(1e-9));
    CHECK(r.support.size() <= 4);
}

TEST_CASE("oracle handles the tiny named cases") {
    const MebResult tri = meb_oracle(PointSet({{0.0, 0.0}, {2.0, 0.0}, {0.0, 2.0}}));
    CHECK(tri.ball.center[0] == doctest::Approx(1.0));
    CHECK(tri.ball.center[1] == doctest::Approx(1.0));
    CHECK(tri.ball.radius == doctest::Approx(std::sqrt(2.0)));

    const MebResult single = meb_oracle(PointSet({{3.0, 4.0}}));
    CHECK(single.ball.radius == doctest::Approx(0.0));
    CHECK(single.support == std::vector<std::size_t>{0});

    const MebResult square =
        meb_oracle(PointSet({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}));
    CHECK(square.ball.center[0] == doctest::Approx(0.5));
    CHECK(square.ball.center[1] == doctest::Approx(0.5));
    CHECK(square.ball.radius == doctest::Approx(std::sqrt(2.0) / 2.0));
}

TEST_CASE("solver matches the oracle on random instances") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t d = 2 + static_cast<std::size_t>(rng() % 5);
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % 25);
        const PointSet ps = random_points(rng, n, d);
        const MebResult solver = minimum_enclosing_ball(ps, rng());
        const MebResult oracle = meb_oracle(ps);
        CHECK(std::abs(solver.ball.radius - oracle.ball.radius) <=
              1e-9 * std::max(1.0, oracle.ball.radius));
        CHECK(solver.support.size() <= d + 1);
        CHECK(verify_enclosure(solver.ball, ps).enclosed);
        for (std::size_t i : solver.support)
            CHECK(std::abs(distance(ps[i], solver.ball.center) - solver.ball.radius) <=
                  1e-9 * std::max(1.0, solver.ball.radius));
    }
}

TEST_CASE("radius does not depend on the seed") {
    std::mt19937_64 rng(55);
    const PointSet ps = random_points(rng, 60, 4);
    const double r0 = minimum_enclosing_ball(ps, 0).ball.radius;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const double r = minimum_enclosing_ball(ps, seed).ball.radius;
        CHECK(std::abs(r - r0) <= 1e-9 * std::max(1.0, r0));
    }
}

TEST_CASE("radius respects the dimension-based diameter bound") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t d = 2 + static_cast<std::size_t>(rng() % 7);
        const std::size_t n = 2 + static_cast<std::size_t>(rng() % 30);
        const PointSet ps = random_points(rng, n, d);
        const MebResult r = minimum_enclosing_ball(ps, 1);
        const double dd = static_cast<double>(d);
        const double bound = std::sqrt(dd / (2.0 * (dd + 1.0))) * set_diameter(ps);
        CHECK(r.ball.radius <= bound + 1e-9 * std::max(1.0, bound));
    }
}

TEST_CASE("unit-diameter sets fit in the regular-simplex circumball radius") {
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = 2 + static_cast<std::size_t>(rng() % 4);
        PointSet ps = random_points(rng, 12, d);
        const double diam = set_diameter(ps);
        for (auto& p : ps.points)
            for (auto& c : p) c /= diam;  // now diam = 1
        const MebResult r = minimum_enclosing_ball(ps, 3);
        const double gale = regular_measures(d, 1.0).circumradius;
        CHECK(r.ball.radius <= gale + 1e-9);
    }
}

TEST_CASE("adding a point never shrinks the ball") {
    std::mt19937_64 rng(123);
    PointSet ps = random_points(rng, 8, 3);
    double prev = minimum_enclosing_ball(ps, 0).ball.radius;
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int step = 0; step < 20; ++step) {
        Point p(3);
        for (auto& c : p) c = coord(rng);
        ps.points.push_back(p);
        const double r = minimum_enclosing_ball(ps, 0).ball.radius;
        CHECK(r >= prev - 1e-9 * std::max(1.0, prev));
        prev = r;
    }
}

TEST_CASE("simplex vertices respect both enclosing-radius bounds") {
    std::mt19937_64 rng(131);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    int done = 0;
    while (done < 100) {
        const std::size_t d = 1 + rng() % 5;
        const std::size_t m = 1 + rng() % d;
        std::vector<Point> verts(m + 1, Point(d));
        for (auto& v : verts)
            for (auto& c : v) c = coord(rng);
        try {
            const Simplex s(verts);
            const double md = static_cast<double>(m);
            const double bound = std::min(barycentric_circumradius(s),
                                          std::sqrt(md / (2.0 * md + 2.0)) * s.diameter());
            const double radius = minimum_enclosing_ball(PointSet(verts)).ball.radius;
            CHECK(radius <= bound + 1e-9);
            ++done;
        } catch (const DegenerateSimplex&) {
            continue;
        }
    }
}

TEST_CASE("degenerate inputs: duplicates and collinear points") {
    const PointSet dup({{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}});
    const MebResult r = minimum_enclosing_ball(dup);
    CHECK(r.ball.radius == doctest::Approx(0.0));

    const PointSet line({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}});
    const MebResult rl = minimum_enclosing_ball(line);
    CHECK(rl.ball.radius == doctest::Approx(1.5));
    CHECK(rl.ball.center[0] == doctest::Approx(1.5));
    const MebResult ro = meb_oracle(line);
    CHECK(ro.ball.radius == doctest::Approx(1.5));
}

TEST_CASE("cocircular points with heavy support ties") {
    std::vector<Point> pts;
    for (int i = 0; i < 20; ++i) {
        const double t = 2.0 * 3.14159265358979323846 * i / 20.0;
        pts.push_back({std::cos(t), std::sin(t)});
    }
    pts.push_back({0.0, 0.0});
    const PointSet ps(pts);
    const MebResult solver = minimum_enclosing_ball(ps, 5);
    const MebResult oracle = meb_oracle(ps);
    CHECK(solver.ball.radius == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(oracle.ball.radius == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(solver.support.size() <= 3);
    CHECK(distance(solver.ball.center, {0.0, 0.0}) <= 1e-9);
}

TEST_CASE("enclosure verification reports") {
    const PointSet ps({{0.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}});
    const EnclosureReport ok = verify_enclosure(Ball({1.0, 0.0}, 1.0), ps);
    CHECK(ok.max_violation == doctest::Approx(0.0));
    CHECK(ok.enclosed);

    const EnclosureReport bad = verify_enclosure(Ball({0.0, 0.0}, 1.0), PointSet({{3.0, 0.0}}));
    CHECK(bad.max_violation == doctest::Approx(2.0));
    CHECK(!bad.enclosed);
    CHECK(bad.worst_index == 0);

    const EnclosureReport strict = verify_enclosure(Ball({0.0, 0.0}, 5.0), PointSet({{0.0, 0.0}}));
    CHECK(strict.max_violation == doctest::Approx(-5.0));
    CHECK(strict.enclosed);

    CHECK_THROWS_AS(verify_enclosure(Ball({0.0}, 1.0), ps), DimensionMismatch);
}

TEST_CASE("empty and oversized inputs are rejected") {
    CHECK_THROWS_AS(PointSet(std::vector<Point>{}), EmptyInput);
    std::mt19937_64 rng(5);
    CHECK_THROWS_AS(meb_oracle(random_points(rng, 41, 2)), InstanceTooLarge);
    CHECK_THROWS_AS(meb_oracle(random_points(rng, 10, 7)), InstanceTooLarge);
}
