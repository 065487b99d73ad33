#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ballpark/errors.hpp"

namespace ballpark {

// A point is a dense coordinate vector; the ambient dimension is its length.
using Point = std::vector<double>;

// Comparison tolerances used throughout: |a - b| <= rel_eps*max(|a|,|b|) + abs_eps.
struct Tolerance {
    double rel_eps = 1e-9;
    double abs_eps = 1e-12;

    bool close(double a, double b) const {
        return std::abs(a - b) <= rel_eps * std::max(std::abs(a), std::abs(b)) + abs_eps;
    }
};

struct PointSet {
    std::vector<Point> points;
    std::size_t dim = 0;

    PointSet() = default;

    explicit PointSet(std::vector<Point> pts) : points(std::move(pts)) {
        if (points.empty()) throw EmptyInput();
        dim = points.front().size();
        if (dim == 0) throw DimensionMismatch("points must have at least one coordinate");
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i].size() != dim)
                throw DimensionMismatch("point " + std::to_string(i) + " has mismatched dimension");
            for (double c : points[i])
                if (!std::isfinite(c))
                    throw DegenerateInput("point " + std::to_string(i) + " has a non-finite coordinate");
        }
    }

    std::size_t size() const { return points.size(); }
    const Point& operator[](std::size_t i) const { return points[i]; }
};

struct Ball {
    Point center;
    double radius = 0.0;

    Ball() = default;
    Ball(Point c, double r) : center(std::move(c)), radius(r) {}

    bool contains(const Point& p, const Tolerance& tol = {}) const;
};

// --- small vector helpers -------------------------------------------------

inline double dot(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point add(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Point scale(const Point& a, double s) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

// r += s*a
inline void axpy(Point& r, double s, const Point& a) {
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += s * a[i];
}

inline double squared_norm(const Point& a) { return dot(a, a); }

inline double norm(const Point& a) { return std::sqrt(squared_norm(a)); }

inline double squared_distance(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline double distance(const Point& a, const Point& b) {
    return std::sqrt(squared_distance(a, b));
}

inline Point normalized(const Point& a) {
    const double n = norm(a);
    return n > 0.0 ? scale(a, 1.0 / n) : a;
}

inline bool Ball::contains(const Point& p, const Tolerance& tol) const {
    return distance(p, center) <= radius + tol.rel_eps * std::max(1.0, radius) + tol.abs_eps;
}

// Largest absolute coordinate over the set; used to scale absolute tolerances.
inline double coordinate_scale(const PointSet& ps) {
    double s = 1.0;
    for (const Point& p : ps.points)
        for (double c : p) s = std::max(s, std::abs(c));
    return s;
}

}  // namespace ballpark
