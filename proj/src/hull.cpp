#include "ballpark/hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "ballpark/errors.hpp"
#include "ballpark/linalg.hpp"

namespace ballpark {

std::size_t affine_rank(const PointSet& points, double rel_tol) {
    const std::size_t n = points.size();
    if (n <= 1) return 0;
    const std::size_t d = points.dim;
    Matrix A(d, n - 1);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < d; ++i) A(i, j - 1) = points[j][i] - points[0][i];
    return matrix_rank(A, rel_tol);
}

namespace {

// Unit outward normal of the simplex facet opposite `opposite`, given the
// facet vertices; the halfspace contains the whole simplex.
Halfspace simplex_facet(const std::vector<Point>& facet, const Point& opposite) {
    const std::size_t d = facet[0].size();
    Matrix A(facet.size() - 1, d);
    for (std::size_t r = 1; r < facet.size(); ++r)
        for (std::size_t c = 0; c < d; ++c) A(r - 1, c) = facet[r][c] - facet[0][c];
    auto n = null_space_vector(A);
    if (!n) throw DegenerateHull("facet has no well-defined normal");
    Halfspace h;
    h.normal = normalized(*n);
    h.offset = dot(h.normal, facet[0]);
    if (dot(h.normal, opposite) > h.offset) {
        h.normal = scale(h.normal, -1.0);
        h.offset = -h.offset;
    }
    return h;
}

std::vector<Halfspace> simplex_hull(const PointSet& points) {
    const std::size_t n = points.size();
    std::vector<Halfspace> out;
    out.reserve(n);
    std::vector<Point> facet;
    for (std::size_t skip = 0; skip < n; ++skip) {
        facet.clear();
        for (std::size_t j = 0; j < n; ++j)
            if (j != skip) facet.push_back(points[j]);
        out.push_back(simplex_facet(facet, points[skip]));
    }
    return out;
}

double cross2(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; returns hull vertex indices in ccw order.
std::vector<std::size_t> hull_2d(const PointSet& points, double eps) {
    std::vector<std::size_t> idx(points.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return points[a][0] != points[b][0] ? points[a][0] < points[b][0]
                                            : points[a][1] < points[b][1];
    });
    idx.erase(std::unique(idx.begin(), idx.end(),
                          [&](std::size_t a, std::size_t b) {
                              return points[a][0] == points[b][0] &&
                                     points[a][1] == points[b][1];
                          }),
              idx.end());

    const std::size_t n = idx.size();
    std::vector<std::size_t> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 && cross2(points[hull[k - 2]], points[hull[k - 1]], points[idx[i]]) <= eps)
            --k;
        hull[k++] = idx[i];
    }
    for (std::size_t i = n - 1, lo = k + 1; i-- > 0;) {  // upper
        while (k >= lo && cross2(points[hull[k - 2]], points[hull[k - 1]], points[idx[i]]) <= eps)
            --k;
        hull[k++] = idx[i];
    }
    hull.resize(k - 1);
    return hull;
}

struct Face {
    std::size_t a, b, c;
    Point normal;   // unit, outward
    double offset;
};

Face make_face(const PointSet& pts, std::size_t a, std::size_t b, std::size_t c,
               const Point& interior) {
    const Point u = sub(pts[b], pts[a]);
    const Point v = sub(pts[c], pts[a]);
    Point n{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
    n = normalized(n);
    double off = dot(n, pts[a]);
    if (dot(n, interior) > off) {
        n = scale(n, -1.0);
        off = -off;
    }
    return {a, b, c, std::move(n), off};
}

std::vector<Face> hull_3d(const PointSet& pts, double eps) {
    const std::size_t n = pts.size();

    // Seed tetrahedron: spread-out quadruple.
    std::size_t i0 = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (pts[i] < pts[i0]) i0 = i;
    std::size_t i1 = i0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d2 = squared_distance(pts[i], pts[i0]);
        if (d2 > best) { best = d2; i1 = i; }
    }
    std::size_t i2 = i0;
    best = -1.0;
    const Point e01 = sub(pts[i1], pts[i0]);
    for (std::size_t i = 0; i < n; ++i) {
        const Point w = sub(pts[i], pts[i0]);
        const double t = dot(w, e01) / squared_norm(e01);
        Point perp = w;
        axpy(perp, -t, e01);
        const double d2 = squared_norm(perp);
        if (d2 > best) { best = d2; i2 = i; }
    }
    std::size_t i3 = i0;
    best = -1.0;
    const Point e02 = sub(pts[i2], pts[i0]);
    Point nrm{e01[1] * e02[2] - e01[2] * e02[1], e01[2] * e02[0] - e01[0] * e02[2],
              e01[0] * e02[1] - e01[1] * e02[0]};
    for (std::size_t i = 0; i < n; ++i) {
        const double v = std::abs(dot(nrm, sub(pts[i], pts[i0])));
        if (v > best) { best = v; i3 = i; }
    }

    Point interior(3, 0.0);
    for (std::size_t i : {i0, i1, i2, i3}) axpy(interior, 0.25, pts[i]);

    std::vector<Face> faces;
    faces.push_back(make_face(pts, i0, i1, i2, interior));
    faces.push_back(make_face(pts, i0, i1, i3, interior));
    faces.push_back(make_face(pts, i0, i2, i3, interior));
    faces.push_back(make_face(pts, i1, i2, i3, interior));

    for (std::size_t p = 0; p < n; ++p) {
        if (p == i0 || p == i1 || p == i2 || p == i3) continue;
        std::vector<std::size_t> visible;
        for (std::size_t f = 0; f < faces.size(); ++f)
            if (dot(faces[f].normal, pts[p]) - faces[f].offset > eps) visible.push_back(f);
        if (visible.empty()) continue;

        // Horizon edges: undirected edges used by exactly one visible face.
        std::map<std::pair<std::size_t, std::size_t>, int> edge_count;
        auto tally = [&](std::size_t a, std::size_t b) {
            edge_count[{std::min(a, b), std::max(a, b)}] += 1;
        };
        for (std::size_t f : visible) {
            tally(faces[f].a, faces[f].b);
            tally(faces[f].b, faces[f].c);
            tally(faces[f].c, faces[f].a);
        }
        std::vector<Face> next;
        next.reserve(faces.size());
        std::set<std::size_t> visible_set(visible.begin(), visible.end());
        for (std::size_t f = 0; f < faces.size(); ++f)
            if (!visible_set.count(f)) next.push_back(faces[f]);
        for (const auto& [edge, count] : edge_count) {
            if (count != 1) continue;
            Face nf = make_face(pts, edge.first, edge.second, p, interior);
            if (squared_norm(nf.normal) > 0.5) next.push_back(std::move(nf));
        }
        faces = std::move(next);
    }
    return faces;
}

void dedupe(std::vector<Halfspace>& hs, double eps) {
    std::vector<Halfspace> out;
    for (const Halfspace& h : hs) {
        bool dup = false;
        for (const Halfspace& g : out) {
            if (std::abs(h.offset - g.offset) <= eps &&
                squared_norm(sub(h.normal, g.normal)) <= eps * eps) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(h);
    }
    hs = std::move(out);
}

}  // namespace

std::vector<Halfspace> convex_hull_facets(const PointSet& points, const Tolerance& tol) {
    const std::size_t d = points.dim;
    const std::size_t n = points.size();
    const double sc = coordinate_scale(points);

    if (affine_rank(points, tol.rel_eps) < d)
        throw DegenerateHull("point set is not full-dimensional");

    // A full-dimensional simplex vertex set works in any dimension.
    if (n == d + 1) return simplex_hull(points);

    if (d == 1) {
        double lo = points[0][0], hi = points[0][0];
        for (const Point& p : points.points) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return {Halfspace{{1.0}, hi}, Halfspace{{-1.0}, -lo}};
    }

    if (d == 2) {
        const auto hull = hull_2d(points, 1e-12 * sc * sc);
        std::vector<Halfspace> out;
        out.reserve(hull.size());
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const Point& a = points[hull[i]];
            const Point& b = points[hull[(i + 1) % hull.size()]];
            Halfspace h;
            h.normal = normalized(Point{b[1] - a[1], a[0] - b[0]});
            h.offset = dot(h.normal, a);
            out.push_back(std::move(h));
        }
        dedupe(out, 1e-9 * sc);
        return out;
    }

    if (d == 3) {
        const auto faces = hull_3d(points, 1e-10 * sc);
        std::vector<Halfspace> out;
        out.reserve(faces.size());
        for (const Face& f : faces) out.push_back(Halfspace{f.normal, f.offset});
        dedupe(out, 1e-9 * sc);
        return out;
    }

    throw UnsupportedDimension("hull facets need d <= 3 or a simplex vertex set");
}

std::vector<std::pair<std::size_t, std::size_t>> convex_hull_edges(const PointSet& points,
                                                                   const Tolerance& tol) {
    const std::size_t d = points.dim;
    const double sc = coordinate_scale(points);
    if (affine_rank(points, tol.rel_eps) < d)
        throw DegenerateHull("point set is not full-dimensional");

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (d == 2) {
        const auto hull = hull_2d(points, 1e-12 * sc * sc);
        for (std::size_t i = 0; i < hull.size(); ++i)
            edges.emplace_back(hull[i], hull[(i + 1) % hull.size()]);
        return edges;
    }
    if (d == 3) {
        const auto faces = hull_3d(points, 1e-10 * sc);
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const Face& f : faces) {
            seen.insert({std::min(f.a, f.b), std::max(f.a, f.b)});
            seen.insert({std::min(f.b, f.c), std::max(f.b, f.c)});
            seen.insert({std::min(f.c, f.a), std::max(f.c, f.a)});
        }
        edges.assign(seen.begin(), seen.end());
        return edges;
    }
    throw UnsupportedDimension("hull edges are only enumerated for d = 2 or 3");
}

}  // namespace ballpark
