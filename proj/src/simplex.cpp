#include "ballpark/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ballpark/errors.hpp"
#include "ballpark/linalg.hpp"

namespace ballpark {

Simplex::Simplex(std::vector<Point> vertices, const Tolerance& tol)
    : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2)
        throw DegenerateSimplex("a simplex needs at least two vertices");
    m_ = vertices_.size() - 1;
    d_ = vertices_.front().size();
    if (d_ < m_)
        throw DegenerateSimplex("ambient dimension smaller than vertex count - 1");
    for (const Point& v : vertices_) {
        if (v.size() != d_)
            throw DimensionMismatch("simplex vertices have mixed dimensions");
        for (double c : v)
            if (!std::isfinite(c)) throw DegenerateSimplex("non-finite vertex coordinate");
    }
    if (!affinely_independent(vertices_, tol.rel_eps))
        throw DegenerateSimplex("vertices are affinely dependent");
}

double Simplex::diameter() const {
    double best = 0.0;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (std::size_t j = i + 1; j < vertices_.size(); ++j)
            best = std::max(best, squared_distance(vertices_[i], vertices_[j]));
    return std::sqrt(best);
}

double Simplex::shortest_edge() const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (std::size_t j = i + 1; j < vertices_.size(); ++j)
            best = std::min(best, squared_distance(vertices_[i], vertices_[j]));
    return std::sqrt(best);
}

EnergyProfile edge_energies(const Simplex& s) {
    const auto& v = s.vertices();
    const std::size_t n = v.size();
    EnergyProfile out;
    out.vertex_energy.assign(n, 0.0);
    out.total_energy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double e = squared_distance(v[i], v[j]);
            out.vertex_energy[i] += e;
            out.vertex_energy[j] += e;
            out.total_energy += e;
        }
    }
    out.face_energy.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        out.face_energy[i] = out.total_energy - out.vertex_energy[i];
    return out;
}

namespace {

Point barycenter_of(const std::vector<Point>& pts) {
    Point c(pts.front().size(), 0.0);
    for (const Point& p : pts) axpy(c, 1.0, p);
    for (double& x : c) x /= static_cast<double>(pts.size());
    return c;
}

}  // namespace

MedianProfile median_profile(const Simplex& s) {
    const auto& v = s.vertices();
    const std::size_t n = v.size();
    const double m = static_cast<double>(s.intrinsic_dim());

    MedianProfile out;
    out.barycenter = barycenter_of(v);
    out.face_barycenters.reserve(n);
    out.median_lengths.reserve(n);
    out.vertex_barycenter_distances.reserve(n);

    const EnergyProfile energy = edge_energies(s);
    for (std::size_t i = 0; i < n; ++i) {
        // Face barycenter from the full barycenter: kappa_i = ((m+1)k - v_i)/m.
        Point fb(v[i].size());
        for (std::size_t c = 0; c < fb.size(); ++c)
            fb[c] = ((m + 1.0) * out.barycenter[c] - v[i][c]) / m;
        out.face_barycenters.push_back(std::move(fb));

        const double core = m * energy.vertex_energy[i] - energy.face_energy[i];
        out.median_lengths.push_back(std::sqrt(std::max(0.0, core)) / m);
        out.vertex_barycenter_distances.push_back(std::sqrt(std::max(0.0, core)) / (m + 1.0));
    }
    return out;
}

double barycentric_circumradius(const Simplex& s) {
    const EnergyProfile energy = edge_energies(s);
    const double m = static_cast<double>(s.intrinsic_dim());
    double best = 0.0;
    for (std::size_t i = 0; i < energy.vertex_energy.size(); ++i)
        best = std::max(best, m * energy.vertex_energy[i] - energy.face_energy[i]);
    return std::sqrt(std::max(0.0, best)) / (m + 1.0);
}

double distance_to_simplex(const Point& p, const std::vector<Point>& vertices) {
    if (vertices.size() == 1) return distance(p, vertices[0]);

    AffineProjection proj = project_affine_hull(vertices, p);
    bool inside = true;
    for (double c : proj.coeffs)
        if (c < -1e-12) { inside = false; break; }
    if (inside) return distance(p, proj.point);

    double best = std::numeric_limits<double>::infinity();
    std::vector<Point> face;
    face.reserve(vertices.size() - 1);
    for (std::size_t skip = 0; skip < vertices.size(); ++skip) {
        face.clear();
        for (std::size_t j = 0; j < vertices.size(); ++j)
            if (j != skip) face.push_back(vertices[j]);
        best = std::min(best, distance_to_simplex(p, face));
    }
    return best;
}

std::pair<double, double> barycentric_inradius_and_thickness(const Simplex& s) {
    const auto& v = s.vertices();
    const Point kappa = barycenter_of(v);

    // The boundary is the union of the facets opposite each vertex.
    double beta = std::numeric_limits<double>::infinity();
    std::vector<Point> face;
    face.reserve(v.size() - 1);
    for (std::size_t skip = 0; skip < v.size(); ++skip) {
        face.clear();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (j != skip) face.push_back(v[j]);
        beta = std::min(beta, distance_to_simplex(kappa, face));
    }
    return {beta, beta / s.diameter()};
}

Ball circumball_of_support(const std::vector<Point>& points, const Tolerance& tol) {
    if (points.empty()) throw EmptyInput();
    const std::size_t k = points.size();
    const std::size_t d = points.front().size();
    if (k == 1) return Ball(points[0], 0.0);
    if (k > d + 1) throw DegenerateSupport();
    if (!affinely_independent(points, tol.rel_eps)) throw DegenerateSupport();

    // Center = p0 + sum alpha_i (p_i - p0), equidistance gives G alpha = b
    // with G the Gram matrix of edge vectors and b_i = |p_i - p0|^2 / 2.
    const std::size_t m = k - 1;
    std::vector<Point> edges;
    edges.reserve(m);
    for (std::size_t i = 1; i < k; ++i) edges.push_back(sub(points[i], points[0]));

    Matrix G(m, m);
    std::vector<double> b(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) G(i, j) = dot(edges[i], edges[j]);
        b[i] = 0.5 * squared_norm(edges[i]);
    }
    auto alpha = solve_linear(G, b);
    if (!alpha) throw DegenerateSupport();

    Point center = points[0];
    for (std::size_t i = 0; i < m; ++i) axpy(center, (*alpha)[i], edges[i]);
    double radius = 0.0;
    for (const Point& p : points) radius = std::max(radius, distance(center, p));
    return Ball(std::move(center), radius);
}

Simplex regular_simplex(std::size_t d, double diam) {
    if (d < 1) throw DegenerateSimplex("regular simplex needs d >= 1");
    if (!(diam > 0.0)) throw DegenerateInput("regular simplex needs a positive edge length");

    // Unit-edge construction: vertex k sits above the centroid of the
    // first k vertices at height sqrt((k+1)/(2k)); scale at the end.
    std::vector<Point> verts;
    verts.reserve(d + 1);
    verts.emplace_back(d, 0.0);
    Point centroid(d, 0.0);
    for (std::size_t k = 1; k <= d; ++k) {
        Point v = centroid;
        v[k - 1] += std::sqrt((static_cast<double>(k) + 1.0) / (2.0 * static_cast<double>(k)));
        for (std::size_t c = 0; c < d; ++c)
            centroid[c] = (centroid[c] * static_cast<double>(k) + v[c]) / static_cast<double>(k + 1);
        verts.push_back(std::move(v));
    }
    for (Point& v : verts)
        for (double& c : v) c *= diam;
    return Simplex(std::move(verts));
}

RegularMeasures regular_measures(std::size_t d, double diam) {
    if (d < 1) throw DegenerateSimplex("regular measures need d >= 1");
    if (!(diam > 0.0)) throw DegenerateInput("regular measures need a positive edge length");
    const double dd = static_cast<double>(d);
    RegularMeasures out;
    out.circumradius = std::sqrt(dd / (2.0 * (dd + 1.0))) * diam;
    out.inradius = std::sqrt(1.0 / (2.0 * dd * (dd + 1.0))) * diam;
    out.width = (d % 2 == 1) ? std::sqrt(2.0 / (dd + 1.0)) * diam
                             : std::sqrt(2.0 * (dd + 1.0) / (dd * (dd + 2.0))) * diam;
    out.median_length = std::sqrt((dd + 1.0) / (2.0 * dd)) * diam;
    return out;
}

}  // namespace ballpark
