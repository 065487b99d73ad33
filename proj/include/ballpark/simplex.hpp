#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ballpark/types.hpp"

namespace ballpark {

// An m-simplex embedded in R^d (d >= m >= 1): m+1 affinely independent
// vertices. Construction validates the rank of the edge vectors.
class Simplex {
public:
    Simplex(std::vector<Point> vertices, const Tolerance& tol = {});

    const std::vector<Point>& vertices() const { return vertices_; }
    const Point& vertex(std::size_t i) const { return vertices_[i]; }
    std::size_t intrinsic_dim() const { return m_; }       // m
    std::size_t ambient_dim() const { return d_; }         // d
    std::size_t vertex_count() const { return m_ + 1; }

    double diameter() const;       // longest edge
    double shortest_edge() const;

private:
    std::vector<Point> vertices_;
    std::size_t m_ = 0;
    std::size_t d_ = 0;
};

// Sums of squared edge lengths: per vertex, per opposite face, and total.
struct EnergyProfile {
    std::vector<double> vertex_energy;   // E(v^i)
    std::vector<double> face_energy;     // E of the face opposite vertex i
    double total_energy = 0.0;
};

struct MedianProfile {
    Point barycenter;
    std::vector<Point> face_barycenters;
    std::vector<double> median_lengths;               // vertex to opposite-face barycenter
    std::vector<double> vertex_barycenter_distances;  // vertex to barycenter
};

// Closed-form measures of the regular d-simplex with a given edge length.
struct RegularMeasures {
    double circumradius = 0.0;
    double inradius = 0.0;
    double width = 0.0;
    double median_length = 0.0;
};

EnergyProfile edge_energies(const Simplex& s);

MedianProfile median_profile(const Simplex& s);

// Radius of the smallest sphere centered at the barycenter that encloses
// the simplex; equals the largest barycenter-to-vertex distance.
double barycentric_circumradius(const Simplex& s);

// Distance from the barycenter to the simplex boundary, and that distance
// divided by the diameter (the thickness shape-quality measure).
std::pair<double, double> barycentric_inradius_and_thickness(const Simplex& s);

// Exact Euclidean distance from p to the convex hull of `vertices`,
// by projecting onto the affine hull and recursing into faces when the
// projection lands outside.
double distance_to_simplex(const Point& p, const std::vector<Point>& vertices);

// Sphere through <= d+1 affinely independent points with its center in
// their affine hull (the smallest sphere through them). Throws
// DegenerateSupport on affinely dependent input.
Ball circumball_of_support(const std::vector<Point>& points, const Tolerance& tol = {});

// Regular d-simplex with all edges equal to diam, built by lifting one
// vertex per dimension above the centroid of the previous face.
Simplex regular_simplex(std::size_t d, double diam);

RegularMeasures regular_measures(std::size_t d, double diam);

}  // namespace ballpark
