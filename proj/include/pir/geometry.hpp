#pragma once

#include <string>
#include <vector>

#include "pir/gf.hpp"

namespace pir::geom {

// Number of points of PG(N,q): (q^(N+1)-1)/(q-1).
long long pg_point_count(int N, long long q);
// Number of lines of PG(N,q): (q^(N+1)-1)(q^N-1) / ((q^2-1)(q-1)).
long long pg_line_count(int N, long long q);

struct Line {
    std::vector<int> points;  // sorted point indices
    int direction_id = -1;    // parallel-class id, affine lines only
};

// PG(N,q). Points are homogeneous coordinate vectors of length N+1 over
// GF(q), normalized so the first nonzero coordinate is 1, enumerated in
// lexicographic coordinate order (element indices compared as integers).
class ProjectiveSpace {
public:
    static ProjectiveSpace make(int N, long long q);

    int N() const { return N_; }
    const gf::Field& field() const { return field_; }
    int point_count() const { return static_cast<int>(points_.size()); }
    const std::vector<std::vector<int>>& points() const { return points_; }
    const std::vector<int>& point(int index) const { return points_[index]; }

    // Index of a (not necessarily normalized) nonzero coordinate vector.
    int point_index(const std::vector<int>& coords) const;
    std::vector<int> normalized(const std::vector<int>& coords) const;

    // All lines, sorted by point-index sets; refuses when the closed-form
    // count exceeds the resource guard (10^6).
    const std::vector<Line>& lines() const;

    // Indices of the q+1 points on the line through two distinct points.
    std::vector<int> line_through(int a, int b) const;

private:
    int N_ = 0;
    gf::Field field_ = gf::Field::make(2);
    std::vector<std::vector<int>> points_;
    mutable std::vector<Line> lines_;
    mutable bool lines_built_ = false;
};

// AG(N,q). Points are coordinate vectors of length N; the canonical index
// reads coordinates as base-q digits, coords[0] most significant.
class AffineSpace {
public:
    static AffineSpace make(int N, long long q);

    int N() const { return N_; }
    const gf::Field& field() const { return field_; }
    int point_count() const { return static_cast<int>(points_.size()); }
    const std::vector<std::vector<int>>& points() const { return points_; }
    int point_index(const std::vector<int>& coords) const;

    // All lines grouped into the s(N-1,q) parallel classes, classes ordered
    // by the canonical PG(N-1,q) direction enumeration. Each class partitions
    // the q^N points into q^(N-1) lines of q points.
    std::vector<std::vector<Line>> parallel_classes() const;

    // The q^(N-1) directions with last coordinate 1, in lexicographic order
    // of the leading N-1 coordinates. Used by slab-style constructions.
    std::vector<std::vector<int>> transversal_directions() const;
    std::vector<Line> lines_with_direction(const std::vector<int>& dir, int class_id) const;

private:
    int N_ = 0;
    gf::Field field_ = gf::Field::make(2);
    std::vector<std::vector<int>> points_;
};

struct PlanePointSet {
    ProjectiveSpace plane;
    std::vector<int> members; // sorted point indices
};

// Maximal {v; z}-arc in PG(2, 2^n) with z = 2^n'. n'=1 is the hyperoval
// (conic plus nucleus); 2 <= n' <= n uses the pencil-of-conics construction
// over an additive subgroup of order 2^n'. Every line of the plane is
// checked to meet the set in 0 or z points before returning.
PlanePointSet denniston_arc(int n, int nprime);

// The q^3+1 points of x0^(q+1) + x1^(q+1) + x2^(q+1) = 0 in PG(2, q^2).
PlanePointSet hermitian_unital(int q);

struct ConicSplit {
    ProjectiveSpace plane;
    std::vector<int> conic;    // the conic x1^2 = x0*x2: (1,t,t^2) and (0,0,1)
    std::vector<int> interior; // points on no tangent line
    std::vector<int> exterior; // off-conic points on some tangent
};

// Interior/exterior split for the standard conic in PG(2,q), q odd.
ConicSplit conic_interior(int q);

// Point-set export: first line "v", then one line per point with its
// space-separated coordinates (canonical element indices).
std::string export_point_set(const std::vector<std::vector<int>>& coords);

} // namespace pir::geom
