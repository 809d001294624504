#pragma once

#include <compare>
#include <string>
#include <vector>

#include "leafatlas/bundles.hpp"

namespace leafatlas {

/// Cumulative (rank, degree) point; x is the rank axis.
struct LatticePoint {
    Int x = 0;
    Int y = 0;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// cross(a, b) = ax*by - ay*bx, exact.
inline Wide lattice_cross(const LatticePoint& a, const LatticePoint& b) {
    return static_cast<Wide>(a.x) * b.y - static_cast<Wide>(a.y) * b.x;
}

/// Concave lattice chain from (0,0) to the total charge: x strictly
/// increasing, edge slopes strictly decreasing.
class HNPolygon {
public:
    explicit HNPolygon(std::vector<LatticePoint> vertices);

    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    LatticePoint endpoint() const { return vertices_.back(); }
    /// Vertices other than (0,0) and the endpoint.
    std::vector<LatticePoint> interior_vertices() const;

    friend bool operator==(const HNPolygon&, const HNPolygon&) = default;

private:
    std::vector<LatticePoint> vertices_;
};

/// The admissibility region: triangle with vertices (0,0), (k+1,n), (k,n).
struct Triangle {
    Int k = 1;
    Int n = 2;
    Triangle(Int k_, Int n_) : k(k_), n(n_) {
        if (!(1 <= k && k < n)) throw std::invalid_argument("triangle needs 1 <= k < n");
    }
};

/// Cumulative partial sums of the HN type, (0,0) and the total included.
HNPolygon hn_polygon(const HNType& nu);

/// Edge vectors of the chain, recovering the HN type.
HNType hn_type_of(const HNPolygon& poly);

/// Strict interior test, three exact integer inequalities:
/// y(k+1) > nx (above the base), yk < nx (below the line through (k,n)),
/// y < n (below the top edge).
bool strictly_inside(const LatticePoint& p, const Triangle& tri);

/// Weak membership in the closed triangle; used to tell boundary from
/// outside in diagnostics.
bool inside_or_boundary(const LatticePoint& p, const Triangle& tri);

/// Shatz order: true iff every vertex of a lies on or below the top chain of
/// b. Throws "incomparable: different total charge" on endpoint mismatch.
bool polygon_leq(const HNPolygon& a, const HNPolygon& b);

/// Deterministic SVG of the chain overlaid on the triangle; one lattice unit
/// is 60 px and vertices are labeled "(x,y)".
std::string polygon_svg(const HNPolygon& poly, const Triangle& tri);

}  // namespace leafatlas
