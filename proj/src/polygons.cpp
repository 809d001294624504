#include "leafatlas/polygons.hpp"

#include <algorithm>

namespace leafatlas {

HNPolygon::HNPolygon(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2 || vertices_.front() != LatticePoint{0, 0})
        throw std::invalid_argument("HN polygon must start at (0,0) and have >= 2 vertices");
    for (size_t i = 0; i + 1 < vertices_.size(); ++i)
        if (vertices_[i + 1].x <= vertices_[i].x)
            throw std::invalid_argument("HN polygon abscissae must strictly increase");
    for (size_t i = 0; i + 2 < vertices_.size(); ++i) {
        const LatticePoint e1{vertices_[i + 1].x - vertices_[i].x,
                              vertices_[i + 1].y - vertices_[i].y};
        const LatticePoint e2{vertices_[i + 2].x - vertices_[i + 1].x,
                              vertices_[i + 2].y - vertices_[i + 1].y};
        if (!(lattice_cross(e1, e2) < 0))
            throw std::invalid_argument("HN polygon edge slopes must strictly decrease");
    }
}

std::vector<LatticePoint> HNPolygon::interior_vertices() const {
    return {vertices_.begin() + 1, vertices_.end() - 1};
}

HNPolygon hn_polygon(const HNType& nu) {
    std::vector<LatticePoint> vs;
    vs.reserve(nu.pieces().size() + 1);
    LatticePoint p{0, 0};
    vs.push_back(p);
    for (const auto& piece : nu.pieces()) {
        p.x += piece.rank;
        p.y += piece.degree;
        vs.push_back(p);
    }
    return HNPolygon(std::move(vs));
}

HNType hn_type_of(const HNPolygon& poly) {
    std::vector<Charge> pieces;
    const auto& vs = poly.vertices();
    for (size_t i = 0; i + 1 < vs.size(); ++i)
        pieces.emplace_back(vs[i + 1].x - vs[i].x, vs[i + 1].y - vs[i].y);
    return HNType(std::move(pieces));
}

bool strictly_inside(const LatticePoint& p, const Triangle& tri) {
    const Wide base = static_cast<Wide>(tri.n) * p.x;
    return static_cast<Wide>(p.y) * (tri.k + 1) > base &&
           static_cast<Wide>(p.y) * tri.k < base && p.y < tri.n;
}

bool inside_or_boundary(const LatticePoint& p, const Triangle& tri) {
    const Wide base = static_cast<Wide>(tri.n) * p.x;
    return static_cast<Wide>(p.y) * (tri.k + 1) >= base &&
           static_cast<Wide>(p.y) * tri.k <= base && p.y <= tri.n;
}

bool polygon_leq(const HNPolygon& a, const HNPolygon& b) {
    if (a.endpoint() != b.endpoint())
        throw std::invalid_argument("incomparable: different total charge");
    const auto& vb = b.vertices();
    for (const auto& p : a.vertices()) {
        // locate the segment of b's chain that spans p.x
        auto it = std::lower_bound(vb.begin(), vb.end(), p.x,
                                   [](const LatticePoint& v, Int x) { return v.x < x; });
        if (it->x == p.x) {
            if (p.y > it->y) return false;
            continue;
        }
        const LatticePoint v1 = *(it - 1), v2 = *it;
        const LatticePoint d{v2.x - v1.x, v2.y - v1.y};
        const LatticePoint e{p.x - v1.x, p.y - v1.y};
        if (lattice_cross(d, e) > 0) return false;  // p above the segment
    }
    return true;
}

namespace {

void append_point(std::string& out, Int px, Int py) {
    out += std::to_string(px);
    out += ',';
    out += std::to_string(py);
}

}  // namespace

std::string polygon_svg(const HNPolygon& poly, const Triangle& tri) {
    constexpr Int unit = 60;
    constexpr Int margin = 60;
    const Int K = tri.k + 1, N = tri.n;
    const Int width = unit * K + 2 * margin;
    const Int height = unit * N + 2 * margin;
    const auto px = [&](Int x) { return margin + unit * x; };
    const auto py = [&](Int y) { return margin + unit * (N - y); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + std::to_string(width) +
           " " + std::to_string(height) + "\" width=\"" + std::to_string(width) + "\" height=\"" +
           std::to_string(height) + "\">\n";
    svg += "<rect width=\"" + std::to_string(width) + "\" height=\"" + std::to_string(height) +
           "\" fill=\"white\"/>\n";

    // admissibility triangle (0,0), (k+1,n), (k,n)
    svg += "<polygon points=\"";
    append_point(svg, px(0), py(0));
    svg += ' ';
    append_point(svg, px(K), py(N));
    svg += ' ';
    append_point(svg, px(tri.k), py(N));
    svg += "\" fill=\"#e8eeff\" stroke=\"#7788cc\" stroke-width=\"2\"/>\n";

    // the polygon region: top chain closed along the base
    svg += "<polygon points=\"";
    for (const auto& v : poly.vertices()) {
        append_point(svg, px(v.x), py(v.y));
        svg += ' ';
    }
    append_point(svg, px(0), py(0));
    svg += "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"3\"/>\n";

    for (const auto& v : poly.vertices()) {
        svg += "<circle cx=\"" + std::to_string(px(v.x)) + "\" cy=\"" + std::to_string(py(v.y)) +
               "\" r=\"6\" fill=\"#222222\"/>\n";
        svg += "<text x=\"" + std::to_string(px(v.x) + 9) + "\" y=\"" +
               std::to_string(py(v.y) - 9) + "\" font-family=\"monospace\" font-size=\"18\">(" +
               std::to_string(v.x) + "," + std::to_string(v.y) + ")</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace leafatlas
