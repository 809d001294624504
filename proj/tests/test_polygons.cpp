#include <doctest.h>

#include <numeric>

#include "leafatlas/atlas.hpp"
#include "leafatlas/oracle.hpp"
#include "leafatlas/polygons.hpp"

using namespace leafatlas;

namespace {

HNPolygon poly_of(std::initializer_list<LatticePoint> pts) {
    return HNPolygon(std::vector<LatticePoint>(pts));
}

std::vector<std::pair<Int, Int>> coprime_pairs(Int max_n) {
    std::vector<std::pair<Int, Int>> pairs;
    for (Int n = 2; n <= max_n; ++n)
        for (Int k = 1; k < n; ++k)
            if (std::gcd(k, n) == 1) pairs.emplace_back(k, n);
    return pairs;
}

}  // namespace

TEST_CASE("hn_polygon accumulates the type") {
    CHECK(hn_polygon(HNType({Charge(2, 3)})) == poly_of({{0, 0}, {2, 3}}));
    CHECK(hn_polygon(HNType({Charge(1, 2), Charge(1, 1)})) == poly_of({{0, 0}, {1, 2}, {2, 3}}));
    CHECK(hn_polygon(HNType({Charge(1, 2), Charge(2, 3)})) == poly_of({{0, 0}, {1, 2}, {3, 5}}));
}

TEST_CASE("polygon validation rejects non-concave chains") {
    CHECK_THROWS_AS(poly_of({{0, 0}, {1, 1}, {2, 3}}), std::invalid_argument);   // slopes increase
    CHECK_THROWS_AS(poly_of({{0, 0}, {1, 1}, {2, 2}}), std::invalid_argument);   // collinear
    CHECK_THROWS_AS(poly_of({{0, 0}, {2, 3}, {1, 1}}), std::invalid_argument);   // x not increasing
    CHECK_THROWS_AS(poly_of({{1, 0}, {2, 3}}), std::invalid_argument);           // wrong origin
}

TEST_CASE("edge vectors recover the type") {
    const HNType nu({Charge(1, 3), Charge(2, 3), Charge(3, 1)});
    CHECK(hn_type_of(hn_polygon(nu)) == nu);
}

TEST_CASE("strict interior of the triangle") {
    CHECK(strictly_inside({1, 2}, Triangle(1, 3)));
    CHECK_FALSE(strictly_inside({1, 3}, Triangle(1, 3)));  // triangle vertex
    CHECK(strictly_inside({2, 4}, Triangle(2, 5)));
    CHECK_FALSE(strictly_inside({0, 0}, Triangle(2, 5)));
    CHECK_FALSE(strictly_inside({1, 1}, Triangle(3, 4)));  // on the base: 1*4 = 4*1
    CHECK(inside_or_boundary({1, 1}, Triangle(3, 4)));
    CHECK_FALSE(inside_or_boundary({1, 4}, Triangle(2, 5)));
}

TEST_CASE("Shatz containment on the (2,5) fixtures") {
    const HNPolygon base = poly_of({{0, 0}, {3, 5}});
    const HNPolygon mid = poly_of({{0, 0}, {1, 2}, {3, 5}});
    const HNPolygon high = poly_of({{0, 0}, {2, 4}, {3, 5}});
    CHECK(polygon_leq(base, mid));
    CHECK(polygon_leq(mid, high));  // (1,2) lies on the segment (0,0)-(2,4)
    CHECK_FALSE(polygon_leq(high, mid));
    CHECK(oracle::naive_polygon_leq(base, mid));
    CHECK(oracle::naive_polygon_leq(mid, high));
    CHECK_FALSE(oracle::naive_polygon_leq(high, mid));

    const HNPolygon other = poly_of({{0, 0}, {2, 3}});
    CHECK_THROWS_AS(polygon_leq(base, other), std::invalid_argument);
    CHECK_THROWS_AS(oracle::naive_polygon_leq(base, other), std::invalid_argument);
}

TEST_CASE("containment is a partial order on enumerated polygons, n <= 10") {
    for (const auto& [k, n] : coprime_pairs(10)) {
        std::vector<HNPolygon> polys;
        for (const auto& nu : enumerate_hn_types(k, n)) polys.push_back(hn_polygon(nu));
        const size_t count = polys.size();
        std::vector<char> leq(count * count);
        for (size_t i = 0; i < count; ++i)
            for (size_t j = 0; j < count; ++j) {
                leq[i * count + j] = polygon_leq(polys[i], polys[j]) ? 1 : 0;
                CHECK(leq[i * count + j] == (oracle::naive_polygon_leq(polys[i], polys[j]) ? 1 : 0));
            }
        for (size_t i = 0; i < count; ++i) {
            CHECK(leq[i * count + i]);  // reflexive
            for (size_t j = 0; j < count; ++j) {
                if (i != j && leq[i * count + j]) CHECK_FALSE(leq[j * count + i]);  // antisymmetric
                for (size_t m = 0; m < count; ++m)
                    if (leq[i * count + j] && leq[j * count + m])
                        CHECK(leq[i * count + m]);  // transitive
            }
        }
    }
}

TEST_CASE("interior-admissible polygons have strictly positive edge slopes") {
    for (const auto& [k, n] : coprime_pairs(10)) {
        for (const auto& nu : enumerate_hn_types(k, n)) {
            const HNPolygon poly = hn_polygon(nu);
            const auto& vs = poly.vertices();
            for (size_t i = 0; i + 1 < vs.size(); ++i) CHECK(vs[i + 1].y > vs[i].y);
        }
    }
}

TEST_CASE("SVG output is deterministic and labels every vertex") {
    const HNPolygon poly = poly_of({{0, 0}, {1, 2}, {3, 5}});
    const Triangle tri(2, 5);
    const std::string svg = polygon_svg(poly, tri);
    CHECK(svg == polygon_svg(poly, tri));
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("(1,2)") != std::string::npos);
    CHECK(svg.find("(3,5)") != std::string::npos);
    CHECK(svg.find("viewBox=\"0 0 300 420\"") != std::string::npos);  // 60 px per unit
}
