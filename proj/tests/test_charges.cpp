#include <doctest.h>

#include <random>

#include "leafatlas/charges.hpp"

using namespace leafatlas;

namespace {

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Exact comparison of p/q and r/s (q, s > 0) by continued-fraction descent.
// Multiplication-free, so it is an independent check on the cross-multiplied
// Slope order.
int frac_cmp(Int p, Int q, Int r, Int s) {
    const Int fp = floor_div(p, q), fr = floor_div(r, s);
    if (fp != fr) return fp < fr ? -1 : 1;
    const Int p2 = p - fp * q, r2 = r - fr * s;
    if (p2 == 0 && r2 == 0) return 0;
    if (p2 == 0) return -1;
    if (r2 == 0) return 1;
    // compare fractional parts through their reciprocals
    return frac_cmp(s, r2, q, p2);
}

}  // namespace

TEST_CASE("slope reduces to lowest terms") {
    CHECK(slope(Charge(2, 3)) == Slope(3, 2));
    CHECK(slope(Charge(3, 0)) == Slope(0, 1));
    CHECK(slope(Charge(2, 4)) == Slope(2, 1));
    CHECK(slope(Charge(4, -6)) == Slope(-3, 2));
    CHECK_THROWS_AS(slope(Charge(0, 5)), std::domain_error);
}

TEST_CASE("euler pairing") {
    CHECK(euler_pairing(Charge(1, 0), Charge(2, 5)) == 5);
    CHECK(euler_pairing(Charge(2, 3), Charge(2, 3)) == 0);
    CHECK(euler_pairing(Charge(2, 3), Charge(1, 2)) == 1);
}

TEST_CASE("tensor and dual") {
    CHECK(tensor(Charge(1, 0), Charge(5, 7)) == Charge(5, 7));
    CHECK(tensor(Charge(2, 3), dual(Charge(2, 3))) == Charge(4, 0));
    CHECK(tensor(Charge(2, 1), Charge(3, 1)) == Charge(6, 5));
    CHECK(dual(Charge(2, 3)) == Charge(2, -3));
    CHECK(dual(Charge(1, 0)) == Charge(1, 0));
    CHECK(dual(dual(Charge(5, -7))) == Charge(5, -7));
}

TEST_CASE("charge stability") {
    CHECK(is_stable_charge(Charge(2, 3)));
    CHECK_FALSE(is_stable_charge(Charge(2, 4)));
    CHECK(is_stable_charge(Charge(1, 0)));
    CHECK(is_stable_charge(Charge(5, 0)) == false);  // gcd(5, 0) = 5
    CHECK_THROWS_AS(is_stable_charge(Charge(0, 3)), std::domain_error);
}

TEST_CASE("pairing products overflow is detected") {
    const Int big = Int{1} << 62;
    CHECK_THROWS_AS(euler_pairing(Charge(big, 0), Charge(0, big)), std::overflow_error);
    CHECK_THROWS_AS(tensor(Charge(big, 0), Charge(big, 0)), std::overflow_error);
}

TEST_CASE("pairing antisymmetry and the slope sign dictionary") {
    std::mt19937_64 rng(20240511);
    std::uniform_int_distribution<Int> rank(1, 1'000'000);
    std::uniform_int_distribution<Int> deg(-1'000'000'000, 1'000'000'000);
    for (int trial = 0; trial < 10'000; ++trial) {
        const Charge a(rank(rng), deg(rng));
        const Charge b(rank(rng), deg(rng));
        CHECK(euler_pairing(a, b) == -euler_pairing(b, a));
        CHECK((euler_pairing(a, b) > 0) == (slope(a) < slope(b)));
    }
}

TEST_CASE("slope additivity under tensor") {
    std::mt19937_64 rng(987);
    std::uniform_int_distribution<Int> rank(1, 10'000);
    std::uniform_int_distribution<Int> deg(-100'000, 100'000);
    for (int trial = 0; trial < 10'000; ++trial) {
        const Charge a(rank(rng), deg(rng));
        const Charge b(rank(rng), deg(rng));
        CHECK(slope(tensor(a, b)) == slope(a) + slope(b));
    }
}

TEST_CASE("cross-multiplied slope order matches continued-fraction order") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<Int> num(-1'000'000, 1'000'000);
    std::uniform_int_distribution<Int> den(1, 1'000'000);
    for (int trial = 0; trial < 10'000; ++trial) {
        const Int p = num(rng), q = den(rng), r = num(rng), s = den(rng);
        const Slope a(p, q), b(r, s);
        const int expected = frac_cmp(p, q, r, s);
        if (expected < 0) CHECK(a < b);
        if (expected == 0) CHECK(a == b);
        if (expected > 0) CHECK(a > b);
    }
}
