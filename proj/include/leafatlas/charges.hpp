#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace leafatlas {

// All arithmetic in the core modules is exact. Public values are 64-bit
// signed integers; products are evaluated in 128 bits and narrowed with a
// range check, so strict boundary tests never silently wrap.
using Int = std::int64_t;
using Wide = __int128;

/// Narrow a 128-bit product back to Int, throwing std::overflow_error if it
/// does not fit.
Int checked_narrow(Wide v);

/// (rank, degree) of a sheaf in the numerical K-group of the curve.
/// rank == 0 is legal only as an intermediate arithmetic value (torsion
/// charge); it never appears inside a bundle type.
struct Charge {
    Int rank = 0;
    Int degree = 0;

    Charge() = default;
    Charge(Int r, Int d) : rank(r), degree(d) {
        if (r < 0) throw std::invalid_argument("charge rank must be >= 0");
    }

    friend bool operator==(const Charge&, const Charge&) = default;
};

/// degree/rank in lowest terms. Denominator >= 1, sign carried by the
/// numerator; comparisons are exact cross-multiplications.
class Slope {
public:
    Slope(Int numerator, Int denominator);

    Int num() const { return num_; }
    Int den() const { return den_; }

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Slope& a, const Slope& b) {
        return static_cast<Wide>(a.num_) * b.den_ < static_cast<Wide>(b.num_) * a.den_;
    }
    friend bool operator>(const Slope& a, const Slope& b) { return b < a; }
    friend bool operator<=(const Slope& a, const Slope& b) { return !(b < a); }
    friend bool operator>=(const Slope& a, const Slope& b) { return !(a < b); }

    Slope operator+(const Slope& other) const;

private:
    Int num_;
    Int den_;
};

/// mu = degree/rank. Throws std::domain_error for torsion charges.
Slope slope(const Charge& c);

/// chi(a, b) = rank(a)*degree(b) - degree(a)*rank(b); equals
/// dim Hom - dim Ext^1 on the curve.
Int euler_pairing(const Charge& a, const Charge& b);

/// Charge of a tensor product: (ra*rb, ra*db + da*rb).
Charge tensor(const Charge& a, const Charge& b);

/// Charge of the dual: (rank, -degree).
Charge dual(const Charge& a);

/// True iff gcd(rank, |degree|) == 1, with gcd(r, 0) = r. Throws on rank 0.
bool is_stable_charge(const Charge& c);

/// gcd(rank, |degree|) with gcd(r, 0) = r; the generic endomorphism
/// dimension of the indecomposable of this charge.
Int charge_gcd(const Charge& c);

/// "(r,d)" -- used in diagnostics, not in the type-string grammar.
std::string format_charge(const Charge& c);

}  // namespace leafatlas
