#include "leafatlas/charges.hpp"

#include <limits>

namespace leafatlas {

Int checked_narrow(Wide v) {
    if (v > static_cast<Wide>(std::numeric_limits<Int>::max()) ||
        v < static_cast<Wide>(std::numeric_limits<Int>::min()))
        throw std::overflow_error("charge arithmetic overflows 64 bits");
    return static_cast<Int>(v);
}

Slope::Slope(Int numerator, Int denominator) {
    if (denominator == 0) throw std::domain_error("slope with zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const Int g = std::gcd(numerator, denominator);
    num_ = g ? numerator / g : 0;
    den_ = g ? denominator / g : 1;
}

Slope Slope::operator+(const Slope& other) const {
    const Wide num = static_cast<Wide>(num_) * other.den_ + static_cast<Wide>(other.num_) * den_;
    const Wide den = static_cast<Wide>(den_) * other.den_;
    return Slope(checked_narrow(num), checked_narrow(den));
}

Slope slope(const Charge& c) {
    if (c.rank == 0) throw std::domain_error("slope undefined for torsion charge");
    return Slope(c.degree, c.rank);
}

Int euler_pairing(const Charge& a, const Charge& b) {
    return checked_narrow(static_cast<Wide>(a.rank) * b.degree -
                          static_cast<Wide>(a.degree) * b.rank);
}

Charge tensor(const Charge& a, const Charge& b) {
    return Charge(checked_narrow(static_cast<Wide>(a.rank) * b.rank),
                  checked_narrow(static_cast<Wide>(a.rank) * b.degree +
                                 static_cast<Wide>(a.degree) * b.rank));
}

Charge dual(const Charge& a) { return Charge(a.rank, -a.degree); }

Int charge_gcd(const Charge& c) { return std::gcd(c.rank, c.degree); }

bool is_stable_charge(const Charge& c) {
    if (c.rank == 0) throw std::domain_error("stability undefined for torsion charge");
    return charge_gcd(c) == 1;
}

std::string format_charge(const Charge& c) {
    return "(" + std::to_string(c.rank) + "," + std::to_string(c.degree) + ")";
}

}  // namespace leafatlas
