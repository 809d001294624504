#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "leafatlas/charges.hpp"

namespace leafatlas {

/// One indecomposable class, identified by its charge (rank >= 1) and
/// assumed to sit at a generic modulus of the curve's parameter space.
struct IndecClass {
    Charge charge;

    explicit IndecClass(Charge c) : charge(c) {
        if (c.rank < 1) throw std::invalid_argument("indecomposable class needs rank >= 1");
    }

    Slope class_slope() const { return slope(charge); }
    /// Generic endomorphism dimension h = gcd(rank, |degree|).
    Int end_dim() const { return charge_gcd(charge); }
    bool is_stable() const { return end_dim() == 1; }

    friend bool operator==(const IndecClass&, const IndecClass&) = default;
};

struct Summand {
    IndecClass cls;
    Int multiplicity = 1;  // m pairwise-distinct generic instances

    friend bool operator==(const Summand&, const Summand&) = default;
};

/// A formal generic bundle: multiset of indecomposable classes. Summands are
/// held in canonical order (slope descending, rank ascending, degree
/// ascending) with equal classes merged into the multiplicity.
class BundleType {
public:
    BundleType() = default;
    explicit BundleType(std::vector<Summand> summands);

    const std::vector<Summand>& summands() const { return summands_; }
    bool empty() const { return summands_.empty(); }
    Charge total_charge() const;
    /// Number of summand instances, multiplicities counted.
    Int instance_count() const;
    /// Canonical type string, e.g. "1,2*2;1,1".
    std::string id() const;

    friend bool operator==(const BundleType&, const BundleType&) = default;

private:
    std::vector<Summand> summands_;
};

/// Harder-Narasimhan type: the graded charges, slopes strictly decreasing.
class HNType {
public:
    HNType() = default;
    explicit HNType(std::vector<Charge> pieces);

    const std::vector<Charge>& pieces() const { return pieces_; }
    Charge total_charge() const;
    bool semistable() const { return pieces_.size() == 1; }
    /// Pieces joined by ';' in the shared type-string grammar, e.g. "2,4;1,1".
    std::string id() const;

    friend bool operator==(const HNType&, const HNType&) = default;

private:
    std::vector<Charge> pieces_;
};

struct SectionDims {
    Int h0 = 0;
    Int h1 = 0;
    friend bool operator==(const SectionDims&, const SectionDims&) = default;
};

struct HomExt {
    Int hom = 0;
    Int ext = 0;
    friend bool operator==(const HomExt&, const HomExt&) = default;
};

/// Canonical summand order: slope descending, then rank ascending, then
/// degree ascending.
bool summand_charge_less(const Charge& a, const Charge& b);

/// Group the summands by slope and sum charges per slope, slopes strictly
/// decreasing. Total charge is preserved.
HNType hn_decompose(const BundleType& t);

/// Generic section dimensions: a summand of degree d contributes (d, 0) for
/// d > 0, (0, -d) for d < 0 and (0, 0) for d = 0, weighted by multiplicity.
SectionDims h0_h1_generic(const BundleType& t);

/// Generic (hom, ext) dimensions between two indecomposable classes.
/// `same_instance` distinguishes a class paired with itself from a distinct
/// generic instance of equal slope.
HomExt hom_ext_generic(const IndecClass& x, const IndecClass& y, bool same_instance);

/// dim End of the generic bundle of this type: sum of hom dimensions over
/// ordered instance pairs, the diagonal taken with same-instance semantics.
Int end_dim_generic(const BundleType& t);

/// Degree of the determinant line bundle (total degree).
Int det_degree(const BundleType& t);

/// Parse the type-string grammar: "r,d" pairs joined by ';' with an optional
/// "*m" multiplicity suffix; whitespace is ignored. The result is canonical.
BundleType parse_bundle_type(std::string_view text);

}  // namespace leafatlas
