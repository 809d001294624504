#pragma once

#include <vector>

#include "leafatlas/bundles.hpp"
#include "leafatlas/polygons.hpp"

namespace leafatlas::oracle {

/// Brute-force reference implementations for differential testing. Beyond
/// the charges layer they share no code with the optimized modules, and
/// they are single-threaded by contract.

/// Every multiset of charges (r,d) with r >= 1, sum of ranks k+1, each
/// degree in [-n+1, n] and total degree n, filtered by direct evaluation of
/// the triangle inequalities on its HN polygon. Sorted by id.
std::vector<BundleType> naive_enumerate(Int k, Int n);

/// Shatz order by per-column comparison: at every integer abscissa the top
/// chain of a sits at or below the top chain of b, as exact rationals.
bool naive_polygon_leq(const HNPolygon& a, const HNPolygon& b);

/// dim End by expanding multiplicities into explicit instances and summing
/// hom dimensions over all ordered instance pairs.
Int naive_end_dim(const BundleType& t);

}  // namespace leafatlas::oracle
