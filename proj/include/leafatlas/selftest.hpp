#pragma once

#include <iosfwd>

#include "leafatlas/charges.hpp"

namespace leafatlas {

/// Differential suite over all coprime (k,n) with 1 <= k < n <= max_n:
/// naive vs optimized enumeration, polygon order and End dimensions, plus
/// the parallel-vs-serial enumeration cross-check. Independent pairs may run
/// on up to `jobs` workers; output order is fixed. Returns true on full
/// agreement.
bool run_selftest(Int max_n, int jobs, std::ostream& out);

}  // namespace leafatlas
