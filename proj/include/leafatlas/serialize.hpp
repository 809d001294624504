#pragma once

#include <string>

#include "leafatlas/atlas.hpp"

namespace leafatlas {

/// JSON document with keys exactly
/// {"k","n","ambient_dim","warning","records":[...],"poset":[...]} in this
/// order; integers as JSON numbers. Byte-stable for identical atlases.
std::string atlas_json(const Atlas& a);

/// Tab-separated table, columns: id, vertices, end_dim, leaf_dim,
/// moduli_dim, stratum_dim, flags. Same numeric content as the JSON.
std::string atlas_tsv(const Atlas& a);

/// DOT digraph of the Shatz covering relations; node ids are the canonical
/// type strings and edges run low -> high.
std::string poset_dot(const Atlas& a);

}  // namespace leafatlas
