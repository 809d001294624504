#pragma once

#include <string>
#include <utility>
#include <vector>

#include "leafatlas/polygons.hpp"

namespace leafatlas {

/// Outcome of the middle-term test, with per-vertex diagnostics.
struct Verdict {
    bool admissible = false;
    bool charge_ok = false;
    Charge expected_charge;
    Charge actual_charge;

    struct VertexIssue {
        LatticePoint vertex;
        bool on_boundary = false;  // on the closed triangle's edge, else outside
    };
    std::vector<VertexIssue> vertex_issues;
    /// Summands of non-positive degree; redundant with the vertex tests but
    /// reported separately.
    std::vector<Charge> nonpositive_summands;

    std::string message() const;
};

/// Per-type dimension report. `vertices` are the interior vertices of the
/// HN polygon; the semistable type has none.
struct LeafRecord {
    std::string id;  // canonical type string of bundle_type
    BundleType bundle_type;
    HNType hn_type;
    std::vector<LatticePoint> vertices;
    Int end_dim = 0;
    Int leaf_dim = 0;     // n - end_dim
    Int moduli_dim = 0;   // instance count - 1
    Int stratum_dim = 0;  // leaf_dim + moduli_dim
    bool is_semistable = false;
    bool is_stable_type = false;
    bool det_satisfiable = true;  // by a generic choice of summand moduli
};

/// Full report for one (k,n): records in canonical order plus the Shatz
/// specialization order (upper bound) on HN types as covering relations.
struct Atlas {
    Int k = 0;
    Int n = 0;
    Int ambient_dim = 0;
    bool warning = false;  // n below the geometric range; combinatorics still fine
    std::vector<HNType> hn_types;  // canonical order
    std::vector<LeafRecord> records;
    std::vector<std::pair<std::string, std::string>> poset_edges;  // (low, high) HN ids
};

/// Accepts iff 1 <= k < n and gcd(k,n) = 1; returns the n < 3 warning flag.
/// Throws std::invalid_argument otherwise.
bool validate_input(Int k, Int n);

/// (n+1, n-1): tangent dimension of the section moduli and the ambient
/// projective dimension after the codimension-two reduction.
std::pair<Int, Int> ambient_dims(Int k, Int n);

/// The triangle criterion: total charge (k+1, n) and every interior vertex
/// of the HN polygon strictly inside the triangle.
Verdict check_middle_term(const BundleType& t, Int k, Int n);

/// All HN types of admissible middle terms, canonically ordered by interior
/// vertex list. Branches over the first interior vertex run in parallel when
/// jobs > 1; output is identical for any job count.
std::vector<HNType> enumerate_hn_types(Int k, Int n, int jobs = 1);

/// Plain recursive reference enumeration, kept for differential tests and
/// the benchmark.
std::vector<HNType> enumerate_hn_types_serial(Int k, Int n);

/// All bundle types refining the HN type: Cartesian products of integer
/// partitions of each piece's primitive multiplicity, coarsest first.
std::vector<BundleType> refine_to_indec(const HNType& nu);

/// n - dim End of the generic bundle. Throws std::domain_error when
/// negative (the type is not admissible at this n).
Int leaf_dimension(const BundleType& t, Int n);

/// Assemble the atlas. With refine, one record per indecomposable
/// refinement; otherwise one per HN type, the pieces kept as summands.
Atlas build_atlas(Int k, Int n, bool refine, int jobs = 1);

/// Single-threaded reference twin of build_atlas.
Atlas build_atlas_serial(Int k, Int n, bool refine);

}  // namespace leafatlas
