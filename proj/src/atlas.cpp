#include "leafatlas/atlas.hpp"

#include <algorithm>
#include <numeric>

namespace leafatlas {

bool validate_input(Int k, Int n) {
    if (k < 1 || k >= n) throw std::invalid_argument("rank/degree out of range: need 1 <= k < n");
    if (std::gcd(k, n) != 1)
        throw std::invalid_argument("no stable F of charge " + format_charge(Charge(k, n)));
    return n < 3;
}

std::pair<Int, Int> ambient_dims(Int k, Int n) {
    validate_input(k, n);
    return {n + 1, n - 1};
}

std::string Verdict::message() const {
    if (admissible)
        return "admissible: every interior vertex strictly inside the triangle; "
               "det condition satisfiable by generic choice of moduli";
    std::string out = "not admissible: ";
    bool first = true;
    const auto append = [&](const std::string& part) {
        if (!first) out += "; ";
        out += part;
        first = false;
    };
    if (!charge_ok)
        append("total charge " + format_charge(actual_charge) + " differs from required " +
               format_charge(expected_charge));
    for (const auto& issue : vertex_issues) {
        const std::string where = issue.on_boundary ? " on triangle boundary" : " outside triangle";
        append("vertex (" + std::to_string(issue.vertex.x) + "," + std::to_string(issue.vertex.y) +
               ")" + where);
    }
    for (const auto& c : nonpositive_summands)
        append("summand " + format_charge(c) + " degree " + std::to_string(c.degree) +
               " violates positivity");
    return out;
}

Verdict check_middle_term(const BundleType& t, Int k, Int n) {
    validate_input(k, n);
    Verdict v;
    v.expected_charge = Charge(k + 1, n);
    v.actual_charge = t.total_charge();
    v.charge_ok = v.actual_charge == v.expected_charge;
    if (!t.empty()) {
        const Triangle tri(k, n);
        const HNPolygon poly = hn_polygon(hn_decompose(t));
        for (const auto& p : poly.interior_vertices())
            if (!strictly_inside(p, tri))
                v.vertex_issues.push_back({p, inside_or_boundary(p, tri)});
        for (const auto& s : t.summands())
            if (s.cls.charge.degree <= 0) v.nonpositive_summands.push_back(s.cls.charge);
    }
    v.admissible = v.charge_ok && v.vertex_issues.empty();
    return v;
}

namespace {

using VertexList = std::vector<LatticePoint>;

std::vector<LatticePoint> interior_candidates(Int k, Int n) {
    const Triangle tri(k, n);
    std::vector<LatticePoint> pts;
    for (Int x = 1; x <= k; ++x)
        for (Int y = 1; y < n; ++y)
            if (strictly_inside({x, y}, tri)) pts.push_back({x, y});
    return pts;  // ordered by (x, y)
}

// Depth-first extension of strictly concave chains. A vertex q reached with
// incoming edge e can be completed iff the chord to the endpoint is strictly
// shallower than e; the direct finish is then itself a valid completion, so
// every recursion step also emits.
void extend_paths(const std::vector<LatticePoint>& cands, LatticePoint end, VertexList& path,
                  LatticePoint last, LatticePoint prev_edge, std::vector<VertexList>& out) {
    for (const auto& q : cands) {
        if (q.x <= last.x) continue;
        const LatticePoint e{q.x - last.x, q.y - last.y};
        if (!(lattice_cross(prev_edge, e) < 0)) continue;
        const LatticePoint f{end.x - q.x, end.y - q.y};
        if (!(lattice_cross(e, f) < 0)) continue;
        path.push_back(q);
        out.push_back(path);
        extend_paths(cands, end, path, q, e, out);
        path.pop_back();
    }
}

// Interior vertex lists -> canonically sorted HN types, with the positivity
// consequence checked on every emitted piece.
std::vector<HNType> finish_enumeration(Int k, Int n, std::vector<VertexList> lists) {
    std::sort(lists.begin(), lists.end());
    const LatticePoint end{k + 1, n};
    std::vector<HNType> types;
    types.reserve(lists.size());
    for (const auto& ivs : lists) {
        VertexList vs;
        vs.reserve(ivs.size() + 2);
        vs.push_back({0, 0});
        vs.insert(vs.end(), ivs.begin(), ivs.end());
        vs.push_back(end);
        HNType nu = hn_type_of(HNPolygon(std::move(vs)));
        for (const auto& piece : nu.pieces())
            if (piece.degree < 1)
                throw std::logic_error("enumerated type with non-positive summand degree");
        types.push_back(std::move(nu));
    }
    return types;
}

}  // namespace

std::vector<HNType> enumerate_hn_types_serial(Int k, Int n) {
    validate_input(k, n);
    const auto cands = interior_candidates(k, n);
    const LatticePoint end{k + 1, n};
    std::vector<VertexList> lists;
    lists.push_back({});  // the vertex-free semistable type
    VertexList path;
    for (const auto& q : cands) {
        const LatticePoint f{end.x - q.x, end.y - q.y};
        if (!(lattice_cross(q, f) < 0)) continue;
        path.assign(1, q);
        lists.push_back(path);
        extend_paths(cands, end, path, q, q, lists);
    }
    return finish_enumeration(k, n, std::move(lists));
}

std::vector<HNType> enumerate_hn_types(Int k, Int n, int jobs) {
    validate_input(k, n);
    if (jobs < 1) jobs = 1;
    const auto cands = interior_candidates(k, n);
    const LatticePoint end{k + 1, n};

    // one branch per first interior vertex; merged in branch order, so the
    // result does not depend on the number of workers
    std::vector<std::vector<VertexList>> branches(cands.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(cands.size()); ++i) {
        const LatticePoint q = cands[i];
        const LatticePoint f{end.x - q.x, end.y - q.y};
        if (!(lattice_cross(q, f) < 0)) continue;
        VertexList path{q};
        branches[i].push_back(path);
        extend_paths(cands, end, path, q, q, branches[i]);
    }

    std::vector<VertexList> lists;
    lists.push_back({});
    for (auto& b : branches)
        for (auto& l : b) lists.push_back(std::move(l));
    return finish_enumeration(k, n, std::move(lists));
}

namespace {

// partitions of m, parts descending within each partition, partitions in
// descending lexicographic order: [m], [m-1,1], ..., [1,...,1]
void partitions_desc(Int m, Int cap, std::vector<Int>& acc, std::vector<std::vector<Int>>& out) {
    if (m == 0) {
        out.push_back(acc);
        return;
    }
    for (Int p = std::min(cap, m); p >= 1; --p) {
        acc.push_back(p);
        partitions_desc(m - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<BundleType> refine_to_indec(const HNType& nu) {
    struct PieceOptions {
        Charge primitive;
        std::vector<std::vector<Int>> partitions;
    };
    std::vector<PieceOptions> options;
    options.reserve(nu.pieces().size());
    for (const auto& piece : nu.pieces()) {
        const Int g = charge_gcd(piece);
        std::vector<std::vector<Int>> parts;
        std::vector<Int> acc;
        partitions_desc(g, g, acc, parts);
        options.push_back({Charge(piece.rank / g, piece.degree / g), std::move(parts)});
    }

    std::vector<BundleType> out;
    std::vector<size_t> pick(options.size(), 0);
    while (true) {
        std::vector<Summand> summands;
        for (size_t i = 0; i < options.size(); ++i)
            for (Int part : options[i].partitions[pick[i]])
                summands.push_back({IndecClass(Charge(part * options[i].primitive.rank,
                                                       part * options[i].primitive.degree)),
                                    1});
        out.emplace_back(std::move(summands));
        // odometer over the per-piece partition choices
        size_t i = options.size();
        while (i > 0) {
            --i;
            if (++pick[i] < options[i].partitions.size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
        if (options.empty()) return out;
    }
}

Int leaf_dimension(const BundleType& t, Int n) {
    const Int dim = n - end_dim_generic(t);
    if (dim < 0) throw std::domain_error("type not admissible at this n");
    return dim;
}

namespace {

LeafRecord make_record(const HNType& nu, const VertexList& interior, BundleType bt, Int n) {
    LeafRecord r;
    r.bundle_type = std::move(bt);
    r.hn_type = nu;
    r.vertices = interior;
    r.id = r.bundle_type.id();
    r.end_dim = end_dim_generic(r.bundle_type);
    r.leaf_dim = leaf_dimension(r.bundle_type, n);
    r.moduli_dim = r.bundle_type.instance_count() - 1;
    r.stratum_dim = r.leaf_dim + r.moduli_dim;
    r.is_semistable = nu.semistable();
    const auto& ss = r.bundle_type.summands();
    r.is_stable_type = ss.size() == 1 && ss[0].multiplicity == 1 && ss[0].cls.is_stable();
    return r;
}

BundleType coarsest_refinement(const HNType& nu) {
    std::vector<Summand> summands;
    summands.reserve(nu.pieces().size());
    for (const auto& piece : nu.pieces()) summands.push_back({IndecClass(piece), 1});
    return BundleType(std::move(summands));
}

// (i,j) is a covering relation iff i < j strictly and no m lies strictly
// between, i.e. the successor set of i misses the predecessor set of j.
// Both sets exclude their owner, so the intersection test needs no masking.
std::vector<std::pair<size_t, size_t>> covering_edges(const std::vector<char>& leq, size_t count,
                                                      int jobs) {
    const size_t words = (count + 63) / 64;
    std::vector<std::uint64_t> succ(count * words, 0), pred(count * words, 0);
    for (size_t i = 0; i < count; ++i)
        for (size_t j = 0; j < count; ++j)
            if (i != j && leq[i * count + j]) {
                succ[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
                pred[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
            }

    std::vector<std::vector<size_t>> hits(count);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
        const std::uint64_t* si = &succ[i * words];
        for (size_t j = 0; j < count; ++j) {
            if (static_cast<size_t>(i) == j || !leq[i * count + j]) continue;
            const std::uint64_t* pj = &pred[j * words];
            bool witness = false;
            for (size_t w = 0; w < words; ++w)
                if (si[w] & pj[w]) {
                    witness = true;
                    break;
                }
            if (!witness) hits[i].push_back(j);
        }
    }

    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t i = 0; i < count; ++i)
        for (size_t j : hits[i]) edges.emplace_back(i, j);
    return edges;
}

struct RecordSlot {
    size_t type_index;
    BundleType bundle;
};

std::vector<RecordSlot> record_slots(const std::vector<HNType>& types, bool refine) {
    std::vector<RecordSlot> slots;
    for (size_t ti = 0; ti < types.size(); ++ti) {
        if (refine)
            for (auto& bt : refine_to_indec(types[ti])) slots.push_back({ti, std::move(bt)});
        else
            slots.push_back({ti, coarsest_refinement(types[ti])});
    }
    return slots;
}

Atlas assemble_header(Int k, Int n) {
    Atlas a;
    a.k = k;
    a.n = n;
    a.warning = validate_input(k, n);
    a.ambient_dim = n - 1;
    return a;
}

void finalize_poset(Atlas& a, const std::vector<char>& leq, int jobs) {
    const size_t count = a.hn_types.size();
    for (auto [lo, hi] : covering_edges(leq, count, jobs))
        a.poset_edges.emplace_back(a.hn_types[lo].id(), a.hn_types[hi].id());
}

}  // namespace

Atlas build_atlas(Int k, Int n, bool refine, int jobs) {
    if (jobs < 1) jobs = 1;
    Atlas a = assemble_header(k, n);
    a.hn_types = enumerate_hn_types(k, n, jobs);
    const size_t count = a.hn_types.size();

    std::vector<VertexList> interiors(count);
    std::vector<HNPolygon> polys;
    polys.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        polys.push_back(hn_polygon(a.hn_types[i]));
        interiors[i] = polys[i].interior_vertices();
    }

    auto slots = record_slots(a.hn_types, refine);
    a.records.resize(slots.size());
#pragma omp parallel for schedule(static) num_threads(jobs)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(slots.size()); ++i)
        a.records[i] = make_record(a.hn_types[slots[i].type_index], interiors[slots[i].type_index],
                                   std::move(slots[i].bundle), n);

    std::vector<char> leq(count * count, 0);
#pragma omp parallel for schedule(static) num_threads(jobs)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
        for (size_t j = 0; j < count; ++j)
            leq[static_cast<size_t>(i) * count + j] = polygon_leq(polys[i], polys[j]) ? 1 : 0;

    finalize_poset(a, leq, jobs);
    return a;
}

Atlas build_atlas_serial(Int k, Int n, bool refine) {
    Atlas a = assemble_header(k, n);
    a.hn_types = enumerate_hn_types_serial(k, n);
    const size_t count = a.hn_types.size();

    std::vector<HNPolygon> polys;
    polys.reserve(count);
    for (const auto& nu : a.hn_types) polys.push_back(hn_polygon(nu));

    for (auto& slot : record_slots(a.hn_types, refine))
        a.records.push_back(make_record(a.hn_types[slot.type_index],
                                        polys[slot.type_index].interior_vertices(),
                                        std::move(slot.bundle), n));

    std::vector<char> leq(count * count, 0);
    for (size_t i = 0; i < count; ++i)
        for (size_t j = 0; j < count; ++j)
            leq[i * count + j] = polygon_leq(polys[i], polys[j]) ? 1 : 0;

    finalize_poset(a, leq, 1);
    return a;
}

}  // namespace leafatlas
