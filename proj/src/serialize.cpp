#include "leafatlas/serialize.hpp"

#include <map>

#include <json.hpp>

namespace leafatlas {

namespace {

using ojson = nlohmann::ordered_json;

ojson charge_pair(const Charge& c) { return ojson::array({c.rank, c.degree}); }

std::string vertices_field(const std::vector<LatticePoint>& vs) {
    if (vs.empty()) return "-";
    std::string out;
    for (const auto& v : vs) {
        if (!out.empty()) out += ';';
        out += "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
    }
    return out;
}

std::string flags_field(const LeafRecord& r) {
    std::string flags;
    flags += r.is_semistable ? 'S' : '-';
    flags += r.is_stable_type ? 'T' : '-';
    flags += r.det_satisfiable ? 'D' : '-';
    return flags;
}

}  // namespace

std::string atlas_json(const Atlas& a) {
    ojson j;
    j["k"] = a.k;
    j["n"] = a.n;
    j["ambient_dim"] = a.ambient_dim;
    j["warning"] = a.warning;
    ojson records = ojson::array();
    for (const auto& r : a.records) {
        ojson jr;
        jr["id"] = r.id;
        ojson hn = ojson::array();
        for (const auto& piece : r.hn_type.pieces()) hn.push_back(charge_pair(piece));
        jr["hn_type"] = std::move(hn);
        ojson summands = ojson::array();
        for (const auto& s : r.bundle_type.summands())
            summands.push_back(
                ojson::array({s.cls.charge.rank, s.cls.charge.degree, s.multiplicity}));
        jr["summands"] = std::move(summands);
        ojson vertices = ojson::array();
        for (const auto& v : r.vertices) vertices.push_back(ojson::array({v.x, v.y}));
        jr["vertices"] = std::move(vertices);
        jr["end_dim"] = r.end_dim;
        jr["leaf_dim"] = r.leaf_dim;
        jr["moduli_dim"] = r.moduli_dim;
        jr["stratum_dim"] = r.stratum_dim;
        jr["is_semistable"] = r.is_semistable;
        jr["is_stable_type"] = r.is_stable_type;
        jr["det_satisfiable"] = r.det_satisfiable;
        records.push_back(std::move(jr));
    }
    j["records"] = std::move(records);
    ojson poset = ojson::array();
    for (const auto& [lo, hi] : a.poset_edges) poset.push_back(ojson::array({lo, hi}));
    j["poset"] = std::move(poset);
    return j.dump(2) + "\n";
}

std::string atlas_tsv(const Atlas& a) {
    std::string out = "id\tvertices\tend_dim\tleaf_dim\tmoduli_dim\tstratum_dim\tflags\n";
    for (const auto& r : a.records) {
        out += r.id;
        out += '\t';
        out += vertices_field(r.vertices);
        out += '\t';
        out += std::to_string(r.end_dim);
        out += '\t';
        out += std::to_string(r.leaf_dim);
        out += '\t';
        out += std::to_string(r.moduli_dim);
        out += '\t';
        out += std::to_string(r.stratum_dim);
        out += '\t';
        out += flags_field(r);
        out += '\n';
    }
    return out;
}

std::string poset_dot(const Atlas& a) {
    // leaf dimensions for type-level nodes come from the record whose
    // summands are the HN pieces themselves (present in both atlas modes)
    std::map<std::string, Int> leaf_of;
    for (const auto& r : a.records) leaf_of.emplace(r.id, r.leaf_dim);

    std::string out = "digraph shatz_poset {\n  rankdir=BT;\n  node [shape=box];\n";
    for (const auto& nu : a.hn_types) {
        const std::string id = nu.id();
        out += "  \"" + id + "\"";
        const auto it = leaf_of.find(id);
        if (it != leaf_of.end())
            out += " [label=\"" + id + "\\nleaf_dim=" + std::to_string(it->second) + "\"]";
        out += ";\n";
    }
    for (const auto& [lo, hi] : a.poset_edges)
        out += "  \"" + lo + "\" -> \"" + hi + "\";\n";
    out += "}\n";
    return out;
}

}  // namespace leafatlas
