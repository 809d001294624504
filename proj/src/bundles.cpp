#include "leafatlas/bundles.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace leafatlas {

bool summand_charge_less(const Charge& a, const Charge& b) {
    // slope descending, compared by cross-multiplication (ranks >= 1)
    const Wide lhs = static_cast<Wide>(a.degree) * b.rank;
    const Wide rhs = static_cast<Wide>(b.degree) * a.rank;
    if (lhs != rhs) return lhs > rhs;
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.degree < b.degree;
}

BundleType::BundleType(std::vector<Summand> summands) : summands_(std::move(summands)) {
    for (const auto& s : summands_)
        if (s.multiplicity < 1) throw std::invalid_argument("summand multiplicity must be >= 1");
    std::sort(summands_.begin(), summands_.end(), [](const Summand& a, const Summand& b) {
        return summand_charge_less(a.cls.charge, b.cls.charge);
    });
    // merge equal classes
    std::vector<Summand> merged;
    for (const auto& s : summands_) {
        if (!merged.empty() && merged.back().cls == s.cls)
            merged.back().multiplicity += s.multiplicity;
        else
            merged.push_back(s);
    }
    summands_ = std::move(merged);
}

Charge BundleType::total_charge() const {
    Int r = 0, d = 0;
    for (const auto& s : summands_) {
        r += s.multiplicity * s.cls.charge.rank;
        d += s.multiplicity * s.cls.charge.degree;
    }
    return Charge(r, d);
}

Int BundleType::instance_count() const {
    Int m = 0;
    for (const auto& s : summands_) m += s.multiplicity;
    return m;
}

std::string BundleType::id() const {
    std::string out;
    for (const auto& s : summands_) {
        if (!out.empty()) out += ';';
        out += std::to_string(s.cls.charge.rank);
        out += ',';
        out += std::to_string(s.cls.charge.degree);
        if (s.multiplicity > 1) {
            out += '*';
            out += std::to_string(s.multiplicity);
        }
    }
    return out;
}

HNType::HNType(std::vector<Charge> pieces) : pieces_(std::move(pieces)) {
    for (const auto& p : pieces_)
        if (p.rank < 1) throw std::invalid_argument("HN piece needs rank >= 1");
    for (size_t i = 0; i + 1 < pieces_.size(); ++i)
        if (!(slope(pieces_[i + 1]) < slope(pieces_[i])))
            throw std::invalid_argument("HN type slopes must strictly decrease");
}

Charge HNType::total_charge() const {
    Int r = 0, d = 0;
    for (const auto& p : pieces_) {
        r += p.rank;
        d += p.degree;
    }
    return Charge(r, d);
}

std::string HNType::id() const {
    std::string out;
    for (const auto& p : pieces_) {
        if (!out.empty()) out += ';';
        out += std::to_string(p.rank);
        out += ',';
        out += std::to_string(p.degree);
    }
    return out;
}

HNType hn_decompose(const BundleType& t) {
    // summands are already slope-sorted; accumulate runs of equal slope
    std::vector<Charge> pieces;
    const auto& ss = t.summands();
    size_t i = 0;
    while (i < ss.size()) {
        const Slope s = ss[i].cls.class_slope();
        Int r = 0, d = 0;
        size_t j = i;
        while (j < ss.size() && ss[j].cls.class_slope() == s) {
            r += ss[j].multiplicity * ss[j].cls.charge.rank;
            d += ss[j].multiplicity * ss[j].cls.charge.degree;
            ++j;
        }
        pieces.emplace_back(r, d);
        i = j;
    }
    return HNType(std::move(pieces));
}

SectionDims h0_h1_generic(const BundleType& t) {
    SectionDims dims;
    for (const auto& s : t.summands()) {
        const Int d = s.cls.charge.degree;
        if (d > 0)
            dims.h0 += s.multiplicity * d;
        else if (d < 0)
            dims.h1 += s.multiplicity * (-d);
    }
    return dims;
}

HomExt hom_ext_generic(const IndecClass& x, const IndecClass& y, bool same_instance) {
    const Int chi = euler_pairing(x.charge, y.charge);
    const Slope sx = x.class_slope(), sy = y.class_slope();
    if (sx < sy) return {chi, 0};
    if (sy < sx) return {0, -chi};
    if (same_instance) {
        const Int h = x.end_dim();
        return {h, h};
    }
    return {0, 0};  // distinct generic instances of equal slope
}

Int end_dim_generic(const BundleType& t) {
    const auto& ss = t.summands();
    Int total = 0;
    for (size_t i = 0; i < ss.size(); ++i) {
        // m same-instance diagonal pairs; the m(m-1) distinct pairs vanish
        total += ss[i].multiplicity * hom_ext_generic(ss[i].cls, ss[i].cls, true).hom;
        for (size_t j = 0; j < ss.size(); ++j) {
            if (i == j) continue;
            total += ss[i].multiplicity * ss[j].multiplicity *
                     hom_ext_generic(ss[i].cls, ss[j].cls, false).hom;
        }
    }
    return total;
}

Int det_degree(const BundleType& t) { return t.total_charge().degree; }

namespace {

Int parse_int(std::string_view text, size_t& pos, const char* what) {
    Int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first)
        throw std::invalid_argument(std::string("malformed bundle type: expected ") + what);
    pos += static_cast<size_t>(ptr - first);
    return value;
}

}  // namespace

BundleType parse_bundle_type(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    if (compact.empty()) throw std::invalid_argument("malformed bundle type: empty string");

    std::vector<Summand> summands;
    size_t pos = 0;
    while (true) {
        const Int r = parse_int(compact, pos, "rank");
        if (pos >= compact.size() || compact[pos] != ',')
            throw std::invalid_argument("malformed bundle type: expected ','");
        ++pos;
        const Int d = parse_int(compact, pos, "degree");
        Int m = 1;
        if (pos < compact.size() && compact[pos] == '*') {
            ++pos;
            m = parse_int(compact, pos, "multiplicity");
        }
        if (r < 1) throw std::invalid_argument("malformed bundle type: rank must be >= 1");
        if (m < 1) throw std::invalid_argument("malformed bundle type: multiplicity must be >= 1");
        summands.push_back({IndecClass(Charge(r, d)), m});
        if (pos == compact.size()) break;
        if (compact[pos] != ';')
            throw std::invalid_argument("malformed bundle type: expected ';'");
        ++pos;
    }
    return BundleType(std::move(summands));
}

}  // namespace leafatlas
