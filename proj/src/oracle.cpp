#include "leafatlas/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "leafatlas/atlas.hpp"  // validate_input

namespace leafatlas::oracle {

namespace {

struct RawPart {
    Int r, d;
};

// Multiset search over charges in non-increasing (r,d)-lexicographic order.
// Degree bounds on the unchosen tail keep the walk inside feasible branches;
// the admissibility filter runs at complete leaves only.
class NaiveSearch {
public:
    NaiveSearch(Int k, Int n) : k_(k), n_(n), total_rank_(k + 1), dmin_(-n + 1), dmax_(n) {
        parts_.resize(total_rank_);
        sorted_.resize(total_rank_);
    }

    std::vector<BundleType> run() {
        rec(total_rank_, n_, total_rank_, dmax_);
        std::sort(found_.begin(), found_.end(),
                  [](const BundleType& a, const BundleType& b) { return a.id() < b.id(); });
        return std::move(found_);
    }

private:
    void rec(Int rrem, Int drem, Int rcap, Int dcap) {
        if (rrem == 0) {
            if (drem == 0 && admissible_leaf()) emit();
            return;
        }
        for (Int r = std::min(rcap, rrem); r >= 1; --r) {
            const Int dtop = (r == rcap) ? dcap : dmax_;
            const Int tail = rrem - r;
            // the tail can contribute at most dmax_ and at least dmin_ per rank
            const Int dhi = std::min(dtop, drem - dmin_ * tail);
            const Int dlo = std::max(dmin_, drem - dmax_ * tail);
            for (Int d = dhi; d >= dlo; --d) {
                parts_[depth_] = {r, d};
                ++depth_;
                rec(tail, drem - d, r, d);
                --depth_;
            }
        }
    }

    bool admissible_leaf() {
        for (Int i = 0; i < depth_; ++i) sorted_[i] = parts_[i];
        // insertion sort by slope descending (cross-multiplied)
        for (Int i = 1; i < depth_; ++i) {
            const RawPart key = sorted_[i];
            Int j = i - 1;
            while (j >= 0 && sorted_[j].d * key.r < key.d * sorted_[j].r) {
                sorted_[j + 1] = sorted_[j];
                --j;
            }
            sorted_[j + 1] = key;
        }
        // group equal slopes, test each cumulative point except the last
        Int x = 0, y = 0;
        Int i = 0;
        while (i < depth_) {
            Int gr = sorted_[i].r, gd = sorted_[i].d;
            Int j = i + 1;
            while (j < depth_ && sorted_[j].d * sorted_[i].r == sorted_[i].d * sorted_[j].r) {
                gr += sorted_[j].r;
                gd += sorted_[j].d;
                ++j;
            }
            x += gr;
            y += gd;
            if (j < depth_) {
                if (!(y * (k_ + 1) > n_ * x)) return false;
                if (!(y * k_ < n_ * x)) return false;
                if (!(y < n_)) return false;
            }
            i = j;
        }
        return true;
    }

    void emit() {
        std::vector<Summand> summands;
        summands.reserve(depth_);
        for (Int i = 0; i < depth_; ++i)
            summands.push_back({IndecClass(Charge(parts_[i].r, parts_[i].d)), 1});
        found_.emplace_back(std::move(summands));
    }

    Int k_, n_, total_rank_, dmin_, dmax_;
    std::vector<RawPart> parts_;
    std::vector<RawPart> sorted_;
    Int depth_ = 0;
    std::vector<BundleType> found_;
};

// top-chain ordinate at integer x as a fraction (num, den), den > 0
std::pair<Int, Int> top_at(const HNPolygon& p, Int x) {
    const auto& vs = p.vertices();
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
        if (x >= vs[i].x && x <= vs[i + 1].x) {
            const Int dx = vs[i + 1].x - vs[i].x;
            const Int dy = vs[i + 1].y - vs[i].y;
            return {vs[i].y * dx + (x - vs[i].x) * dy, dx};
        }
    }
    throw std::logic_error("abscissa outside the polygon");
}

}  // namespace

std::vector<BundleType> naive_enumerate(Int k, Int n) {
    validate_input(k, n);
    return NaiveSearch(k, n).run();
}

bool naive_polygon_leq(const HNPolygon& a, const HNPolygon& b) {
    if (a.endpoint() != b.endpoint())
        throw std::invalid_argument("incomparable: different total charge");
    for (Int x = 0; x <= a.endpoint().x; ++x) {
        const auto [na, da] = top_at(a, x);
        const auto [nb, db] = top_at(b, x);
        if (static_cast<Wide>(na) * db > static_cast<Wide>(nb) * da) return false;
    }
    return true;
}

Int naive_end_dim(const BundleType& t) {
    std::vector<Charge> instances;
    for (const auto& s : t.summands())
        for (Int m = 0; m < s.multiplicity; ++m) instances.push_back(s.cls.charge);

    Int total = 0;
    for (size_t i = 0; i < instances.size(); ++i) {
        for (size_t j = 0; j < instances.size(); ++j) {
            const Charge& a = instances[i];
            const Charge& b = instances[j];
            if (i == j) {
                total += std::gcd(a.rank, a.degree);
            } else {
                const Int lhs = a.degree * b.rank;
                const Int rhs = b.degree * a.rank;
                if (lhs < rhs) total += a.rank * b.degree - a.degree * b.rank;
            }
        }
    }
    return total;
}

}  // namespace leafatlas::oracle
