#include "leafatlas/selftest.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "leafatlas/atlas.hpp"
#include "leafatlas/oracle.hpp"

namespace leafatlas {

namespace {

std::string check_pair(Int k, Int n, bool& ok) {
    const std::string head = "k=" + std::to_string(k) + " n=" + std::to_string(n);

    const auto types = enumerate_hn_types(k, n, 1);
    if (types != enumerate_hn_types_serial(k, n)) {
        ok = false;
        return head + " MISMATCH: parallel vs serial enumeration";
    }

    std::vector<std::string> refined_ids;
    std::vector<BundleType> refined;
    for (const auto& nu : types)
        for (auto& bt : refine_to_indec(nu)) {
            refined_ids.push_back(bt.id());
            refined.push_back(std::move(bt));
        }
    std::sort(refined_ids.begin(), refined_ids.end());

    std::vector<std::string> naive_ids;
    for (const auto& bt : oracle::naive_enumerate(k, n)) naive_ids.push_back(bt.id());

    if (refined_ids != naive_ids) {
        ok = false;
        return head + " MISMATCH: enumeration differs from naive oracle (" +
               std::to_string(refined_ids.size()) + " vs " + std::to_string(naive_ids.size()) +
               " types)";
    }

    std::vector<HNPolygon> polys;
    polys.reserve(types.size());
    for (const auto& nu : types) polys.push_back(hn_polygon(nu));
    for (const auto& a : polys)
        for (const auto& b : polys)
            if (polygon_leq(a, b) != oracle::naive_polygon_leq(a, b)) {
                ok = false;
                return head + " MISMATCH: polygon order differs from naive oracle";
            }

    for (const auto& bt : refined)
        if (end_dim_generic(bt) != oracle::naive_end_dim(bt)) {
            ok = false;
            return head + " MISMATCH: End dimension differs from naive oracle for " + bt.id();
        }

    return head + " types=" + std::to_string(types.size()) +
           " refined=" + std::to_string(refined.size()) + " ok";
}

}  // namespace

bool run_selftest(Int max_n, int jobs, std::ostream& out) {
    if (jobs < 1) jobs = 1;
    std::vector<std::pair<Int, Int>> pairs;
    for (Int n = 2; n <= max_n; ++n)
        for (Int k = 1; k < n; ++k)
            if (std::gcd(k, n) == 1) pairs.emplace_back(k, n);

    std::vector<std::string> lines(pairs.size());
    std::vector<char> ok(pairs.size(), 1);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(pairs.size()); ++i) {
        bool pair_ok = true;
        lines[i] = check_pair(pairs[i].first, pairs[i].second, pair_ok);
        ok[i] = pair_ok ? 1 : 0;
    }

    bool all_ok = true;
    for (size_t i = 0; i < pairs.size(); ++i) {
        out << lines[i] << '\n';
        if (!ok[i]) all_ok = false;
    }
    out << (all_ok ? "selftest: all " : "selftest: FAILURES among ") << pairs.size()
        << " coprime pairs" << (all_ok ? " agree" : "") << '\n';
    return all_ok;
}

}  // namespace leafatlas
