#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "leafatlas/atlas.hpp"
#include "leafatlas/selftest.hpp"
#include "leafatlas/serialize.hpp"

namespace {

using leafatlas::Int;

Int max_n_cap() {
    Int cap = 64;
    if (const char* env = std::getenv("LEAFATLAS_MAX_N")) {
        try {
            cap = std::stoll(env);
        } catch (const std::exception&) {
            // unparsable -> keep the default
        }
    }
    return cap;
}

void require_within_cap(Int n) {
    const Int cap = max_n_cap();
    if (n > cap)
        throw std::invalid_argument("n=" + std::to_string(n) + " exceeds LEAFATLAS_MAX_N=" +
                                    std::to_string(cap));
}

void write_payload(const std::string& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + output_path);
    file << payload;
}

void warn_if_needed(const leafatlas::Atlas& atlas) {
    if (atlas.warning)
        std::cerr << "warning: n < 3 is outside the geometric range; "
                     "output is combinatorial only\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"leafatlas: admissible middle-term bundle types, leaf dimensions and the "
                 "Shatz poset for extensions of a stable charge-(k,n) bundle"};
    app.require_subcommand(1);

    Int k = 0, n = 0;
    std::string type_string;
    std::string format = "json";
    std::string output_path;
    bool refine = false;
    int jobs = 1;
    Int selftest_max_n = 10;

    auto* cmd_enumerate = app.add_subcommand("enumerate", "List all admissible types for (k,n)");
    cmd_enumerate->add_option("-k", k, "rank of F")->required();
    cmd_enumerate->add_option("-n", n, "degree of F")->required();
    cmd_enumerate->add_flag("--refine", refine, "one record per indecomposable refinement");
    cmd_enumerate->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}));
    cmd_enumerate->add_option("--output,-o", output_path, "write to file instead of stdout");
    cmd_enumerate->add_option("--jobs", jobs, "worker count")->check(CLI::PositiveNumber);

    auto* cmd_check = app.add_subcommand("check", "Test one bundle type for admissibility");
    cmd_check->add_option("-k", k, "rank of F")->required();
    cmd_check->add_option("-n", n, "degree of F")->required();
    cmd_check->add_option("--type", type_string, "bundle type, e.g. \"1,2*2;1,1\"")->required();

    auto* cmd_poset = app.add_subcommand("poset", "Export the Shatz covering relations as DOT");
    cmd_poset->add_option("-k", k, "rank of F")->required();
    cmd_poset->add_option("-n", n, "degree of F")->required();
    cmd_poset->add_option("--output,-o", output_path, "write to file instead of stdout");
    cmd_poset->add_option("--jobs", jobs, "worker count")->check(CLI::PositiveNumber);

    auto* cmd_polygon = app.add_subcommand("polygon", "Draw a type's HN polygon over the triangle");
    cmd_polygon->add_option("-k", k, "rank of F")->required();
    cmd_polygon->add_option("-n", n, "degree of F")->required();
    cmd_polygon->add_option("--type", type_string, "bundle type")->required();
    cmd_polygon->add_option("--output,-o", output_path, "write to file instead of stdout");

    auto* cmd_selftest = app.add_subcommand("selftest", "Run the oracle differential suite");
    cmd_selftest->add_option("--max-n", selftest_max_n, "largest degree to test")
        ->check(CLI::PositiveNumber);
    cmd_selftest->add_option("--jobs", jobs, "worker count")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_enumerate->parsed()) {
            require_within_cap(n);
            const leafatlas::Atlas atlas = leafatlas::build_atlas(k, n, refine, jobs);
            warn_if_needed(atlas);
            write_payload(format == "tsv" ? leafatlas::atlas_tsv(atlas)
                                          : leafatlas::atlas_json(atlas),
                          output_path);
            return 0;
        }
        if (cmd_check->parsed()) {
            const leafatlas::BundleType t = leafatlas::parse_bundle_type(type_string);
            const leafatlas::Verdict verdict = leafatlas::check_middle_term(t, k, n);
            std::cout << verdict.message() << '\n';
            return verdict.admissible ? 0 : 1;
        }
        if (cmd_poset->parsed()) {
            require_within_cap(n);
            const leafatlas::Atlas atlas = leafatlas::build_atlas(k, n, /*refine=*/false, jobs);
            warn_if_needed(atlas);
            write_payload(leafatlas::poset_dot(atlas), output_path);
            return 0;
        }
        if (cmd_polygon->parsed()) {
            leafatlas::validate_input(k, n);
            const leafatlas::BundleType t = leafatlas::parse_bundle_type(type_string);
            const leafatlas::HNPolygon poly = leafatlas::hn_polygon(leafatlas::hn_decompose(t));
            write_payload(leafatlas::polygon_svg(poly, leafatlas::Triangle(k, n)), output_path);
            return 0;
        }
        if (cmd_selftest->parsed()) {
            require_within_cap(selftest_max_n);
            return leafatlas::run_selftest(selftest_max_n, jobs, std::cout) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
