#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "kaplansky/group_ring.hpp"
#include "kaplansky/json_io.hpp"
#include "kaplansky/search.hpp"
#include "kaplansky/units.hpp"

namespace {

using namespace kaplansky;

// KAPLANSKY_THREADS caps the search parallelism; unset means one worker per
// hardware thread.
unsigned decide_threads() {
    const char* env = std::getenv("KAPLANSKY_THREADS");
    if (env == nullptr || *env == '\0')
        return std::max(1u, std::thread::hardware_concurrency());
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 64)
        throw std::invalid_argument("KAPLANSKY_THREADS must be an integer in 1..64");
    return static_cast<unsigned>(v);
}

PrimeChar parse_characteristic(std::int64_t value) {
    if (value < 2 || value > 0x7fffffff)
        throw std::invalid_argument("characteristic out of range: " + std::to_string(value));
    return PrimeChar(static_cast<std::uint32_t>(value)); // throws unless prime
}

struct Selector {
    std::string builtin;
    bool family = false;
    std::string input;
    std::int64_t characteristic = 0;
    std::int32_t t = 0;
    std::int32_t w = 0;
};

void add_selector_flags(CLI::App* cmd, Selector& sel) {
    cmd->add_option("--builtin", sel.builtin,
                    "builtin element: gardam | char3-base | char3-flipped | family");
    cmd->add_flag("--family", sel.family, "family member (requires --char; --t/--w default 0)");
    cmd->add_option("--input", sel.input, "path of an element JSON file");
    cmd->add_option("--char", sel.characteristic, "characteristic (a prime)");
    cmd->add_option("--t", sel.t, "family exponent t");
    cmd->add_option("--w", sel.w, "family exponent w");
}

GroupRingElem load_element(const Selector& sel) {
    const int given = (sel.builtin.empty() ? 0 : 1) + (sel.family ? 1 : 0) +
                      (sel.input.empty() ? 0 : 1);
    if (given != 1)
        throw std::invalid_argument("choose exactly one of --builtin, --family, --input");
    if (!sel.input.empty()) {
        std::ifstream in(sel.input);
        if (!in)
            throw std::invalid_argument("cannot open input file: " + sel.input);
        return element_from_json(nlohmann::json::parse(in));
    }
    if (sel.family || sel.builtin == "family") {
        if (sel.characteristic == 0)
            throw std::invalid_argument("a family member needs --char");
        return family_unit(FamilyParams{parse_characteristic(sel.characteristic), sel.t, sel.w});
    }
    if (sel.builtin == "gardam")
        return gardam_unit();
    if (sel.builtin == "char3-base")
        return char3_unit(Char3Variant::base);
    if (sel.builtin == "char3-flipped")
        return char3_unit(Char3Variant::x_y_flipped);
    throw std::invalid_argument("unknown builtin: " + sel.builtin);
}

int run_verify(const Selector& sel) {
    const GroupRingElem u = load_element(sel);
    const UnitVerdict verdict = verify_unit(u);
    if (verdict.verified()) {
        std::cout << "verified\n";
        return 0;
    }
    std::cout << "not verified: the adjoint does not invert the element\n";
    if (verdict.left_residual)
        std::cerr << "left residual:\n" << element_to_text(*verdict.left_residual);
    if (verdict.right_residual)
        std::cerr << "right residual:\n" << element_to_text(*verdict.right_residual);
    return 1;
}

int run_construct(const Selector& sel, const std::string& format) {
    const GroupRingElem u = load_element(sel);
    if (format == "text")
        std::cout << element_to_text(u);
    else
        std::cout << element_to_json(u).dump() << '\n';
    return 0;
}

struct SearchFlags {
    std::int64_t characteristic = 0;
    std::string strategy;
    std::int32_t xmin = -1, xmax = 1, ymin = -1, ymax = 1, zmin = -1, zmax = 1;
    std::uint64_t ceiling = 50'000'000;
    std::string out;
};

int run_search(const SearchFlags& flags) {
    SearchBox box{parse_characteristic(flags.characteristic)};
    box.xmin = flags.xmin;
    box.xmax = flags.xmax;
    box.ymin = flags.ymin;
    box.ymax = flags.ymax;
    box.zmin = flags.zmin;
    box.zmax = flags.zmax;
    box.strategy = flags.strategy == "full" ? SearchStrategy::full : SearchStrategy::ansatz;
    box.pair_ceiling = flags.ceiling;

    const unsigned threads = decide_threads();
    const auto start = std::chrono::steady_clock::now();
    const SearchResult result = box.strategy == SearchStrategy::full
                                    ? search_units(box, threads)
                                    : ansatz_search(box, threads);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::cerr << "searched " << result.stats.left_candidates << " (p,s)-side and "
              << result.stats.right_candidates << " (q,r)-side candidates with " << threads
              << " thread(s) in " << elapsed << " ms\n"
              << "key matches " << result.stats.key_matches << ", trivial discarded "
              << result.stats.trivial_discarded << ", unverified " << result.stats.unverified_matches
              << ", verified " << result.stats.verified_hits << " (" << result.hits.size()
              << " after canonical dedup)\n";

    std::ofstream out(flags.out);
    if (!out)
        throw std::invalid_argument("cannot open output file: " + flags.out);
    out << search_result_to_json(result, box).dump() << '\n';
    if (!out)
        throw std::runtime_error("failed writing output file: " + flags.out);

    std::cout << result.hits.size() << " hits\n";
    return 0;
}

int run_check_identities(std::int64_t characteristic, std::int32_t t, std::int32_t w) {
    const FamilyParams params{parse_characteristic(characteristic), t, w};
    bool all = true;
    const auto print = [&](const IdentityReport& report) {
        for (const auto& check : report.checks) {
            all = all && check.ok();
            std::cout << (check.ok() ? "PASS  " : "FAIL  ") << check.name << '\n';
            if (!check.ok())
                std::cerr << "  residual: " << check.residual.str() << '\n';
        }
    };
    print(check_f_system(family_f_table(params)));
    print(check_reduction_chain(params));
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"units of the group ring F_d[P] over the torsion-free group "
                 "P = <a,b | (a^2)^b = a^-2, (b^2)^a = b^-2>"};
    app.require_subcommand(1);

    Selector verify_sel;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check that an element is a unit");
    add_selector_flags(verify_cmd, verify_sel);

    Selector construct_sel;
    std::string format = "json";
    CLI::App* construct_cmd = app.add_subcommand("construct", "print an element");
    add_selector_flags(construct_cmd, construct_sel);
    construct_cmd->add_option("--format", format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    SearchFlags search_flags;
    CLI::App* search_cmd = app.add_subcommand("search", "search a box for units");
    search_cmd->add_option("--char", search_flags.characteristic, "characteristic (a prime)")
        ->required();
    search_cmd->add_option("--strategy", search_flags.strategy, "full | ansatz")
        ->required()
        ->check(CLI::IsMember({"full", "ansatz"}));
    search_cmd->add_option("--xmin", search_flags.xmin, "x-exponent lower bound (default -1)");
    search_cmd->add_option("--xmax", search_flags.xmax, "x-exponent upper bound (default 1)");
    search_cmd->add_option("--ymin", search_flags.ymin, "y-exponent lower bound (default -1)");
    search_cmd->add_option("--ymax", search_flags.ymax, "y-exponent upper bound (default 1)");
    search_cmd->add_option("--zmin", search_flags.zmin, "z-exponent lower bound (default -1)");
    search_cmd->add_option("--zmax", search_flags.zmax, "z-exponent upper bound (default 1)");
    search_cmd->add_option("--ceiling", search_flags.ceiling,
                           "candidate evaluation ceiling (default 50000000)");
    search_cmd->add_option("--out", search_flags.out, "result file path")->required();

    std::int64_t check_char = 0;
    std::int32_t check_t = 0, check_w = 0;
    CLI::App* check_cmd =
        app.add_subcommand("check-identities", "evaluate the derivation identities for a family member");
    check_cmd->add_option("--char", check_char, "characteristic (a prime)")->required();
    check_cmd->add_option("--t", check_t, "family exponent t");
    check_cmd->add_option("--w", check_w, "family exponent w");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify_cmd->parsed())
            return run_verify(verify_sel);
        if (construct_cmd->parsed())
            return run_construct(construct_sel, format);
        if (search_cmd->parsed())
            return run_search(search_flags);
        if (check_cmd->parsed())
            return run_check_identities(check_char, check_t, check_w);
        return 2;
    } catch (const BoxTooLarge& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
