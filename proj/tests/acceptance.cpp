// Acceptance suite: one PASS/FAIL line per criterion, exit 0 only if all pass.
// Time limits are pinned here as constants; failures print enough detail to
// investigate without re-running.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "kaplansky/group_ring.hpp"
#include "kaplansky/json_io.hpp"
#include "kaplansky/search.hpp"
#include "kaplansky/units.hpp"
#include "test_util.hpp"

using namespace kaplansky;
using testutil::random_element;

namespace {

constexpr double kSingleVerifyLimitSeconds = 0.1;
constexpr double kGridLimitSeconds = 60.0;
constexpr double kFullSearchLimitSeconds = 300.0;
constexpr double kAnsatzSearchLimitSeconds = 120.0;

int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail = {}) {
    std::string line = ok ? "PASS" : "FAIL";
    line += " criterion ";
    line += std::to_string(idx);
    line += ": ";
    line += name;
    if (!detail.empty()) {
        line += " (";
        line += detail;
        line += ")";
    }
    std::printf("%s\n", line.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

std::string format_seconds(double s, double limit) {
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(3);
    ss << s << "s, limit " << limit << "s";
    return ss.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good())
        return {};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& command_tail, const std::string& env_prefix) {
    const std::string cmd = env_prefix + " " + KAPLANSKY_CLI_PATH + " " + command_tail +
                            " >/dev/null 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool grid_params(std::vector<FamilyParams>& out) {
    for (const std::uint32_t d : {2u, 3u, 5u, 7u, 11u, 13u})
        for (std::int32_t t = -2; t <= 3; ++t)
            for (std::int32_t w = -2; w <= 2; ++w)
                out.push_back(FamilyParams{PrimeChar(d), t, w});
    return out.size() == 180;
}

} // namespace

int main() {
    const PrimeChar d2(2);
    const PrimeChar d3(3);

    // --- 1: the characteristic-2 base unit verifies on both sides, fast. ---
    {
        const auto start = std::chrono::steady_clock::now();
        const UnitVerdict verdict = verify_unit(gardam_unit());
        const double elapsed = seconds_since(start);
        report(1, "characteristic-2 base unit verifies on both sides",
               verdict.verified() && elapsed < kSingleVerifyLimitSeconds,
               format_seconds(elapsed, kSingleVerifyLimitSeconds));
    }

    // --- 2: all 18 variant combinations are non-trivial units. ---
    std::set<GroupRingElem> variant_set;
    {
        bool ok = true;
        std::string detail;
        for (int qi = 0; qi < 6 && ok; ++qi) {
            for (int pi = 0; pi < 3 && ok; ++pi) {
                const GroupRingElem v = ps_variant(qr_variant(gardam_unit(), qi), pi);
                if (!verify_unit(v).verified() || is_trivial(v)) {
                    ok = false;
                    detail = "variant qr=" + std::to_string(qi) +
                             " ps=" + std::to_string(pi) + " failed";
                }
                variant_set.insert(canonicalize(v));
            }
        }
        if (ok && variant_set.size() != 18) {
            ok = false;
            detail = "only " + std::to_string(variant_set.size()) + " distinct elements";
        }
        report(2, "all 18 variant combinations are distinct non-trivial units", ok,
               ok ? "18 distinct" : detail);
    }

    // --- 3: both characteristic-3 units verify and are non-trivial. ---
    {
        const GroupRingElem base = char3_unit(Char3Variant::base);
        const GroupRingElem flipped = char3_unit(Char3Variant::x_y_flipped);
        const bool ok = verify_unit(base).verified() && !is_trivial(base) &&
                        verify_unit(flipped).verified() && !is_trivial(flipped) &&
                        base != flipped;
        report(3, "both characteristic-3 units verify and are non-trivial", ok);
    }

    // --- 4: the parametric family verifies across the whole grid. ---
    std::vector<FamilyParams> grid;
    {
        bool ok = grid_params(grid);
        std::string detail = ok ? "" : "grid size mismatch";
        const auto start = std::chrono::steady_clock::now();
        for (const FamilyParams& params : grid) {
            if (!ok)
                break;
            const GroupRingElem u = family_unit(params);
            if (!verify_unit(u).verified() || is_trivial(u) ||
                !check_xy_symmetry(u) || !check_reduced(u)) {
                ok = false;
                detail = "failed at d=" + std::to_string(params.characteristic.value()) +
                         " t=" + std::to_string(params.t) +
                         " w=" + std::to_string(params.w);
            }
        }
        const double elapsed = seconds_since(start);
        if (ok && elapsed >= kGridLimitSeconds) {
            ok = false;
            detail = "too slow";
        }
        report(4, "family units verify, non-trivial, symmetric, reduced on 180-case grid",
               ok, detail.empty() ? format_seconds(elapsed, kGridLimitSeconds) : detail);
    }

    // --- 5: every defining identity holds across the same grid. ---
    {
        bool ok = !grid.empty();
        std::string detail;
        for (const FamilyParams& params : grid) {
            if (!ok)
                break;
            const IdentityReport fs = check_f_system(family_f_table(params));
            const IdentityReport rc = check_reduction_chain(params);
            if (!fs.all_zero() || !rc.all_zero()) {
                ok = false;
                const IdentityReport& bad = fs.all_zero() ? rc : fs;
                for (const IdentityCheck& check : bad.checks)
                    if (!check.ok()) {
                        detail = "\"" + check.name + "\" fails at d=" +
                                 std::to_string(params.characteristic.value()) +
                                 " t=" + std::to_string(params.t) +
                                 " w=" + std::to_string(params.w);
                        break;
                    }
            }
        }
        report(5, "f-system and reduction-chain identities all hold on the grid", ok,
               detail);
    }

    // --- 6: the exhaustive degree-one search finds exactly the 18 variants. ---
    {
        SearchBox box{d2};
        const auto start = std::chrono::steady_clock::now();
        const SearchResult result = search_units(box, 1);
        const double elapsed = seconds_since(start);

        std::set<GroupRingElem> found;
        for (const SearchHit& hit : result.hits)
            found.insert(hit.element);

        std::vector<GroupRingElem> missing, surplus;
        std::set_difference(variant_set.begin(), variant_set.end(), found.begin(),
                            found.end(), std::back_inserter(missing));
        std::set_difference(found.begin(), found.end(), variant_set.begin(),
                            variant_set.end(), std::back_inserter(surplus));

        const bool ok = missing.empty() && surplus.empty() && found.size() == 18 &&
                        elapsed < kFullSearchLimitSeconds;
        std::string detail = std::to_string(found.size()) + " canonical hits, " +
                             format_seconds(elapsed, kFullSearchLimitSeconds);
        report(6, "exhaustive search in the standard box returns exactly the 18 variants",
               ok, detail);
        if (!missing.empty()) {
            std::printf("    missing from search results: %zu\n", missing.size());
            for (const GroupRingElem& u : missing)
                std::printf("%s", element_to_text(u).c_str());
        }
        if (!surplus.empty()) {
            std::printf("    surplus beyond the 18 known: %zu\n", surplus.size());
            for (const GroupRingElem& u : surplus)
                std::printf("%s", element_to_text(u).c_str());
        }
    }

    // --- 7: the structured search recovers the characteristic-3 units. ---
    {
        SearchBox box{d3};
        box.strategy = SearchStrategy::ansatz;
        const auto start = std::chrono::steady_clock::now();
        const SearchResult result = ansatz_search(box, 1);
        const double elapsed = seconds_since(start);

        const GroupRingElem base = canonicalize(char3_unit(Char3Variant::base));
        const GroupRingElem flipped = char3_unit(Char3Variant::x_y_flipped);
        bool has_base = false, reaches_flipped = false;
        for (const SearchHit& hit : result.hits) {
            has_base = has_base || hit.element == base;
            reaches_flipped = reaches_flipped || qr_variant(hit.element, 2) == flipped;
        }
        const bool ok = has_base && reaches_flipped && elapsed < kAnsatzSearchLimitSeconds;
        std::string detail = std::to_string(result.hits.size()) + " canonical hits, " +
                             format_seconds(elapsed, kAnsatzSearchLimitSeconds);
        if (!has_base)
            detail += ", base unit missing";
        if (!reaches_flipped)
            detail += ", flipped unit unreachable";
        report(7, "structured search recovers both characteristic-3 units", ok, detail);
    }

    // --- 8: multiplication agrees with the rewriting oracle. ---
    {
        std::mt19937 rng(20240817u);
        bool ok = true;
        std::string detail;
        for (const std::uint32_t dv : {2u, 3u, 5u}) {
            const PrimeChar d(dv);
            const GroupRingElem one = GroupRingElem::one(d);
            for (int iter = 0; iter < 1000 && ok; ++iter) {
                const GroupRingElem u = random_element(rng, d);
                const GroupRingElem v = random_element(rng, d);
                if (u * v != mul_oracle(u, v)) {
                    ok = false;
                    detail = "oracle mismatch at d=" + std::to_string(dv);
                }
            }
            for (int iter = 0; iter < 300 && ok; ++iter) {
                const GroupRingElem u = random_element(rng, d);
                const GroupRingElem v = random_element(rng, d);
                const GroupRingElem w = random_element(rng, d);
                if ((u * v) * w != u * (v * w)) {
                    ok = false;
                    detail = "associativity fails at d=" + std::to_string(dv);
                }
            }
            for (int iter = 0; iter < 50 && ok; ++iter) {
                const GroupRingElem u = random_element(rng, d);
                if (u * one != u || one * u != u) {
                    ok = false;
                    detail = "identity fails at d=" + std::to_string(dv);
                }
            }
        }
        report(8, "multiplication matches the rewriting oracle and ring axioms", ok,
               ok ? "3000 pairs, 900 triples" : detail);
    }

    // --- 9: the candidate-inverse check rejects non-units with residuals. ---
    {
        bool ok = true;
        std::string detail;
        const auto expect_rejected = [&](const GroupRingElem& u, const char* label) {
            const UnitVerdict verdict = verify_unit(u);
            const bool rejected = !verdict.verified() && !verdict.inverse.has_value() &&
                                  verdict.left_residual.has_value() &&
                                  !verdict.left_residual->is_zero() &&
                                  verdict.right_residual.has_value() &&
                                  !verdict.right_residual->is_zero();
            if (!rejected) {
                ok = false;
                detail = std::string(label) + " was not rejected";
            }
        };
        expect_rejected(GroupRingElem::one(d2), "identity over F_2");
        expect_rejected(GroupRingElem::one(d3), "identity over F_3");
        const GroupRingElem gen_a(Laurent::zero(d3), Laurent::constant(d3, 1),
                                  Laurent::zero(d3), Laurent::zero(d3));
        expect_rejected(gen_a, "generator a over F_3");
        report(9, "candidate-inverse check rejects non-units with nonzero residuals", ok,
               detail);
    }

    // --- 10: serial and parallel search runs write identical files. ---
    {
        const std::string serial_path = "/tmp/kap_acceptance_serial.json";
        const std::string parallel_path = "/tmp/kap_acceptance_parallel.json";
        const int rc1 = run_cli("search --char 2 --strategy full --out " + serial_path,
                                "KAPLANSKY_THREADS=1");
        const int rc4 = run_cli("search --char 2 --strategy full --out " + parallel_path,
                                "KAPLANSKY_THREADS=4");
        const std::string serial = read_file(serial_path);
        const std::string parallel = read_file(parallel_path);
        const bool ok =
            rc1 == 0 && rc4 == 0 && !serial.empty() && serial == parallel;
        std::string detail;
        if (rc1 != 0 || rc4 != 0)
            detail = "exit codes " + std::to_string(rc1) + "/" + std::to_string(rc4);
        else if (serial.empty())
            detail = "empty result file";
        else if (serial != parallel)
            detail = "result files differ";
        report(10, "serial and parallel search runs write identical result files", ok,
               detail);
    }

    std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed"
                                      : "acceptance: FAILURES present");
    return failures == 0 ? 0 : 1;
}
