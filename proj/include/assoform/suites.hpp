#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "assoform/prng.hpp"

namespace assoform {

enum class OutputFormat { Text, Json };

// Configuration shared by the CLI and the verification suites. Identical
// configs produce byte-identical reports; anything nondeterministic
// (timings) stays out of them.
struct RunConfig {
    int n = 0;  // 0 = per-suite default
    int d = 0;
    std::uint64_t seed = 42;
    int height = 9;  // coefficient height bound for sampled forms
    OutputFormat format = OutputFormat::Text;
    int cases = 0;  // 0 = per-suite default
};

struct SuiteCase {
    std::string name;
    bool pass = false;
    std::string detail;  // exact values, or the serialized counterexample
};

struct SuiteReport {
    std::string name;
    std::vector<SuiteCase> cases;

    bool passed() const;
    int pass_count() const;
    const SuiteCase* first_failure() const;
};

// The eight acceptance sections. Each is deterministic in its arguments.
SuiteReport aronhold_partition_report();
SuiteReport annihilator_tables_report();
SuiteReport hesse_pencil_report();
SuiteReport roundtrip_report(int n, int d, int cases, std::uint64_t seed, int height);
SuiteReport dimension_report(int n, int d, std::uint64_t seed, int height);
SuiteReport resultant_consistency_report(std::uint64_t seed, int height);
SuiteReport chart_coherence_report(std::uint64_t seed, int height);
SuiteReport ternary_equivalence_report(std::uint64_t seed, int cases, int height);

// SL3 invariance of the Aronhold invariant under determinant-one changes
// of variables.
SuiteReport sl3_invariance_report(std::uint64_t seed, int pairs, int height);

// The full ternary verification: S-partition on the canonical families,
// the eight degree-2 annihilator tables, the pencil proportionalities, the
// invariant/chart route equivalence, and SL3 invariance.
std::vector<SuiteReport> verify_ternary_characterization(const RunConfig& config);

// suite is one of: all, ternary, roundtrip, dimension, charts.
std::vector<SuiteReport> run_suite(const std::string& suite, const RunConfig& config);

nlohmann::json suites_to_json(const std::string& suite, const RunConfig& config,
                              const std::vector<SuiteReport>& reports);

}  // namespace assoform
