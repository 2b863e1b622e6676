#pragma once

/**
 * @file verify.hpp
 * @brief Cross-checks between enumeration, classification, the generating
 *        tree and the series catalog, collected into suite reports.
 *
 * A failing check never stops its suite. Every failure carries a witness:
 * a polyomino encoding or an "n=.. expected=.. got=.." triple. Reports are
 * deterministic; the elapsed time is kept apart and rendered only on request.
 */

#include <optional>
#include <string>
#include <vector>

#include "zcx/series.hpp"

namespace zcx {

enum class CheckStatus {
    Pass,
    Fail,
    Info,  // finding reported without failing the suite
};

struct CheckResult {
    std::string description;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double elapsed_seconds = 0;

    bool passed() const;
    std::size_t failures() const;
};

SuiteReport suite_identities(int max_n, int threads = 0);
SuiteReport suite_gentree(int max_construct, int max_labels, int threads = 0);

struct RefinedParams {
    Rational x{2, 3};
    Rational y{3, 5};
    Rational z{5, 7};
};
SuiteReport suite_refined(int max_n, const RefinedParams& params = {});

SuiteReport suite_structure(int max_n, int threads = 0);
SuiteReport suite_kernels(std::size_t terms = 100, std::size_t equation_terms = 60);
SuiteReport suite_asymptotics(int n = 1024);

/// Compares user-supplied sequence prefixes with the catalog. File layout:
/// {"sequences": [{"gf": "A", "offset": 2, "values": ["1", "2", ...],
///                 "params": {"x": "2/3"}}]}
SuiteReport suite_fixtures(const std::string& path);

struct VerifyOptions {
    std::string suite = "all";
    int max_size = 0;  // 0 keeps each suite's default
    std::optional<std::string> fixtures;
    int threads = 0;
};

/// Suite names accepted by run_suites besides "all".
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
std::vector<SuiteReport> run_suites(const VerifyOptions& options);

std::string render_text(const std::vector<SuiteReport>& reports, bool timings = false);
std::string render_json(const std::vector<SuiteReport>& reports, bool timings = false);

}  // namespace zcx
