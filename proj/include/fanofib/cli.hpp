#pragma once

#include "fanofib/chow.hpp"
#include "fanofib/exclusion.hpp"
#include "fanofib/families.hpp"

#include <string>
#include <vector>

namespace fanofib::cli {

enum class OutputFormat { text, csv, json };

struct RunConfig {
    families::EnumCaps caps;
    int l_min = 3;
    int l_max = 8;
    int lines_m_min = 3;
    int lines_m_max = 12;
    maxsing::GridBounds grid;
    OutputFormat format = OutputFormat::text;
    std::string cache_dir;
    unsigned seed = 20040301;
    long long fuzz_count = 10000;

    std::string canonical_string() const;
};

struct RunResult {
    int exit_code = 0;
    std::string output;
    std::string error;
};

// The whole command surface; `args` excludes the program name.
// Exit codes: 0 success, 1 usage/config error, 2 certificate or
// reproduction failure.
RunResult run(const std::vector<std::string>& args);

// Individual artifact builders (used by run and by the test suites).
std::string classify_artifact(const RunConfig& config);
std::string certify_artifact(const RunConfig& config, bool& failed);
std::string lines_table_artifact(const RunConfig& config);
std::string ledger_fuzz_artifact(const RunConfig& config, bool& failed);
std::string graph_eval_artifact(const RunConfig& config, const std::string& graph_json,
                                const std::vector<exactmath::Rational>& nu,
                                const exactmath::Integer& n);
std::string chow_eval_artifact(const RunConfig& config, const std::string& expression,
                               const chow::FamilyParams& family);

// Product expressions over the divisor symbols K, L, F and the fiber
// hyperplane H (degree 2), e.g. "K^2 L^(M-1)" or "H*L^(M-1)".
exactmath::Integer eval_class_expression(const std::string& expression,
                                         const chow::FamilyParams& family);

}  // namespace fanofib::cli
