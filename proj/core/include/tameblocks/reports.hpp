#pragma once

#include "tameblocks/group_spec.hpp"

#include <string>
#include <vector>

namespace tameblocks {

enum class ReportFormat { Json, Csv };

// Exit codes shared with the command line tool: 0 checks pass, 1 a check
// failed, 2 invalid input, 3 a size bound was exceeded.
struct RunResult {
    int exit_code = 0;
    std::string output;
};

RunResult run_decompose(const GroupSpec& spec, long long n,
                        ReportFormat format = ReportFormat::Json);

RunResult run_coherence(const GroupSpec& spec, long long n);

RunResult run_fibers(const GroupSpec& spec, const std::vector<int>& levi_positions, long long n);

RunResult run_classical(const GroupSpec& spec, long long n);

RunResult run_dual(const GroupSpec& spec);

} // namespace tameblocks
