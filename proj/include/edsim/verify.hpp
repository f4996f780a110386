#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace edsim {

/// One cross-check outcome for the verification report.
struct CheckResult {
    std::string suite;
    std::string name;
    bool passed;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::uint32_t shots = 1024;
    /// Random angle sets per closed-form check.
    int samples = 200;
    /// Grid points per axis for the exact surface comparisons.
    int grid = 25;
    /// Grid points per axis for the shot-sampled comparisons.
    int sampled_grid = 9;
};

/// Engine values against the independently transcribed two-qubit moments
/// (depths 1..3), the <Y0 Y1>^2 identity, and the pair closed forms.
std::vector<CheckResult> verify_two_qubit(const VerifyOptions& options);

/// Ring closed forms (depths 1 and 2) against the engine, plus the depth-2
/// locality of the evolved support.
std::vector<CheckResult> verify_chain(const VerifyOptions& options);

/// Surface presets: closed form vs engine on an exact grid, then sampled
/// estimates vs the closed form with MAE/RMSE/correlation bands.
std::vector<CheckResult> verify_figures(const VerifyOptions& options);

std::vector<CheckResult> verify_all(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace edsim
