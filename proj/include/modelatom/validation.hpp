#pragma once

#include <string>
#include <vector>

#include "modelatom/trajectory.hpp"

namespace modelatom {

struct CheckResult {
    std::string name;
    bool passed = false;
    double value = 0;     ///< measured deviation or count
    double threshold = 0; ///< pass when value is within it
    std::string detail;
};

/// The invariant suite behind the `validate` subcommand.
std::vector<CheckResult> run_invariant_suite(const IntegrationControls& controls = {});

/// Largest |eigenvalue_k - P_k| for k <= k_check, eigenvalues of the
/// discretized static one-matrix times the grid spacing.
double spectral_oracle_error(const ModelParams& params, int grid_points, int k_check);

}  // namespace modelatom
