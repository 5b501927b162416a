#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cubic {

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail{};// case count, or the first counterexample
};

struct SelftestOptions {
    int box = 3;              // coordinate box [-box, box]^7 for exhaustive checks
    int random_trials = 2000;
    int max_degree = 20;      // upper degree for the Hilbert-scheme sweeps
    std::uint64_t seed = 20261018;
};

/// Property checks over the library, for CI and the `selftest` subcommand.
std::vector<SelftestCheck> run_selftest(const SelftestOptions& options);

}  // namespace cubic
