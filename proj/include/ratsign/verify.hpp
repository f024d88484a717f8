#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ratsign/bwgraphs.hpp"

namespace ratsign {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyOptions {
    std::uint64_t seed = 20240601;
    int max_bw_degree = 7;         // invariance by exhaustion
    int max_flip_degree = 6;       // flip and rotation suites
    int max_bruteforce = 9;        // permutations
    int series_order = 40;
    int simple_base_length = 5;    // Σ l(λ_j) bound
    int random_descriptors = 1000;
    int random_profiles = 10000;
};

// Real bw-graphs with sequences (132221, 43226) and (34, 223) used as sign
// fixtures.
RealBwGraph long_sign_fixture();
RealBwGraph short_sign_fixture();

std::vector<CheckResult> run_acceptance(const VerifyOptions& options);
// Runs a single numbered check (1..12).
CheckResult run_check(int id, const VerifyOptions& options);
inline constexpr int kCheckCount = 12;

}  // namespace ratsign
