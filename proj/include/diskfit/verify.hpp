#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace diskfit::verify {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

// Individual property checks.  Deterministic: all randomness comes from a
// fixed-seed generator.
CheckResult oracle_equivalence(int n_configs, uint64_t seed = 0x5eedULL);
CheckResult hermitian_symmetry(int n_pairs, uint64_t seed = 0x5eedULL);
CheckResult positive_spectra();
CheckResult determinant_identity(uint64_t seed = 0x5eedULL);
CheckResult replication_identity(uint64_t seed = 0x5eedULL);
CheckResult eigen_pairing(uint64_t seed = 0x5eedULL);
CheckResult embedding_determinant_cross(uint64_t seed = 0x5eedULL);
CheckResult solve_residual_bound();
CheckResult collocation_bound();
CheckResult dipole_pair_equivalence();
CheckResult wirtinger_identity(int n_points, uint64_t seed = 0x5eedULL);
CheckResult derivative_area_dual_route(uint64_t seed = 0x5eedULL);

/// Named suites for the CLI: "kernels", "linalg", "appendixB" or "all".
std::vector<CheckResult> run_suite(const std::string& which);

} // namespace diskfit::verify
