#pragma once

#include "diskfit/evaluate.hpp"

#include <string>
#include <vector>

namespace diskfit::config {

struct ParsedConfig {
    FitProblem problem;
    FitOptions options;
    std::vector<RingSpec> rings;
};

/// Parses and validates a fit-configuration document:
///   {"geometry": "exterior"|"interior",
///    "norm": "sigma"|"dirichlet"|"energy",
///    "basis": [{"kind": ..., "z": [re, im], "order": m?, "paired": [re, im]?}, ...],
///    "target": {"builtin": "f1".."f6"|"F_real"},
///    "rings": [{"radius": r, "count": n}],
///    "assembly_precision": "extended"|"double",
///    "truncate_smallest": k}
/// Violations raise ConfigError naming the offending field path.
ParsedConfig parse_fit_config(const std::string& json_text);

/// JSON result document: coefficients as re/im pairs, condition number,
/// eigenvalues, collocation residuals, and error statistics per ring.
std::string fit_result_json(const ParsedConfig& cfg, const FitResult& result);

} // namespace diskfit::config
