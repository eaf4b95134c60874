#pragma once

#include "diskfit/fitter.hpp"

namespace diskfit {

/// Sampling circle: count points at theta_j = offset + 2 pi j / count.
struct RingSpec {
    XReal radius{1.0};
    int count = 1000;
    XReal offset{0.0};
};

/// Ring statistics of a magnitude sample set.  For error rings the samples
/// are |f - phi|; for target summaries they are |f|.  sigma_norm_estimate is
/// the root-mean-square, the discrete estimate of the boundary norm.
struct EvalStats {
    XReal rms;
    XReal std_about_mean;
    XReal max_magnitude;
    XReal avg_magnitude;
    XReal sigma_norm_estimate;
};

/// Value of the fitted approximant sum mu_k B_k(z).
XComplex evaluate_approximant(const FitResult& result, const FitProblem& problem,
                              const XComplex& z);

/// Statistics of |f - phi| over the ring.
EvalStats error_stats(const FitResult& result, const FitProblem& problem,
                      const RingSpec& ring);

/// Statistics of |f| over a unit-circle ring (avg, max, and the discrete
/// boundary-norm estimate).
EvalStats target_summary(const TargetFunction& target, const RingSpec& ring);

} // namespace diskfit
