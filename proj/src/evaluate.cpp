#include "diskfit/evaluate.hpp"

#include "diskfit/errors.hpp"

namespace diskfit {

namespace {

EvalStats stats_of(const std::vector<XReal>& mags) {
    EvalStats s{XReal(0), XReal(0), XReal(0), XReal(0), XReal(0)};
    if (mags.empty()) return s;
    XReal n(int(mags.size()));
    XReal sum(0), sum_sq(0);
    for (const XReal& m : mags) {
        sum += m;
        sum_sq += m * m;
        s.max_magnitude = max(s.max_magnitude, m);
    }
    s.avg_magnitude = sum / n;
    s.rms = sqrt(sum_sq / n);
    XReal var(0);
    for (const XReal& m : mags) {
        XReal d = m - s.avg_magnitude;
        var += d * d;
    }
    s.std_about_mean = sqrt(var / n);
    s.sigma_norm_estimate = s.rms;
    return s;
}

std::vector<XComplex> ring_points(const RingSpec& ring) {
    std::vector<XComplex> pts;
    pts.reserve(ring.count);
    for (int j = 0; j < ring.count; ++j) {
        XReal theta = ring.offset + XReal(2) * XReal::pi() * XReal(j) / XReal(ring.count);
        pts.push_back(polar(ring.radius, theta));
    }
    return pts;
}

} // namespace

XComplex evaluate_approximant(const FitResult& result, const FitProblem& problem,
                              const XComplex& z) {
    XComplex acc(0);
    for (size_t k = 0; k < result.mu.size(); ++k)
        acc += result.mu[k] * basis_value(problem.basis[k], z, problem.geometry,
                                          problem.norm);
    return acc;
}

EvalStats error_stats(const FitResult& result, const FitProblem& problem,
                      const RingSpec& ring) {
    if (ring.count < 1) throw ContractError("error_stats: ring count must be >= 1");
    if (problem.geometry == Geometry::Exterior && ring.radius < XReal(1))
        throw ContractError("error_stats: exterior rings require R_E >= 1");
    if (problem.geometry == Geometry::Interior && ring.radius > XReal(1))
        throw ContractError("error_stats: interior rings require R_E <= 1");

    bool real_valued = problem.norm == NormKind::EnergyReal;
    std::vector<XReal> mags;
    mags.reserve(ring.count);
    for (const XComplex& z : ring_points(ring)) {
        if (real_valued) {
            XReal u = evaluate_approximant(result, problem, z).re;
            mags.push_back(abs(problem.target.eval_real(z) - u));
        } else {
            XComplex delta = problem.target.eval(z) - evaluate_approximant(result, problem, z);
            mags.push_back(abs(delta));
        }
    }
    return stats_of(mags);
}

EvalStats target_summary(const TargetFunction& target, const RingSpec& ring) {
    if (ring.count < 1) throw ContractError("target_summary: ring count must be >= 1");
    if (abs(ring.radius - XReal(1)) > XReal(1e-30))
        throw DomainError("target_summary: ring must lie on the unit circle");
    std::vector<XReal> mags;
    mags.reserve(ring.count);
    for (const XComplex& z : ring_points(ring)) {
        if (target.is_real)
            mags.push_back(abs(target.eval_real(z)));
        else
            mags.push_back(abs(target.eval(z)));
    }
    return stats_of(mags);
}

} // namespace diskfit
