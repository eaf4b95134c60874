#pragma once

#include "diskfit/kernels.hpp"
#include "diskfit/linalg.hpp"

#include <optional>

namespace diskfit {

enum class AssemblyPrecision {
    Extended,  // closed forms assembled at full working precision
    Double,    // entries rounded to double before solving (mimics a pipeline
               // that assembles at ~16 digits and solves extended)
};

struct FitOptions {
    AssemblyPrecision assembly = AssemblyPrecision::Extended;
    int truncate_smallest = 0;  // eigen-modes of the real system dropped in the solve
};

/// Cross-check of det T computed two ways: sqrt of the product of the real
/// embedding's eigenvalues versus the closed-form Cauchy-determinant product.
struct DeterminantCheck {
    XReal eigen_route;
    XComplex closed_form_route;
    XReal relative_difference;
};

struct FitResult {
    std::vector<XComplex> mu;  // imaginary parts are zero for energy-norm fits
    Spectrum spectrum;         // spectrum of the solved real system
    std::optional<DeterminantCheck> determinant_check;
    std::vector<XReal> collocation_residuals;
    XReal cost_drop;  // Re(mu^dag A) = ||f||^2 - Phi at the optimum
};

/// Builds the normal-equation data T, A (basis-list ordering) plus the real
/// symmetric form to be solved.
GramSystem assemble(const FitProblem& problem,
                    AssemblyPrecision precision = AssemblyPrecision::Extended);

/// Assemble, solve and attach diagnostics.  The complex normal equations are
/// always solved through the real embedding.
FitResult fit(const FitProblem& problem, const FitOptions& options = {});

/// Residual magnitudes of the replicated point data at each element's
/// conjugate involution point: |df(p_k*)| for sigma and log fits,
/// |df_z(p_k*)| for dirichlet pole fits, |dF(P_k)| for energy log fits,
/// |d a_1| for the 1/z row.  Evaluates target and approximant directly; does
/// not reuse the solver's algebra.
std::vector<XReal> collocation_check(const FitResult& result, const FitProblem& problem);

} // namespace diskfit
