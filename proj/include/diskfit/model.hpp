#pragma once

#include "diskfit/jet.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace diskfit {

/// Field region of a fit problem.  Exterior: field |z| >= 1, sources strictly
/// inside the disk.  Interior: field |z| <= 1, sources strictly outside.
enum class Geometry { Exterior, Interior };

/// Inner products under which fits are performed.
///   SigmaExterior/SigmaInterior: mean-square of boundary values on |z|=1.
///   DirichletExterior/DirichletInterior: (1/2pi) integral of f_z* g_z over
///     the field region.
///   EnergyReal: (1/2pi) integral of grad G . grad H over the planar exterior.
enum class NormKind {
    SigmaExterior,
    DirichletExterior,
    SigmaInterior,
    DirichletInterior,
    EnergyReal,
};

enum class BasisKind {
    SimplePole,   // 1/(z - z_k) exterior, 1/(z_k - z) interior
    HigherPole,   // order m in [2,5]
    LogPaired,    // log((z - z'_k)/(z - z_k)), paired point z'_k
    LogOrigin,    // log(z/(z - z_k))
    InverseZ,     // single 1/z augmentation term (exterior only)
    RealLog,      // log(|X|/|X - X_k|) in the real plane
    RealDipoleX,  // Re{1/(z - z_k)}
    RealDipoleY,  // Im{1/(z - z_k)}
};

struct BasisElement {
    BasisKind kind = BasisKind::SimplePole;
    XComplex location;       // z_k, or planar point X_k as x + iy; unused for InverseZ
    int order = 1;           // pole order for HigherPole
    XComplex paired;         // z'_k for LogPaired
};

bool is_real_basis(BasisKind k);

/// Function to be approximated.  For complex targets, eval/deriv/jet give f,
/// f_z and the truncated Taylor expansion.  For planar (real) targets,
/// eval_real gives F(X) and eval/deriv/jet describe the analytic completion g
/// with Re{g} = F.  residue_at_infinity is the 1/z series coefficient a_1,
/// required when an InverseZ augmentation row is requested.
struct TargetFunction {
    std::string label;
    std::function<XComplex(const XComplex&)> eval;
    std::function<XComplex(const XComplex&)> deriv;
    std::function<CJet(const XComplex&, int)> jet;
    std::optional<XComplex> residue_at_infinity;
    bool is_real = false;
    std::function<XReal(const XComplex&)> eval_real;
};

struct FitProblem {
    Geometry geometry = Geometry::Exterior;
    NormKind norm = NormKind::SigmaExterior;
    std::vector<BasisElement> basis;
    TargetFunction target;
};

/// Validates all structural invariants (geometry/norm/basis compatibility,
/// distinct source locations, paired-point rules, ...).  Throws ContractError
/// or ConfigError with a description of the first violation.
void validate(const FitProblem& problem);

/// Built-in test functions: f1..f6 (analytic, exterior) and F_real (planar
/// log-source potential).  Throws ContractError on unknown names.
TargetFunction builtin_target(const std::string& name);

/// N_k sources equally spaced on radius R_B, starting on the positive real
/// axis: z_k = R_B exp(i 2 pi (k-1)/N_k).  Requires 0 < R_B < 1.
std::vector<BasisElement> ring_sources(XReal R_B, int N_k, BasisKind kind);

const char* to_string(Geometry g);
const char* to_string(NormKind n);
const char* to_string(BasisKind k);

} // namespace diskfit
