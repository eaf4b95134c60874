#include "diskfit/fitter.hpp"

#include "diskfit/errors.hpp"

namespace diskfit {

namespace {

XReal round_to_double(XReal x) { return XReal(x.to_double()); }

bool all_simple_poles(const FitProblem& p) {
    for (const BasisElement& b : p.basis)
        if (b.kind != BasisKind::SimplePole) return false;
    return true;
}

// Target wrapper for f - phi, evaluated pointwise from the fitted
// coefficients; feeds moment_entry to obtain per-element replication
// residuals without touching the assembled system.
TargetFunction delta_target(const FitResult& r, const FitProblem& p) {
    const TargetFunction& f = p.target;
    Geometry geo = p.geometry;
    NormKind nk = p.norm;
    std::vector<BasisElement> basis = p.basis;
    std::vector<XComplex> mu = r.mu;

    TargetFunction d;
    d.label = "delta";
    if (f.eval) {
        d.eval = [=](const XComplex& z) {
            XComplex acc = f.eval(z);
            for (size_t k = 0; k < basis.size(); ++k) {
                if (is_real_basis(basis[k].kind)) continue;
                acc -= mu[k] * basis_value(basis[k], z, geo, nk);
            }
            return acc;
        };
        d.deriv = [=](const XComplex& z) {
            XComplex acc = f.deriv(z);
            for (size_t k = 0; k < basis.size(); ++k) {
                if (is_real_basis(basis[k].kind)) continue;
                acc -= mu[k] * basis_jet(basis[k], z, 1, geo, nk).derivative(1);
            }
            return acc;
        };
        d.jet = [=](const XComplex& z, int order) {
            CJet acc = f.jet(z, order);
            for (size_t k = 0; k < basis.size(); ++k) {
                if (is_real_basis(basis[k].kind)) continue;
                acc = acc - basis_jet(basis[k], z, order, geo, nk) * mu[k];
            }
            return acc;
        };
    }
    if (f.residue_at_infinity) {
        XComplex a1 = *f.residue_at_infinity;
        for (size_t k = 0; k < basis.size(); ++k)
            a1 -= mu[k] * basis_residue_at_infinity(basis[k]);
        d.residue_at_infinity = a1;
    }
    if (p.norm == NormKind::EnergyReal) {
        d.is_real = true;
        d.eval_real = [=](const XComplex& X) {
            XReal acc = f.eval_real(X);
            for (size_t k = 0; k < basis.size(); ++k)
                acc -= mu[k].re * basis_value(basis[k], X, geo, nk).re;
            return acc;
        };
        // Completion of the real approximant: RealLog -> log(z/(z-z_k)),
        // RealDipoleX -> 1/(z-z_k), RealDipoleY -> -i/(z-z_k).
        d.eval = [=](const XComplex& z) {
            XComplex acc = f.eval(z);
            for (size_t k = 0; k < basis.size(); ++k) {
                BasisElement c = basis[k];
                XComplex coef = mu[k];
                if (c.kind == BasisKind::RealLog) {
                    c.kind = BasisKind::LogOrigin;
                } else if (c.kind == BasisKind::RealDipoleX) {
                    c.kind = BasisKind::SimplePole;
                } else {
                    c.kind = BasisKind::SimplePole;
                    coef *= XComplex(0, -1);
                }
                acc -= coef * basis_value(c, z, geo, NormKind::DirichletExterior);
            }
            return acc;
        };
        d.deriv = [=](const XComplex& z) {
            XComplex acc = f.deriv(z);
            for (size_t k = 0; k < basis.size(); ++k) {
                BasisElement c = basis[k];
                XComplex coef = mu[k];
                if (c.kind == BasisKind::RealLog) {
                    c.kind = BasisKind::LogOrigin;
                } else if (c.kind == BasisKind::RealDipoleX) {
                    c.kind = BasisKind::SimplePole;
                } else {
                    c.kind = BasisKind::SimplePole;
                    coef *= XComplex(0, -1);
                }
                acc -= coef *
                       basis_jet(c, z, 1, geo, NormKind::DirichletExterior).derivative(1);
            }
            return acc;
        };
    }
    return d;
}

// Rescaling that turns |moment_entry(delta)| into the bare replicated
// quantity (|delta f(p*)|, |delta f_z(p*)|, ...).  Higher poles keep the raw
// replication-functional magnitude.
XReal collocation_scale(const BasisElement& b, NormKind norm_kind) {
    bool dirichlet = norm_kind == NormKind::DirichletExterior ||
                     norm_kind == NormKind::DirichletInterior;
    switch (b.kind) {
        case BasisKind::SimplePole:
            return dirichlet ? XReal(2) * norm(b.location) : abs(b.location);
        case BasisKind::HigherPole: return XReal(1);
        case BasisKind::LogOrigin:
        case BasisKind::LogPaired:
        case BasisKind::RealLog: return XReal(2);
        case BasisKind::InverseZ: return dirichlet ? XReal(2) : XReal(1);
        case BasisKind::RealDipoleX:
        case BasisKind::RealDipoleY: return XReal(2) * norm(b.location);
    }
    return XReal(1);
}

} // namespace

GramSystem assemble(const FitProblem& problem, AssemblyPrecision precision) {
    validate(problem);
    int n = int(problem.basis.size());
    GramSystem sys;
    sys.n = n;
    sys.real_symmetric = problem.norm == NormKind::EnergyReal;
    sys.T.resize(size_t(n) * n);
    sys.A.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            sys.T[size_t(i) * n + j] =
                gram_entry(problem.norm, problem.geometry, problem.basis[i],
                           problem.basis[j]);
        sys.A[i] = moment_entry(problem.norm, problem.geometry, problem.basis[i],
                                problem.target);
    }
    if (precision == AssemblyPrecision::Double) {
        for (XComplex& t : sys.T) t = {round_to_double(t.re), round_to_double(t.im)};
        for (XComplex& a : sys.A) a = {round_to_double(a.re), round_to_double(a.im)};
    }

    if (sys.real_symmetric) {
        sys.realT = RealMatrix(n, n);
        sys.realA.assign(n, XReal(0));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) sys.realT(i, j) = sys.T[size_t(i) * n + j].re;
            sys.realA[i] = sys.A[i].re;
        }
    } else {
        auto [M, b] = embed_real(sys.T, n, sys.A);
        sys.realT = std::move(M);
        sys.realA = std::move(b);
    }
    return sys;
}

FitResult fit(const FitProblem& problem, const FitOptions& options) {
    GramSystem sys = assemble(problem, options.assembly);
    int n = sys.n;
    int dim = sys.realT.rows();

    EigenDecomposition eig = jacobi_eigen_full(sys.realT);

    FitResult result;
    result.spectrum.eigenvalues = eig.values;
    result.spectrum.condition_number = eig.values.front() / eig.values.back();

    RealVector x;
    if (options.truncate_smallest > 0) {
        if (options.truncate_smallest >= dim)
            throw ContractError("fit: truncate_smallest must be below the system size");
        x.assign(dim, XReal(0));
        for (int k = 0; k < dim - options.truncate_smallest; ++k) {
            XReal proj(0);
            for (int i = 0; i < dim; ++i) proj += eig.vectors(i, k) * sys.realA[i];
            XReal coef = proj / eig.values[k];
            for (int i = 0; i < dim; ++i) x[i] += coef * eig.vectors(i, k);
        }
    } else {
        x = householder_solve(sys.realT, sys.realA);
    }

    result.mu.resize(n);
    if (sys.real_symmetric) {
        for (int i = 0; i < n; ++i) result.mu[i] = XComplex(x[i]);
    } else {
        for (int i = 0; i < n; ++i) result.mu[i] = XComplex(x[i], x[n + i]);
    }

    XComplex drop(0);
    for (int i = 0; i < n; ++i) drop += conj(result.mu[i]) * sys.A[i];
    result.cost_drop = drop.re;

    if (problem.norm == NormKind::SigmaExterior && all_simple_poles(problem)) {
        std::vector<XComplex> sources;
        sources.reserve(problem.basis.size());
        for (const BasisElement& b : problem.basis) sources.push_back(b.location);
        DeterminantCheck check;
        XReal prod(1);
        for (const XReal& lam : eig.values) prod *= lam;
        check.eigen_route = sqrt(prod);
        check.closed_form_route = cauchy_determinant(sources);
        XReal closed_mag = abs(check.closed_form_route);
        check.relative_difference = abs(check.eigen_route - closed_mag) / closed_mag;
        result.determinant_check = check;
    }

    result.collocation_residuals = collocation_check(result, problem);
    return result;
}

std::vector<XReal> collocation_check(const FitResult& result, const FitProblem& problem) {
    TargetFunction delta = delta_target(result, problem);
    std::vector<XReal> residuals;
    residuals.reserve(problem.basis.size());
    for (const BasisElement& b : problem.basis) {
        XComplex m = moment_entry(problem.norm, problem.geometry, b, delta);
        residuals.push_back(abs(m) * collocation_scale(b, problem.norm));
    }
    return residuals;
}

} // namespace diskfit
