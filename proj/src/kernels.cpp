#include "diskfit/kernels.hpp"

#include "diskfit/errors.hpp"

#include <string>

namespace diskfit {

namespace {

using NJet = Jet<CJet>;

XComplex cpow_int(const XComplex& z, int m) {
    XComplex acc(1);
    for (int i = 0; i < m; ++i) acc *= z;
    return acc;
}

// Nested jets: outer variable s = conj(z_row), inner variable c = z_col.
// Every outer coefficient carries a full inner jet so the arithmetic stays
// shape-consistent.
NJet nested_filled(const CJet& head, int mr, int mc) {
    NJet j(head, mr);
    for (int k = 1; k <= mr; ++k) j[k] = CJet::constant(XComplex(0), mc);
    return j;
}

NJet nested_const(const XComplex& v, int mr, int mc) {
    return nested_filled(CJet::constant(v, mc), mr, mc);
}

NJet nested_svar(const XComplex& s0, int mr, int mc) {
    NJet j = nested_const(s0, mr, mc);
    if (mr >= 1) j[1] = CJet::constant(XComplex(1), mc);
    return j;
}

NJet nested_cvar(const XComplex& c0, int mr, int mc) {
    return nested_filled(CJet::variable(c0, mc), mr, mc);
}

bool is_pole(BasisKind k) {
    return k == BasisKind::SimplePole || k == BasisKind::HigherPole;
}
bool is_log(BasisKind k) {
    return k == BasisKind::LogOrigin || k == BasisKind::LogPaired;
}

enum class PoleForm { SigmaExterior, DirichletExterior, SigmaInterior, DirichletInterior };

// Simple-pole Gram forms as analytic functions of (s, c); higher orders are
// the nested Taylor coefficients [mr-1][mc-1], with a sign per interior
// differentiation d/dz_k (1/(z_k - z)) = -1/(z_k - z)^2.
XComplex pole_pole_entry(PoleForm form, const XComplex& s0, int row_order,
                         const XComplex& c0, int col_order) {
    int mr = row_order - 1, mc = col_order - 1;
    if (mr == 0 && mc == 0) {
        XComplex w = c0 * s0;
        switch (form) {
            case PoleForm::SigmaExterior: return XComplex(1) / (XComplex(1) - w);
            case PoleForm::DirichletExterior: {
                XComplex d = XComplex(1) - w;
                return XComplex(0.5) / (d * d);
            }
            case PoleForm::SigmaInterior: return XComplex(1) / (w - XComplex(1));
            case PoleForm::DirichletInterior: {
                XComplex d = w - XComplex(1);
                return XComplex(0.5) / (d * d);
            }
        }
    }
    NJet s = nested_svar(s0, mr, mc);
    NJet c = nested_cvar(c0, mr, mc);
    NJet one = nested_const(XComplex(1), mr, mc);
    NJet w = s * c;
    NJet base;
    bool interior = false;
    switch (form) {
        case PoleForm::SigmaExterior: base = one / (one - w); break;
        case PoleForm::DirichletExterior: {
            NJet d = one - w;
            base = nested_const(XComplex(0.5), mr, mc) / (d * d);
            break;
        }
        case PoleForm::SigmaInterior:
            base = one / (w - one);
            interior = true;
            break;
        case PoleForm::DirichletInterior: {
            NJet d = w - one;
            base = nested_const(XComplex(0.5), mr, mc) / (d * d);
            interior = true;
            break;
        }
    }
    XComplex v = base[mr][mc];
    if (interior && ((mr + mc) % 2 == 1)) v = -v;
    return v;
}

// (pole_row order m, log-origin col): jet in s of c0 / (2 (1 - s c0)).
XComplex pole_row_log_col(const XComplex& s0, int m, const XComplex& c0) {
    if (m == 1) return XComplex(0.5) * c0 / (XComplex(1) - s0 * c0);
    CJet s = CJet::variable(s0, m - 1);
    CJet expr = XComplex(0.5) * c0 / (XComplex(1) - s * c0);
    return expr[m - 1];
}

// (log-origin row, pole col order m): jet in c of s0 / (2 (1 - s0 c)).
XComplex log_row_pole_col(const XComplex& s0, const XComplex& c0, int m) {
    if (m == 1) return XComplex(0.5) * s0 / (XComplex(1) - s0 * c0);
    CJet c = CJet::variable(c0, m - 1);
    CJet expr = XComplex(0.5) * s0 / (XComplex(1) - c * s0);
    return expr[m - 1];
}

// (log-origin row, log-origin col): -1/2 log(1 - s c), principal branch.
XComplex log_log_entry(const XComplex& s0, const XComplex& c0) {
    return XComplex(-0.5) * complex_ln_principal(XComplex(1) - s0 * c0);
}

// Dirichlet-exterior entry for unexpanded kinds (poles, log-origin,
// inverse-z); LogPaired is expanded by the caller.
XComplex dirichlet_entry_basic(const BasisElement& row, const BasisElement& col) {
    XComplex s0 = conj(row.location);
    XComplex c0 = col.location;
    if (row.kind == BasisKind::InverseZ || col.kind == BasisKind::InverseZ) {
        if (row.kind == BasisKind::InverseZ && col.kind == BasisKind::InverseZ)
            return XComplex(0.5);
        if (col.kind == BasisKind::InverseZ)
            return XComplex(0.5) * conj(basis_residue_at_infinity(row));
        return XComplex(0.5) * basis_residue_at_infinity(col);
    }
    if (is_pole(row.kind) && is_pole(col.kind))
        return pole_pole_entry(PoleForm::DirichletExterior, s0, row.order, c0, col.order);
    if (is_pole(row.kind) && col.kind == BasisKind::LogOrigin)
        return pole_row_log_col(s0, row.order, c0);
    if (row.kind == BasisKind::LogOrigin && is_pole(col.kind))
        return log_row_pole_col(s0, c0, col.order);
    if (row.kind == BasisKind::LogOrigin && col.kind == BasisKind::LogOrigin)
        return log_log_entry(s0, c0);
    throw ContractError("gram_entry: unsupported dirichlet basis combination");
}

// A LogPaired element is the difference of two log-origin elements; inner
// products expand linearly (real coefficients, so conjugation is immaterial).
XComplex dirichlet_entry_col_expanded(const BasisElement& row, const BasisElement& col) {
    if (col.kind == BasisKind::LogPaired) {
        BasisElement main = col, paired = col;
        main.kind = BasisKind::LogOrigin;
        paired.kind = BasisKind::LogOrigin;
        paired.location = col.paired;
        return dirichlet_entry_basic(row, main) - dirichlet_entry_basic(row, paired);
    }
    return dirichlet_entry_basic(row, col);
}

XComplex dirichlet_entry(const BasisElement& row, const BasisElement& col) {
    if (row.kind == BasisKind::LogPaired) {
        BasisElement main = row, paired = row;
        main.kind = BasisKind::LogOrigin;
        paired.kind = BasisKind::LogOrigin;
        paired.location = row.paired;
        return dirichlet_entry_col_expanded(main, col) -
               dirichlet_entry_col_expanded(paired, col);
    }
    return dirichlet_entry_col_expanded(row, col);
}

XComplex sigma_exterior_entry(const BasisElement& row, const BasisElement& col) {
    if (row.kind == BasisKind::InverseZ || col.kind == BasisKind::InverseZ) {
        if (row.kind == BasisKind::InverseZ && col.kind == BasisKind::InverseZ)
            return XComplex(1);
        if (col.kind == BasisKind::InverseZ)
            return conj(basis_residue_at_infinity(row));
        return basis_residue_at_infinity(col);
    }
    if (is_pole(row.kind) && is_pole(col.kind))
        return pole_pole_entry(PoleForm::SigmaExterior, conj(row.location), row.order,
                               col.location, col.order);
    throw ContractError("gram_entry: sigma norm supports poles and 1/z only");
}

XComplex interior_entry(NormKind norm, const BasisElement& row, const BasisElement& col) {
    if (!is_pole(row.kind) || !is_pole(col.kind))
        throw ContractError("gram_entry: interior norms support pole bases only");
    PoleForm form = norm == NormKind::SigmaInterior ? PoleForm::SigmaInterior
                                                    : PoleForm::DirichletInterior;
    return pole_pole_entry(form, conj(row.location), row.order, col.location, col.order);
}

// Energy-norm entries reduce to real parts of exterior Dirichlet entries of
// the analytic completions, with completion constants 1 (RealLog, RealDipoleX)
// and -i (RealDipoleY).
struct Completion {
    BasisElement elem;
    XComplex coeff;
};

Completion completion_of(const BasisElement& b) {
    Completion c;
    c.elem = b;
    c.coeff = XComplex(1);
    switch (b.kind) {
        case BasisKind::RealLog: c.elem.kind = BasisKind::LogOrigin; break;
        case BasisKind::RealDipoleX: c.elem.kind = BasisKind::SimplePole; break;
        case BasisKind::RealDipoleY:
            c.elem.kind = BasisKind::SimplePole;
            c.coeff = XComplex(0, -1);
            break;
        default:
            throw ContractError("gram_entry: energy norm supports real bases only");
    }
    return c;
}

XComplex energy_entry(const BasisElement& row, const BasisElement& col) {
    Completion r = completion_of(row), c = completion_of(col);
    XComplex d = conj(r.coeff) * c.coeff * dirichlet_entry(r.elem, c.elem);
    return XComplex(d.re);
}

void check_located(const BasisElement& b, const char* ctx) {
    if (b.kind == BasisKind::InverseZ) return;
    if (b.location == XComplex(0))
        throw ContractError(std::string(ctx) + ": source at origin (use inverse_z)");
    if (b.kind == BasisKind::LogPaired && b.paired == b.location)
        throw ContractError(std::string(ctx) + ": coincident paired point");
}

} // namespace

InvolutionPoint involution(const XComplex& z_k) {
    if (z_k == XComplex(0)) throw DomainError("involution of zero");
    InvolutionPoint ip;
    ip.p = recip(z_k);
    ip.p_conj = conj(ip.p);
    return ip;
}

XComplex gram_entry(NormKind norm, Geometry geometry, const BasisElement& row,
                    const BasisElement& col) {
    check_located(row, "gram_entry(row)");
    check_located(col, "gram_entry(col)");
    switch (norm) {
        case NormKind::SigmaExterior:
            if (geometry != Geometry::Exterior)
                throw ContractError("gram_entry: sigma norm is exterior");
            return sigma_exterior_entry(row, col);
        case NormKind::DirichletExterior:
            if (geometry != Geometry::Exterior)
                throw ContractError("gram_entry: dirichlet norm is exterior");
            return dirichlet_entry(row, col);
        case NormKind::SigmaInterior:
        case NormKind::DirichletInterior:
            if (geometry != Geometry::Interior)
                throw ContractError("gram_entry: interior norm with exterior geometry");
            return interior_entry(norm, row, col);
        case NormKind::EnergyReal:
            if (geometry != Geometry::Exterior)
                throw ContractError("gram_entry: energy norm is exterior");
            return energy_entry(row, col);
    }
    throw ContractError("gram_entry: unknown norm");
}

namespace {

XComplex require_a1(const TargetFunction& f) {
    if (!f.residue_at_infinity)
        throw ConfigError("target lacks residue_at_infinity (a_1) required by the "
                          "1/z augmentation");
    return *f.residue_at_infinity;
}

// sigma moment as a jet in s = conj(z_k): (1/s) f(1/s); coefficient m-1.
XComplex sigma_pole_moment(const TargetFunction& f, const XComplex& z_k, int m) {
    XComplex s0 = conj(z_k);
    if (m == 1) {
        XComplex p_conj = recip(s0);
        return p_conj * f.eval(p_conj);
    }
    CJet s = CJet::variable(s0, m - 1);
    CJet inv = XComplex(1) / s;
    CJet fj = jet_compose(f.jet(inv.value(), m - 1), inv);
    return (inv * fj)[m - 1];
}

// dirichlet moment as a jet in s: -(1/(2 s^2)) f_z(1/s); coefficient m-1.
XComplex dirichlet_pole_moment(const TargetFunction& f, const XComplex& z_k, int m) {
    XComplex s0 = conj(z_k);
    if (m == 1) {
        XComplex p_conj = recip(s0);
        return XComplex(-0.5) * p_conj * p_conj * f.deriv(p_conj);
    }
    CJet s = CJet::variable(s0, m - 1);
    CJet inv = XComplex(1) / s;
    CJet fz = jet_compose(f.jet(inv.value(), m).derivative_jet(), inv);
    return (XComplex(-0.5) * inv * inv * fz)[m - 1];
}

// interior variants carry the (-1)^(m-1) from d/dz_k of 1/(z_k - z).
XComplex interior_sigma_moment(const TargetFunction& f, const XComplex& z_k, int m) {
    XComplex v = sigma_pole_moment(f, z_k, m);
    return (m % 2 == 0) ? -v : v;
}

XComplex interior_dirichlet_moment(const TargetFunction& f, const XComplex& z_k, int m) {
    XComplex v = -dirichlet_pole_moment(f, z_k, m);
    return (m % 2 == 0) ? -v : v;
}

XComplex energy_moment(const BasisElement& b, const TargetFunction& f) {
    switch (b.kind) {
        case BasisKind::RealLog: {
            if (!f.eval_real)
                throw ContractError("moment_entry: energy log moment needs a real target");
            XComplex P = involution(b.location).p_conj;
            return XComplex(XReal(0.5) * f.eval_real(P));
        }
        case BasisKind::RealDipoleX:
        case BasisKind::RealDipoleY: {
            // Re / -Im of the completion's Dirichlet moment.
            XComplex a = dirichlet_pole_moment(f, b.location, 1);
            return b.kind == BasisKind::RealDipoleX ? XComplex(a.re) : XComplex(-a.im);
        }
        default:
            throw ContractError("moment_entry: energy norm supports real bases only");
    }
}

} // namespace

XComplex moment_entry(NormKind norm, Geometry geometry, const BasisElement& b,
                      const TargetFunction& f) {
    check_located(b, "moment_entry");
    switch (norm) {
        case NormKind::SigmaExterior:
            if (b.kind == BasisKind::InverseZ) return require_a1(f);
            if (!is_pole(b.kind))
                throw ContractError("moment_entry: sigma norm supports poles and 1/z");
            return sigma_pole_moment(f, b.location, b.order);
        case NormKind::DirichletExterior: {
            if (b.kind == BasisKind::InverseZ) return XComplex(0.5) * require_a1(f);
            if (is_pole(b.kind)) return dirichlet_pole_moment(f, b.location, b.order);
            if (b.kind == BasisKind::LogOrigin) {
                XComplex pc = involution(b.location).p_conj;
                return XComplex(0.5) * f.eval(pc);
            }
            if (b.kind == BasisKind::LogPaired) {
                XComplex pc = involution(b.location).p_conj;
                XComplex pcp = involution(b.paired).p_conj;
                return XComplex(0.5) * (f.eval(pc) - f.eval(pcp));
            }
            throw ContractError("moment_entry: unsupported dirichlet basis");
        }
        case NormKind::SigmaInterior:
            if (!is_pole(b.kind))
                throw ContractError("moment_entry: interior sigma supports poles only");
            return interior_sigma_moment(f, b.location, b.order);
        case NormKind::DirichletInterior:
            if (!is_pole(b.kind))
                throw ContractError("moment_entry: interior dirichlet supports poles only");
            return interior_dirichlet_moment(f, b.location, b.order);
        case NormKind::EnergyReal:
            (void)geometry;
            return energy_moment(b, f);
    }
    throw ContractError("moment_entry: unknown norm");
}

XComplex cauchy_determinant(const std::vector<XComplex>& sources) {
    size_t n = sources.size();
    if (n == 0) throw DomainError("cauchy_determinant: empty source list");
    std::vector<XComplex> p(n);
    for (size_t i = 0; i < n; ++i) {
        if (sources[i] == XComplex(0))
            throw DomainError("cauchy_determinant: source at origin");
        p[i] = recip(sources[i]);
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (sources[i] == sources[j])
                throw DomainError("cauchy_determinant: coincident sources");

    XComplex num(1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < i; ++j)
            num *= (p[i] - p[j]) * (conj(sources[j]) - conj(sources[i]));
    XComplex den(1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            den *= p[i] - conj(sources[j]);
    XComplex det = num / den;
    for (size_t k = 0; k < n; ++k) det *= p[k];
    return det;
}

XComplex basis_value(const BasisElement& b, const XComplex& z, Geometry geometry,
                     NormKind norm_kind) {
    switch (b.kind) {
        case BasisKind::SimplePole:
        case BasisKind::HigherPole: {
            if (z == b.location) throw EvaluationError("evaluation at a source point");
            if (geometry == Geometry::Exterior)
                return recip(cpow_int(z - b.location, b.order));
            XComplex v = recip(cpow_int(b.location - z, b.order));
            if (norm_kind == NormKind::DirichletInterior)
                v -= recip(cpow_int(b.location, b.order));
            return v;
        }
        case BasisKind::LogOrigin:
            return -complex_ln_principal(XComplex(1) - b.location / z);
        case BasisKind::LogPaired:
            return -complex_ln_principal(XComplex(1) - b.location / z) +
                   complex_ln_principal(XComplex(1) - b.paired / z);
        case BasisKind::InverseZ:
            if (z == XComplex(0)) throw EvaluationError("evaluation at the origin");
            return recip(z);
        case BasisKind::RealLog:
            return XComplex(XReal(-0.5) * log(norm(XComplex(1) - b.location / z)));
        case BasisKind::RealDipoleX: {
            if (z == b.location) throw EvaluationError("evaluation at a source point");
            XComplex v = recip(z - b.location);
            return XComplex(v.re);
        }
        case BasisKind::RealDipoleY: {
            if (z == b.location) throw EvaluationError("evaluation at a source point");
            XComplex v = recip(z - b.location);
            return XComplex(v.im);
        }
    }
    throw ContractError("basis_value: unknown kind");
}

CJet basis_jet(const BasisElement& b, const XComplex& z, int order, Geometry geometry,
               NormKind norm_kind) {
    CJet zj = CJet::variable(z, order);
    switch (b.kind) {
        case BasisKind::SimplePole:
        case BasisKind::HigherPole: {
            if (geometry == Geometry::Exterior) {
                CJet d = zj - b.location;
                CJet acc = XComplex(1) / d;
                for (int i = 1; i < b.order; ++i) acc = acc / d;
                return acc;
            }
            CJet d = -(zj - b.location);
            CJet acc = XComplex(1) / d;
            for (int i = 1; i < b.order; ++i) acc = acc / d;
            if (norm_kind == NormKind::DirichletInterior)
                acc = acc - recip(cpow_int(b.location, b.order));
            return acc;
        }
        case BasisKind::LogOrigin:
            return -log(XComplex(1) - b.location * (XComplex(1) / zj));
        case BasisKind::LogPaired: {
            CJet u = XComplex(1) / zj;
            return log(XComplex(1) - b.paired * u) - log(XComplex(1) - b.location * u);
        }
        case BasisKind::InverseZ:
            return XComplex(1) / zj;
        default:
            throw ContractError("basis_jet: real-plane kinds have no complex jet");
    }
}

XComplex basis_residue_at_infinity(const BasisElement& b) {
    switch (b.kind) {
        case BasisKind::SimplePole: return XComplex(1);
        case BasisKind::HigherPole: return XComplex(0);
        case BasisKind::LogOrigin: return b.location;
        case BasisKind::LogPaired: return b.location - b.paired;
        case BasisKind::InverseZ: return XComplex(1);
        default: return XComplex(0);
    }
}

} // namespace diskfit
