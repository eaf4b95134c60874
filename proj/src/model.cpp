#include "diskfit/model.hpp"

#include "diskfit/errors.hpp"

#include <array>
#include <cmath>

namespace diskfit {

bool is_real_basis(BasisKind k) {
    return k == BasisKind::RealLog || k == BasisKind::RealDipoleX ||
           k == BasisKind::RealDipoleY;
}

const char* to_string(Geometry g) {
    return g == Geometry::Exterior ? "exterior" : "interior";
}

const char* to_string(NormKind n) {
    switch (n) {
        case NormKind::SigmaExterior: return "sigma";
        case NormKind::DirichletExterior: return "dirichlet";
        case NormKind::SigmaInterior: return "sigma_interior";
        case NormKind::DirichletInterior: return "dirichlet_interior";
        case NormKind::EnergyReal: return "energy";
    }
    return "?";
}

const char* to_string(BasisKind k) {
    switch (k) {
        case BasisKind::SimplePole: return "pole";
        case BasisKind::HigherPole: return "pole_order_m";
        case BasisKind::LogPaired: return "log_paired";
        case BasisKind::LogOrigin: return "log_origin";
        case BasisKind::InverseZ: return "inverse_z";
        case BasisKind::RealLog: return "real_log";
        case BasisKind::RealDipoleX: return "real_dipole_x";
        case BasisKind::RealDipoleY: return "real_dipole_y";
    }
    return "?";
}

namespace {

bool norm_is_interior(NormKind n) {
    return n == NormKind::SigmaInterior || n == NormKind::DirichletInterior;
}

void check_source_modulus(const FitProblem& p, const XComplex& z, const char* what) {
    XReal m = abs(z);
    if (m == XReal(1))
        throw ConfigError(std::string(what) + ": source on boundary of unit disk");
    if (p.geometry == Geometry::Exterior) {
        if (!(m > XReal(0) && m < XReal(1)))
            throw ConfigError(std::string(what) +
                              ": exterior geometry requires 0 < |z_k| < 1");
    } else {
        if (!(m > XReal(1)))
            throw ConfigError(std::string(what) +
                              ": interior geometry requires |z_k| > 1");
    }
}

} // namespace

void validate(const FitProblem& p) {
    if (p.basis.empty()) throw ContractError("basis must be nonempty");

    if (norm_is_interior(p.norm) != (p.geometry == Geometry::Interior))
        throw ContractError("norm/geometry mismatch: interior norms pair with "
                            "interior geometry only");
    if (p.norm == NormKind::EnergyReal && p.geometry != Geometry::Exterior)
        throw ContractError("energy norm is defined over the planar exterior");

    int inverse_z_count = 0;
    for (size_t i = 0; i < p.basis.size(); ++i) {
        const BasisElement& b = p.basis[i];
        std::string at = "basis[" + std::to_string(i) + "]";

        if (is_real_basis(b.kind) != (p.norm == NormKind::EnergyReal))
            throw ContractError(at + ": real bases pair with the energy norm only");

        switch (b.kind) {
            case BasisKind::SimplePole:
                if (b.order != 1) throw ContractError(at + ": simple pole has order 1");
                check_source_modulus(p, b.location, at.c_str());
                break;
            case BasisKind::HigherPole:
                if (b.order < 2 || b.order > 5)
                    throw ContractError(at + ": higher pole order must be in [2,5]");
                check_source_modulus(p, b.location, at.c_str());
                break;
            case BasisKind::LogOrigin:
            case BasisKind::LogPaired:
                // Logarithmic replication holds under the exterior Dirichlet
                // norm only.
                if (p.norm != NormKind::DirichletExterior)
                    throw ContractError(at + ": logarithmic bases require the "
                                             "exterior dirichlet norm");
                check_source_modulus(p, b.location, at.c_str());
                if (b.kind == BasisKind::LogPaired) {
                    if (b.paired == b.location)
                        throw ContractError(at + ": paired point must differ from z_k");
                    check_source_modulus(p, b.paired, (at + ".paired").c_str());
                }
                break;
            case BasisKind::InverseZ:
                if (p.geometry != Geometry::Exterior)
                    throw ContractError(at + ": 1/z term requires exterior geometry");
                if (++inverse_z_count > 1)
                    throw ContractError(at + ": at most one 1/z term");
                break;
            case BasisKind::RealLog:
            case BasisKind::RealDipoleX:
            case BasisKind::RealDipoleY:
                check_source_modulus(p, b.location, at.c_str());
                break;
        }
    }

    // No duplicate basis functions: (kind, order, location, paired) unique.
    // A RealDipoleX/RealDipoleY pair and poles of different order may share a
    // location.
    for (size_t i = 0; i < p.basis.size(); ++i)
        for (size_t j = i + 1; j < p.basis.size(); ++j) {
            const BasisElement &a = p.basis[i], &b = p.basis[j];
            if (a.kind == b.kind && a.order == b.order &&
                a.location == b.location && a.paired == b.paired)
                throw ContractError("basis[" + std::to_string(j) +
                                    "] duplicates basis[" + std::to_string(i) + "]");
        }

    if (!p.target.eval && !p.target.eval_real)
        throw ContractError("target must be evaluable");
}

namespace {

XComplex one_plus_i() { return XComplex(1, 1); }

CJet jet_of_recip(const XComplex& z, int order) {
    return XComplex(1) / CJet::variable(z, order);
}

TargetFunction make_f1() {
    // f1 = sum_{n=1..5} (1+i)/(2 sqrt(n)) z^-n
    std::array<XComplex, 5> c;
    for (int n = 1; n <= 5; ++n)
        c[n - 1] = one_plus_i() * XComplex(XReal(0.5) / sqrt(XReal(n)));
    TargetFunction t;
    t.label = "f1";
    t.residue_at_infinity = c[0];
    t.eval = [c](const XComplex& z) {
        XComplex u = recip(z), acc = c[4];
        for (int k = 3; k >= 0; --k) acc = acc * u + c[k];
        return acc * u;
    };
    t.deriv = [c](const XComplex& z) {
        XComplex u = recip(z), acc = XComplex(5) * c[4];
        for (int k = 3; k >= 0; --k) acc = acc * u + XComplex(k + 1) * c[k];
        return -u * u * acc;
    };
    t.jet = [c](const XComplex& z, int order) {
        CJet u = jet_of_recip(z, order);
        CJet acc = CJet::constant(c[4], order);
        for (int k = 3; k >= 0; --k) acc = acc * u + c[k];
        return acc * u;
    };
    return t;
}

std::array<XComplex, 4> quarter_ring(double radius) {
    std::array<XComplex, 4> zs;
    XComplex z(radius, 0.0);
    for (int n = 0; n < 4; ++n) {
        zs[n] = z;
        z = z * XComplex(0, 1);
    }
    return zs;
}

TargetFunction make_f2() {
    // f2 = (1+i)/6 sum_{n=1..4} 1/(z - z_n), z_n = (3/4) i^(n-1)
    auto zs = quarter_ring(0.75);
    XComplex C = one_plus_i() / XComplex(6);
    TargetFunction t;
    t.label = "f2";
    t.residue_at_infinity = XComplex(4) * C;
    t.eval = [zs, C](const XComplex& z) {
        XComplex acc(0);
        for (const auto& s : zs) acc += recip(z - s);
        return C * acc;
    };
    t.deriv = [zs, C](const XComplex& z) {
        XComplex acc(0);
        for (const auto& s : zs) {
            XComplex d = recip(z - s);
            acc -= d * d;
        }
        return C * acc;
    };
    t.jet = [zs, C](const XComplex& z, int order) {
        CJet zj = CJet::variable(z, order);
        CJet acc = XComplex(1) / (zj - zs[0]);
        for (int n = 1; n < 4; ++n) acc = acc + XComplex(1) / (zj - zs[n]);
        return acc * C;
    };
    return t;
}

// log(z/(z - s)) evaluated as -log(1 - s/z); continuous for |s/z| < 1.
XComplex log_origin_value(const XComplex& z, const XComplex& s) {
    return -complex_ln_principal(XComplex(1) - s / z);
}

CJet log_origin_jet(const XComplex& z, const XComplex& s, int order) {
    CJet u = jet_of_recip(z, order);
    return -log(XComplex(1) - s * u);
}

TargetFunction make_f3() {
    // f3 = 2(1+i) sum_{n=1..4} log(z/(z - z_n)), z_n = (3/4) i^(n-1)
    auto zs = quarter_ring(0.75);
    XComplex C = XComplex(2) * one_plus_i();
    TargetFunction t;
    t.label = "f3";
    t.residue_at_infinity = XComplex(0);  // sum of z_n vanishes on the symmetric ring
    t.eval = [zs, C](const XComplex& z) {
        XComplex acc(0);
        for (const auto& s : zs) acc += log_origin_value(z, s);
        return C * acc;
    };
    t.deriv = [zs, C](const XComplex& z) {
        XComplex acc(0);
        for (const auto& s : zs) acc -= s / (z * (z - s));
        return C * acc;
    };
    t.jet = [zs, C](const XComplex& z, int order) {
        CJet acc = log_origin_jet(z, zs[0], order);
        for (int n = 1; n < 4; ++n) acc = acc + log_origin_jet(z, zs[n], order);
        return acc * C;
    };
    return t;
}

TargetFunction make_f4() {
    TargetFunction t;
    t.label = "f4";
    t.residue_at_infinity = XComplex(1);
    t.eval = [](const XComplex& z) { return sin(recip(z)); };
    t.deriv = [](const XComplex& z) {
        XComplex u = recip(z);
        return -u * u * cos(u);
    };
    t.jet = [](const XComplex& z, int order) {
        return sin(jet_of_recip(z, order));
    };
    return t;
}

TargetFunction make_f5() {
    TargetFunction t;
    t.label = "f5";
    t.residue_at_infinity = XComplex(0);
    t.eval = [](const XComplex& z) {
        return XComplex(2) * (cos(recip(z)) - XComplex(1));
    };
    t.deriv = [](const XComplex& z) {
        XComplex u = recip(z);
        return XComplex(2) * u * u * sin(u);
    };
    t.jet = [](const XComplex& z, int order) {
        CJet c = cos(jet_of_recip(z, order));
        return (c - XComplex(1)) * XComplex(2);
    };
    return t;
}

TargetFunction make_f6() {
    TargetFunction t;
    t.label = "f6";
    t.residue_at_infinity = XComplex(1);
    t.eval = [](const XComplex& z) { return exp(recip(z)) - XComplex(1); };
    t.deriv = [](const XComplex& z) {
        XComplex u = recip(z);
        return -u * u * exp(u);
    };
    t.jet = [](const XComplex& z, int order) {
        return exp(jet_of_recip(z, order)) - XComplex(1);
    };
    return t;
}

TargetFunction make_f_real() {
    // F = sum_{n=1..4} 8(-1)^n log(|X|/|X - X'_n|), |X'_n| = 1/3; the analytic
    // completion is the matching combination of log(z/(z - z'_n)).
    auto zs = quarter_ring(1.0 / 3.0);
    std::array<XReal, 4> m;
    for (int n = 1; n <= 4; ++n) m[n - 1] = XReal(n % 2 == 0 ? 8.0 : -8.0);
    TargetFunction t;
    t.label = "F_real";
    t.is_real = true;
    t.residue_at_infinity = XComplex(0);
    t.eval_real = [zs, m](const XComplex& X) {
        XReal acc(0);
        for (int n = 0; n < 4; ++n)
            acc += m[n] * XReal(-0.5) * log(norm(XComplex(1) - zs[n] / X));
        return acc;
    };
    t.eval = [zs, m](const XComplex& z) {
        XComplex acc(0);
        for (int n = 0; n < 4; ++n) acc += XComplex(m[n]) * log_origin_value(z, zs[n]);
        return acc;
    };
    t.deriv = [zs, m](const XComplex& z) {
        XComplex acc(0);
        for (int n = 0; n < 4; ++n) acc -= XComplex(m[n]) * (zs[n] / (z * (z - zs[n])));
        return acc;
    };
    t.jet = [zs, m](const XComplex& z, int order) {
        CJet acc = log_origin_jet(z, zs[0], order) * XComplex(m[0]);
        for (int n = 1; n < 4; ++n)
            acc = acc + log_origin_jet(z, zs[n], order) * XComplex(m[n]);
        return acc;
    };
    return t;
}

} // namespace

TargetFunction builtin_target(const std::string& name) {
    if (name == "f1") return make_f1();
    if (name == "f2") return make_f2();
    if (name == "f3") return make_f3();
    if (name == "f4") return make_f4();
    if (name == "f5") return make_f5();
    if (name == "f6") return make_f6();
    if (name == "F_real") return make_f_real();
    throw ContractError("unknown builtin target: " + name);
}

std::vector<BasisElement> ring_sources(XReal R_B, int N_k, BasisKind kind) {
    if (!(R_B > XReal(0) && R_B < XReal(1)))
        throw DomainError("ring_sources: R_B must satisfy 0 < R_B < 1");
    if (N_k < 1) throw DomainError("ring_sources: N_k must be >= 1");
    if (kind == BasisKind::LogPaired || kind == BasisKind::InverseZ)
        throw ContractError("ring_sources: kind must be an unpaired located kind");
    std::vector<BasisElement> out;
    out.reserve(N_k);
    for (int k = 1; k <= N_k; ++k) {
        XReal theta = XReal(2) * XReal::pi() * XReal(k - 1) / XReal(N_k);
        BasisElement b;
        b.kind = kind;
        b.location = polar(R_B, theta);
        out.push_back(b);
    }
    return out;
}

} // namespace diskfit
