#include "diskfit/verify.hpp"

#include "diskfit/cases.hpp"
#include "diskfit/errors.hpp"
#include "diskfit/oracle.hpp"

#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>

namespace diskfit::verify {

namespace {

using Cd = std::complex<double>;

struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed ? seed : 1) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (double(next() >> 11) / 9007199254740992.0);
    }
    int pick(int n) { return int(next() % uint64_t(n)); }
};

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

Cd to_cd(const XComplex& z) { return {z.re.to_double(), z.im.to_double()}; }

Cd cpow(Cd z, int m) {
    Cd acc(1);
    for (int i = 0; i < m; ++i) acc *= z;
    return acc;
}

// Double-native basis evaluations: the quadrature route shares no arithmetic
// with the extended-precision closed forms it checks.
std::function<Cd(const Cd&)> basis_fn(const BasisElement& b, Geometry g, NormKind n) {
    Cd zk = to_cd(b.location), zp = to_cd(b.paired);
    int m = b.order;
    BasisKind kind = b.kind;
    bool interior = g == Geometry::Interior;
    bool normalized = n == NormKind::DirichletInterior;
    return [=](const Cd& z) -> Cd {
        switch (kind) {
            case BasisKind::SimplePole:
            case BasisKind::HigherPole: {
                if (!interior) return 1.0 / cpow(z - zk, m);
                Cd v = 1.0 / cpow(zk - z, m);
                if (normalized) v -= 1.0 / cpow(zk, m);
                return v;
            }
            case BasisKind::LogOrigin: return -std::log(1.0 - zk / z);
            case BasisKind::LogPaired:
                return -std::log(1.0 - zk / z) + std::log(1.0 - zp / z);
            case BasisKind::InverseZ: return 1.0 / z;
            default: return Cd(0);
        }
    };
}

std::function<Cd(const Cd&)> basis_deriv_fn(const BasisElement& b, Geometry g,
                                            NormKind n) {
    (void)n;
    Cd zk = to_cd(b.location), zp = to_cd(b.paired);
    int m = b.order;
    BasisKind kind = b.kind;
    bool interior = g == Geometry::Interior;
    return [=](const Cd& z) -> Cd {
        switch (kind) {
            case BasisKind::SimplePole:
            case BasisKind::HigherPole:
                if (!interior) return -double(m) / cpow(z - zk, m + 1);
                return double(m) / cpow(zk - z, m + 1);
            case BasisKind::LogOrigin: return -zk / (z * (z - zk));
            case BasisKind::LogPaired:
                return -zk / (z * (z - zk)) + zp / (z * (z - zp));
            case BasisKind::InverseZ: return -1.0 / (z * z);
            default: return Cd(0);
        }
    };
}

// Gradient of the real part of an analytic completion: (Re h', -Im h').
std::function<std::array<double, 2>(const Cd&)> real_basis_gradient(
    const BasisElement& b) {
    BasisElement c = b;
    Cd coef(1, 0);
    if (b.kind == BasisKind::RealLog) c.kind = BasisKind::LogOrigin;
    if (b.kind == BasisKind::RealDipoleX) c.kind = BasisKind::SimplePole;
    if (b.kind == BasisKind::RealDipoleY) {
        c.kind = BasisKind::SimplePole;
        coef = Cd(0, -1);
    }
    auto deriv = basis_deriv_fn(c, Geometry::Exterior, NormKind::DirichletExterior);
    return [=](const Cd& z) -> std::array<double, 2> {
        Cd h = coef * deriv(z);
        return {h.real(), -h.imag()};
    };
}

Cd oracle_gram(NormKind norm, Geometry geo, const BasisElement& row,
               const BasisElement& col) {
    switch (norm) {
        case NormKind::SigmaExterior:
        case NormKind::SigmaInterior:
            return oracle::sigma_ip_quadrature<Cd>(basis_fn(row, geo, norm),
                                                   basis_fn(col, geo, norm), 4096);
        case NormKind::DirichletExterior:
        case NormKind::DirichletInterior:
            return oracle::dirichlet_ip_quadrature<Cd>(basis_deriv_fn(row, geo, norm),
                                                       basis_deriv_fn(col, geo, norm),
                                                       geo, 192, 1536);
        case NormKind::EnergyReal:
            return Cd(oracle::energy_ip_quadrature<Cd>(real_basis_gradient(row),
                                                       real_basis_gradient(col), 192,
                                                       1536),
                      0);
    }
    return Cd(0);
}

BasisElement random_pole(Rng& rng, double lo, double hi, int max_order,
                         bool interior = false) {
    BasisElement b;
    double r = rng.uniform(lo, hi);
    double t = rng.uniform(0, 6.283185307179586);
    if (interior) r = 1.0 / r;  // modulus in [1/hi, 1/lo] > 1
    b.location = XComplex(r * std::cos(t), r * std::sin(t));
    b.order = 1 + rng.pick(max_order);
    b.kind = b.order == 1 ? BasisKind::SimplePole : BasisKind::HigherPole;
    return b;
}

struct Combo {
    NormKind norm;
    Geometry geo;
    int row_sel, col_sel;  // 0 pole, 1 higher pole, 2 log, 3 log paired, 4 inverse z,
                           // 5 real log, 6 dipole X, 7 dipole Y
};

BasisElement draw_element(Rng& rng, int sel, bool interior) {
    switch (sel) {
        case 0: return random_pole(rng, 0.15, 0.9, 1, interior);
        case 1: {
            BasisElement b = random_pole(rng, 0.15, 0.65, 1, interior);
            b.order = 2 + rng.pick(3);
            b.kind = BasisKind::HigherPole;
            return b;
        }
        case 2: {
            BasisElement b = random_pole(rng, 0.15, 0.9, 1);
            b.kind = BasisKind::LogOrigin;
            return b;
        }
        case 3: {
            BasisElement b = random_pole(rng, 0.15, 0.9, 1);
            b.kind = BasisKind::LogPaired;
            BasisElement p = random_pole(rng, 0.15, 0.9, 1);
            b.paired = p.location;
            return b;
        }
        case 4: return {BasisKind::InverseZ, XComplex(0)};
        case 5: {
            BasisElement b = random_pole(rng, 0.15, 0.9, 1);
            b.kind = BasisKind::RealLog;
            return b;
        }
        case 6: {
            BasisElement b = random_pole(rng, 0.15, 0.9, 1);
            b.kind = BasisKind::RealDipoleX;
            return b;
        }
        default: {
            BasisElement b = random_pole(rng, 0.15, 0.9, 1);
            b.kind = BasisKind::RealDipoleY;
            return b;
        }
    }
}

} // namespace

CheckResult oracle_equivalence(int n_configs, uint64_t seed) {
    // Rotates through every supported (norm, geometry, row-kind, col-kind)
    // combination with randomized source locations.
    static const Combo combos[] = {
        {NormKind::SigmaExterior, Geometry::Exterior, 0, 0},
        {NormKind::SigmaExterior, Geometry::Exterior, 1, 0},
        {NormKind::SigmaExterior, Geometry::Exterior, 0, 4},
        {NormKind::SigmaExterior, Geometry::Exterior, 1, 1},
        {NormKind::DirichletExterior, Geometry::Exterior, 0, 0},
        {NormKind::DirichletExterior, Geometry::Exterior, 1, 0},
        {NormKind::DirichletExterior, Geometry::Exterior, 1, 1},
        {NormKind::DirichletExterior, Geometry::Exterior, 0, 2},
        {NormKind::DirichletExterior, Geometry::Exterior, 2, 1},
        {NormKind::DirichletExterior, Geometry::Exterior, 2, 2},
        {NormKind::DirichletExterior, Geometry::Exterior, 3, 2},
        {NormKind::DirichletExterior, Geometry::Exterior, 3, 3},
        {NormKind::DirichletExterior, Geometry::Exterior, 3, 0},
        {NormKind::DirichletExterior, Geometry::Exterior, 4, 2},
        {NormKind::DirichletExterior, Geometry::Exterior, 0, 4},
        {NormKind::SigmaInterior, Geometry::Interior, 0, 0},
        {NormKind::SigmaInterior, Geometry::Interior, 1, 0},
        {NormKind::DirichletInterior, Geometry::Interior, 0, 0},
        {NormKind::DirichletInterior, Geometry::Interior, 0, 1},
        {NormKind::DirichletInterior, Geometry::Interior, 1, 1},
        {NormKind::EnergyReal, Geometry::Exterior, 5, 5},
        {NormKind::EnergyReal, Geometry::Exterior, 5, 6},
        {NormKind::EnergyReal, Geometry::Exterior, 6, 7},
        {NormKind::EnergyReal, Geometry::Exterior, 7, 7},
        {NormKind::EnergyReal, Geometry::Exterior, 6, 6},
    };
    Rng rng(seed);
    double worst = 0;
    std::string worst_at = "-";
    int n_combos = int(sizeof(combos) / sizeof(combos[0]));
    for (int i = 0; i < n_configs; ++i) {
        const Combo& c = combos[i % n_combos];
        bool interior = c.geo == Geometry::Interior;
        BasisElement row = draw_element(rng, c.row_sel, interior);
        BasisElement col = draw_element(rng, c.col_sel, interior);
        XComplex closed = gram_entry(c.norm, c.geo, row, col);
        Cd orcv = oracle_gram(c.norm, c.geo, row, col);
        Cd cv = to_cd(closed);
        double rel = std::abs(cv - orcv) / std::max(1.0, std::abs(cv));
        if (rel > worst) {
            worst = rel;
            worst_at = fmt("config %d (norm %s, kinds %d/%d)", i, to_string(c.norm),
                           c.row_sel, c.col_sel);
        }
    }
    return {"kernels.oracle_equivalence", worst <= 1e-10,
            fmt("%d configs, worst rel %.3e at %s", n_configs, worst, worst_at.c_str())};
}

CheckResult hermitian_symmetry(int n_pairs, uint64_t seed) {
    Rng rng(seed);
    double worst = 0;
    int done = 0;
    while (done < n_pairs) {
        int mode = rng.pick(3);
        NormKind nk = mode == 0 ? NormKind::SigmaExterior : NormKind::DirichletExterior;
        BasisElement a, b;
        if (mode == 2) {
            a = draw_element(rng, rng.pick(2) == 0 ? 0 : 2, false);
            b = draw_element(rng, rng.pick(2) == 0 ? 0 : 2, false);
        } else {
            a = draw_element(rng, rng.pick(2), false);
            b = draw_element(rng, rng.pick(2), false);
        }
        XComplex t_ab = gram_entry(nk, Geometry::Exterior, a, b);
        XComplex t_ba = gram_entry(nk, Geometry::Exterior, b, a);
        double rel =
            (abs(t_ab - conj(t_ba)) / max(abs(t_ab), XReal(1e-30))).to_double();
        worst = std::max(worst, rel);
        ++done;
    }
    return {"kernels.hermitian_symmetry", worst <= 1e-28,
            fmt("%d pairs, worst rel asymmetry %.3e", n_pairs, worst)};
}

CheckResult positive_spectra() {
    double worst_min = INFINITY;
    int worst_case = 0;
    for (const cases::CaseSpec& spec : cases::case_table()) {
        FitProblem p;
        p.geometry = Geometry::Exterior;
        p.norm = spec.norm;
        p.basis = ring_sources(XReal::parse(spec.R_B), spec.ring_count, spec.basis_kind);
        if (spec.inverse_z) p.basis.push_back({BasisKind::InverseZ, XComplex(0)});
        p.target = builtin_target(spec.target);
        GramSystem sys = assemble(p);
        // exact hermitian symmetry of the assembled matrix
        for (int i = 0; i < sys.n; ++i)
            for (int j = 0; j < sys.n; ++j) {
                XComplex d = sys.T[i * sys.n + j] - conj(sys.T[j * sys.n + i]);
                if (abs(d).to_double() > 1e-28)
                    return {"kernels.positive_spectra", false,
                            fmt("case %d: assembled matrix not hermitian", spec.number)};
            }
        Spectrum s = jacobi_eigen(sys.realT);
        double lmin = s.eigenvalues.back().to_double();
        if (lmin < worst_min) {
            worst_min = lmin;
            worst_case = spec.number;
        }
    }
    // the planar log-source system as well
    FitProblem planar;
    planar.geometry = Geometry::Exterior;
    planar.norm = NormKind::EnergyReal;
    planar.basis = ring_sources(XReal::parse("0.4"), 16, BasisKind::RealLog);
    planar.target = builtin_target("F_real");
    Spectrum ps = jacobi_eigen(assemble(planar).realT);
    if (ps.eigenvalues.back().to_double() <= 0)
        return {"kernels.positive_spectra", false, "planar system not positive"};
    return {"kernels.positive_spectra", worst_min > 0,
            fmt("all reproduction systems positive; smallest eigenvalue %.3e (case %d)",
                worst_min, worst_case)};
}

CheckResult determinant_identity(uint64_t seed) {
    Rng rng(seed);
    double worst = 0;
    for (int n : {2, 4, 8, 12}) {
        std::vector<BasisElement> basis;
        std::vector<XComplex> sources;
        while (int(basis.size()) < n) {
            BasisElement b = random_pole(rng, 0.15, 0.8, 1);
            basis.push_back(b);
            sources.push_back(b.location);
        }
        std::vector<XComplex> T(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                T[i * n + j] = gram_entry(NormKind::SigmaExterior, Geometry::Exterior,
                                          basis[i], basis[j]);
        std::vector<XComplex> A(n, XComplex(0));
        auto [M, rb] = embed_real(T, n, A);
        (void)rb;
        Spectrum s = jacobi_eigen(M);
        XReal prod(1);
        for (const XReal& lam : s.eigenvalues) prod *= lam;
        XComplex det = cauchy_determinant(sources);
        double rel = ((sqrt(prod) - abs(det)) / abs(det)).to_double();
        worst = std::max(worst, std::fabs(rel));
    }
    return {"kernels.determinant_identity", worst <= 1e-8,
            fmt("N in {2,4,8,12}, worst rel %.3e", worst)};
}

CheckResult replication_identity(uint64_t seed) {
    Rng rng(seed);
    TargetFunction f2 = builtin_target("f2");
    auto feval = [&f2](const Cd& z) { return to_cd(f2.eval(XComplex(z.real(), z.imag()))); };
    double worst = 0;
    for (int i = 0; i < 8; ++i) {
        BasisElement b = random_pole(rng, 0.15, 0.85, 1);
        Cd lhs = oracle::sigma_ip_quadrature<Cd>(
            feval, basis_fn(b, Geometry::Exterior, NormKind::SigmaExterior), 4096);
        InvolutionPoint ip = involution(b.location);
        Cd rhs = to_cd(ip.p * conj(f2.eval(ip.p_conj)));
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    return {"kernels.replication_identity", worst <= 1e-10,
            fmt("8 sources, worst rel %.3e", worst)};
}

CheckResult eigen_pairing(uint64_t seed) {
    Rng rng(seed);
    double worst = 0;
    for (int trial = 0; trial < 3; ++trial) {
        int n = 6;
        std::vector<BasisElement> basis;
        while (int(basis.size()) < n) basis.push_back(random_pole(rng, 0.2, 0.7, 1));
        std::vector<XComplex> T(n * n);
        std::vector<XComplex> A(n, XComplex(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                T[i * n + j] = gram_entry(NormKind::DirichletExterior, Geometry::Exterior,
                                          basis[i], basis[j]);
        auto [M, rb] = embed_real(T, n, A);
        (void)rb;
        Spectrum s = jacobi_eigen(M);
        for (int k = 0; k < n; ++k) {
            double rel = (abs(s.eigenvalues[2 * k] - s.eigenvalues[2 * k + 1]) /
                          abs(s.eigenvalues[2 * k]))
                             .to_double();
            worst = std::max(worst, rel);
        }
    }
    return {"linalg.eigen_pairing", worst <= 1e-20,
            fmt("3 embedded spectra, worst pair split %.3e", worst)};
}

CheckResult embedding_determinant_cross(uint64_t seed) {
    Rng rng(seed ^ 0xabcdULL);
    // sqrt(prod eigenvalues(realT)) equals |det T| via the closed-form route
    std::vector<BasisElement> basis;
    std::vector<XComplex> sources;
    while (int(basis.size()) < 10) {
        BasisElement b = random_pole(rng, 0.2, 0.75, 1);
        basis.push_back(b);
        sources.push_back(b.location);
    }
    int n = 10;
    std::vector<XComplex> T(n * n);
    std::vector<XComplex> A(n, XComplex(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            T[i * n + j] = gram_entry(NormKind::SigmaExterior, Geometry::Exterior,
                                      basis[i], basis[j]);
    auto [M, rb] = embed_real(T, n, A);
    (void)rb;
    Spectrum s = jacobi_eigen(M);
    XReal prod(1);
    for (const XReal& lam : s.eigenvalues) prod *= lam;
    double rel =
        ((sqrt(prod) - abs(cauchy_determinant(sources))) / sqrt(prod)).to_double();
    return {"linalg.embedding_determinant_cross", std::fabs(rel) <= 1e-8,
            fmt("rel %.3e", rel)};
}

CheckResult solve_residual_bound() {
    // reproduction-scale system: ||T mu - A||_inf <= 1e-18 ||A||_inf
    FitProblem p;
    p.geometry = Geometry::Exterior;
    p.norm = NormKind::DirichletExterior;
    p.basis = ring_sources(XReal::parse("0.5"), 16, BasisKind::SimplePole);
    p.target = builtin_target("f1");
    GramSystem sys = assemble(p);
    FitResult r = fit(p);
    XReal worst(0), scale(0);
    for (int i = 0; i < sys.n; ++i) {
        XComplex acc(0);
        for (int j = 0; j < sys.n; ++j) acc += sys.T[i * sys.n + j] * r.mu[j];
        worst = max(worst, abs(acc - sys.A[i]));
        scale = max(scale, abs(sys.A[i]));
    }
    double rel = (worst / scale).to_double();
    return {"linalg.solve_residual", rel <= 1e-18, fmt("rel residual %.3e", rel)};
}

CheckResult collocation_bound() {
    double worst = 0;
    int worst_case = 0;
    for (const cases::CaseSpec& spec : cases::case_table()) {
        if (cases::reference_row(spec.number).cond > 1e10) continue;
        cases::CaseResult r = cases::run_case(spec, 8);  // rings not needed here
        double rel = r.collocation_worst / r.collocation_scale;
        if (rel > worst) {
            worst = rel;
            worst_case = spec.number;
        }
    }
    return {"fitter.collocation_bound", worst <= 1e-15,
            fmt("cond<=1e10 cases, worst residual/scale %.3e (case %d)", worst,
                worst_case)};
}

CheckResult dipole_pair_equivalence() {
    TargetFunction g = builtin_target("F_real");
    auto ring = ring_sources(XReal::parse("0.5"), 5, BasisKind::SimplePole);
    FitProblem cp;
    cp.geometry = Geometry::Exterior;
    cp.norm = NormKind::DirichletExterior;
    cp.basis = ring;
    cp.target = g;
    FitResult cr = fit(cp);
    FitProblem rp;
    rp.geometry = Geometry::Exterior;
    rp.norm = NormKind::EnergyReal;
    rp.target = g;
    for (const BasisElement& b : ring) {
        rp.basis.push_back({BasisKind::RealDipoleX, b.location});
        rp.basis.push_back({BasisKind::RealDipoleY, b.location});
    }
    FitResult rr = fit(rp);
    double worst = 0;
    for (size_t k = 0; k < ring.size(); ++k) {
        XComplex recombined(rr.mu[2 * k].re, -rr.mu[2 * k + 1].re);
        double rel = (abs(recombined - cr.mu[k]) / max(abs(cr.mu[k]), XReal(1e-30)))
                         .to_double();
        worst = std::max(worst, rel);
    }
    return {"fitter.dipole_pair_equivalence", worst <= 1e-10,
            fmt("5 dipole pairs, worst rel %.3e", worst)};
}

CheckResult wirtinger_identity(int n_points, uint64_t seed) {
    Rng rng(seed);
    std::vector<Cd> pts;
    for (int i = 0; i < n_points; ++i) {
        double r = rng.uniform(1.05, 2.2);
        double t = rng.uniform(0, 6.283185307179586);
        pts.push_back(std::polar(r, t));
    }
    std::function<Cd(const Cd&)> analytic = [](const Cd& z) { return 1.0 / z; };
    std::function<Cd(const Cd&)> anti = [](const Cd& z) { return std::conj(z); };
    std::function<Cd(const Cd&)> mixed = [](const Cd& z) {
        return z + std::conj(z) * std::conj(z);
    };
    double d1 = oracle::wirtinger_identity_check<Cd>(analytic, pts, 1e-5);
    double d2 = oracle::wirtinger_identity_check<Cd>(anti, pts, 1e-5);
    double d3 = oracle::wirtinger_identity_check<Cd>(mixed, pts, 1e-5);
    double worst = std::max({d1, d2, d3});
    return {"oracle.wirtinger_identity", worst <= 1e-8,
            fmt("%d points; analytic %.2e anti %.2e mixed %.2e", n_points, d1, d2, d3)};
}

CheckResult derivative_area_dual_route(uint64_t seed) {
    Rng rng(seed ^ 0x77ULL);
    double worst = 0;
    for (int trial = 0; trial < 4; ++trial) {
        BasisElement a = random_pole(rng, 0.2, 0.7, 1);
        BasisElement b = random_pole(rng, 0.2, 0.7, 1);
        if (trial % 2 == 1) {
            a.kind = BasisKind::LogOrigin;
            b.kind = BasisKind::LogOrigin;
        }
        auto fz = basis_deriv_fn(a, Geometry::Exterior, NormKind::DirichletExterior);
        auto gz = basis_deriv_fn(b, Geometry::Exterior, NormKind::DirichletExterior);
        // distinct grids per route so agreement reflects the integrals, not
        // mirrored floating-point products
        Cd area = oracle::bergman_ip_quadrature<Cd>(fz, gz, Geometry::Exterior, 192, 1280);
        Cd lhs = std::conj(area) / (2 * M_PI);
        Cd rhs = oracle::dirichlet_ip_quadrature<Cd>(fz, gz, Geometry::Exterior, 160, 1024);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return {"oracle.derivative_area_dual_route", worst <= 1e-8,
            fmt("4 pairs, worst abs deviation %.3e", worst)};
}

std::vector<CheckResult> run_suite(const std::string& which) {
    std::vector<CheckResult> out;
    bool all = which == "all";
    if (which == "kernels" || all) {
        out.push_back(hermitian_symmetry(200));
        out.push_back(oracle_equivalence(60));
        out.push_back(positive_spectra());
        out.push_back(determinant_identity());
        out.push_back(replication_identity());
    }
    if (which == "linalg" || all) {
        out.push_back(eigen_pairing());
        out.push_back(embedding_determinant_cross());
        out.push_back(solve_residual_bound());
        out.push_back(collocation_bound());
        out.push_back(dipole_pair_equivalence());
    }
    if (which == "appendixB" || all) {
        out.push_back(wirtinger_identity(100));
        out.push_back(derivative_area_dual_route());
    }
    if (out.empty()) throw ContractError("unknown verification suite: " + which);
    return out;
}

} // namespace diskfit::verify
