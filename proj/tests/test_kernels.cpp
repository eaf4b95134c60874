#include "diskfit/kernels.hpp"

#include "diskfit/errors.hpp"
#include "diskfit/linalg.hpp"
#include "diskfit/oracle.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace diskfit;
using testutil::Cd;
using testutil::Rng;
namespace orc = diskfit::oracle;

namespace {

BasisElement pole(double re, double im, int order = 1) {
    BasisElement b;
    b.kind = order == 1 ? BasisKind::SimplePole : BasisKind::HigherPole;
    b.location = XComplex(re, im);
    b.order = order;
    return b;
}

BasisElement log_origin(double re, double im) {
    return {BasisKind::LogOrigin, XComplex(re, im)};
}

double mag(const XComplex& z) { return abs(z).to_double(); }

// Quadrature route for a Gram entry (B_row, B_col) under the given norm.
Cd oracle_gram(NormKind norm, Geometry geo, const BasisElement& row,
               const BasisElement& col, int n_r = 192, int n_theta = 2048) {
    switch (norm) {
        case NormKind::SigmaExterior:
        case NormKind::SigmaInterior:
            return orc::sigma_ip_quadrature<Cd>(testutil::basis_fn(row, geo, norm),
                                                testutil::basis_fn(col, geo, norm), 4096);
        case NormKind::DirichletExterior:
        case NormKind::DirichletInterior:
            return orc::dirichlet_ip_quadrature<Cd>(
                testutil::basis_deriv_fn(row, geo, norm),
                testutil::basis_deriv_fn(col, geo, norm), geo, n_r, n_theta);
        case NormKind::EnergyReal: {
            auto grad_of = [geo](const BasisElement& b) {
                return [b, geo](const Cd& z) -> std::array<double, 2> {
                    // grad Re{h} = (Re h', -Im h') for the analytic completion h.
                    BasisElement c = b;
                    Cd coef(1, 0);
                    if (b.kind == BasisKind::RealLog) c.kind = BasisKind::LogOrigin;
                    if (b.kind == BasisKind::RealDipoleX) c.kind = BasisKind::SimplePole;
                    if (b.kind == BasisKind::RealDipoleY) {
                        c.kind = BasisKind::SimplePole;
                        coef = Cd(0, -1);
                    }
                    Cd h = coef * testutil::basis_deriv_fn(
                                      c, geo, NormKind::DirichletExterior)(z);
                    return {h.real(), -h.imag()};
                };
            };
            double v = orc::energy_ip_quadrature<Cd>(grad_of(row), grad_of(col), n_r,
                                                     n_theta);
            return Cd(v, 0);
        }
    }
    return Cd(0);
}

void check_close(const XComplex& closed, const Cd& oracle_v, double tol = 1e-10) {
    Cd c = testutil::to_cd(closed);
    double scale = std::max(1.0, std::abs(c));
    CHECK(std::abs(c - oracle_v) <= tol * scale);
}

} // namespace

TEST_SUITE("kernels") {

TEST_CASE("involution points") {
    InvolutionPoint ip = involution(XComplex(0.25, 0.4));
    XComplex back = recip(ip.p);
    CHECK(mag(back - XComplex(0.25, 0.4)) < 1e-28);
    CHECK(ip.p_conj == conj(ip.p));
    CHECK(abs(ip.p_conj) > XReal(1));  // exterior source maps outside
    InvolutionPoint ii = involution(XComplex(2.0, -1.0));
    CHECK(abs(ii.p_conj) < XReal(1));  // interior source maps inside
    CHECK_THROWS_AS(involution(XComplex(0)), DomainError);
}

TEST_CASE("sigma gram diagonal and oracle agreement") {
    BasisElement b = pole(0.6, 0);
    XComplex t = gram_entry(NormKind::SigmaExterior, Geometry::Exterior, b, b);
    CHECK(t.re.to_double() == doctest::Approx(1.5625).epsilon(1e-15));
    CHECK(t.im.to_double() == doctest::Approx(0.0));
    check_close(t, oracle_gram(NormKind::SigmaExterior, Geometry::Exterior, b, b));
}

TEST_CASE("dirichlet gram diagonal") {
    BasisElement b = pole(0.6, 0);
    XComplex t = gram_entry(NormKind::DirichletExterior, Geometry::Exterior, b, b);
    CHECK(t.re.to_double() == doctest::Approx(1.220703125).epsilon(1e-15));
    check_close(t, oracle_gram(NormKind::DirichletExterior, Geometry::Exterior, b, b));
}

TEST_CASE("dirichlet log-origin diagonal") {
    BasisElement b = log_origin(0.6, 0);
    XComplex t = gram_entry(NormKind::DirichletExterior, Geometry::Exterior, b, b);
    CHECK(t.re.to_double() == doctest::Approx(0.22314355131420976).epsilon(1e-15));
    check_close(t, oracle_gram(NormKind::DirichletExterior, Geometry::Exterior, b, b));
}

TEST_CASE("inverse-z rows") {
    BasisElement iz{BasisKind::InverseZ, XComplex(0)};
    BasisElement p5 = pole(0.5, 0);
    CHECK(gram_entry(NormKind::SigmaExterior, Geometry::Exterior, iz, iz) == XComplex(1));
    CHECK(gram_entry(NormKind::SigmaExterior, Geometry::Exterior, iz, p5) == XComplex(1));
    CHECK(gram_entry(NormKind::SigmaExterior, Geometry::Exterior, p5, iz) == XComplex(1));
    CHECK(gram_entry(NormKind::DirichletExterior, Geometry::Exterior, iz, iz) ==
          XComplex(0.5));
    CHECK(gram_entry(NormKind::DirichletExterior, Geometry::Exterior, p5, iz) ==
          XComplex(0.5));
    // against the log basis the cross entry picks up the log's 1/z coefficient
    BasisElement lg = log_origin(0.3, 0.2);
    XComplex cross = gram_entry(NormKind::DirichletExterior, Geometry::Exterior, iz, lg);
    CHECK(mag(cross - XComplex(0.15, 0.1)) < 1e-30);
}

TEST_CASE("moment spot values for f = 1/z") {
    TargetFunction f = testutil::inverse_target();
    BasisElement b = pole(0.5, 0);
    XComplex a_sigma = moment_entry(NormKind::SigmaExterior, Geometry::Exterior, b, f);
    CHECK(a_sigma.re.to_double() == doctest::Approx(1.0).epsilon(1e-15));
    XComplex a_dir = moment_entry(NormKind::DirichletExterior, Geometry::Exterior, b, f);
    CHECK(a_dir.re.to_double() == doctest::Approx(0.5).epsilon(1e-15));
    BasisElement lg = log_origin(0.5, 0);
    XComplex a_log = moment_entry(NormKind::DirichletExterior, Geometry::Exterior, lg, f);
    CHECK(a_log.re.to_double() == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("moments agree with quadrature for a builtin target") {
    TargetFunction f2 = builtin_target("f2");
    Rng rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        BasisElement b = pole(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6));
        if (mag(b.location) < 0.05) continue;
        XComplex a = moment_entry(NormKind::SigmaExterior, Geometry::Exterior, b, f2);
        Cd q = orc::sigma_ip_quadrature<Cd>(
            testutil::basis_fn(b, Geometry::Exterior, NormKind::SigmaExterior),
            testutil::eval_fn(f2), 4096);
        check_close(a, q);

        XComplex ad = moment_entry(NormKind::DirichletExterior, Geometry::Exterior, b, f2);
        Cd qd = orc::dirichlet_ip_quadrature<Cd>(
            testutil::basis_deriv_fn(b, Geometry::Exterior, NormKind::DirichletExterior),
            testutil::deriv_fn(f2), Geometry::Exterior, 192, 2048);
        check_close(ad, qd);
    }
}

TEST_CASE("higher-pole entries match quadrature") {
    Rng rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        BasisElement a = pole(rng.uniform(-0.55, 0.55), rng.uniform(-0.55, 0.55),
                              2 + rng.pick(3));
        BasisElement b = pole(rng.uniform(-0.55, 0.55), rng.uniform(-0.55, 0.55),
                              1 + rng.pick(4));
        if (mag(a.location) < 0.1 || mag(b.location) < 0.1) continue;
        for (NormKind nk : {NormKind::SigmaExterior, NormKind::DirichletExterior}) {
            XComplex t = gram_entry(nk, Geometry::Exterior, a, b);
            check_close(t, oracle_gram(nk, Geometry::Exterior, a, b), 2e-10);
        }
    }
    // interior variants, sources outside the disk
    for (int trial = 0; trial < 4; ++trial) {
        BasisElement a = pole(rng.uniform(1.3, 2.5), rng.uniform(-1.5, 1.5),
                              1 + rng.pick(3));
        BasisElement b = pole(rng.uniform(1.3, 2.5), rng.uniform(-1.5, 1.5),
                              1 + rng.pick(3));
        for (NormKind nk : {NormKind::SigmaInterior, NormKind::DirichletInterior}) {
            XComplex t = gram_entry(nk, Geometry::Interior, a, b);
            check_close(t, oracle_gram(nk, Geometry::Interior, a, b), 2e-10);
        }
    }
}

TEST_CASE("higher-pole moments match quadrature") {
    TargetFunction f2 = builtin_target("f2");
    BasisElement b = pole(0.35, -0.28, 3);
    XComplex a = moment_entry(NormKind::SigmaExterior, Geometry::Exterior, b, f2);
    Cd q = orc::sigma_ip_quadrature<Cd>(
        testutil::basis_fn(b, Geometry::Exterior, NormKind::SigmaExterior),
        testutil::eval_fn(f2), 8192);
    check_close(a, q);
    XComplex ad = moment_entry(NormKind::DirichletExterior, Geometry::Exterior, b, f2);
    Cd qd = orc::dirichlet_ip_quadrature<Cd>(
        testutil::basis_deriv_fn(b, Geometry::Exterior, NormKind::DirichletExterior),
        testutil::deriv_fn(f2), Geometry::Exterior, 256, 4096);
    check_close(ad, qd, 1e-9);
}

TEST_CASE("order-5 poles, the jet ceiling") {
    BasisElement top = pole(0.22, -0.17, 5);
    BasisElement unit = pole(-0.31, 0.12);
    for (NormKind nk : {NormKind::SigmaExterior, NormKind::DirichletExterior}) {
        XComplex t = gram_entry(nk, Geometry::Exterior, top, unit);
        check_close(t, oracle_gram(nk, Geometry::Exterior, top, unit));
        XComplex d = gram_entry(nk, Geometry::Exterior, top, top);
        check_close(d, oracle_gram(nk, Geometry::Exterior, top, top, 256, 4096), 1e-9);
    }
    BasisElement over = pole(0.22, -0.17, 6);
    CHECK_THROWS_AS(gram_entry(NormKind::SigmaExterior, Geometry::Exterior, over, unit),
                    ContractError);
}

TEST_CASE("interior moments match quadrature") {
    // sigma: F = 1/(3 - z); dirichlet: F = z/(3 - z), vanishing at the origin
    TargetFunction Fs;
    Fs.label = "interior rational";
    Fs.eval = [](const XComplex& z) { return recip(XComplex(3) - z); };
    Fs.deriv = [](const XComplex& z) {
        XComplex d = recip(XComplex(3) - z);
        return d * d;
    };
    Fs.jet = [](const XComplex& z, int order) {
        return XComplex(1) / (XComplex(3) - CJet::variable(z, order));
    };
    TargetFunction Fd;
    Fd.label = "interior rational, no constant";
    Fd.eval = [](const XComplex& z) { return z / (XComplex(3) - z); };
    Fd.deriv = [](const XComplex& z) {
        XComplex d = recip(XComplex(3) - z);
        return XComplex(3) * d * d;
    };
    Fd.jet = [](const XComplex& z, int order) {
        CJet zj = CJet::variable(z, order);
        return zj / (XComplex(3) - zj);
    };
    auto fs_eval = [&Fs](const Cd& z) {
        return testutil::to_cd(Fs.eval(testutil::to_xc(z)));
    };
    auto fd_deriv = [&Fd](const Cd& z) {
        return testutil::to_cd(Fd.deriv(testutil::to_xc(z)));
    };
    Rng rng(67);
    for (int trial = 0; trial < 4; ++trial) {
        BasisElement b = pole(rng.uniform(1.4, 2.4), rng.uniform(-1.0, 1.0),
                              1 + rng.pick(2));
        XComplex a_sigma = moment_entry(NormKind::SigmaInterior, Geometry::Interior, b, Fs);
        Cd q_sigma = orc::sigma_ip_quadrature<Cd>(
            testutil::basis_fn(b, Geometry::Interior, NormKind::SigmaInterior), fs_eval,
            4096);
        check_close(a_sigma, q_sigma);

        XComplex a_dir =
            moment_entry(NormKind::DirichletInterior, Geometry::Interior, b, Fd);
        Cd q_dir = orc::dirichlet_ip_quadrature<Cd>(
            testutil::basis_deriv_fn(b, Geometry::Interior, NormKind::DirichletInterior),
            fd_deriv, Geometry::Interior, 160, 1024);
        check_close(a_dir, q_dir);
    }
}

TEST_CASE("log-paired entries are four-log combinations") {
    BasisElement xi{BasisKind::LogPaired, XComplex(0.5, 0.1)};
    xi.paired = XComplex(-0.2, 0.3);
    BasisElement xj{BasisKind::LogPaired, XComplex(-0.4, -0.2)};
    xj.paired = XComplex(0.1, -0.5);
    XComplex t = gram_entry(NormKind::DirichletExterior, Geometry::Exterior, xi, xj);
    check_close(t, oracle_gram(NormKind::DirichletExterior, Geometry::Exterior, xi, xj));
    // and against a pole on the other side
    BasisElement p = pole(0.3, 0.45);
    XComplex tp = gram_entry(NormKind::DirichletExterior, Geometry::Exterior, xi, p);
    check_close(tp, oracle_gram(NormKind::DirichletExterior, Geometry::Exterior, xi, p));
}

TEST_CASE("energy entries match gradient quadrature") {
    BasisElement lg{BasisKind::RealLog, XComplex(0.4, 0.15)};
    BasisElement lh{BasisKind::RealLog, XComplex(-0.3, 0.33)};
    BasisElement dx{BasisKind::RealDipoleX, XComplex(0.25, -0.4)};
    BasisElement dy{BasisKind::RealDipoleY, XComplex(0.25, -0.4)};
    for (const auto* a : {&lg, &lh, &dx, &dy})
        for (const auto* b : {&lg, &lh, &dx, &dy}) {
            XComplex t = gram_entry(NormKind::EnergyReal, Geometry::Exterior, *a, *b);
            CHECK(t.im.to_double() == 0.0);
            check_close(t, oracle_gram(NormKind::EnergyReal, Geometry::Exterior, *a, *b));
        }
}

TEST_CASE("energy moments match gradient quadrature") {
    TargetFunction F = builtin_target("F_real");
    auto grad_target = [&F](const Cd& z) -> std::array<double, 2> {
        Cd h = testutil::deriv_fn(F)(z);
        return {h.real(), -h.imag()};
    };
    BasisElement lg{BasisKind::RealLog, XComplex(0.4, 0.15)};
    BasisElement dx{BasisKind::RealDipoleX, XComplex(0.25, -0.4)};
    BasisElement dy{BasisKind::RealDipoleY, XComplex(0.25, -0.4)};
    for (const BasisElement& b : {lg, dx, dy}) {
        XComplex a = moment_entry(NormKind::EnergyReal, Geometry::Exterior, b, F);
        auto wrapped = oracle_gram(NormKind::EnergyReal, Geometry::Exterior, b, b);
        (void)wrapped;
        auto grad_b = [&b](const Cd& z) -> std::array<double, 2> {
            BasisElement c = b;
            Cd coef(1, 0);
            if (b.kind == BasisKind::RealLog) c.kind = BasisKind::LogOrigin;
            if (b.kind == BasisKind::RealDipoleX) c.kind = BasisKind::SimplePole;
            if (b.kind == BasisKind::RealDipoleY) {
                c.kind = BasisKind::SimplePole;
                coef = Cd(0, -1);
            }
            Cd h = coef * testutil::basis_deriv_fn(c, Geometry::Exterior,
                                                   NormKind::DirichletExterior)(z);
            return {h.real(), -h.imag()};
        };
        double q = orc::energy_ip_quadrature<Cd>(grad_b, grad_target, 192, 2048);
        check_close(a, Cd(q, 0));
    }
}

TEST_CASE("hermitian symmetry of gram entries") {
    Rng rng(23);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 200; ++trial) {
        NormKind nk = trial % 2 == 0 ? NormKind::SigmaExterior
                                     : NormKind::DirichletExterior;
        BasisElement a, b;
        int kind_draw = rng.pick(nk == NormKind::DirichletExterior ? 3 : 2);
        auto draw = [&](int sel) -> BasisElement {
            double re = rng.uniform(-0.65, 0.65), im = rng.uniform(-0.65, 0.65);
            if (sel == 0) return pole(re, im, 1 + rng.pick(4));
            if (sel == 1 && nk == NormKind::DirichletExterior) return log_origin(re, im);
            return pole(re, im);
        };
        a = draw(kind_draw);
        b = draw(rng.pick(nk == NormKind::DirichletExterior ? 2 : 1));
        if (mag(a.location) < 0.05 || mag(b.location) < 0.05) continue;
        XComplex t_ab = gram_entry(nk, Geometry::Exterior, a, b);
        XComplex t_ba = gram_entry(nk, Geometry::Exterior, b, a);
        XReal scale = max(abs(t_ab), XReal(1));
        CHECK((abs(t_ab - conj(t_ba)) / scale).to_double() < 1e-28);
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("replication identity via quadrature") {
    // (f, (z - z_k)^-1)_sigma = p_k conj(f(p_k^*))
    TargetFunction f2 = builtin_target("f2");
    Rng rng(31);
    for (int trial = 0; trial < 6; ++trial) {
        XComplex zk(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6));
        if (abs(zk) < XReal(0.05)) continue;
        BasisElement b;
        b.location = zk;
        Cd lhs = orc::sigma_ip_quadrature<Cd>(
            testutil::eval_fn(f2),
            testutil::basis_fn(b, Geometry::Exterior, NormKind::SigmaExterior), 4096);
        InvolutionPoint ip = involution(zk);
        XComplex rhs = ip.p * conj(f2.eval(ip.p_conj));
        check_close(rhs, lhs);
    }
}

TEST_CASE("gram matrices are positive definite") {
    Rng rng(41);
    for (NormKind nk : {NormKind::SigmaExterior, NormKind::DirichletExterior}) {
        int n = 16;
        std::vector<BasisElement> basis;
        while (int(basis.size()) < n) {
            BasisElement b = pole(rng.uniform(-0.85, 0.85), rng.uniform(-0.85, 0.85));
            if (mag(b.location) < 0.05 || mag(b.location) > 0.9) continue;
            basis.push_back(b);
        }
        std::vector<XComplex> T(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                T[i * n + j] = gram_entry(nk, Geometry::Exterior, basis[i], basis[j]);
        std::vector<XComplex> A(n, XComplex(0));
        auto [M, rb] = embed_real(T, n, A);
        (void)rb;
        Spectrum s = jacobi_eigen(M);
        CHECK(s.eigenvalues.back() > XReal(0));
    }
}

TEST_CASE("determinant identity against the eigenvalue product") {
    Rng rng(53);
    for (int n : {1, 2, 6, 12}) {
        std::vector<BasisElement> basis;
        std::vector<XComplex> sources;
        while (int(basis.size()) < n) {
            BasisElement b = pole(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7));
            if (mag(b.location) < 0.1) continue;
            basis.push_back(b);
            sources.push_back(b.location);
        }
        std::vector<XComplex> T(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                T[i * n + j] = gram_entry(NormKind::SigmaExterior, Geometry::Exterior,
                                          basis[i], basis[j]);
        XComplex det = cauchy_determinant(sources);
        CHECK(abs(det.im).to_double() < 1e-20 * abs(det).to_double() + 1e-300);

        std::vector<XComplex> A(n, XComplex(0));
        auto [M, rb] = embed_real(T, n, A);
        (void)rb;
        Spectrum s = jacobi_eigen(M);
        XReal prod(1);
        for (const XReal& lam : s.eigenvalues) prod *= lam;
        XReal eigen_route = sqrt(prod);
        CHECK((abs(eigen_route - abs(det)) / abs(det)).to_double() < 1e-8);
    }
    SUBCASE("one-source determinant equals the single gram entry") {
        XComplex det = cauchy_determinant({XComplex(0.5, 0)});
        CHECK(det.re.to_double() == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    }
    SUBCASE("two-source determinant equals the cofactor expansion") {
        std::vector<XComplex> zs{XComplex(0.5, 0), XComplex(-0.5, 0)};
        BasisElement b0 = pole(0.5, 0), b1 = pole(-0.5, 0);
        auto t = [&](const BasisElement& r, const BasisElement& c) {
            return gram_entry(NormKind::SigmaExterior, Geometry::Exterior, r, c);
        };
        XComplex direct = t(b0, b0) * t(b1, b1) - t(b0, b1) * t(b1, b0);
        XComplex det = cauchy_determinant(zs);
        CHECK(mag(det - direct) < 1e-28);
    }
    CHECK_THROWS_AS(cauchy_determinant({XComplex(0.5, 0), XComplex(0.5, 0)}),
                    DomainError);
    CHECK_THROWS_AS(cauchy_determinant({XComplex(0)}), DomainError);
}

TEST_CASE("jet-differentiated entries match finite differences") {
    // order-(m+1) entries are the m-th Taylor coefficient in the source
    // location; compare them against central differences of the order-1
    // closed form with step 1e-8
    XReal h(1e-8);
    for (NormKind nk : {NormKind::SigmaExterior, NormKind::DirichletExterior}) {
        BasisElement row = pole(0.31, -0.44);
        BasisElement col2 = pole(0.52, 0.18, 2);
        XComplex jet_route = gram_entry(nk, Geometry::Exterior, row, col2);

        auto order1 = [&](const XComplex& c) {
            BasisElement col = pole(0, 0);
            col.location = c;
            return gram_entry(nk, Geometry::Exterior, row, col);
        };
        XComplex base = col2.location;
        // complex derivative via two real-direction differences
        XComplex dx = (order1(base + XComplex(h, XReal(0))) -
                       order1(base - XComplex(h, XReal(0)))) /
                      XComplex(XReal(2) * h);
        CHECK((abs(jet_route - dx) / abs(jet_route)).to_double() < 1e-6);

        // moments as well: order-2 moment of f2 versus differencing order 1
        TargetFunction f2 = builtin_target("f2");
        XComplex m2 = moment_entry(nk, Geometry::Exterior, col2, f2);
        auto m1 = [&](const XComplex& c) {
            BasisElement b = pole(0, 0);
            b.location = c;
            return moment_entry(nk, Geometry::Exterior, b, f2);
        };
        // moments differentiate in s = conj(z_k); a real-axis step in z_k is
        // the same real step in s
        XComplex md = (m1(base + XComplex(h, XReal(0))) -
                       m1(base - XComplex(h, XReal(0)))) /
                      XComplex(XReal(2) * h);
        CHECK((abs(m2 - md) / abs(m2)).to_double() < 1e-6);
    }
}

TEST_CASE("incompatible norm/basis combinations are rejected") {
    BasisElement lg = log_origin(0.5, 0);
    BasisElement p = pole(0.5, 0.2);
    CHECK_THROWS_AS(gram_entry(NormKind::SigmaExterior, Geometry::Exterior, lg, lg),
                    ContractError);
    CHECK_THROWS_AS(gram_entry(NormKind::SigmaInterior, Geometry::Interior, lg, lg),
                    ContractError);
    CHECK_THROWS_AS(gram_entry(NormKind::EnergyReal, Geometry::Exterior, p, p),
                    ContractError);
    TargetFunction f = testutil::inverse_target();
    f.residue_at_infinity.reset();
    BasisElement iz{BasisKind::InverseZ, XComplex(0)};
    CHECK_THROWS_AS(moment_entry(NormKind::SigmaExterior, Geometry::Exterior, iz, f),
                    ConfigError);
}

} // TEST_SUITE
