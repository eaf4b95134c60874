#include "diskfit/jet.hpp"
#include "diskfit/xcomplex.hpp"
#include "diskfit/xreal.hpp"

#include <doctest.h>

#include <cstdint>

using namespace diskfit;

namespace {

// Deterministic xorshift generator so random-input tests are identical on
// every platform and run.
struct Rng {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (double(next() >> 11) / 9007199254740992.0);
    }
};

double rel_err(XReal got, XReal want) {
    if (want == XReal(0)) return abs(got).to_double();
    return (abs(got - want) / abs(want)).to_double();
}

} // namespace

TEST_SUITE("scalars") {

TEST_CASE("xreal add/mul round-trip keeps 28+ digits") {
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        XReal a(rng.uniform(-10, 10));
        XReal b(rng.uniform(-10, 10));
        XReal back = (a + b) - b;
        CHECK(rel_err(back, a) < 1e-28);
        if (b != XReal(0)) {
            XReal back2 = (a * b) / b;
            CHECK(rel_err(back2, a) < 1e-28);
        }
    }
}

TEST_CASE("xreal arithmetic is deterministic") {
    XReal x(0);
    for (int n = 1; n <= 1000; ++n) x += XReal(1) / XReal(n);
    XReal y(0);
    for (int n = 1; n <= 1000; ++n) y += XReal(1) / XReal(n);
    CHECK(x == y);
}

TEST_CASE("sum of 1/n^2 over 10^4 terms matches the analytic tail to 25+ digits") {
    XReal sum(0);
    for (int n = 1; n <= 10000; ++n) sum += XReal(1) / (XReal(n) * XReal(n));

    // pi^2/6 minus the Euler-Maclaurin tail sum_{n>N} 1/n^2
    //   = 1/N - 1/(2N^2) + 1/(6N^3) - 1/(30N^5) + 1/(42N^7) - ...
    XReal pi2_6 =
        XReal::parse("1.644934066848226436472415166646025189218949901206798437735558229");
    XReal N(10000);
    XReal tail = XReal(1) / N - XReal(1) / (XReal(2) * N * N) +
                 XReal(1) / (XReal(6) * N * N * N) -
                 XReal(1) / (XReal(30) * pow_int(N, 5)) +
                 XReal(1) / (XReal(42) * pow_int(N, 7));
    XReal reference = pi2_6 - tail;
    CHECK(rel_err(sum, reference) < 1e-25);
}

TEST_CASE("xreal parse/str round trip") {
    XReal x = XReal::parse("0.1044048714876914949");
    CHECK(x.str(19).substr(0, 5) == "1.044");
    CHECK(x.to_double() == doctest::Approx(0.1044048714876914949));
}

TEST_CASE("xcomplex conjugation and modulus") {
    XComplex z(3.0, -4.0);
    CHECK(conj(conj(z)) == z);
    CHECK(norm(z) == XReal(25));
    CHECK(abs(z) == XReal(5));
    XComplex q = z / XComplex(0.5, 0.25);
    XComplex back = q * XComplex(0.5, 0.25);
    CHECK(rel_err(abs(back - z), XReal(0)) < 1e-30);
}

TEST_CASE("complex principal log") {
    // ln(1) = 0
    XComplex l1 = complex_ln_principal(XComplex(1));
    CHECK(abs(l1).to_double() == doctest::Approx(0.0));
    // ln(-1) = i pi (branch convention: arg in (-pi, pi])
    XComplex lm1 = complex_ln_principal(XComplex(-1));
    CHECK(lm1.re.to_double() == doctest::Approx(0.0));
    CHECK(lm1.im.to_double() == doctest::Approx(3.14159265358979).epsilon(1e-12));
    // ln(1+i), high-precision reference
    XComplex l1i = complex_ln_principal(XComplex(1, 1));
    CHECK(rel_err(l1i.re, XReal::parse("0.34657359027997265470861606072909")) < 1e-30);
    CHECK(rel_err(l1i.im, XReal::parse("0.78539816339744830961566084581988")) < 1e-30);
    CHECK_THROWS_AS(complex_ln_principal(XComplex(0)), DomainError);
}

TEST_CASE("order-0 jets behave like scalars") {
    CJet a(XComplex(2, 1), 0);
    CJet b(XComplex(-1, 3), 0);
    CHECK((a * b).value() == XComplex(2, 1) * XComplex(-1, 3));
    CHECK((a / b).value() == XComplex(2, 1) / XComplex(-1, 3));
}

TEST_CASE("jet product satisfies the Leibniz rule coefficientwise") {
    Rng rng;
    for (int trial = 0; trial < 20; ++trial) {
        CJet f(XComplex(0), 4), g(XComplex(0), 4);
        for (int k = 0; k <= 4; ++k) {
            f[k] = XComplex(rng.uniform(-1, 1), rng.uniform(-1, 1));
            g[k] = XComplex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        }
        CJet prod = f * g;
        // (fg)' = f g' + f' g, compared one order lower.
        CJet lhs = prod.derivative_jet();
        CJet rhs = f.truncated() * g.derivative_jet() + f.derivative_jet() * g.truncated();
        for (int k = 0; k <= 3; ++k) {
            CHECK(abs(lhs[k] - rhs[k]).to_double() < 1e-30);
        }
    }
}

TEST_CASE("jet_compose identity and chain rule") {
    // f = identity Taylor (about g0): f(g) = g
    CJet g(XComplex(0), 2);
    g[0] = XComplex(0.3, 0.1);
    g[1] = XComplex(1.5, -0.2);
    g[2] = XComplex(0.25, 0.0);
    CJet ident(XComplex(0), 2);
    ident[0] = g[0];
    ident[1] = XComplex(1);
    CJet r = jet_compose(ident, g);
    for (int k = 0; k <= 2; ++k) CHECK(abs(r[k] - g[k]).to_double() < 1e-30);

    // f(x) = x^2 with g = (a, 1): result (a^2, 2a)
    XComplex a(0.7, 0.4);
    CJet g2(XComplex(0), 1);
    g2[0] = a;
    g2[1] = XComplex(1);
    CJet fsq(XComplex(0), 1);
    fsq[0] = a * a;
    fsq[1] = XComplex(2) * a;
    CJet rsq = jet_compose(fsq, g2);
    CHECK(abs(rsq[0] - a * a).to_double() < 1e-30);
    CHECK(abs(rsq[1] - XComplex(2) * a).to_double() < 1e-30);

    // f = 1/x about x = 2 composed with g = (2, 1, 0):
    // Taylor coefficients (0.5, -0.25, 0.125); raw derivatives (0.5, -0.25, 0.25).
    CJet g3(XComplex(0), 2);
    g3[0] = XComplex(2);
    g3[1] = XComplex(1);
    CJet finv = XComplex(1) / CJet::variable(XComplex(2), 2);
    CJet rinv = jet_compose(finv, g3);
    CHECK(rinv[0].re.to_double() == doctest::Approx(0.5));
    CHECK(rinv[1].re.to_double() == doctest::Approx(-0.25));
    CHECK(rinv[2].re.to_double() == doctest::Approx(0.125));
    CHECK(rinv.derivative(2).re.to_double() == doctest::Approx(0.25));

    CJet wrong_order(XComplex(1), 1);
    CHECK_THROWS_AS(jet_compose(wrong_order, g3), ContractError);
}

TEST_CASE("jet transcendentals against closed-form derivatives") {
    XComplex z0(0.4, 0.9);
    CJet z = CJet::variable(z0, 3);
    CJet e = exp(z);
    for (int k = 0; k <= 3; ++k)
        CHECK(rel_err(abs(e.derivative(k) - exp(z0)), XReal(0)) < 1e-30);
    CJet l = log(XComplex(1) + z * z);
    // d/dz log(1+z^2) = 2z/(1+z^2)
    XComplex expected = XComplex(2) * z0 / (XComplex(1) + z0 * z0);
    CHECK(abs(l.derivative(1) - expected).to_double() < 1e-30);
    CJet s = sin(z), c = cos(z);
    CHECK(abs(s.derivative(1) - cos(z0)).to_double() < 1e-30);
    CHECK(abs(c.derivative(1) + sin(z0)).to_double() < 1e-30);
    CHECK(abs((s * s + c * c).value() - XComplex(1)).to_double() < 1e-30);
}

TEST_CASE("jets beyond order 4 are rejected") {
    CHECK_THROWS_AS(CJet(XComplex(1), 5), ContractError);
    CHECK_THROWS_AS(CJet::variable(XComplex(1), 6), ContractError);
}

} // TEST_SUITE
