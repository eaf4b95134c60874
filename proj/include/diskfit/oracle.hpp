#pragma once

#include "diskfit/errors.hpp"
#include "diskfit/model.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

// Brute-force quadrature implementations of every inner product, kept fully
// independent of the closed forms in kernels.cpp.  They gate correctness and
// supply reference values; the double instantiation is the default, the
// XComplex instantiation is available where quadrature itself must exceed
// double precision.
namespace diskfit::oracle {

template <class C>
struct scalar_ops;

template <>
struct scalar_ops<std::complex<double>> {
    using Real = double;
    static Real pi() { return M_PI; }
    static std::complex<double> from_polar(Real r, Real t) { return std::polar(r, t); }
    static Real magnitude(const std::complex<double>& z) { return std::abs(z); }
    static std::complex<double> conjugate(const std::complex<double>& z) {
        return std::conj(z);
    }
    static Real real_part(const std::complex<double>& z) { return z.real(); }
    static Real to_real(double x) { return x; }
    static double from_int(int k) { return k; }
};

template <>
struct scalar_ops<XComplex> {
    using Real = XReal;
    static Real pi() { return XReal::pi(); }
    static XComplex from_polar(Real r, Real t) { return polar(r, t); }
    static Real magnitude(const XComplex& z) { return abs(z); }
    static XComplex conjugate(const XComplex& z) { return conj(z); }
    static Real real_part(const XComplex& z) { return z.re; }
    static Real to_real(double x) { return XReal(x); }
    static XReal from_int(int k) { return XReal(k); }
};

inline double abs_of(double x) { return std::fabs(x); }
inline XReal abs_of(XReal x) { return abs(x); }

template <class R>
constexpr double newton_eps() {
    if constexpr (std::is_same_v<R, XReal>) return 1e-33;
    return 4e-16;
}

/// Gauss-Legendre nodes and weights on (0,1).
template <class R>
void gauss_legendre01(int n, std::vector<R>& nodes, std::vector<R>& weights) {
    using std::cos;
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n / 2 + 1; ++i) {
        // Newton iteration from the Chebyshev estimate of the i-th root.
        R x = cos((R(M_PI) * (R(i) + R(0.75))) / (R(n) + R(0.5)));
        R p0(0), p1(0), dp(1);
        for (int it = 0; it < 60; ++it) {
            p0 = R(1);
            p1 = R(0);
            for (int j = 0; j < n; ++j) {
                R p2 = p1;
                p1 = p0;
                p0 = ((R(2 * j + 1) * x * p1) - R(j) * p2) / R(j + 1);
            }
            dp = R(n) * (x * p0 - p1) / (x * x - R(1));
            R dx = p0 / dp;
            x = x - dx;
            if (abs_of(dx) < R(newton_eps<R>())) break;
        }
        p0 = R(1);
        p1 = R(0);
        for (int j = 0; j < n; ++j) {
            R p2 = p1;
            p1 = p0;
            p0 = ((R(2 * j + 1) * x * p1) - R(j) * p2) / R(j + 1);
        }
        dp = R(n) * (x * p0 - p1) / (x * x - R(1));
        R w = R(2) / ((R(1) - x * x) * dp * dp);
        // Map [-1,1] -> (0,1); roots come in symmetric pairs.
        nodes[i] = (R(1) - x) / R(2);
        weights[i] = w / R(2);
        nodes[n - 1 - i] = (R(1) + x) / R(2);
        weights[n - 1 - i] = w / R(2);
    }
}

/// (f, g)_sigma = (1/2pi) int f*(e^{i t}) g(e^{i t}) dt by the trapezoid rule.
template <class C>
C sigma_ip_quadrature(const std::function<C(const C&)>& f,
                      const std::function<C(const C&)>& g, int n_points = 4096) {
    using ops = scalar_ops<C>;
    using R = typename ops::Real;
    C acc(0);
    for (int j = 0; j < n_points; ++j) {
        R theta = R(2) * ops::pi() * ops::from_int(j) / ops::from_int(n_points);
        C z = ops::from_polar(R(1), theta);
        acc += ops::conjugate(f(z)) * g(z);
    }
    return acc / C(ops::from_int(n_points));
}

/// (f, g)_D = (1/2pi) iint f_z* g_z r dr dt.  Exterior integrals substitute
/// u = 1/r (Jacobian r dr = u^-3 du) with Gauss-Legendre in u; interior
/// integrates r in [0,1] directly.  Trapezoid in the angle.
/// Throws AdmissibilityError if |f_z* g_z| r^4 grows between the two
/// outermost radial samples.
template <class C>
C dirichlet_ip_quadrature(const std::function<C(const C&)>& fz,
                          const std::function<C(const C&)>& gz, Geometry geometry,
                          int n_r = 256, int n_theta = 4096) {
    using ops = scalar_ops<C>;
    using R = typename ops::Real;
    std::vector<R> u, w;
    gauss_legendre01(n_r, u, w);

    C total(0);
    R far_scaled(0), next_scaled(0);
    int far_i = -1, next_i = -1;
    if (geometry == Geometry::Exterior) {
        // Two smallest u values = two largest radii; used for the decay probe.
        far_i = 0;
        next_i = 1;
        for (int i = 0; i < n_r; ++i) {
            if (u[i] < u[far_i]) {
                next_i = far_i;
                far_i = i;
            } else if (i != far_i && (next_i == far_i || u[i] < u[next_i])) {
                next_i = i;
            }
        }
    }

    for (int i = 0; i < n_r; ++i) {
        R r = geometry == Geometry::Exterior ? R(1) / u[i] : u[i];
        R radial_w = geometry == Geometry::Exterior
                         ? w[i] / (u[i] * u[i] * u[i])  // r dr = du / u^3
                         : w[i] * u[i];                 // r dr
        C ring(0);
        R ring_abs(0);
        for (int j = 0; j < n_theta; ++j) {
            R theta = R(2) * ops::pi() * ops::from_int(j) / ops::from_int(n_theta);
            C z = ops::from_polar(r, theta);
            C v = ops::conjugate(fz(z)) * gz(z);
            ring += v;
            ring_abs += ops::magnitude(v);
        }
        total += ring * C(radial_w);
        if (i == far_i) far_scaled = ring_abs * r * r * r * r;
        if (i == next_i) next_scaled = ring_abs * r * r * r * r;
    }
    if (geometry == Geometry::Exterior && far_scaled > R(4) * next_scaled &&
        far_scaled > R(1e-300))
        throw AdmissibilityError(
            "dirichlet_ip_quadrature: integrand does not decay like r^-4");
    return total / C(ops::from_int(n_theta));
}

/// RCF area inner product (F, G)_B = iint F G* r dr dt (no 1/2pi); used for
/// the dual-route derivative identity (F', G')_B* / 2pi = (f, g)_D.
template <class C>
C bergman_ip_quadrature(const std::function<C(const C&)>& F,
                        const std::function<C(const C&)>& G, Geometry geometry,
                        int n_r = 256, int n_theta = 4096) {
    using ops = scalar_ops<C>;
    using R = typename ops::Real;
    std::vector<R> u, w;
    gauss_legendre01(n_r, u, w);
    C total(0);
    for (int i = 0; i < n_r; ++i) {
        R r = geometry == Geometry::Exterior ? R(1) / u[i] : u[i];
        R radial_w = geometry == Geometry::Exterior ? w[i] / (u[i] * u[i] * u[i])
                                                    : w[i] * u[i];
        C ring(0);
        for (int j = 0; j < n_theta; ++j) {
            R theta = R(2) * ops::pi() * ops::from_int(j) / ops::from_int(n_theta);
            C z = ops::from_polar(r, theta);
            ring += F(z) * ops::conjugate(G(z));
        }
        total += ring * C(radial_w);
    }
    R two_pi = R(2) * ops::pi();
    return total * C(two_pi / ops::from_int(n_theta));
}

/// (G, H)_E = (1/2pi) iint grad G . grad H r dr dt over the planar exterior.
/// Gradients are supplied as callables returning {dG/dx, dG/dy}.
template <class C>
typename scalar_ops<C>::Real energy_ip_quadrature(
    const std::function<std::array<typename scalar_ops<C>::Real, 2>(const C&)>& gradG,
    const std::function<std::array<typename scalar_ops<C>::Real, 2>(const C&)>& gradH,
    int n_r = 256, int n_theta = 4096) {
    using ops = scalar_ops<C>;
    using R = typename ops::Real;
    std::vector<R> u, w;
    gauss_legendre01(n_r, u, w);
    R total(0);
    for (int i = 0; i < n_r; ++i) {
        R r = R(1) / u[i];
        R radial_w = w[i] / (u[i] * u[i] * u[i]);
        R ring(0);
        for (int j = 0; j < n_theta; ++j) {
            R theta = R(2) * ops::pi() * ops::from_int(j) / ops::from_int(n_theta);
            C z = ops::from_polar(r, theta);
            auto g = gradG(z);
            auto h = gradH(z);
            ring += g[0] * h[0] + g[1] * h[1];
        }
        total += ring * radial_w;
    }
    return total / ops::from_int(n_theta);
}

/// Central-difference gradient of a real-valued field, step h.
template <class C>
std::function<std::array<typename scalar_ops<C>::Real, 2>(const C&)> fd_gradient(
    std::function<typename scalar_ops<C>::Real(const C&)> G,
    typename scalar_ops<C>::Real h) {
    using R = typename scalar_ops<C>::Real;
    return [G, h](const C& z) -> std::array<R, 2> {
        C dx(h, R(0)), dy(R(0), h);
        R gx = (G(z + dx) - G(z - dx)) / (R(2) * h);
        R gy = (G(z + dy) - G(z - dy)) / (R(2) * h);
        return {gx, gy};
    };
}

/// Pointwise check of the Wirtinger split of the Dirichlet integrand:
///   (|f_x|^2 + |f_y|^2)/2  ==  |df/dz|^2 + |df/dzbar|^2
/// The left side uses axis-direction central differences, the right side
/// derivatives reconstructed from diagonal-direction differences, so the two
/// sides agree only because the identity holds.  Returns the max deviation.
template <class C>
typename scalar_ops<C>::Real wirtinger_identity_check(
    const std::function<C(const C&)>& f, const std::vector<C>& points,
    typename scalar_ops<C>::Real h) {
    using ops = scalar_ops<C>;
    using R = typename ops::Real;
    using std::sqrt;
    R dev(0);
    R inv_sqrt2 = R(1) / sqrt(R(2));
    C d1(inv_sqrt2, inv_sqrt2), d2(inv_sqrt2, -inv_sqrt2);
    for (const C& z : points) {
        C hx(h, R(0)), hy(R(0), h);
        C fx = (f(z + hx) - f(z - hx)) / C(R(2) * h);
        C fy = (f(z + hy) - f(z - hy)) / C(R(2) * h);
        R lhs = (ops::magnitude(fx) * ops::magnitude(fx) +
                 ops::magnitude(fy) * ops::magnitude(fy)) /
                R(2);

        C D1 = (f(z + C(h) * d1) - f(z - C(h) * d1)) / C(R(2) * h);
        C D2 = (f(z + C(h) * d2) - f(z - C(h) * d2)) / C(R(2) * h);
        // D_d = f_z d + f_zbar conj(d); with conj(d1) = d2 this solves to:
        C denom = d1 * d1 - d2 * d2;
        C f_z = (D1 * d1 - D2 * d2) / denom;
        C f_zbar = (D2 * d1 - D1 * d2) / denom;
        R rhs = ops::magnitude(f_z) * ops::magnitude(f_z) +
                ops::magnitude(f_zbar) * ops::magnitude(f_zbar);
        R d = abs_of(lhs - rhs);
        if (d > dev) dev = d;
    }
    return dev;
}

} // namespace diskfit::oracle
