#pragma once

#include "diskfit/errors.hpp"
#include "diskfit/xreal.hpp"

#include <iosfwd>

namespace diskfit {

/// Extended-precision complex scalar.  Pure value type; safe to copy between
/// threads.
struct XComplex {
    XReal re;
    XReal im;

    constexpr XComplex() = default;
    constexpr XComplex(XReal r) : re(r), im(0.0) {}
    constexpr XComplex(double r) : re(r), im(0.0) {}
    constexpr XComplex(int r) : re(r), im(0.0) {}
    constexpr XComplex(XReal r, XReal i) : re(r), im(i) {}
    constexpr XComplex(double r, double i) : re(r), im(i) {}

    XComplex operator-() const { return {-re, -im}; }
    XComplex& operator+=(const XComplex& o) { re += o.re; im += o.im; return *this; }
    XComplex& operator-=(const XComplex& o) { re -= o.re; im -= o.im; return *this; }
    XComplex& operator*=(const XComplex& o) { *this = *this * o; return *this; }
    XComplex& operator/=(const XComplex& o) { *this = *this / o; return *this; }

    friend XComplex operator+(const XComplex& a, const XComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend XComplex operator-(const XComplex& a, const XComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend XComplex operator*(const XComplex& a, const XComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend XComplex operator/(const XComplex& a, const XComplex& b) {
        // Scaled (Smith) division to avoid premature overflow/underflow.
        if (abs(b.re) >= abs(b.im)) {
            if (b.re == XReal(0) && b.im == XReal(0))
                throw DomainError("complex division by zero");
            XReal r = b.im / b.re;
            XReal d = b.re + b.im * r;
            return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
        }
        XReal r = b.re / b.im;
        XReal d = b.re * r + b.im;
        return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
    }

    friend bool operator==(const XComplex& a, const XComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const XComplex& a, const XComplex& b) { return !(a == b); }
};

inline XComplex conj(const XComplex& z) { return {z.re, -z.im}; }
inline XReal norm(const XComplex& z) { return z.re * z.re + z.im * z.im; }
inline XReal abs(const XComplex& z) { return sqrt(norm(z)); }
inline XReal arg(const XComplex& z) { return atan2(z.im, z.re); }

inline XComplex polar(XReal r, XReal theta) {
    return {r * cos(theta), r * sin(theta)};
}

inline XComplex exp(const XComplex& z) {
    XReal m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

inline XComplex sin(const XComplex& z) {
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

inline XComplex cos(const XComplex& z) {
    return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}

/// Principal-branch complex logarithm: log|z| + i arg(z), arg in (-pi, pi].
/// The logarithmic kernels used elsewhere evaluate this only on arguments in
/// the open right half-plane, where the branch is continuous.
inline XComplex complex_ln_principal(const XComplex& z) {
    if (z.re == XReal(0) && z.im == XReal(0))
        throw DomainError("complex_ln_principal: log of zero");
    return {XReal(0.5) * log(norm(z)), arg(z)};
}

inline XComplex log(const XComplex& z) { return complex_ln_principal(z); }

inline XComplex recip(const XComplex& z) { return XComplex(1) / z; }

std::ostream& operator<<(std::ostream& os, const XComplex& z);

} // namespace diskfit
