#pragma once

#include <quadmath.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace diskfit {

/// Extended-precision real scalar backed by IEEE binary128 (~33-34 significant
/// decimal digits).  Arithmetic is bit-deterministic: identical inputs give
/// identical results on every run.  All reductions elsewhere in the library
/// accumulate XReal values in a fixed sequential order.
class XReal {
  public:
    constexpr XReal() : v_(0) {}
    constexpr XReal(double d) : v_(d) {}
    constexpr XReal(int i) : v_(i) {}
    constexpr XReal(long i) : v_(i) {}
    constexpr XReal(__float128 v) : v_(v) {}

    constexpr __float128 raw() const { return v_; }
    double to_double() const { return static_cast<double>(v_); }

    constexpr XReal operator-() const { return XReal(-v_); }
    constexpr XReal& operator+=(XReal o) { v_ += o.v_; return *this; }
    constexpr XReal& operator-=(XReal o) { v_ -= o.v_; return *this; }
    constexpr XReal& operator*=(XReal o) { v_ *= o.v_; return *this; }
    constexpr XReal& operator/=(XReal o) { v_ /= o.v_; return *this; }

    friend constexpr XReal operator+(XReal a, XReal b) { return XReal(a.v_ + b.v_); }
    friend constexpr XReal operator-(XReal a, XReal b) { return XReal(a.v_ - b.v_); }
    friend constexpr XReal operator*(XReal a, XReal b) { return XReal(a.v_ * b.v_); }
    friend constexpr XReal operator/(XReal a, XReal b) { return XReal(a.v_ / b.v_); }

    friend constexpr bool operator==(XReal a, XReal b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(XReal a, XReal b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(XReal a, XReal b) { return a.v_ < b.v_; }
    friend constexpr bool operator<=(XReal a, XReal b) { return a.v_ <= b.v_; }
    friend constexpr bool operator>(XReal a, XReal b) { return a.v_ > b.v_; }
    friend constexpr bool operator>=(XReal a, XReal b) { return a.v_ >= b.v_; }

    static XReal pi() { return XReal(M_PIq); }
    static XReal two_pi() { return XReal(2 * M_PIq); }

    /// Parse a decimal string (full 34-digit precision).
    static XReal parse(const std::string& s);

    /// Scientific-notation rendering with the requested significant digits.
    std::string str(int digits = 34) const;

  private:
    __float128 v_;
};

inline XReal abs(XReal x) { return XReal(fabsq(x.raw())); }
inline XReal sqrt(XReal x) { return XReal(sqrtq(x.raw())); }
inline XReal exp(XReal x) { return XReal(expq(x.raw())); }
inline XReal log(XReal x) { return XReal(logq(x.raw())); }
inline XReal log1p(XReal x) { return XReal(log1pq(x.raw())); }
inline XReal sin(XReal x) { return XReal(sinq(x.raw())); }
inline XReal cos(XReal x) { return XReal(cosq(x.raw())); }
inline XReal sinh(XReal x) { return XReal(sinhq(x.raw())); }
inline XReal cosh(XReal x) { return XReal(coshq(x.raw())); }
inline XReal atan2(XReal y, XReal x) { return XReal(atan2q(y.raw(), x.raw())); }
inline XReal max(XReal a, XReal b) { return a < b ? b : a; }
inline XReal min(XReal a, XReal b) { return a < b ? a : b; }

/// Integer power by binary exponentiation (deterministic evaluation order).
XReal pow_int(XReal base, long n);

std::ostream& operator<<(std::ostream& os, const XReal& x);

} // namespace diskfit
