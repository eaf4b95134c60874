#pragma once

#include "diskfit/errors.hpp"
#include "diskfit/xcomplex.hpp"

#include <array>

namespace diskfit {

// Elementwise exact integer scaling, used by the series recurrences below so
// they stay generic over nested jets.
inline XComplex div_int(const XComplex& z, int k) {
    return {z.re / XReal(k), z.im / XReal(k)};
}
inline XComplex mul_int(const XComplex& z, int k) {
    return {z.re * XReal(k), z.im * XReal(k)};
}

/// Truncated Taylor expansion ("jet") of an analytic function about a point.
/// coeffs[k] is the Taylor coefficient f^(k)/k!; derivative(k) returns the
/// raw derivative f^(k).  Dense storage, maximum order 4 (enough for pole
/// orders up to 5); higher orders are rejected.
///
/// Binary operations require matching orders.  Order-0 jets behave exactly
/// like the underlying scalar.
template <class T>
class Jet {
  public:
    static constexpr int kMaxOrder = 4;

    Jet() : size_(1) {}

    explicit Jet(T value, int order = 0) : size_(check_order(order) + 1) {
        c_[0] = value;
    }

    /// Seed jet of the expansion variable itself: (value, 1, 0, ...).
    static Jet variable(const T& value, int order) {
        Jet j(value, order);
        if (order >= 1) j.c_[1] = T(1);
        return j;
    }

    static Jet constant(const T& value, int order) { return Jet(value, order); }

    int order() const { return size_ - 1; }
    const T& operator[](int k) const { return c_[k]; }
    T& operator[](int k) { return c_[k]; }
    const T& value() const { return c_[0]; }

    /// Raw derivative f^(k) = k! * coeffs[k].
    T derivative(int k) const {
        T d = c_[k];
        int f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return mul_int(d, f);
    }

    Jet& operator+=(const Jet& o) {
        match(o);
        for (int k = 0; k < size_; ++k) c_[k] += o.c_[k];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        match(o);
        for (int k = 0; k < size_; ++k) c_[k] -= o.c_[k];
        return *this;
    }

    friend Jet operator+(const Jet& a, const Jet& b) {
        a.match(b);
        Jet r(a);
        for (int k = 0; k < r.size_; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        a.match(b);
        Jet r(a);
        for (int k = 0; k < r.size_; ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    Jet operator-() const {
        Jet r(*this);
        for (int k = 0; k < size_; ++k) r.c_[k] = -c_[k];
        return r;
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        a.match(b);
        Jet r(a);
        for (int k = 0; k < a.size_; ++k) {
            T acc = a.c_[0] * b.c_[k];
            for (int j = 1; j <= k; ++j) acc += a.c_[j] * b.c_[k - j];
            r.c_[k] = acc;
        }
        return r;
    }
    /// Series division: q with q*b = a through the common order.
    friend Jet operator/(const Jet& a, const Jet& b) {
        a.match(b);
        Jet q(T(0), a.order());
        for (int k = 0; k < a.size_; ++k) {
            T acc = a.c_[k];
            for (int j = 1; j <= k; ++j) acc -= b.c_[j] * q.c_[k - j];
            q.c_[k] = acc / b.c_[0];
        }
        return q;
    }

    friend Jet operator*(const Jet& a, const T& s) {
        Jet r(a);
        for (int k = 0; k < r.size_; ++k) r.c_[k] = a.c_[k] * s;
        return r;
    }
    friend Jet operator*(const T& s, const Jet& a) { return a * s; }
    friend Jet operator+(const Jet& a, const T& s) {
        Jet r(a);
        r.c_[0] += s;
        return r;
    }
    friend Jet operator+(const T& s, const Jet& a) { return a + s; }
    friend Jet operator-(const Jet& a, const T& s) { return a + (-s); }
    friend Jet operator-(const T& s, const Jet& a) { return (-a) + s; }
    friend Jet operator/(const T& s, const Jet& a) {
        return Jet::constant(s, a.order()) / a;
    }

    /// Same coefficients with the top one dropped (order reduced by one).
    Jet truncated() const {
        if (order() == 0) throw ContractError("cannot truncate an order-0 jet");
        Jet r(*this);
        r.size_ -= 1;
        r.c_[r.size_] = T(0);
        return r;
    }

    /// Jet of the derivative function, one order lower.
    Jet derivative_jet() const {
        if (order() == 0) return Jet(T(0), 0);
        Jet r(T(0), order() - 1);
        for (int k = 1; k < size_; ++k) r.c_[k - 1] = mul_int(c_[k], k);
        return r;
    }

    void match(const Jet& o) const {
        if (size_ != o.size_)
            throw ContractError("jet order mismatch");
    }

  private:
    static int check_order(int order) {
        if (order < 0 || order > kMaxOrder)
            throw ContractError("jet order out of range (max 4)");
        return order;
    }

    std::array<T, kMaxOrder + 1> c_{};
    int size_;
};

template <class T>
Jet<T> div_int(const Jet<T>& a, int k) {
    Jet<T> r(a);
    for (int i = 0; i <= a.order(); ++i) r[i] = div_int(a[i], k);
    return r;
}
template <class T>
Jet<T> mul_int(const Jet<T>& a, int k) {
    Jet<T> r(a);
    for (int i = 0; i <= a.order(); ++i) r[i] = mul_int(a[i], k);
    return r;
}

/// Composition (f o g): f_taylor holds the Taylor coefficients of f expanded
/// about g.value().  Orders must match.
template <class T>
Jet<T> jet_compose(const Jet<T>& f_taylor, const Jet<T>& g) {
    f_taylor.match(g);
    Jet<T> gs(g);
    gs[0] = T(0);
    int n = g.order();
    Jet<T> r = Jet<T>::constant(f_taylor[n], n);
    for (int i = n - 1; i >= 0; --i) r = r * gs + f_taylor[i];
    return r;
}

template <class T>
Jet<T> exp(const Jet<T>& g) {
    Jet<T> e(T(0), g.order());
    e[0] = exp(g[0]);
    for (int k = 1; k <= g.order(); ++k) {
        T acc(0);
        for (int j = 1; j <= k; ++j) acc += mul_int(g[j] * e[k - j], j);
        e[k] = div_int(acc, k);
    }
    return e;
}

template <class T>
Jet<T> log(const Jet<T>& g) {
    Jet<T> l(T(0), g.order());
    l[0] = log(g[0]);
    for (int k = 1; k <= g.order(); ++k) {
        T acc = mul_int(g[k], k);
        for (int j = 1; j < k; ++j) acc -= mul_int(l[j] * g[k - j], j);
        l[k] = div_int(acc, k) / g[0];
    }
    return l;
}

template <class T>
void sincos(const Jet<T>& g, Jet<T>& s, Jet<T>& c) {
    s = Jet<T>(T(0), g.order());
    c = Jet<T>(T(0), g.order());
    s[0] = sin(g[0]);
    c[0] = cos(g[0]);
    for (int k = 1; k <= g.order(); ++k) {
        T as(0), ac(0);
        for (int j = 1; j <= k; ++j) {
            as += mul_int(g[j] * c[k - j], j);
            ac += mul_int(g[j] * s[k - j], j);
        }
        s[k] = div_int(as, k);
        c[k] = div_int(-ac, k);
    }
}

template <class T>
Jet<T> sin(const Jet<T>& g) {
    Jet<T> s, c;
    sincos(g, s, c);
    return s;
}

template <class T>
Jet<T> cos(const Jet<T>& g) {
    Jet<T> s, c;
    sincos(g, s, c);
    return c;
}

using CJet = Jet<XComplex>;

} // namespace diskfit
