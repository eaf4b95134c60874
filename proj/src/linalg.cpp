#include "diskfit/linalg.hpp"

#include "diskfit/errors.hpp"

#include <algorithm>
#include <numeric>

namespace diskfit {

RealVector matvec(const RealMatrix& M, const RealVector& x) {
    RealVector y(M.rows(), XReal(0));
    for (int i = 0; i < M.rows(); ++i) {
        XReal acc(0);
        for (int j = 0; j < M.cols(); ++j) acc += M(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

XReal dot(const RealVector& a, const RealVector& b) {
    XReal acc(0);
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

std::pair<RealMatrix, RealVector> embed_real(const std::vector<XComplex>& T, int n,
                                             const std::vector<XComplex>& A) {
    XReal scale(0);
    for (const XComplex& t : T) scale = max(scale, abs(t));
    XReal tol = XReal(1e-20) * scale;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            XComplex d = T[size_t(i) * n + j] - conj(T[size_t(j) * n + i]);
            if (abs(d) > tol)
                throw ContractError("embed_real: matrix is not Hermitian");
        }

    RealMatrix M(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const XComplex& t = T[size_t(i) * n + j];
            M(i, j) = t.re;
            M(n + i, n + j) = t.re;
            M(i, n + j) = -t.im;
            M(n + i, j) = t.im;
        }
    RealVector b(2 * n, XReal(0));
    for (int i = 0; i < n; ++i) {
        b[i] = A[i].re;
        b[n + i] = A[i].im;
    }
    return {std::move(M), std::move(b)};
}

RealVector householder_solve(const RealMatrix& M, const RealVector& b) {
    if (M.rows() != M.cols() || int(b.size()) != M.rows())
        throw ContractError("householder_solve: dimension mismatch");
    int n = M.rows();
    RealMatrix R = M;
    RealVector y = b;
    XReal tiny = M.max_abs() * XReal(1e-60);

    for (int k = 0; k < n; ++k) {
        // Householder vector for column k.
        XReal sigma(0);
        for (int i = k; i < n; ++i) sigma += R(i, k) * R(i, k);
        XReal normx = sqrt(sigma);
        if (normx <= tiny)
            throw SingularityError("householder_solve: singular at column " +
                                   std::to_string(k));
        XReal alpha = R(k, k) >= XReal(0) ? -normx : normx;
        RealVector v(n - k, XReal(0));
        v[0] = R(k, k) - alpha;
        for (int i = k + 1; i < n; ++i) v[i - k] = R(i, k);
        XReal vtv(0);
        for (const XReal& vi : v) vtv += vi * vi;
        if (vtv > XReal(0)) {
            // Apply I - 2 v v^T / (v^T v) to the trailing block and to y.
            for (int j = k; j < n; ++j) {
                XReal acc(0);
                for (int i = k; i < n; ++i) acc += v[i - k] * R(i, j);
                XReal f = XReal(2) * acc / vtv;
                for (int i = k; i < n; ++i) R(i, j) -= f * v[i - k];
            }
            XReal acc(0);
            for (int i = k; i < n; ++i) acc += v[i - k] * y[i];
            XReal f = XReal(2) * acc / vtv;
            for (int i = k; i < n; ++i) y[i] -= f * v[i - k];
        }
        R(k, k) = alpha;
        for (int i = k + 1; i < n; ++i) R(i, k) = XReal(0);
        if (abs(R(k, k)) <= tiny)
            throw SingularityError("householder_solve: zero diagonal at column " +
                                   std::to_string(k));
    }

    RealVector x(n, XReal(0));
    for (int i = n - 1; i >= 0; --i) {
        XReal acc = y[i];
        for (int j = i + 1; j < n; ++j) acc -= R(i, j) * x[j];
        x[i] = acc / R(i, i);
    }
    return x;
}

namespace {

XReal off_diagonal_frobenius(const RealMatrix& A) {
    XReal acc(0);
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (i != j) acc += A(i, j) * A(i, j);
    return sqrt(acc);
}

} // namespace

EigenDecomposition jacobi_eigen_full(const RealMatrix& M) {
    if (M.rows() != M.cols())
        throw ContractError("jacobi_eigen: matrix must be square");
    int n = M.rows();
    XReal scale = M.max_abs();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (abs(M(i, j) - M(j, i)) > XReal(1e-20) * scale)
                throw ContractError("jacobi_eigen: matrix is not symmetric");

    RealMatrix A = M;
    RealMatrix V = RealMatrix::identity(n);
    XReal frob(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) frob += A(i, j) * A(i, j);
    frob = sqrt(frob);
    XReal stop = XReal(1e-30) * frob;

    for (int sweep = 0; sweep < 60; ++sweep) {
        if (off_diagonal_frobenius(A) <= stop) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                XReal apq = A(p, q);
                if (abs(apq) <= stop / XReal(n)) continue;
                XReal theta = (A(q, q) - A(p, p)) / (XReal(2) * apq);
                XReal t = XReal(1) / (abs(theta) + sqrt(theta * theta + XReal(1)));
                if (theta < XReal(0)) t = -t;
                XReal c = XReal(1) / sqrt(t * t + XReal(1));
                XReal s = t * c;
                XReal tau = s / (XReal(1) + c);
                XReal app = A(p, p), aqq = A(q, q);
                A(p, p) = app - t * apq;
                A(q, q) = aqq + t * apq;
                A(p, q) = XReal(0);
                A(q, p) = XReal(0);
                for (int i = 0; i < n; ++i) {
                    if (i != p && i != q) {
                        XReal aip = A(i, p), aiq = A(i, q);
                        A(i, p) = aip - s * (aiq + tau * aip);
                        A(i, q) = aiq + s * (aip - tau * aiq);
                        A(p, i) = A(i, p);
                        A(q, i) = A(i, q);
                    }
                    XReal vip = V(i, p), viq = V(i, q);
                    V(i, p) = vip - s * (viq + tau * vip);
                    V(i, q) = viq + s * (vip - tau * viq);
                }
            }
    }

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return A(a, a) > A(b, b); });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = RealMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = A(idx[k], idx[k]);
        for (int i = 0; i < n; ++i) out.vectors(i, k) = V(i, idx[k]);
    }
    return out;
}

Spectrum jacobi_eigen(const RealMatrix& M) {
    EigenDecomposition e = jacobi_eigen_full(M);
    Spectrum s;
    s.eigenvalues = e.values;
    s.condition_number = e.values.front() / e.values.back();
    return s;
}

RealVector truncated_solve(const RealMatrix& M, const RealVector& b, int drop_count) {
    int n = M.rows();
    if (drop_count < 0 || drop_count >= n)
        throw ContractError("truncated_solve: drop_count must be in [0, n)");
    EigenDecomposition e = jacobi_eigen_full(M);
    RealVector x(n, XReal(0));
    for (int k = 0; k < n - drop_count; ++k) {
        XReal proj(0);
        for (int i = 0; i < n; ++i) proj += e.vectors(i, k) * b[i];
        XReal coef = proj / e.values[k];
        for (int i = 0; i < n; ++i) x[i] += coef * e.vectors(i, k);
    }
    return x;
}

} // namespace diskfit
