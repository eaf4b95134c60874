#pragma once

#include "diskfit/xcomplex.hpp"

#include <utility>
#include <vector>

namespace diskfit {

using RealVector = std::vector<XReal>;

/// Dense row-major matrix of extended-precision reals.
class RealMatrix {
  public:
    RealMatrix() = default;
    RealMatrix(int rows, int cols) : rows_(rows), cols_(cols), d_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    XReal& operator()(int i, int j) { return d_[size_t(i) * cols_ + j]; }
    const XReal& operator()(int i, int j) const { return d_[size_t(i) * cols_ + j]; }

    static RealMatrix identity(int n) {
        RealMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = XReal(1);
        return m;
    }

    XReal max_abs() const {
        XReal m(0);
        for (const XReal& v : d_) m = max(m, abs(v));
        return m;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<XReal> d_;
};

RealVector matvec(const RealMatrix& M, const RealVector& x);
XReal dot(const RealVector& a, const RealVector& b);

/// Eigen-spectrum summary: descending eigenvalues and their extreme ratio.
struct Spectrum {
    std::vector<XReal> eigenvalues;
    XReal condition_number;
};

struct EigenDecomposition {
    std::vector<XReal> values;  // descending
    RealMatrix vectors;         // column k is the eigenvector of values[k]
};

/// Normal-equation data for one fit problem.  For complex norms realT is the
/// 2N x 2N symmetric embedding (each eigenvalue of T appears twice); for the
/// real energy norm T is already real and realT is the plain N x N matrix.
struct GramSystem {
    int n = 0;
    bool real_symmetric = false;
    std::vector<XComplex> T;  // row-major n x n
    std::vector<XComplex> A;
    RealMatrix realT;
    RealVector realA;
};

/// Block embedding of a Hermitian system: with T = T_R + i T_I and
/// A = A_R + i A_I, builds the symmetric real system whose solution (alpha;
/// beta) recombines to mu = alpha + i beta with T mu = A.  Rejects
/// non-Hermitian input (asymmetry above 1e-20 * max|T|).
std::pair<RealMatrix, RealVector> embed_real(const std::vector<XComplex>& T, int n,
                                             const std::vector<XComplex>& A);

/// QR solve by Householder reflections.  Throws SingularityError when an R
/// diagonal vanishes at working precision.
RealVector householder_solve(const RealMatrix& M, const RealVector& b);

/// Cyclic Jacobi eigendecomposition of a symmetric matrix (rotation threshold
/// 1e-30 * scale, at most 60 sweeps, deterministic rotation order).
EigenDecomposition jacobi_eigen_full(const RealMatrix& M);
Spectrum jacobi_eigen(const RealMatrix& M);

/// Spectral solve restricted to the n - drop_count largest eigenvalue modes.
/// drop_count = 0 reduces to a full solve.
RealVector truncated_solve(const RealMatrix& M, const RealVector& b, int drop_count);

} // namespace diskfit
