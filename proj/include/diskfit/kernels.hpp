#pragma once

#include "diskfit/model.hpp"

#include <vector>

namespace diskfit {

/// Involution data for a source z_k: p = 1/z_k and the conjugate involution
/// point p_conj = 1/conj(z_k).  p_conj lies in the field region and is where
/// the fitted approximant replicates target data.
struct InvolutionPoint {
    XComplex p;
    XComplex p_conj;
};

InvolutionPoint involution(const XComplex& z_k);

/// Closed-form inner product (B_row, B_col) under the given norm, with the
/// left argument conjugated.  Higher-order poles are produced by Taylor (jet)
/// differentiation of the simple-pole entry in conj(z_row) and z_col.
XComplex gram_entry(NormKind norm, Geometry geometry, const BasisElement& row,
                    const BasisElement& col);

/// Closed-form moment A = (B, f).
XComplex moment_entry(NormKind norm, Geometry geometry, const BasisElement& b,
                      const TargetFunction& f);

/// det T for the exterior-sigma simple-pole Gram matrix, via the Cauchy
/// determinant: [prod_{i>j}(p_i-p_j)(conj(z_j)-conj(z_i)) /
/// prod_{i,j}(p_i-conj(z_j))] * prod_k p_k.
XComplex cauchy_determinant(const std::vector<XComplex>& sources);

/// Field-point value of one basis element.  The interior dirichlet basis is
/// the origin-normalized pole 1/(z_k-z) - 1/z_k; all other kinds evaluate
/// their defining formula.
XComplex basis_value(const BasisElement& b, const XComplex& z, Geometry geometry,
                     NormKind norm);

/// Jet (value and derivatives) of a basis element at a field point.
CJet basis_jet(const BasisElement& b, const XComplex& z, int order,
               Geometry geometry, NormKind norm);

/// Coefficient of 1/z in the element's expansion at infinity (exterior kinds).
XComplex basis_residue_at_infinity(const BasisElement& b);

} // namespace diskfit
