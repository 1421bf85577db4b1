#pragma once

// Closed-form functions of 2x2 real matrices from the characteristic roots.
//
// Every A splits as a scalar part plus one auxiliary matrix:
//   repeated root l0:       A = l0 I + N,       N^2 = O
//   complex pair a +- iw:   A = a I + w J,      J^2 = -I
//   distinct reals l1 > l2: A = a I + b J,      J^2 = I,  a = (l1+l2)/2, b = (l1-l2)/2
// and then
//   e^{tA} = e^{l0 t} (I + tN)
//          = e^{a t} (cos(wt) I + sin(wt) J)
//          = e^{a t} (cosh(bt) I + sinh(bt) J).
// The hyperbolic, trigonometric and e^{+-iA} functions follow by evaluating
// the same structure at t = +-1 and t = +-i.
//
// The Cayley-Hamilton identities behind these splits are
//   (A - l0 I)^2 = O,   A^2 - 2aA + (a^2 + w^2) I = O,   A^2 - 2aA + (a^2 - b^2) I = O.

#include "matexp/linalg.hpp"
#include "matexp/spectrum.hpp"

namespace matexp {

struct Decomp2 {
  Spectrum2 spectrum;
  Mat2 aux;  // N for a repeated root, J otherwise
  double residual = 0.0;  // max_abs of N^2, J^2 + I or J^2 - I
};

/// Throws DegenerateDecomposition when the identity defect exceeds
/// 1e-6 * max(1, max_abs(A)^2).
Decomp2 decompose(const Mat2& a, double tol = kDefaultTol);

/// e^{tA}. Exactly the identity at t = 0. Throws Overflow on a non-finite result.
Mat2 expm(const Decomp2& d, double t);

Mat2 coshm(const Decomp2& d);
Mat2 sinhm(const Decomp2& d);
Mat2 cosm(const Decomp2& d);
Mat2 sinm(const Decomp2& d);

/// e^{iA} for sign = +1, e^{-iA} for sign = -1.
ComplexMat2 expim(const Decomp2& d, int sign);

}  // namespace matexp
