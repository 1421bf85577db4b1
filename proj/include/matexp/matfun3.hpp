#pragma once

// Closed-form exponential of 3x3 real matrices from the characteristic roots.
//
// With B = A - a I (a = l0 for real multiple roots, a = alpha otherwise) and
// b = l3 - a, each case builds a spectral projection P onto the l3
// eigenspace and an auxiliary matrix on the complementary plane:
//
//   triple l0:        N = A - l0 I,                 N^3 = O
//   double l0, l3:    P = B^2 / b^2,                N = B - bP
//                     P^2 = P, PN = NP = O, N^2 = O
//   a +- iw, l3:      P = (B^2 + w^2 I) / (b^2 + w^2),  J = (B - bP) / w
//                     P^2 = P, PJ = JP = O, J^2 = -(I - P)
//   l1 > l2, l3:      P = (B^2 - beta^2 I) / (b^2 - beta^2), J = (B - bP) / beta
//                     P^2 = P, PJ = JP = O, J^2 = I - P
//
// and e^{tA} is
//   e^{l0 t} (I + tN + t^2/2 N^2)
//   e^{l0 t} (I - P + tN) + e^{l3 t} P
//   e^{a t} (cos(wt) (I - P) + sin(wt) J) + e^{l3 t} P
//   e^{a t} (cosh(beta t) (I - P) + sinh(beta t) J) + e^{l3 t} P.

#include <string>
#include <vector>

#include "matexp/linalg.hpp"
#include "matexp/spectrum.hpp"

namespace matexp {

struct NamedResidual {
  std::string identity;
  double value;
};

struct Decomp3 {
  Spectrum3 spectrum;
  Mat3 projection;  // P; O in the triple case
  Mat3 aux;         // N or J
  Mat3 aux_sq;      // N^2 in the triple case, O otherwise
  double shift = 0.0;  // l0 or alpha
  double gap = 0.0;    // l3 - shift; 0 in the triple case
  std::vector<NamedResidual> residuals;

  double max_residual() const;
};

/// Identity-defect limit used by the triple/double/complex/distinct checks,
/// 1e-9 * max(1, max_abs(A))^3.
double identity_tolerance(const Mat3& a);

/// Throws DivisionHazard when a denominator falls below tol * scale^2, and
/// DegenerateDecomposition when any residual exceeds 1e-6 * max(1, max_abs(A))^3.
Decomp3 decompose(const Mat3& a, double tol = kDefaultTol);

/// e^{tA}; exactly I at t = 0. Throws Overflow on a non-finite result.
Mat3 expm(const Decomp3& d, double t);

/// Three-exponential form for three distinct real roots,
///   1/2 e^{l1 t} (I + J - P) + 1/2 e^{l2 t} (I - J - P) + e^{l3 t} P.
/// Throws WrongCase for any other spectrum.
Mat3 expm_three_exponentials(const Decomp3& d, double t);

}  // namespace matexp
