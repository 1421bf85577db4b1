#pragma once

// Characteristic roots of 2x2 and 3x3 real matrices, classified by root
// pattern: repeated / complex pair / distinct real for 2x2, and triple /
// double+simple / complex pair+real / three distinct reals for 3x3.
//
// Multiplicity is decided with a relative tolerance `tol` on *squared* root
// separations: two roots are merged when |x_i - x_j|^2 <= tol * scale^2. For
// 2x2 this is exactly |disc| <= tol * scale^2. Roots closer than about
// sqrt(eps) * scale cannot be resolved from the coefficients anyway, and the
// default tol = 1e-9 merges below ~3.2e-5 * scale.

#include <string_view>
#include <variant>

#include "matexp/linalg.hpp"

namespace matexp {

inline constexpr double kDefaultTol = 1e-9;

struct CharPoly2 {
  double tr = 0.0;
  double det = 0.0;
  double disc = 0.0;  // tr^2 - 4 det
};

struct CharPoly3 {
  double tr = 0.0;
  double m = 0.0;  // principal minor sum
  double det = 0.0;
};

struct Repeated {
  double lambda0;
};
struct ComplexPair {
  double alpha;
  double omega;  // > 0
};
struct DistinctReal {
  double lambda1;  // > lambda2
  double lambda2;
  double alpha;  // (lambda1 + lambda2) / 2
  double beta;   // (lambda1 - lambda2) / 2 > 0
};
using Spectrum2 = std::variant<Repeated, ComplexPair, DistinctReal>;

struct Triple {
  double lambda0;
};
struct DoubleSimple {
  double lambda0;  // multiplicity two
  double lambda3;
};
struct ComplexReal {
  double alpha;
  double omega;  // > 0
  double lambda3;
};
struct ThreeDistinct {
  double lambda1;  // > lambda2
  double lambda2;
  double lambda3;  // farthest from (lambda1 + lambda2) / 2
  double alpha;
  double beta;  // > 0
};
using Spectrum3 = std::variant<Triple, DoubleSimple, ComplexReal, ThreeDistinct>;

CharPoly2 char_poly(const Mat2& a);
CharPoly3 char_poly(const Mat3& a);

/// Monic polynomial value.
double evaluate(const CharPoly2& p, double x);
double evaluate(const CharPoly3& p, double x);

/// Magnitude used to make the tolerances relative.
double root_scale(const CharPoly2& p);
double root_scale(const CharPoly3& p);

Spectrum2 classify(const CharPoly2& p, double tol = kDefaultTol);
Spectrum3 classify(const CharPoly3& p, double tol = kDefaultTol);

/// Smallest squared pairwise root separation divided by root_scale^2, in the
/// same units as `tol`. A matrix is "well classified" when this exceeds 10*tol.
double classification_margin(const CharPoly2& p);
double classification_margin(const CharPoly3& p);

/// Spectrum of A + a*I given the spectrum of A.
Spectrum2 shifted(const Spectrum2& s, double a);
Spectrum3 shifted(const Spectrum3& s, double a);

std::string_view case_name(const Spectrum2& s);
std::string_view case_name(const Spectrum3& s);

}  // namespace matexp
