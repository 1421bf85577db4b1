#include "matexp/matfun2.hpp"

#include <algorithm>
#include <cmath>

#include "matexp/overloaded.hpp"

namespace matexp {
namespace {

// c I + s X, assembled so that c = 1, s = 0 reproduces I exactly.
Mat2 combine(double c, double s, const Mat2& x) { return c * Mat2::identity() + s * x; }

Mat2 checked(const Mat2& m, double t) {
  if (!m.is_finite()) throw Overflow(t);
  return m;
}

}  // namespace

Decomp2 decompose(const Mat2& a, double tol) {
  const Spectrum2 spectrum = classify(char_poly(a), tol);
  const Mat2 id = Mat2::identity();

  Decomp2 d{spectrum, {}, 0.0};
  std::visit(Overloaded{[&](const Repeated& s) {
                          d.aux = a - s.lambda0 * id;
                          d.residual = max_abs(square(d.aux));
                        },
                        [&](const ComplexPair& s) {
                          d.aux = (1.0 / s.omega) * (a - s.alpha * id);
                          d.residual = max_abs(square(d.aux) + id);
                        },
                        [&](const DistinctReal& s) {
                          d.aux = (1.0 / s.beta) * (a - s.alpha * id);
                          d.residual = max_abs(square(d.aux) - id);
                        }},
             spectrum);

  const double m = max_abs(a);
  const double limit = 1e-6 * std::max(1.0, m * m);
  if (!(d.residual <= limit)) {
    const char* identity = std::holds_alternative<Repeated>(spectrum)      ? "N^2 = O"
                           : std::holds_alternative<ComplexPair>(spectrum) ? "J^2 = -I"
                                                                           : "J^2 = I";
    throw DegenerateDecomposition(identity, d.residual, limit);
  }
  return d;
}

Mat2 expm(const Decomp2& d, double t) {
  return std::visit(Overloaded{[&](const Repeated& s) {
                                 const double e = std::exp(s.lambda0 * t);
                                 return checked(e * combine(1.0, t, d.aux), t);
                               },
                               [&](const ComplexPair& s) {
                                 const double e = std::exp(s.alpha * t);
                                 return checked(
                                     e * combine(std::cos(s.omega * t), std::sin(s.omega * t), d.aux),
                                     t);
                               },
                               [&](const DistinctReal& s) {
                                 const double e = std::exp(s.alpha * t);
                                 return checked(
                                     e * combine(std::cosh(s.beta * t), std::sinh(s.beta * t), d.aux),
                                     t);
                               }},
                    d.spectrum);
}

Mat2 coshm(const Decomp2& d) {
  return checked(std::visit(
      Overloaded{[&](const Repeated& s) {
                   return combine(std::cosh(s.lambda0), std::sinh(s.lambda0), d.aux);
                 },
                 [&](const ComplexPair& s) {
                   return combine(std::cosh(s.alpha) * std::cos(s.omega),
                                  std::sinh(s.alpha) * std::sin(s.omega), d.aux);
                 },
                 [&](const DistinctReal& s) {
                   return combine(std::cosh(s.alpha) * std::cosh(s.beta),
                                  std::sinh(s.alpha) * std::sinh(s.beta), d.aux);
                 }},
      d.spectrum), 1.0);
}

Mat2 sinhm(const Decomp2& d) {
  return checked(std::visit(
      Overloaded{[&](const Repeated& s) {
                   return combine(std::sinh(s.lambda0), std::cosh(s.lambda0), d.aux);
                 },
                 [&](const ComplexPair& s) {
                   return combine(std::sinh(s.alpha) * std::cos(s.omega),
                                  std::cosh(s.alpha) * std::sin(s.omega), d.aux);
                 },
                 [&](const DistinctReal& s) {
                   return combine(std::sinh(s.alpha) * std::cosh(s.beta),
                                  std::cosh(s.alpha) * std::sinh(s.beta), d.aux);
                 }},
      d.spectrum), 1.0);
}

Mat2 cosm(const Decomp2& d) {
  return checked(std::visit(
      Overloaded{[&](const Repeated& s) {
                   return combine(std::cos(s.lambda0), -std::sin(s.lambda0), d.aux);
                 },
                 [&](const ComplexPair& s) {
                   return combine(std::cos(s.alpha) * std::cosh(s.omega),
                                  -std::sin(s.alpha) * std::sinh(s.omega), d.aux);
                 },
                 [&](const DistinctReal& s) {
                   return combine(std::cos(s.alpha) * std::cos(s.beta),
                                  -std::sin(s.alpha) * std::sin(s.beta), d.aux);
                 }},
      d.spectrum), 1.0);
}

Mat2 sinm(const Decomp2& d) {
  return checked(std::visit(
      Overloaded{[&](const Repeated& s) {
                   return combine(std::sin(s.lambda0), std::cos(s.lambda0), d.aux);
                 },
                 [&](const ComplexPair& s) {
                   return combine(std::sin(s.alpha) * std::cosh(s.omega),
                                  std::cos(s.alpha) * std::sinh(s.omega), d.aux);
                 },
                 [&](const DistinctReal& s) {
                   return combine(std::sin(s.alpha) * std::cos(s.beta),
                                  std::cos(s.alpha) * std::sin(s.beta), d.aux);
                 }},
      d.spectrum), 1.0);
}

// e^{+-iA} = e^{+-i theta} (p I +- i q X) for a per-case phase theta and
// real weights p, q; expanding the product with e^{+-i theta} = cos +- i sin:
//   re = cos(theta) p I - sin(theta) q X
//   im = +-(sin(theta) p I + cos(theta) q X)
ComplexMat2 expim(const Decomp2& d, int sign) {
  if (sign != 1 && sign != -1) throw InputError("expim sign must be +1 or -1");
  double theta = 0.0;
  double p = 1.0;
  double q = 1.0;
  std::visit(Overloaded{[&](const Repeated& s) { theta = s.lambda0; },
                        [&](const ComplexPair& s) {
                          theta = s.alpha;
                          p = std::cosh(s.omega);
                          q = std::sinh(s.omega);
                        },
                        [&](const DistinctReal& s) {
                          theta = s.alpha;
                          p = std::cos(s.beta);
                          q = std::sin(s.beta);
                        }},
             d.spectrum);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double sg = static_cast<double>(sign);
  return {checked(combine(c * p, -s * q, d.aux), 1.0),
          checked(combine(sg * (s * p), sg * (c * q), d.aux), 1.0)};
}

}  // namespace matexp
