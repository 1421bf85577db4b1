#include "matexp/matfun3.hpp"

#include <algorithm>
#include <cmath>

#include "matexp/overloaded.hpp"

namespace matexp {
namespace {

Mat3 checked(const Mat3& m, double t) {
  if (!m.is_finite()) throw Overflow(t);
  return m;
}

// e^{a t} (e^{b t} - g) with g near 1 given as g = 1 - h; expm1 keeps the
// difference accurate when b t is small.
double projection_weight(double a, double b, double h, double t) {
  const double bt = b * t;
  const double inner = (std::abs(bt) < 1.0) ? std::expm1(bt) + h : std::exp(bt) - (1.0 - h);
  return std::exp(a * t) * inner;
}

}  // namespace

double Decomp3::max_residual() const {
  double m = 0.0;
  for (const auto& r : residuals) m = std::max(m, r.value);
  return m;
}

double identity_tolerance(const Mat3& a) {
  const double s = std::max(1.0, max_abs(a));
  return 1e-9 * s * s * s;
}

Decomp3 decompose(const Mat3& a, double tol) {
  const CharPoly3 poly = char_poly(a);
  const double scale = root_scale(poly);
  const double hazard = tol * scale * scale;
  const Mat3 id = Mat3::identity();

  Decomp3 d{classify(poly, tol), {}, {}, {}, 0.0, 0.0, {}};

  // Builds P and the plane operator from B = A - shift I and
  // P = (B^2 + sigma I) / denom, plane = (B - gap P) / w.
  auto build = [&](double shift, double gap, double sigma, double w, const char* what) {
    const double denom = gap * gap + sigma;
    if (std::abs(denom) < hazard) throw DivisionHazard(what, denom);
    const Mat3 b = a - shift * id;
    d.shift = shift;
    d.gap = gap;
    d.projection = (1.0 / denom) * (square(b) + sigma * id);
    d.aux = (1.0 / w) * (b - gap * d.projection);
  };

  const Mat3& p = d.projection;
  const Mat3& x = d.aux;
  std::visit(
      Overloaded{
          [&](const Triple& s) {
            d.shift = s.lambda0;
            d.aux = a - s.lambda0 * id;
            d.aux_sq = square(d.aux);
            d.residuals = {{"N^3 = O", max_abs(d.aux_sq * d.aux)}};
          },
          [&](const DoubleSimple& s) {
            build(s.lambda0, s.lambda3 - s.lambda0, 0.0, 1.0, "(l3 - l0)^2");
            d.residuals = {{"P^2 = P", max_abs(square(p) - p)},
                           {"PN = O", max_abs(p * x)},
                           {"NP = O", max_abs(x * p)},
                           {"N^2 = O", max_abs(square(x))}};
          },
          [&](const ComplexReal& s) {
            build(s.alpha, s.lambda3 - s.alpha, s.omega * s.omega, s.omega,
                  "(l3 - alpha)^2 + omega^2");
            d.residuals = {{"P^2 = P", max_abs(square(p) - p)},
                           {"PJ = O", max_abs(p * x)},
                           {"JP = O", max_abs(x * p)},
                           {"J^2 = -(I - P)", max_abs(square(x) + (id - p))}};
          },
          [&](const ThreeDistinct& s) {
            build(s.alpha, s.lambda3 - s.alpha, -s.beta * s.beta, s.beta,
                  "(l3 - alpha)^2 - beta^2");
            d.residuals = {{"P^2 = P", max_abs(square(p) - p)},
                           {"PJ = O", max_abs(p * x)},
                           {"JP = O", max_abs(x * p)},
                           {"J^2 = I - P", max_abs(square(x) - (id - p))}};
          }},
      d.spectrum);

  const double s = std::max(1.0, max_abs(a));
  const double limit = 1e-6 * s * s * s;
  for (const auto& r : d.residuals)
    if (!(r.value <= limit)) throw DegenerateDecomposition(r.identity, r.value, limit);
  return d;
}

// Each case is written as c0 I + cp P + cx X (+ c2 N^2) so that t = 0 gives
// exactly I: c0 = 1 and every other weight is exactly 0.
Mat3 expm(const Decomp3& d, double t) {
  const Mat3 id = Mat3::identity();
  return std::visit(
      Overloaded{
          [&](const Triple& s) {
            const double e = std::exp(s.lambda0 * t);
            return checked(e * id + (e * t) * d.aux + (e * t * t / 2.0) * d.aux_sq, t);
          },
          [&](const DoubleSimple& s) {
            const double e = std::exp(s.lambda0 * t);
            const double wp = projection_weight(s.lambda0, d.gap, 0.0, t);
            return checked(e * id + wp * d.projection + (e * t) * d.aux, t);
          },
          [&](const ComplexReal& s) {
            const double e = std::exp(s.alpha * t);
            const double c = std::cos(s.omega * t);
            const double half = std::sin(s.omega * t / 2.0);
            const double wp = projection_weight(s.alpha, d.gap, 2.0 * half * half, t);
            return checked((e * c) * id + wp * d.projection + (e * std::sin(s.omega * t)) * d.aux,
                           t);
          },
          [&](const ThreeDistinct& s) {
            const double e = std::exp(s.alpha * t);
            const double c = std::cosh(s.beta * t);
            const double half = std::sinh(s.beta * t / 2.0);
            const double wp = projection_weight(s.alpha, d.gap, -2.0 * half * half, t);
            return checked((e * c) * id + wp * d.projection + (e * std::sinh(s.beta * t)) * d.aux,
                           t);
          }},
      d.spectrum);
}

Mat3 expm_three_exponentials(const Decomp3& d, double t) {
  const auto* s = std::get_if<ThreeDistinct>(&d.spectrum);
  if (s == nullptr) throw WrongCase("three-exponential form needs three distinct real roots");
  const Mat3 id = Mat3::identity();
  const Mat3& p = d.projection;
  const Mat3& j = d.aux;
  const Mat3 m = (0.5 * std::exp(s->lambda1 * t)) * (id + j - p) +
                 (0.5 * std::exp(s->lambda2 * t)) * (id - j - p) + std::exp(s->lambda3 * t) * p;
  return checked(m, t);
}

}  // namespace matexp
