#include "matexp/spectrum.hpp"

#include "matexp/overloaded.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace matexp {
namespace {

// Raw roots of the monic cubic before multiplicity decisions.
struct CubicRoots {
  bool complex_pair = false;
  // complex_pair: real root in x[0], the pair is re +- i*im.
  // otherwise: three real roots ascending.
  std::array<double, 3> x{};
  double re = 0.0;
  double im = 0.0;
};

double derivative(const CharPoly3& p, double x) { return (3.0 * x - 2.0 * p.tr) * x + p.m; }

// One guarded Newton step: kept only if it does not increase |f|.
double polish(const CharPoly3& p, double x) {
  const double f = evaluate(p, x);
  const double df = derivative(p, x);
  if (f == 0.0 || df == 0.0) return x;
  const double y = x - f / df;
  return (std::isfinite(y) && std::abs(evaluate(p, y)) <= std::abs(f)) ? y : x;
}

std::complex<double> polish(const CharPoly3& p, std::complex<double> z) {
  auto f = [&](std::complex<double> w) { return ((w - p.tr) * w + p.m) * w - p.det; };
  auto df = [&](std::complex<double> w) { return (3.0 * w - 2.0 * p.tr) * w + p.m; };
  const auto fz = f(z);
  const auto d = df(z);
  if (fz == 0.0 || d == 0.0) return z;
  const auto w = z - fz / d;
  return (std::isfinite(w.real()) && std::isfinite(w.imag()) && std::abs(f(w)) <= std::abs(fz)) ? w
                                                                                                : z;
}

// Shift x = mu + tr/3 removes the quadratic term (the characteristic
// polynomial of A - (tr/3) I): mu^3 + p mu + q.
CubicRoots solve_cubic(const CharPoly3& c) {
  const double shift = c.tr / 3.0;
  const double p = c.m - c.tr * shift;
  const double q = -c.det + shift * c.m - 2.0 * shift * shift * shift;
  // Discriminant of the depressed cubic: -(4p^3 + 27q^2).
  const double delta = -(4.0 * p * p * p + 27.0 * q * q);

  CubicRoots r;
  if (delta > 0.0) {
    // Three distinct real roots (p < 0): trigonometric form.
    const double amp = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * amp), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k)
      r.x[k] = shift + amp * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0);
    for (double& x : r.x) x = polish(c, x);
    std::sort(r.x.begin(), r.x.end());
    return r;
  }

  // One real root and a conjugate pair (possibly coincident reals when
  // delta == 0): Cardano with the cancellation-free choice of cube root.
  const double d = std::max(0.0, q * q / 4.0 + p * p * p / 27.0);
  const double u = std::cbrt(-q / 2.0 - std::copysign(std::sqrt(d), q));
  const double v = (u != 0.0) ? -p / (3.0 * u) : 0.0;
  const double real_root = polish(c, shift + u + v);
  const double im = std::sqrt(3.0) / 2.0 * std::abs(u - v);
  const double re = shift - (u + v) / 2.0;

  if (im == 0.0) {
    r.x = {real_root, polish(c, re), polish(c, re)};
    std::sort(r.x.begin(), r.x.end());
    return r;
  }
  const auto z = polish(c, std::complex<double>(re, im));
  r.complex_pair = true;
  r.x[0] = real_root;
  r.re = z.real();
  r.im = std::abs(z.imag());
  return r;
}

}  // namespace

CharPoly2 char_poly(const Mat2& a) {
  const double tr = trace(a);
  const double d = det(a);
  return {tr, d, tr * tr - 4.0 * d};
}

CharPoly3 char_poly(const Mat3& a) { return {trace(a), minor_sum(a), det(a)}; }

double evaluate(const CharPoly2& p, double x) { return (x - p.tr) * x + p.det; }
double evaluate(const CharPoly3& p, double x) { return ((x - p.tr) * x + p.m) * x - p.det; }

double root_scale(const CharPoly2& p) {
  return std::max({1.0, std::abs(p.tr), std::sqrt(std::abs(p.det))});
}

double root_scale(const CharPoly3& p) {
  return std::max({1.0, std::abs(p.tr), std::sqrt(std::abs(p.m)), std::cbrt(std::abs(p.det))});
}

Spectrum2 classify(const CharPoly2& p, double tol) {
  const double scale = root_scale(p);
  const double alpha = p.tr / 2.0;
  if (std::abs(p.disc) <= tol * scale * scale) return Repeated{alpha};
  if (p.disc < 0.0) return ComplexPair{alpha, std::sqrt(-p.disc) / 2.0};

  const double half_root = std::sqrt(p.disc) / 2.0;
  const double big = alpha + std::copysign(half_root, p.tr);
  const double small = (big != 0.0) ? p.det / big : -big;
  return DistinctReal{std::max(big, small), std::min(big, small), alpha, half_root};
}

Spectrum3 classify(const CharPoly3& p, double tol) {
  const double scale = root_scale(p);
  const double thr = tol * scale * scale;
  const CubicRoots r = solve_cubic(p);
  auto close = [thr](double a, double b) { return (a - b) * (a - b) <= thr; };

  if (r.complex_pair) {
    const double lambda3 = r.x[0];
    if (4.0 * r.im * r.im > thr) return ComplexReal{r.re, r.im, lambda3};
    // The pair collapses onto a double real root.
    if (close(r.re, lambda3)) return Triple{p.tr / 3.0};
    return DoubleSimple{(p.tr - lambda3) / 2.0, lambda3};
  }

  const auto [a, b, c] = r.x;
  const bool low = close(a, b);
  const bool high = close(b, c);
  if (low && high) return Triple{p.tr / 3.0};
  if (low) return DoubleSimple{(p.tr - c) / 2.0, c};
  if (high) return DoubleSimple{(p.tr - a) / 2.0, a};

  // lambda3 is the root farthest from the midpoint of the other two; ties go to
  // the largest root.
  const std::array<double, 3> xs = {c, b, a};  // descending, so ties favour larger
  std::size_t pick = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double mid = (xs[(i + 1) % 3] + xs[(i + 2) % 3]) / 2.0;
    const double sep = std::abs(xs[i] - mid);
    if (sep > best + 1e-12 * scale) {
      best = sep;
      pick = i;
    }
  }
  const double lambda3 = xs[pick];
  const double u = xs[(pick + 1) % 3];
  const double w = xs[(pick + 2) % 3];
  const double l1 = std::max(u, w);
  const double l2 = std::min(u, w);
  return ThreeDistinct{l1, l2, lambda3, (l1 + l2) / 2.0, (l1 - l2) / 2.0};
}

double classification_margin(const CharPoly2& p) {
  const double s = root_scale(p);
  return std::abs(p.disc) / (s * s);
}

double classification_margin(const CharPoly3& p) {
  const double s = root_scale(p);
  const CubicRoots r = solve_cubic(p);
  double m;
  if (r.complex_pair) {
    const double d = r.re - r.x[0];
    m = std::min(4.0 * r.im * r.im, d * d + r.im * r.im);
  } else {
    const double d1 = r.x[1] - r.x[0];
    const double d2 = r.x[2] - r.x[1];
    m = std::min(d1 * d1, d2 * d2);
  }
  return m / (s * s);
}

Spectrum2 shifted(const Spectrum2& s, double a) {
  return std::visit(
      Overloaded{
          [a](const Repeated& x) -> Spectrum2 { return Repeated{x.lambda0 + a}; },
          [a](const ComplexPair& x) -> Spectrum2 { return ComplexPair{x.alpha + a, x.omega}; },
          [a](const DistinctReal& x) -> Spectrum2 {
            return DistinctReal{x.lambda1 + a, x.lambda2 + a, x.alpha + a, x.beta};
          }},
      s);
}

Spectrum3 shifted(const Spectrum3& s, double a) {
  return std::visit(
      Overloaded{
          [a](const Triple& x) -> Spectrum3 { return Triple{x.lambda0 + a}; },
          [a](const DoubleSimple& x) -> Spectrum3 {
            return DoubleSimple{x.lambda0 + a, x.lambda3 + a};
          },
          [a](const ComplexReal& x) -> Spectrum3 {
            return ComplexReal{x.alpha + a, x.omega, x.lambda3 + a};
          },
          [a](const ThreeDistinct& x) -> Spectrum3 {
            return ThreeDistinct{x.lambda1 + a, x.lambda2 + a, x.lambda3 + a, x.alpha + a, x.beta};
          }},
      s);
}

std::string_view case_name(const Spectrum2& s) {
  return std::visit(Overloaded{[](const Repeated&) { return "repeated"; },
                               [](const ComplexPair&) { return "complex-pair"; },
                               [](const DistinctReal&) { return "distinct-real"; }},
                    s);
}

std::string_view case_name(const Spectrum3& s) {
  return std::visit(Overloaded{[](const Triple&) { return "triple"; },
                               [](const DoubleSimple&) { return "double-simple"; },
                               [](const ComplexReal&) { return "complex-real"; },
                               [](const ThreeDistinct&) { return "three-distinct"; }},
                    s);
}

}  // namespace matexp
