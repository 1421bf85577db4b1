#include "matexp/oracle.hpp"

#include <cmath>

namespace matexp::oracle {
namespace {

void validate(const SeriesConfig& cfg) {
  if (!(cfg.target_tol > 0.0) || cfg.max_terms < 8 || cfg.squarings_cap < 0)
    throw InputError("invalid series configuration");
}

// Smallest s with m / 2^s <= 0.5, capped.
int squarings(double m, const SeriesConfig& cfg) {
  int s = 0;
  while (m > 0.5 && s < cfg.squarings_cap) {
    m /= 2.0;
    ++s;
  }
  return s;
}

void check_converged(int n, double last, const SeriesConfig& cfg) {
  if (n >= cfg.max_terms && last > 1e3 * cfg.target_tol) throw NotConverged(n, last);
}

struct Complex2 {
  Mat2 re;
  Mat2 im;
};

Complex2 mul(const Complex2& x, const Complex2& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

}  // namespace

template <std::size_t N>
Mat<N> expm_series(const Mat<N>& a, double t, const SeriesConfig& cfg) {
  validate(cfg);
  const Mat<N> ta = t * a;
  const int s = squarings(max_abs(ta), cfg);
  const Mat<N> x = std::ldexp(1.0, -s) * ta;

  Mat<N> sum = Mat<N>::identity();
  Mat<N> term = Mat<N>::identity();
  int n = 1;
  double last = 1.0;
  for (; n < cfg.max_terms; ++n) {
    term = (1.0 / n) * (term * x);
    sum = sum + term;
    last = max_abs(term);
    if (last <= cfg.target_tol) break;
  }
  check_converged(n, last, cfg);
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

template Mat2 expm_series(const Mat2&, double, const SeriesConfig&);
template Mat3 expm_series(const Mat3&, double, const SeriesConfig&);

Mat2 trig_series(const Mat2& a, Trig which, const SeriesConfig& cfg) {
  validate(cfg);
  const bool hyperbolic = which == Trig::cosh || which == Trig::sinh;
  const int s = squarings(max_abs(a), cfg);
  const Mat2 x = std::ldexp(1.0, -s) * a;
  const Mat2 x2 = x * x;
  const double sign = hyperbolic ? 1.0 : -1.0;

  // Even series for c = cos/cosh(x), odd series for sn = sin/sinh(x).
  Mat2 c = Mat2::identity();
  Mat2 sn = x;
  Mat2 even = Mat2::identity();
  Mat2 odd = x;
  int n = 1;
  double last = 1.0;
  for (; n < cfg.max_terms; ++n) {
    even = (sign / ((2.0 * n - 1.0) * (2.0 * n))) * (even * x2);
    odd = (sign / ((2.0 * n) * (2.0 * n + 1.0))) * (odd * x2);
    c = c + even;
    sn = sn + odd;
    last = std::max(max_abs(even), max_abs(odd));
    if (last <= cfg.target_tol) break;
  }
  check_converged(n, last, cfg);

  // cos 2y = 2 cos^2 y - I, cosh 2y = 2 cosh^2 y - I, sin 2y = 2 sin y cos y.
  for (int k = 0; k < s; ++k) {
    const Mat2 c2 = 2.0 * (c * c) - Mat2::identity();
    sn = 2.0 * (sn * c);
    c = c2;
  }
  return (which == Trig::cos || which == Trig::cosh) ? c : sn;
}

ComplexMat2 expim_series(const Mat2& a, int sign, const SeriesConfig& cfg) {
  validate(cfg);
  if (sign != 1 && sign != -1) throw InputError("expim sign must be +1 or -1");
  const int s = squarings(max_abs(a), cfg);
  // z = +-i A / 2^s has zero real part.
  const Complex2 z{Mat2::zero(), (sign * std::ldexp(1.0, -s)) * a};

  Complex2 sum{Mat2::identity(), Mat2::zero()};
  Complex2 term = sum;
  int n = 1;
  double last = 1.0;
  for (; n < cfg.max_terms; ++n) {
    term = mul(term, z);
    term = {(1.0 / n) * term.re, (1.0 / n) * term.im};
    sum = {sum.re + term.re, sum.im + term.im};
    last = std::max(max_abs(term.re), max_abs(term.im));
    if (last <= cfg.target_tol) break;
  }
  check_converged(n, last, cfg);
  for (int k = 0; k < s; ++k) sum = mul(sum, sum);
  return {sum.re, sum.im};
}

}  // namespace matexp::oracle
