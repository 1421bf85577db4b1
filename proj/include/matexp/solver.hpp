#pragma once

// Linear constant-coefficient IVPs x'(t) = A x(t), x(0) = x0, solved as
// x(t) = e^{tA} x0, plus the mode expansion
//   x(t) = sum coeff * t^k * e^{rho t} * {1 | cos(omega t) | sin(omega t)}
// obtained by applying each matrix piece of the exponential formula to x0.

#include <string>
#include <vector>

#include "matexp/linalg.hpp"
#include "matexp/spectrum.hpp"

namespace matexp {

enum class ModeKind { plain, cos, sin };

template <std::size_t N>
struct Mode {
  double rho = 0.0;
  int k = 0;
  double omega = 0.0;
  ModeKind kind = ModeKind::plain;
  Vec<N> coeff;
};

template <std::size_t N>
struct ClosedFormSolution {
  std::string case_name;
  std::vector<Mode<N>> modes;
  Vec<N> x0;
  /// Largest relative gap between the mode sum and solve_ivp over
  /// t in {-2, -1, 0, 1, 2}; expected at or below 1e-12 for well-classified A.
  double consistency = 0.0;
};

template <std::size_t N>
struct SamplePoint {
  double t;
  Vec<N> x;
};

Vec2 solve_ivp(const Mat2& a, const Vec2& x0, double t, double tol = kDefaultTol);
Vec3 solve_ivp(const Mat3& a, const Vec3& x0, double t, double tol = kDefaultTol);

ClosedFormSolution<2> closed_form(const Mat2& a, const Vec2& x0, double tol = kDefaultTol);
ClosedFormSolution<3> closed_form(const Mat3& a, const Vec3& x0, double tol = kDefaultTol);

/// Mode sum at t. Throws Overflow when the value is not finite.
template <std::size_t N>
Vec<N> evaluate(const ClosedFormSolution<N>& sol, double t);

/// Evaluates every grid point; points are independent and run in parallel
/// under OpenMP. Output order follows the grid. Throws Overflow for the first
/// offending grid point.
template <std::size_t N>
std::vector<SamplePoint<N>> sample(const ClosedFormSolution<N>& sol, const std::vector<double>& grid);

/// Single-threaded reference for sample().
template <std::size_t N>
std::vector<SamplePoint<N>> sample_serial(const ClosedFormSolution<N>& sol,
                                          const std::vector<double>& grid);

/// start, start + h, ..., up to stop (inclusive within h * 1e-9).
/// Throws InputError unless h > 0, start <= stop and all values are finite.
std::vector<double> make_grid(double start, double stop, double step);

}  // namespace matexp
