#include "matexp/solver.hpp"

#include <cmath>
#include <optional>

#include "matexp/matfun2.hpp"
#include "matexp/matfun3.hpp"
#include "matexp/overloaded.hpp"

namespace matexp {
namespace {

template <std::size_t N>
void add(std::vector<Mode<N>>& modes, double rho, int k, double omega, ModeKind kind,
         const Vec<N>& coeff) {
  if (coeff == Vec<N>{}) return;
  modes.push_back({rho, k, omega, kind, coeff});
}

template <std::size_t N>
double spot_check(const ClosedFormSolution<N>& sol, const Mat<N>& a, double tol) {
  double worst = 0.0;
  for (double t : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
    // Large rates can overflow at |t| = 2 even when the caller only needs
    // small t; such points are skipped.
    Vec<N> ref;
    Vec<N> sum;
    try {
      ref = solve_ivp(a, sol.x0, t, tol);
      sum = evaluate(sol, t);
    } catch (const Overflow&) {
      continue;
    }
    const double diff = max_abs(sum - ref);
    const double size = max_abs(ref);
    worst = std::max(worst, size > 0.0 ? diff / size : diff);
  }
  return worst;
}

}  // namespace

Vec2 solve_ivp(const Mat2& a, const Vec2& x0, double t, double tol) {
  if (!std::isfinite(t)) throw InputError("t must be finite");
  return expm(decompose(a, tol), t) * x0;
}

Vec3 solve_ivp(const Mat3& a, const Vec3& x0, double t, double tol) {
  if (!std::isfinite(t)) throw InputError("t must be finite");
  return expm(decompose(a, tol), t) * x0;
}

ClosedFormSolution<2> closed_form(const Mat2& a, const Vec2& x0, double tol) {
  const Decomp2 d = decompose(a, tol);
  const Mat2 id = Mat2::identity();
  ClosedFormSolution<2> sol;
  sol.case_name = std::string(case_name(d.spectrum));
  sol.x0 = x0;
  auto& m = sol.modes;
  std::visit(Overloaded{[&](const Repeated& s) {
                          add(m, s.lambda0, 0, 0.0, ModeKind::plain, x0);
                          add(m, s.lambda0, 1, 0.0, ModeKind::plain, d.aux * x0);
                        },
                        [&](const ComplexPair& s) {
                          add(m, s.alpha, 0, s.omega, ModeKind::cos, x0);
                          add(m, s.alpha, 0, s.omega, ModeKind::sin, d.aux * x0);
                        },
                        [&](const DistinctReal& s) {
                          add(m, s.lambda1, 0, 0.0, ModeKind::plain, 0.5 * ((id + d.aux) * x0));
                          add(m, s.lambda2, 0, 0.0, ModeKind::plain, 0.5 * ((id - d.aux) * x0));
                        }},
             d.spectrum);
  sol.consistency = spot_check(sol, a, tol);
  return sol;
}

ClosedFormSolution<3> closed_form(const Mat3& a, const Vec3& x0, double tol) {
  const Decomp3 d = decompose(a, tol);
  const Mat3 id = Mat3::identity();
  const Mat3& p = d.projection;
  const Mat3& x = d.aux;
  ClosedFormSolution<3> sol;
  sol.case_name = std::string(case_name(d.spectrum));
  sol.x0 = x0;
  auto& m = sol.modes;
  std::visit(
      Overloaded{[&](const Triple& s) {
                   add(m, s.lambda0, 0, 0.0, ModeKind::plain, x0);
                   add(m, s.lambda0, 1, 0.0, ModeKind::plain, x * x0);
                   add(m, s.lambda0, 2, 0.0, ModeKind::plain, 0.5 * (d.aux_sq * x0));
                 },
                 [&](const DoubleSimple& s) {
                   add(m, s.lambda0, 0, 0.0, ModeKind::plain, (id - p) * x0);
                   add(m, s.lambda0, 1, 0.0, ModeKind::plain, x * x0);
                   add(m, s.lambda3, 0, 0.0, ModeKind::plain, p * x0);
                 },
                 [&](const ComplexReal& s) {
                   add(m, s.alpha, 0, s.omega, ModeKind::cos, (id - p) * x0);
                   add(m, s.alpha, 0, s.omega, ModeKind::sin, x * x0);
                   add(m, s.lambda3, 0, 0.0, ModeKind::plain, p * x0);
                 },
                 [&](const ThreeDistinct& s) {
                   add(m, s.lambda1, 0, 0.0, ModeKind::plain, 0.5 * ((id + x - p) * x0));
                   add(m, s.lambda2, 0, 0.0, ModeKind::plain, 0.5 * ((id - x - p) * x0));
                   add(m, s.lambda3, 0, 0.0, ModeKind::plain, p * x0);
                 }},
      d.spectrum);
  sol.consistency = spot_check(sol, a, tol);
  return sol;
}

template <std::size_t N>
Vec<N> evaluate(const ClosedFormSolution<N>& sol, double t) {
  std::array<double, N> acc{};
  for (const auto& mode : sol.modes) {
    double w = std::exp(mode.rho * t);
    if (mode.k >= 1) w *= t;
    if (mode.k >= 2) w *= t;
    if (mode.kind == ModeKind::cos) w *= std::cos(mode.omega * t);
    if (mode.kind == ModeKind::sin) w *= std::sin(mode.omega * t);
    for (std::size_t i = 0; i < N; ++i) acc[i] += w * mode.coeff[i];
  }
  for (double v : acc)
    if (!std::isfinite(v)) throw Overflow(t);
  return Vec<N>(acc);
}

template Vec2 evaluate(const ClosedFormSolution<2>&, double);
template Vec3 evaluate(const ClosedFormSolution<3>&, double);

template <std::size_t N>
std::vector<SamplePoint<N>> sample_serial(const ClosedFormSolution<N>& sol,
                                          const std::vector<double>& grid) {
  if (grid.empty()) throw InputError("time grid is empty");
  std::vector<SamplePoint<N>> out;
  out.reserve(grid.size());
  for (double t : grid) {
    if (!std::isfinite(t)) throw InputError("time grid contains a non-finite value");
    out.push_back({t, evaluate(sol, t)});
  }
  return out;
}

template <std::size_t N>
std::vector<SamplePoint<N>> sample(const ClosedFormSolution<N>& sol, const std::vector<double>& grid) {
  if (grid.empty()) throw InputError("time grid is empty");
  for (double t : grid)
    if (!std::isfinite(t)) throw InputError("time grid contains a non-finite value");

  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  std::vector<SamplePoint<N>> out(grid.size());
  std::vector<char> overflowed(grid.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    out[u].t = grid[u];
    try {
      out[u].x = evaluate(sol, grid[u]);
    } catch (const Overflow&) {
      overflowed[u] = 1;
    }
  }
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (overflowed[i]) throw Overflow(grid[i]);
  return out;
}

template std::vector<SamplePoint<2>> sample(const ClosedFormSolution<2>&, const std::vector<double>&);
template std::vector<SamplePoint<3>> sample(const ClosedFormSolution<3>&, const std::vector<double>&);
template std::vector<SamplePoint<2>> sample_serial(const ClosedFormSolution<2>&,
                                                   const std::vector<double>&);
template std::vector<SamplePoint<3>> sample_serial(const ClosedFormSolution<3>&,
                                                   const std::vector<double>&);

std::vector<double> make_grid(double start, double stop, double step) {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step))
    throw InputError("grid bounds must be finite");
  if (!(step > 0.0)) throw InputError("grid step must be positive");
  if (start > stop) throw InputError("grid start must not exceed stop");
  const double count = std::floor((stop - start) / step + 1e-9);
  if (count > 1e7) throw InputError("grid has too many points");
  std::vector<double> grid;
  const auto n = static_cast<std::size_t>(count);
  grid.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) grid.push_back(start + static_cast<double>(i) * step);
  return grid;
}

}  // namespace matexp
