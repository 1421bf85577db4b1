#include "matexp/canonical.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "matexp/overloaded.hpp"

namespace matexp {
namespace {

// Relative drop tolerance for rank and nonzeroness decisions.
constexpr double kDrop = 1e-10;

template <std::size_t N>
using OptVec = std::optional<Vec<N>>;

template <std::size_t N>
double dot(const Vec<N>& a, const Vec<N>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

// m is treated as O when it is tiny relative to the reference magnitude of A
// raised to the degree of m (N ~ A, N^2 ~ A^2).
template <std::size_t N>
bool negligible(const Mat<N>& m, const Mat<N>& a, int degree) {
  const double ref = std::pow(std::max(1.0, max_abs(a)), degree);
  return max_abs(m) <= kDrop * ref;
}

template <std::size_t N>
bool annihilates(const Mat<N>& m, const Vec<N>& x) {
  return max_abs(m * x) <= kDrop * max_abs(m) * max_abs(x);
}

template <std::size_t N>
Vec<N> probe(const Mat<N>& m, const OptVec<N>& given, const char* what) {
  if (given) {
    if (annihilates(m, *given))
      throw ProbeExhausted(std::string("probe vector is annihilated by ") + what);
    return *given;
  }
  for (std::size_t i = 0; i < N; ++i) {
    const Vec<N> e = Vec<N>::basis(i);
    if (!annihilates(m, e)) return e;
  }
  throw ProbeExhausted(std::string("no standard basis vector survives ") + what);
}

template <std::size_t N>
std::vector<Vec<N>> image(const Mat<N>& m) {
  return column_basis(m, kDrop * max_abs(m));
}

template <std::size_t N>
EigenEntry<N> real_entry(double lambda, std::vector<Vec<N>> basis, std::string source) {
  EigenEntry<N> e;
  e.re = lambda;
  e.basis = std::move(basis);
  e.source = std::move(source);
  return e;
}

template <std::size_t N>
EigenEntry<N> pair_entry(double alpha, double omega, const Vec<N>& u, const Vec<N>& w,
                         const Vec<N>& vec_re, const Vec<N>& vec_im, std::string source) {
  EigenEntry<N> e;
  e.re = alpha;
  e.im = omega;
  e.basis = {u, w};
  e.source = std::move(source);
  e.vec_re = vec_re;
  e.vec_im = vec_im;
  return e;
}

template <std::size_t N>
std::vector<Vec<N>> standard_basis() {
  std::vector<Vec<N>> b;
  for (std::size_t i = 0; i < N; ++i) b.push_back(Vec<N>::basis(i));
  return b;
}

template <std::size_t N>
CanonicalPair<N> finish(const Mat<N>& a, const Mat<N>& t, const Mat<N>& c, CanonicalForm form) {
  CanonicalPair<N> p;
  p.t = t;
  p.c = c;
  p.t_inv = invert(t);
  p.form = form;
  p.residual = max_abs(a - t * c * p.t_inv);
  return p;
}

CanonicalPair<2> canonical2(const Decomp2& d, const Mat2& a, const OptVec<2>& gx,
                            const OptVec<2>& gy) {
  const Mat2 id = Mat2::identity();
  const Mat2& x_aux = d.aux;
  return std::visit(
      Overloaded{[&](const Repeated& s) {
                   if (negligible(x_aux, a, 1))
                     return finish(a, id, s.lambda0 * id, CanonicalForm::diagonal);
                   const Vec2 x = probe(x_aux, gx, "N");
                   return finish(a, Mat2::from_columns({x_aux * x, x}),
                                 Mat2{{s.lambda0, 1.0}, {0.0, s.lambda0}}, CanonicalForm::jordan2);
                 },
                 [&](const ComplexPair& s) {
                   const Vec2 x = probe(x_aux, gx, "J");
                   return finish(a, Mat2::from_columns({x_aux * x, x}),
                                 Mat2{{s.alpha, s.omega}, {-s.omega, s.alpha}},
                                 CanonicalForm::conformal);
                 },
                 [&](const DistinctReal& s) {
                   const Mat2 plus = id + x_aux;
                   const Mat2 minus = id - x_aux;
                   const Vec2 x = probe(plus, gx, "I + J");
                   const Vec2 y = probe(minus, gy, "I - J");
                   return finish(a, Mat2::from_columns({plus * x, minus * y}),
                                 Mat2::diagonal({s.lambda1, s.lambda2}), CanonicalForm::diagonal);
                 }},
      d.spectrum);
}

CanonicalPair<3> canonical3(const Decomp3& d, const Mat3& a, const OptVec<3>& gx,
                            const OptVec<3>& gy) {
  const Mat3 id = Mat3::identity();
  const Mat3& p = d.projection;
  const Mat3& x_aux = d.aux;
  return std::visit(
      Overloaded{
          [&](const Triple& s) {
            const double l = s.lambda0;
            if (negligible(x_aux, a, 1)) return finish(a, id, l * id, CanonicalForm::diagonal);
            if (!negligible(d.aux_sq, a, 2)) {
              const Vec3 x = probe(d.aux_sq, gx, "N^2");
              return finish(a, Mat3::from_columns({d.aux_sq * x, x_aux * x, x}),
                            Mat3{{l, 1.0, 0.0}, {0.0, l, 1.0}, {0.0, 0.0, l}},
                            CanonicalForm::jordan3);
            }
            // N^2 = O, N != O: a 2-block plus one more eigenvector from ker(N).
            const Vec3 x = probe(x_aux, gx, "N");
            const Vec3 u = x_aux * x;
            std::vector<Vec3> candidates =
                gy ? std::vector<Vec3>{*gy} : null_basis(x_aux, kDrop * max_abs(x_aux));
            for (const Vec3& y : candidates) {
              if (!annihilates(x_aux, y)) continue;
              const Mat3 pair = Mat3::from_columns({u, y, Vec3{}});
              if (column_basis(pair, kDrop * max_abs(pair)).size() == 2)
                return finish(a, Mat3::from_columns({u, x, y}),
                              Mat3{{l, 1.0, 0.0}, {0.0, l, 0.0}, {0.0, 0.0, l}},
                              CanonicalForm::jordan2);
            }
            throw ProbeExhausted("no kernel vector of N independent of Nx");
          },
          [&](const DoubleSimple& s) {
            const Vec3 y = probe(p, gy, "P");
            const Mat3 c = Mat3::diagonal({s.lambda0, s.lambda0, s.lambda3});
            if (negligible(x_aux, a, 1)) {
              const auto cols = image(Mat3(id - p));
              if (cols.size() != 2) throw ProbeExhausted("Im(I - P) is not two-dimensional");
              return finish(a, Mat3::from_columns({cols[0], cols[1], p * y}), c,
                            CanonicalForm::diagonal);
            }
            const Mat3 shifted3 = a - s.lambda3 * id;
            const Mat3 m = (a - s.lambda0 * id) * shifted3;
            const Vec3 x = probe(m, gx, "(A - l0 I)(A - l3 I)");
            return finish(a, Mat3::from_columns({m * x, shifted3 * x, p * y}),
                          Mat3{{s.lambda0, 1.0, 0.0}, {0.0, s.lambda0, 0.0}, {0.0, 0.0, s.lambda3}},
                          CanonicalForm::jordan2);
          },
          [&](const ComplexReal& s) {
            const Vec3 x = probe(x_aux, gx, "J");
            const Vec3 y = probe(p, gy, "P");
            return finish(a, Mat3::from_columns({square(x_aux) * x, x_aux * x, p * y}),
                          Mat3{{s.alpha, s.omega, 0.0}, {-s.omega, s.alpha, 0.0}, {0.0, 0.0, s.lambda3}},
                          CanonicalForm::conformal);
          },
          [&](const ThreeDistinct& s) {
            const Mat3 j2 = square(x_aux);
            const Mat3 plus = x_aux + j2;
            const Mat3 minus = x_aux - j2;
            const Vec3 v1 = plus * probe(plus, gx, "J + J^2");
            const Vec3 v2 = minus * probe(minus, gx, "J - J^2");
            const Vec3 v3 = p * probe(p, gy, "P");
            return finish(a, Mat3::from_columns({v1, v2, v3}),
                          Mat3::diagonal({s.lambda1, s.lambda2, s.lambda3}),
                          CanonicalForm::diagonal);
          }},
      d.spectrum);
}

}  // namespace

template <std::size_t N>
double CanonicalPair<N>::residual_bound(const Mat<N>& a) const {
  return 1e-9 * std::max(1.0, max_abs(a)) * max_abs(t) * max_abs(t_inv);
}

template struct CanonicalPair<2>;
template struct CanonicalPair<3>;

template <std::size_t N>
std::vector<Vec<N>> column_basis(const Mat<N>& m, double drop) {
  std::vector<Vec<N>> selected;
  std::vector<std::pair<std::size_t, std::array<double, N>>> reduced;
  for (std::size_t j = 0; j < N; ++j) {
    std::array<double, N> v = m.column(j).data();
    for (const auto& [row, r] : reduced) {
      const double f = v[row] / r[row];
      for (std::size_t i = 0; i < N; ++i) v[i] -= f * r[i];
    }
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < N; ++i)
      if (std::abs(v[i]) > std::abs(v[pivot])) pivot = i;
    if (std::abs(v[pivot]) <= drop) continue;
    reduced.emplace_back(pivot, v);
    selected.push_back(m.column(j));
  }
  return selected;
}

template <std::size_t N>
std::vector<Vec<N>> null_basis(const Mat<N>& m, double drop) {
  std::array<std::array<double, N>, N> r{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i][j] = m(i, j);

  std::array<int, N> pivot_row_of_col;
  pivot_row_of_col.fill(-1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < N && row < N; ++col) {
    std::size_t best = row;
    for (std::size_t i = row + 1; i < N; ++i)
      if (std::abs(r[i][col]) > std::abs(r[best][col])) best = i;
    if (std::abs(r[best][col]) <= drop) continue;
    std::swap(r[row], r[best]);
    const double piv = r[row][col];
    for (double& x : r[row]) x /= piv;
    for (std::size_t i = 0; i < N; ++i) {
      if (i == row) continue;
      const double f = r[i][col];
      for (std::size_t k = 0; k < N; ++k) r[i][k] -= f * r[row][k];
    }
    pivot_row_of_col[col] = static_cast<int>(row);
    ++row;
  }

  std::vector<Vec<N>> basis;
  for (std::size_t free = 0; free < N; ++free) {
    if (pivot_row_of_col[free] >= 0) continue;
    std::array<double, N> v{};
    v[free] = 1.0;
    for (std::size_t col = 0; col < N; ++col)
      if (pivot_row_of_col[col] >= 0) v[col] = -r[static_cast<std::size_t>(pivot_row_of_col[col])][free];
    basis.emplace_back(v);
  }
  return basis;
}

template std::vector<Vec2> column_basis(const Mat2&, double);
template std::vector<Vec3> column_basis(const Mat3&, double);
template std::vector<Vec2> null_basis(const Mat2&, double);
template std::vector<Vec3> null_basis(const Mat3&, double);

EigenReport<2> eigen(const Decomp2& d, const Mat2& a) {
  const Mat2 id = Mat2::identity();
  const Mat2& j = d.aux;
  EigenReport<2> report;
  std::visit(Overloaded{[&](const Repeated& s) {
                          if (negligible(j, a, 1))
                            report.entries.push_back(
                                real_entry(s.lambda0, standard_basis<2>(), "I (A = l0 I)"));
                          else
                            report.entries.push_back(real_entry(s.lambda0, image(j), "Im(N)"));
                        },
                        [&](const ComplexPair& s) {
                          const Vec2 x = probe(j, OptVec<2>{}, "J");
                          const Vec2 jx = j * x;
                          report.entries.push_back(
                              pair_entry(s.alpha, s.omega, jx, x, x, -1.0 * jx, "span{Jx, x}"));
                        },
                        [&](const DistinctReal& s) {
                          report.entries.push_back(real_entry(s.lambda1, image(Mat2(id + j)), "Im(I+J)"));
                          report.entries.push_back(real_entry(s.lambda2, image(Mat2(id - j)), "Im(I-J)"));
                        }},
             d.spectrum);
  return report;
}

EigenReport<3> eigen(const Decomp3& d, const Mat3& a) {
  const Mat3 id = Mat3::identity();
  const Mat3& p = d.projection;
  const Mat3& x_aux = d.aux;
  EigenReport<3> report;
  auto& out = report.entries;
  std::visit(
      Overloaded{[&](const Triple& s) {
                   if (negligible(x_aux, a, 1))
                     out.push_back(real_entry(s.lambda0, standard_basis<3>(), "I (A = l0 I)"));
                   else if (!negligible(d.aux_sq, a, 2))
                     out.push_back(real_entry(s.lambda0, image(d.aux_sq), "Im(N^2)"));
                   else
                     out.push_back(real_entry(
                         s.lambda0, null_basis(x_aux, kDrop * max_abs(x_aux)), "ker(N)"));
                 },
                 [&](const DoubleSimple& s) {
                   if (negligible(x_aux, a, 1))
                     out.push_back(real_entry(s.lambda0, image(Mat3(id - p)), "Im(I-P)"));
                   else
                     out.push_back(real_entry(s.lambda0, image(x_aux), "Im(N)"));
                   out.push_back(real_entry(s.lambda3, image(p), "Im(P)"));
                 },
                 [&](const ComplexReal& s) {
                   const Vec3 x = probe(x_aux, OptVec<3>{}, "J");
                   const Vec3 jx = x_aux * x;
                   const Vec3 j2x = x_aux * jx;
                   out.push_back(
                       pair_entry(s.alpha, s.omega, j2x, jx, jx, -1.0 * j2x, "span{J^2x, Jx}"));
                   out.push_back(real_entry(s.lambda3, image(p), "Im(P)"));
                 },
                 [&](const ThreeDistinct& s) {
                   const Mat3 j2 = square(x_aux);
                   out.push_back(real_entry(s.lambda1, image(Mat3(x_aux + j2)), "Im(J+J^2)"));
                   out.push_back(real_entry(s.lambda2, image(Mat3(x_aux - j2)), "Im(J-J^2)"));
                   out.push_back(real_entry(s.lambda3, image(p), "Im(P)"));
                 }},
      d.spectrum);
  return report;
}

CanonicalPair<2> canonical(const Decomp2& d, const Mat2& a) { return canonical2(d, a, {}, {}); }
CanonicalPair<3> canonical(const Decomp3& d, const Mat3& a) { return canonical3(d, a, {}, {}); }
CanonicalPair<2> canonical(const Decomp2& d, const Mat2& a, const Vec2& x, const Vec2& y) {
  return canonical2(d, a, x, y);
}
CanonicalPair<3> canonical(const Decomp3& d, const Mat3& a, const Vec3& x, const Vec3& y) {
  return canonical3(d, a, x, y);
}

template <std::size_t N>
Mat<N> exp_canonical(const CanonicalPair<N>& p, double t) {
  const Mat<N>& c = p.c;
  std::array<double, N * N> e{};
  auto at = [&e](std::size_t i, std::size_t j) -> double& { return e[i * N + j]; };
  for (std::size_t i = 0; i < N; ++i) at(i, i) = std::exp(c(i, i) * t);
  switch (p.form) {
    case CanonicalForm::diagonal:
      break;
    case CanonicalForm::jordan2:
      at(0, 1) = t * at(0, 0);
      break;
    case CanonicalForm::jordan3:
      at(0, 1) = t * at(0, 0);
      at(1, 2) = t * at(0, 0);
      at(0, 2) = t * t / 2.0 * at(0, 0);
      break;
    case CanonicalForm::conformal: {
      const double g = std::exp(c(0, 0) * t);
      const double w = c(0, 1) * t;
      at(0, 0) = g * std::cos(w);
      at(0, 1) = g * std::sin(w);
      at(1, 0) = -g * std::sin(w);
      at(1, 1) = g * std::cos(w);
      break;
    }
  }
  return Mat<N>(e);
}

template Mat2 exp_canonical(const CanonicalPair<2>&, double);
template Mat3 exp_canonical(const CanonicalPair<3>&, double);

template <std::size_t N>
double eigen_defect(const Mat<N>& a, const EigenEntry<N>& e) {
  double worst = 0.0;
  if (e.im == 0.0) {
    for (const auto& v : e.basis)
      worst = std::max(worst, max_abs(a * v - e.re * v) / max_abs(v));
    return worst;
  }
  const Vec<N>& vr = e.vec_re;
  const Vec<N>& vi = e.vec_im;
  const double vs = std::max(max_abs(vr), max_abs(vi));
  worst = std::max(max_abs(a * vr - (e.re * vr - e.im * vi)),
                   max_abs(a * vi - (e.re * vi + e.im * vr))) /
          vs;
  // Invariance of the real plane: project A u onto span{b0, b1}.
  const Vec<N>& b0 = e.basis.at(0);
  const Vec<N>& b1 = e.basis.at(1);
  const double g00 = dot(b0, b0);
  const double g01 = dot(b0, b1);
  const double g11 = dot(b1, b1);
  const double gdet = g00 * g11 - g01 * g01;
  for (const auto& u : e.basis) {
    const Vec<N> au = a * u;
    const double r0 = dot(b0, au);
    const double r1 = dot(b1, au);
    const double c0 = (g11 * r0 - g01 * r1) / gdet;
    const double c1 = (g00 * r1 - g01 * r0) / gdet;
    worst = std::max(worst, max_abs(au - c0 * b0 - c1 * b1) / max_abs(u));
  }
  return worst;
}

template double eigen_defect(const Mat2&, const EigenEntry<2>&);
template double eigen_defect(const Mat3&, const EigenEntry<3>&);

}  // namespace matexp
