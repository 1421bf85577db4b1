#pragma once

// Fixed-size dense real matrices and vectors for the 2x2 and 3x3 cases.
//
// Storage is row-major. Every value is finite: the checked constructors reject
// NaN/Inf with NonFiniteEntry, and arithmetic on finite values is only
// re-checked where a caller can overflow (matrix functions test their results).
//
// Characteristic polynomials use the monic convention
//   2x2: f(x) = x^2 - tr x + det
//   3x3: f(x) = x^3 - tr x^2 + minor_sum x - det
// which is (-1)^n det(A - xI); the roots are the same.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>

#include "matexp/errors.hpp"

namespace matexp {

template <std::size_t N>
class Vec {
  static_assert(N == 2 || N == 3, "only 2- and 3-vectors are supported");

 public:
  static constexpr std::size_t size = N;

  constexpr Vec() = default;

  Vec(std::initializer_list<double> values) {
    if (values.size() != N) throw InputError("vector has the wrong number of components");
    std::copy(values.begin(), values.end(), v_.begin());
    check();
  }

  explicit Vec(const std::array<double, N>& values) : v_(values) { check(); }

  static Vec basis(std::size_t i) {
    Vec e;
    e.v_[i] = 1.0;
    return e;
  }

  double operator[](std::size_t i) const { return v_[i]; }
  const std::array<double, N>& data() const { return v_; }

  bool is_finite() const {
    return std::all_of(v_.begin(), v_.end(), [](double x) { return std::isfinite(x); });
  }

  friend Vec operator+(const Vec& a, const Vec& b) {
    Vec r;
    for (std::size_t i = 0; i < N; ++i) r.v_[i] = a.v_[i] + b.v_[i];
    return r;
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    Vec r;
    for (std::size_t i = 0; i < N; ++i) r.v_[i] = a.v_[i] - b.v_[i];
    return r;
  }
  friend Vec operator*(double c, const Vec& a) {
    Vec r;
    for (std::size_t i = 0; i < N; ++i) r.v_[i] = c * a.v_[i];
    return r;
  }
  friend bool operator==(const Vec&, const Vec&) = default;

 private:
  void check() const {
    if (!is_finite()) throw NonFiniteEntry();
  }

  std::array<double, N> v_{};

  template <std::size_t M>
  friend class Mat;
};

template <std::size_t N>
class Mat {
  static_assert(N == 2 || N == 3, "only 2x2 and 3x3 matrices are supported");

 public:
  static constexpr std::size_t order = N;

  /// Zero matrix.
  constexpr Mat() = default;

  /// Row-wise construction, e.g. Mat2{{3, 2}, {-8, -5}}.
  Mat(std::initializer_list<std::initializer_list<double>> rows) {
    if (rows.size() != N) throw InputError("matrix has the wrong number of rows");
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != N) throw InputError("matrix row has the wrong number of entries");
      std::copy(row.begin(), row.end(), a_.begin() + static_cast<std::ptrdiff_t>(i * N));
      ++i;
    }
    check();
  }

  explicit Mat(const std::array<double, N * N>& row_major) : a_(row_major) { check(); }

  static Mat identity() {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m.a_[i * N + i] = 1.0;
    return m;
  }
  static Mat zero() { return Mat(); }

  static Mat diagonal(const std::array<double, N>& d) {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m.a_[i * N + i] = d[i];
    m.check();
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Mat from_columns(const std::array<Vec<N>, N>& cols) {
    Mat m;
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t i = 0; i < N; ++i) m.a_[i * N + j] = cols[j][i];
    return m;
  }

  double operator()(std::size_t i, std::size_t j) const { return a_[i * N + j]; }
  const std::array<double, N * N>& data() const { return a_; }

  Vec<N> column(std::size_t j) const {
    Vec<N> c;
    for (std::size_t i = 0; i < N; ++i) c.v_[i] = a_[i * N + j];
    return c;
  }

  bool is_finite() const {
    return std::all_of(a_.begin(), a_.end(), [](double x) { return std::isfinite(x); });
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    Mat r;
    for (std::size_t k = 0; k < N * N; ++k) r.a_[k] = a.a_[k] + b.a_[k];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    Mat r;
    for (std::size_t k = 0; k < N * N; ++k) r.a_[k] = a.a_[k] - b.a_[k];
    return r;
  }
  friend Mat operator-(const Mat& a) { return -1.0 * a; }
  friend Mat operator*(double c, const Mat& a) {
    Mat r;
    for (std::size_t k = 0; k < N * N; ++k) r.a_[k] = c * a.a_[k];
    return r;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < N; ++k) s += a.a_[i * N + k] * b.a_[k * N + j];
        r.a_[i * N + j] = s;
      }
    return r;
  }
  friend Vec<N> operator*(const Mat& a, const Vec<N>& v) { return a.apply(v); }
  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  void check() const {
    if (!is_finite()) throw NonFiniteEntry();
  }

  Vec<N> apply(const Vec<N>& v) const {
    Vec<N> r;
    for (std::size_t i = 0; i < N; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < N; ++k) s += a_[i * N + k] * v.v_[k];
      r.v_[i] = s;
    }
    return r;
  }

  std::array<double, N * N> a_{};
};

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;
using Mat2 = Mat<2>;
using Mat3 = Mat<3>;

/// e^{+-iA} and similar complex-valued results, split as re + i*im.
struct ComplexMat2 {
  Mat2 re;
  Mat2 im;
};

template <std::size_t N>
double trace(const Mat<N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += a(i, i);
  return s;
}

inline double det(const Mat2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

inline double det(const Mat3& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

/// Sum of the three principal 2x2 minors: the x-coefficient of the monic
/// characteristic cubic.
inline double minor_sum(const Mat3& a) {
  return (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) + (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) +
         (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1));
}

template <std::size_t N>
double max_abs(const Mat<N>& a) {
  double m = 0.0;
  for (double x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

template <std::size_t N>
double max_abs(const Vec<N>& v) {
  double m = 0.0;
  for (double x : v.data()) m = std::max(m, std::abs(x));
  return m;
}

template <std::size_t N>
Mat<N> square(const Mat<N>& a) {
  return a * a;
}

/// |det| at or below this value is treated as singular by invert().
template <std::size_t N>
double singularity_threshold(const Mat<N>& a) {
  const double m = max_abs(a);
  return 1e-12 * std::max(1.0, std::pow(m, static_cast<double>(N)));
}

/// Adjugate over determinant. Throws SingularMatrix below the threshold.
inline Mat2 invert(const Mat2& a) {
  const double d = det(a);
  if (std::abs(d) <= singularity_threshold(a)) throw SingularMatrix(d);
  return (1.0 / d) * Mat2{{a(1, 1), -a(0, 1)}, {-a(1, 0), a(0, 0)}};
}

inline Mat3 invert(const Mat3& a) {
  const double d = det(a);
  if (std::abs(d) <= singularity_threshold(a)) throw SingularMatrix(d);
  // Transposed cofactor matrix.
  const std::array<double, 9> adj = {
      a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1), a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2),
      a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1), a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2),
      a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0), a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2),
      a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0), a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1),
      a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)};
  return (1.0 / d) * Mat3(adj);
}

}  // namespace matexp
