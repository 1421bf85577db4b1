#pragma once

// Eigenvectors, canonical forms C and transition matrices T with A = T C T^-1,
// read off the auxiliary matrices of a decomposition.
//
// Eigenspaces are column spaces: Im(N) or Im(I +- J) for 2x2; Im(N^2), Im(N),
// Im(P), Im(J +- J^2) for 3x3. A complex pair is reported through the real
// invariant plane it spans, plus one complex eigenvector vec_re + i vec_im:
//   2x2: (I - iJ) x      for alpha + i omega
//   3x3: (J - iJ^2) x    for alpha + i omega
//
// Probe vectors x, y are the standard basis vectors tried in ascending order;
// T is therefore deterministic but not unique, so callers should compare
// reconstruction residuals rather than particular T matrices.

#include <optional>
#include <string>
#include <vector>

#include "matexp/linalg.hpp"
#include "matexp/matfun2.hpp"
#include "matexp/matfun3.hpp"

namespace matexp {

enum class CanonicalForm {
  diagonal,   // diag(...)
  jordan2,    // [[l,1],[0,l]] in the leading block, diagonal after
  jordan3,    // full 3x3 Jordan block
  conformal,  // [[a,w],[-w,a]] in the leading block, diagonal after
};

template <std::size_t N>
struct CanonicalPair {
  Mat<N> t;
  Mat<N> c;
  Mat<N> t_inv;
  CanonicalForm form = CanonicalForm::diagonal;
  double residual = 0.0;  // max_abs(A - T C T^-1)

  /// 1e-9 * max(1, max_abs(A)) * max_abs(T) * max_abs(T^-1).
  double residual_bound(const Mat<N>& a) const;
};

template <std::size_t N>
struct EigenEntry {
  double re = 0.0;
  double im = 0.0;  // > 0 marks the pair re +- i im
  std::vector<Vec<N>> basis;
  std::string source;
  Vec<N> vec_re{};  // complex pair only
  Vec<N> vec_im{};
};

template <std::size_t N>
struct EigenReport {
  std::vector<EigenEntry<N>> entries;
};

EigenReport<2> eigen(const Decomp2& d, const Mat2& a);
EigenReport<3> eigen(const Decomp3& d, const Mat3& a);

CanonicalPair<2> canonical(const Decomp2& d, const Mat2& a);
CanonicalPair<3> canonical(const Decomp3& d, const Mat3& a);

/// Same construction with caller-chosen probes instead of the basis scan.
/// Throws ProbeExhausted if a probe is annihilated.
CanonicalPair<2> canonical(const Decomp2& d, const Mat2& a, const Vec2& x, const Vec2& y);
CanonicalPair<3> canonical(const Decomp3& d, const Mat3& a, const Vec3& x, const Vec3& y);

/// e^{tC} computed blockwise in closed form.
template <std::size_t N>
Mat<N> exp_canonical(const CanonicalPair<N>& p, double t);

/// Largest defect of an eigen entry relative to the vector size:
/// |Av - lv| / |v| for real entries; for a pair, the larger of the complex
/// eigen-equation defect and the distance of A*basis from the basis plane.
template <std::size_t N>
double eigen_defect(const Mat<N>& a, const EigenEntry<N>& e);

/// Linearly independent columns of m (original columns, ascending), selected
/// by elimination with partial pivoting; entries at or below `drop` count as 0.
template <std::size_t N>
std::vector<Vec<N>> column_basis(const Mat<N>& m, double drop);

/// Basis of ker(m) from the reduced row-echelon form.
template <std::size_t N>
std::vector<Vec<N>> null_basis(const Mat<N>& m, double drop);

}  // namespace matexp
