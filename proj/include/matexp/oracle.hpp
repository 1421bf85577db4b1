#pragma once

// Reference matrix functions by truncated power series. Used only to verify
// the closed forms; depends on nothing but linalg.hpp.

#include "matexp/linalg.hpp"

namespace matexp::oracle {

struct SeriesConfig {
  double target_tol = 1e-13;
  int max_terms = 64;
  int squarings_cap = 40;
};

enum class Trig { cos, sin, cosh, sinh };

/// e^{tA}: scale tA by 2^-s until max_abs <= 0.5, sum the Taylor series, then
/// square s times. Throws NotConverged when max_terms is hit with the last
/// term above 1e3 * target_tol.
template <std::size_t N>
Mat<N> expm_series(const Mat<N>& a, double t, const SeriesConfig& cfg = {});

/// cos/sin/cosh/sinh by scaled even/odd series and double-angle recovery.
Mat2 trig_series(const Mat2& a, Trig which, const SeriesConfig& cfg = {});

/// e^{+-iA} by the complex Taylor series with scaling and squaring.
ComplexMat2 expim_series(const Mat2& a, int sign, const SeriesConfig& cfg = {});

extern template Mat2 expm_series(const Mat2&, double, const SeriesConfig&);
extern template Mat3 expm_series(const Mat3&, double, const SeriesConfig&);

}  // namespace matexp::oracle
