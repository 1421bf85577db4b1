#include "matexp/batch.hpp"

#include <cstddef>

#include "matexp/matfun2.hpp"
#include "matexp/matfun3.hpp"

namespace matexp {
namespace {

template <std::size_t N>
std::optional<Mat<N>> one(const Mat<N>& a, double t, double tol) {
  try {
    return expm(decompose(a, tol), t);
  } catch (const NumericalError&) {
    return std::nullopt;
  }
}

}  // namespace

template <std::size_t N>
std::vector<std::optional<Mat<N>>> expm_batch(const std::vector<Mat<N>>& as, double t, double tol) {
  std::vector<std::optional<Mat<N>>> out(as.size());
  const auto n = static_cast<std::ptrdiff_t>(as.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    out[u] = one(as[u], t, tol);
  }
  return out;
}

template <std::size_t N>
std::vector<std::optional<Mat<N>>> expm_batch_serial(const std::vector<Mat<N>>& as, double t,
                                                     double tol) {
  std::vector<std::optional<Mat<N>>> out;
  out.reserve(as.size());
  for (const auto& a : as) out.push_back(one(a, t, tol));
  return out;
}

template std::vector<std::optional<Mat2>> expm_batch(const std::vector<Mat2>&, double, double);
template std::vector<std::optional<Mat3>> expm_batch(const std::vector<Mat3>&, double, double);
template std::vector<std::optional<Mat2>> expm_batch_serial(const std::vector<Mat2>&, double, double);
template std::vector<std::optional<Mat3>> expm_batch_serial(const std::vector<Mat3>&, double, double);

}  // namespace matexp
