#pragma once

// e^{tA} over many independent matrices. The OpenMP kernel and the serial
// reference return identical values; a failed item (degenerate decomposition,
// overflow, division hazard) leaves an empty slot instead of aborting the batch.

#include <optional>
#include <vector>

#include "matexp/linalg.hpp"
#include "matexp/spectrum.hpp"

namespace matexp {

template <std::size_t N>
std::vector<std::optional<Mat<N>>> expm_batch(const std::vector<Mat<N>>& as, double t,
                                              double tol = kDefaultTol);

template <std::size_t N>
std::vector<std::optional<Mat<N>>> expm_batch_serial(const std::vector<Mat<N>>& as, double t,
                                                     double tol = kDefaultTol);

}  // namespace matexp
