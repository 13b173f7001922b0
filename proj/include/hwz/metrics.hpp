// Copyright 2026 The HWZ Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HWZ_METRICS_HPP_
#define HWZ_METRICS_HPP_

#include <cstddef>
#include <limits>

#include "hwz/matrix.hpp"

namespace hwz {

// Sentinel for lossless PSNR and all-zero-denominator CR. Serialized as the
// string "inf" in reports.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct MetricsReport {
  double cr = 0.0;
  double mse = 0.0;
  double psnr_db = kInfinity;
  double energy_retained_pct = 0.0;
  size_t nnz_original = 0;
  size_t nnz_thresholded = 0;
  // Set by the rate-control solvers when the requested operating point
  // cannot be hit.
  bool target_unreachable = false;
};

// nnz(original) / nnz(thresholded), counting exact nonzeros. Returns the
// infinity sentinel when the thresholded matrix is all zero, 0 when the
// original is.
double compression_ratio(const Matrix& original, const Matrix& thresholded);

// Mean squared pixel error.
double mse(const GrayImage& a, const GrayImage& b);

// 20 * log10(255 / sqrt(MSE)) for 8-bit images; infinity sentinel at MSE 0.
double psnr(const GrayImage& a, const GrayImage& b);

// 100 * sum(b^2) / sum(a^2). The reference image must not be all zero.
double energy_retained(const GrayImage& a, const GrayImage& b);

}  // namespace hwz

#endif  // HWZ_METRICS_HPP_
