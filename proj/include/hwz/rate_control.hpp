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

#ifndef HWZ_RATE_CONTROL_HPP_
#define HWZ_RATE_CONTROL_HPP_

#include <vector>

#include "hwz/matrix.hpp"
#include "hwz/metrics.hpp"
#include "hwz/threshold.hpp"
#include "hwz/transform.hpp"

namespace hwz {

struct RateControlResult {
  double epsilon = 0.0;
  MetricsReport report;
};

// The epsilons at which hard thresholding changes anything: 0 plus, for
// each distinct nonzero magnitude m of the non-exempt coefficients, the
// next representable value above m (strict |x| < eps then zeroes m).
// Sorted ascending.
std::vector<double> threshold_candidates(const Matrix& coeffs, const ExemptMask& mask);

// Smallest candidate epsilon whose hard-thresholded CR reaches the target.
// When even zeroing every non-exempt coefficient falls short, returns the
// maximal candidate with report.target_unreachable set.
RateControlResult solve_for_cr(const GrayImage& img, const TransformSpec& spec, double target_cr);

// Largest candidate epsilon whose reconstructed PSNR stays at or above
// target_db - tol_db. Searches by bisection assuming PSNR is nonincreasing
// in epsilon and falls back to a linear scan when the returned point fails
// a neighbor monotonicity check. Sets report.target_unreachable when the
// achieved PSNR overshoots target_db + tol_db (no candidate lands in the
// tolerance band).
RateControlResult solve_for_psnr(const GrayImage& img, const TransformSpec& spec,
                                 double target_db, double tol_db);

}  // namespace hwz

#endif  // HWZ_RATE_CONTROL_HPP_
