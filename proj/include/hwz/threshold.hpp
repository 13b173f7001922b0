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

#ifndef HWZ_THRESHOLD_HPP_
#define HWZ_THRESHOLD_HPP_

#include <cstdint>

#include "hwz/matrix.hpp"
#include "hwz/transform.hpp"

namespace hwz {

enum class ThresholdMethod : uint8_t {
  kNone = 0,
  kHard = 1,
  kSoft = 2,
  kUniversal = 3,
};

const char* threshold_method_name(ThresholdMethod method);

struct ThresholdPolicy {
  ThresholdMethod method = ThresholdMethod::kNone;
  // Set by the caller for hard/soft; computed from the coefficients for
  // universal (see universal_epsilon).
  double epsilon = 0.0;
};

// Coefficient positions that are never thresholded: the averages. In
// standard mode that is the single overall average at (0,0); in pyramid
// mode the whole LL band, i.e. the top-left (rows >> levels) x
// (cols >> levels) block.
class ExemptMask {
 public:
  static ExemptMask for_spec(const TransformSpec& spec, int rows, int cols);

  bool exempt(int r, int c) const { return r < block_rows_ && c < block_cols_; }

  int block_rows() const { return block_rows_; }
  int block_cols() const { return block_cols_; }

 private:
  ExemptMask(int block_rows, int block_cols)
      : block_rows_(block_rows), block_cols_(block_cols) {}

  int block_rows_ = 1;
  int block_cols_ = 1;
};

// Zero non-exempt entries with |x| < eps (strict), keep the rest unchanged.
Matrix apply_hard(Matrix c, double eps, const ExemptMask& mask);

// Zero non-exempt entries with |x| < eps, shrink survivors to
// sign(x) * (|x| - eps).
Matrix apply_soft(Matrix c, double eps, const ExemptMask& mask);

// sigma * sqrt(2 * log2(N)) where sigma is the population standard
// deviation of the non-exempt coefficients and N their count. Thresholding
// then proceeds as hard thresholding with this epsilon.
double universal_epsilon(const Matrix& c, const ExemptMask& mask);

// Applies a resolved policy: kNone leaves the matrix untouched, kUniversal
// must already carry its computed epsilon and applies the hard rule.
Matrix apply_threshold(Matrix c, const ThresholdPolicy& policy, const ExemptMask& mask);

}  // namespace hwz

#endif  // HWZ_THRESHOLD_HPP_
