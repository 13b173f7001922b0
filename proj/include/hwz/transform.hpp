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

#ifndef HWZ_TRANSFORM_HPP_
#define HWZ_TRANSFORM_HPP_

#include <cstdint>
#include <vector>

#include "hwz/matrix.hpp"

namespace hwz {

enum class Mode : uint8_t {
  kStandard = 0,
  kPyramid = 1,
};

// Decomposition mode plus pyramid depth. `levels` is ignored in standard
// mode, which always recurses to width 1.
struct TransformSpec {
  Mode mode = Mode::kStandard;
  int levels = 1;
};

// Deepest valid pyramid decomposition for a rows x cols matrix.
int max_pyramid_levels(int rows, int cols);

// Unnormalized Haar averaging/differencing transform of a power-of-two
// length vector. Each pass replaces the working prefix with pair averages
// (a+b)/2 followed by details a - avg; passes repeat until the working
// width is 1, so element 0 of the result is the overall average.
std::vector<double> forward1d(std::vector<double> v);

// Exact inverse of forward1d: x[2k] = avg + d, x[2k+1] = avg - d, applied
// from the coarsest level back up.
std::vector<double> inverse1d(std::vector<double> v);

// Full 1D transform of every row, then every column. Element (0,0) of the
// result is the overall average of the input.
Matrix forward2d_standard(Matrix m);
Matrix inverse2d_standard(Matrix m);

// Mallat-style decomposition: one averaging/differencing pass over rows
// then columns per level, recursing only into the top-left (LL) quadrant.
Matrix forward2d_pyramid(Matrix m, int levels);
Matrix inverse2d_pyramid(Matrix m, int levels);

// Dispatch on the spec's mode.
Matrix forward2d(Matrix m, const TransformSpec& spec);
Matrix inverse2d(Matrix m, const TransformSpec& spec);

}  // namespace hwz

#endif  // HWZ_TRANSFORM_HPP_
