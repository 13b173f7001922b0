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

#include "hwz/metrics.hpp"

#include <cmath>

#include "hwz/error.hpp"

namespace hwz {
namespace {

void check_same_shape(const GrayImage& a, const GrayImage& b) {
  if (a.width != b.width || a.height != b.height) {
    throw Error(ErrorCode::kShapeMismatch, "image dimensions differ");
  }
}

}  // namespace

double compression_ratio(const Matrix& original, const Matrix& thresholded) {
  if (!original.same_shape(thresholded)) {
    throw Error(ErrorCode::kShapeMismatch, "matrix dimensions differ");
  }
  const size_t n_orig = nnz(original);
  const size_t n_thresh = nnz(thresholded);
  if (n_thresh == 0) return kInfinity;
  if (n_orig == 0) return 0.0;
  return static_cast<double>(n_orig) / static_cast<double>(n_thresh);
}

double mse(const GrayImage& a, const GrayImage& b) {
  check_same_shape(a, b);
  double sum = 0.0;
  for (size_t i = 0; i < a.pixels.size(); ++i) {
    const double d = static_cast<double>(a.pixels[i]) - static_cast<double>(b.pixels[i]);
    sum += d * d;
  }
  return sum / static_cast<double>(a.pixels.size());
}

double psnr(const GrayImage& a, const GrayImage& b) {
  const double err = mse(a, b);
  if (err == 0.0) return kInfinity;
  return 20.0 * std::log10(255.0 / std::sqrt(err));
}

double energy_retained(const GrayImage& a, const GrayImage& b) {
  check_same_shape(a, b);
  double ref = 0.0;
  double test = 0.0;
  for (size_t i = 0; i < a.pixels.size(); ++i) {
    ref += static_cast<double>(a.pixels[i]) * static_cast<double>(a.pixels[i]);
    test += static_cast<double>(b.pixels[i]) * static_cast<double>(b.pixels[i]);
  }
  if (ref == 0.0) {
    throw Error(ErrorCode::kDegenerateReference, "reference image is all zero");
  }
  return 100.0 * test / ref;
}

}  // namespace hwz
