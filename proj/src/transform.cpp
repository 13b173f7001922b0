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

#include "hwz/transform.hpp"

#include <algorithm>
#include <bit>

#include "hwz/error.hpp"

namespace hwz {
namespace {

// One averaging/differencing pass over x[0], x[stride], ..., x[(w-1)*stride].
// Averages land in the first half of the window, details behind them.
void forward_pass(double* x, size_t stride, int w, double* tmp) {
  const int half = w / 2;
  for (int k = 0; k < half; ++k) {
    const double a = x[static_cast<size_t>(2 * k) * stride];
    const double b = x[static_cast<size_t>(2 * k + 1) * stride];
    const double avg = (a + b) / 2.0;
    tmp[k] = avg;
    tmp[half + k] = a - avg;
  }
  for (int i = 0; i < w; ++i) x[static_cast<size_t>(i) * stride] = tmp[i];
}

void inverse_pass(double* x, size_t stride, int w, double* tmp) {
  const int half = w / 2;
  for (int k = 0; k < half; ++k) {
    const double avg = x[static_cast<size_t>(k) * stride];
    const double d = x[static_cast<size_t>(half + k) * stride];
    tmp[2 * k] = avg + d;
    tmp[2 * k + 1] = avg - d;
  }
  for (int i = 0; i < w; ++i) x[static_cast<size_t>(i) * stride] = tmp[i];
}

void forward_full(double* x, size_t stride, int n, double* tmp) {
  for (int w = n; w != 1; w /= 2) forward_pass(x, stride, w, tmp);
}

void inverse_full(double* x, size_t stride, int n, double* tmp) {
  for (int w = 2; w <= n; w *= 2) inverse_pass(x, stride, w, tmp);
}

void check_vector_length(size_t n) {
  if (n > static_cast<size_t>(1) << 30 || !is_pow2(static_cast<int>(n))) {
    throw Error(ErrorCode::kInvalidLength, "vector length must be a power of two");
  }
}

void check_matrix_shape(const Matrix& m) {
  if (!is_pow2(m.rows()) || !is_pow2(m.cols())) {
    throw Error(ErrorCode::kInvalidShape, "matrix dimensions must be powers of two");
  }
}

void check_levels(const Matrix& m, int levels) {
  const int max_levels = max_pyramid_levels(m.rows(), m.cols());
  if (levels < 1 || levels > max_levels) {
    throw Error(ErrorCode::kLevelTooDeep,
                "pyramid levels must be in [1, " + std::to_string(max_levels) + "], got " +
                    std::to_string(levels));
  }
}

}  // namespace

int max_pyramid_levels(int rows, int cols) {
  const int m = std::min(rows, cols);
  if (m <= 0) return 0;
  return std::bit_width(static_cast<uint32_t>(m)) - 1;
}

std::vector<double> forward1d(std::vector<double> v) {
  check_vector_length(v.size());
  std::vector<double> tmp(v.size());
  forward_full(v.data(), 1, static_cast<int>(v.size()), tmp.data());
  return v;
}

std::vector<double> inverse1d(std::vector<double> v) {
  check_vector_length(v.size());
  std::vector<double> tmp(v.size());
  inverse_full(v.data(), 1, static_cast<int>(v.size()), tmp.data());
  return v;
}

Matrix forward2d_standard(Matrix m) {
  check_matrix_shape(m);
  std::vector<double> tmp(std::max(m.rows(), m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    forward_full(m.row(r), 1, m.cols(), tmp.data());
  }
  for (int c = 0; c < m.cols(); ++c) {
    forward_full(m.data() + c, m.cols(), m.rows(), tmp.data());
  }
  return m;
}

Matrix inverse2d_standard(Matrix m) {
  check_matrix_shape(m);
  std::vector<double> tmp(std::max(m.rows(), m.cols()));
  for (int c = 0; c < m.cols(); ++c) {
    inverse_full(m.data() + c, m.cols(), m.rows(), tmp.data());
  }
  for (int r = 0; r < m.rows(); ++r) {
    inverse_full(m.row(r), 1, m.cols(), tmp.data());
  }
  return m;
}

Matrix forward2d_pyramid(Matrix m, int levels) {
  check_matrix_shape(m);
  check_levels(m, levels);
  std::vector<double> tmp(std::max(m.rows(), m.cols()));
  for (int lv = 0; lv < levels; ++lv) {
    const int h = m.rows() >> lv;
    const int w = m.cols() >> lv;
    for (int r = 0; r < h; ++r) {
      forward_pass(m.row(r), 1, w, tmp.data());
    }
    for (int c = 0; c < w; ++c) {
      forward_pass(m.data() + c, m.cols(), h, tmp.data());
    }
  }
  return m;
}

Matrix inverse2d_pyramid(Matrix m, int levels) {
  check_matrix_shape(m);
  check_levels(m, levels);
  std::vector<double> tmp(std::max(m.rows(), m.cols()));
  for (int lv = levels - 1; lv >= 0; --lv) {
    const int h = m.rows() >> lv;
    const int w = m.cols() >> lv;
    for (int c = 0; c < w; ++c) {
      inverse_pass(m.data() + c, m.cols(), h, tmp.data());
    }
    for (int r = 0; r < h; ++r) {
      inverse_pass(m.row(r), 1, w, tmp.data());
    }
  }
  return m;
}

Matrix forward2d(Matrix m, const TransformSpec& spec) {
  if (spec.mode == Mode::kStandard) return forward2d_standard(std::move(m));
  return forward2d_pyramid(std::move(m), spec.levels);
}

Matrix inverse2d(Matrix m, const TransformSpec& spec) {
  if (spec.mode == Mode::kStandard) return inverse2d_standard(std::move(m));
  return inverse2d_pyramid(std::move(m), spec.levels);
}

}  // namespace hwz
