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

#ifndef HWZ_MATRIX_HPP_
#define HWZ_MATRIX_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "hwz/error.hpp"

namespace hwz {

inline bool is_pow2(int n) {
  return n > 0 && std::has_single_bit(static_cast<uint32_t>(n));
}

inline int next_pow2(int n) {
  return static_cast<int>(std::bit_ceil(static_cast<uint32_t>(n)));
}

// Dense row-major matrix of real-valued coefficients.
class Matrix {
 public:
  Matrix() = default;

  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols),
        values_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {
    if (rows <= 0 || cols <= 0) {
      throw Error(ErrorCode::kInvalidShape, "matrix dimensions must be positive");
    }
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    Matrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != c) {
        throw Error(ErrorCode::kInvalidShape, "ragged row in matrix literal");
      }
      int j = 0;
      for (double v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t size() const { return values_.size(); }

  double& operator()(int r, int c) { return values_[index(r, c)]; }
  double operator()(int r, int c) const { return values_[index(r, c)]; }

  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }

  double* row(int r) { return values_.data() + static_cast<size_t>(r) * cols_; }
  const double* row(int r) const { return values_.data() + static_cast<size_t>(r) * cols_; }

  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  size_t index(int r, int c) const {
    return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> values_;
};

// Count of entries that are exactly nonzero. Thresholding writes exact
// zeros, so no epsilon is involved.
inline size_t nnz(const Matrix& m) {
  size_t count = 0;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m.data()[i] != 0.0) ++count;
  }
  return count;
}

// 8-bit grayscale raster, row-major.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> pixels;

  GrayImage() = default;

  GrayImage(int width, int height, uint8_t fill = 0)
      : width(width), height(height),
        pixels(static_cast<size_t>(width) * static_cast<size_t>(height), fill) {
    if (width <= 0 || height <= 0) {
      throw Error(ErrorCode::kInvalidShape, "image dimensions must be positive");
    }
  }

  uint8_t& at(int r, int c) { return pixels[static_cast<size_t>(r) * width + c]; }
  uint8_t at(int r, int c) const { return pixels[static_cast<size_t>(r) * width + c]; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

}  // namespace hwz

#endif  // HWZ_MATRIX_HPP_
