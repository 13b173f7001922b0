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

#ifndef HWZ_TESTS_TEST_UTIL_HPP_
#define HWZ_TESTS_TEST_UTIL_HPP_

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <random>
#include <string>

#include "hwz/matrix.hpp"

namespace testutil {

inline hwz::GrayImage random_image(int width, int height, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, 255);
  hwz::GrayImage img(width, height);
  for (auto& p : img.pixels) p = static_cast<uint8_t>(dist(rng));
  return img;
}

inline hwz::Matrix random_matrix(int rows, int cols, std::mt19937& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  hwz::Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = dist(rng);
  }
  return m;
}

inline hwz::Matrix random_8bit_matrix(int rows, int cols, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, 255);
  hwz::Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = static_cast<double>(dist(rng));
  }
  return m;
}

// Unique path under the system temp directory; nothing is created.
inline std::string temp_path(const std::string& stem) {
  static std::atomic<unsigned> counter{0};
  const unsigned id = counter.fetch_add(1);
  return (std::filesystem::temp_directory_path() /
          (stem + "-" + std::to_string(::getpid()) + "-" + std::to_string(id)))
      .string();
}

}  // namespace testutil

#endif  // HWZ_TESTS_TEST_UTIL_HPP_
