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

#include <cmath>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "golden_data.hpp"
#include "hwz/error.hpp"
#include "hwz/transform.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using hwz::Error;
using hwz::ErrorCode;
using hwz::Matrix;
using hwz::Mode;
using hwz::TransformSpec;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kIoFailure;
}

}  // namespace

TEST_SUITE("transform.1d") {
  TEST_CASE("four pixel example") {
    const std::vector<double> out = hwz::forward1d({9, 7, 3, 5});
    CHECK(out == std::vector<double>{6, 2, 1, -1});
    CHECK(hwz::inverse1d(out) == std::vector<double>{9, 7, 3, 5});
  }

  TEST_CASE("eight pixel row") {
    const std::vector<double> out = hwz::forward1d({64, 2, 3, 61, 60, 6, 7, 57});
    CHECK(out == std::vector<double>{32.5, 0, 0.5, 0.5, 31, -29, 27, -25});
  }

  TEST_CASE("constant signal has zero detail") {
    for (double c : {0.0, 1.0, -3.5, 200.0}) {
      CHECK(hwz::forward1d({c, c, c, c}) == std::vector<double>{c, 0, 0, 0});
      CHECK(hwz::inverse1d({c, 0, 0, 0}) == std::vector<double>{c, c, c, c});
    }
  }

  TEST_CASE("width 1 is unchanged") {
    CHECK(hwz::forward1d({42}) == std::vector<double>{42});
    CHECK(hwz::inverse1d({42}) == std::vector<double>{42});
  }

  TEST_CASE("non power of two length") {
    for (size_t n : {0u, 3u, 6u, 12u}) {
      std::vector<double> v(n, 1.0);
      CHECK(code_of([&] { hwz::forward1d(v); }) == ErrorCode::kInvalidLength);
      CHECK(code_of([&] { hwz::inverse1d(v); }) == ErrorCode::kInvalidLength);
    }
  }

  TEST_CASE("roundtrip on random dyadic vectors") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> dist(-1024, 1024);
    for (size_t n : {1u, 2u, 4u, 8u, 64u, 256u}) {
      std::vector<double> v(n);
      for (double& x : v) x = dist(rng) / 4.0;
      CHECK(hwz::inverse1d(hwz::forward1d(v)) == v);
      CHECK(hwz::forward1d(v) == oracle::forward_full(v));
    }
  }
}

TEST_SUITE("transform.standard") {
  TEST_CASE("golden 8x8 block") {
    const Matrix out = hwz::forward2d_standard(golden::block8x8());
    CHECK(out == golden::block8x8_transformed());
    CHECK(hwz::inverse2d_standard(out) == golden::block8x8());
  }

  TEST_CASE("constant matrix concentrates into one entry") {
    const Matrix out = hwz::forward2d_standard(Matrix(4, 4, 7.0));
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        CHECK(out(r, c) == (r == 0 && c == 0 ? 7.0 : 0.0));
      }
    }
    CHECK(hwz::nnz(out) == 1);
  }

  TEST_CASE("zero matrix stays zero") {
    const Matrix z(8, 8, 0.0);
    CHECK(hwz::forward2d_standard(z) == z);
    CHECK(hwz::inverse2d_standard(z) == z);
  }

  TEST_CASE("matches brute-force oracle") {
    std::mt19937 rng(202);
    for (int i = 0; i < 20; ++i) {
      const Matrix m = testutil::random_8bit_matrix(8, 8, rng);
      CHECK(hwz::forward2d_standard(m) == oracle::forward_standard(m));
      CHECK(hwz::inverse2d_standard(m) == oracle::inverse_standard(m));
    }
    const Matrix wide = testutil::random_8bit_matrix(4, 8, rng);
    CHECK(hwz::forward2d_standard(wide) == oracle::forward_standard(wide));
    const Matrix tall = testutil::random_8bit_matrix(16, 2, rng);
    CHECK(hwz::forward2d_standard(tall) == oracle::forward_standard(tall));
  }

  TEST_CASE("roundtrip is bit exact for 8-bit input") {
    std::mt19937 rng(303);
    for (auto [h, w] : {std::pair{8, 8}, {16, 4}, {1, 16}, {64, 64}}) {
      const Matrix m = testutil::random_8bit_matrix(h, w, rng);
      CHECK(hwz::inverse2d_standard(hwz::forward2d_standard(m)) == m);
    }
    const Matrix big = testutil::random_8bit_matrix(1024, 1024, rng);
    CHECK(hwz::inverse2d_standard(hwz::forward2d_standard(big)) == big);
  }

  TEST_CASE("average preservation") {
    std::mt19937 rng(404);
    const Matrix m = testutil::random_8bit_matrix(16, 16, rng);
    double sum = 0;
    for (int r = 0; r < 16; ++r) {
      for (int c = 0; c < 16; ++c) sum += m(r, c);
    }
    CHECK(hwz::forward2d_standard(m)(0, 0) == sum / 256.0);
  }

  TEST_CASE("non power of two shape") {
    CHECK(code_of([] { hwz::forward2d_standard(Matrix(3, 4)); }) == ErrorCode::kInvalidShape);
    CHECK(code_of([] { hwz::inverse2d_standard(Matrix(8, 6)); }) == ErrorCode::kInvalidShape);
  }
}

TEST_SUITE("transform.pyramid") {
  TEST_CASE("single level 2x2 closed form") {
    const double a = 9, b = 7, c = 3, d = 5;
    const Matrix out = hwz::forward2d_pyramid(Matrix::from_rows({{a, b}, {c, d}}), 1);
    CHECK(out(0, 0) == (a + b + c + d) / 4);
    CHECK(out(0, 1) == (a - b + c - d) / 4);
    CHECK(out(1, 0) == (a + b - c - d) / 4);
    CHECK(out(1, 1) == (a - b - c + d) / 4);
  }

  TEST_CASE("constant input: LL stays constant, details vanish") {
    const int n = 16;
    const double c = 13.0;
    for (int levels = 1; levels <= 4; ++levels) {
      const Matrix out = hwz::forward2d_pyramid(Matrix(n, n, c), levels);
      const int ll = n >> levels;
      for (int r = 0; r < n; ++r) {
        for (int j = 0; j < n; ++j) {
          CHECK(out(r, j) == (r < ll && j < ll ? c : 0.0));
        }
      }
    }
  }

  TEST_CASE("full depth top-left equals global mean") {
    const Matrix out = hwz::forward2d_pyramid(golden::block8x8(), 3);
    CHECK(out(0, 0) == 32.5);
    CHECK(out(0, 0) == hwz::forward2d_standard(golden::block8x8())(0, 0));
  }

  TEST_CASE("matches brute-force oracle per level") {
    std::mt19937 rng(505);
    for (int i = 0; i < 10; ++i) {
      const Matrix m = testutil::random_8bit_matrix(8, 8, rng);
      for (int levels = 1; levels <= 3; ++levels) {
        CHECK(hwz::forward2d_pyramid(m, levels) == oracle::forward_pyramid(m, levels));
        CHECK(hwz::inverse2d_pyramid(m, levels) == oracle::inverse_pyramid(m, levels));
      }
    }
    const Matrix wide = testutil::random_8bit_matrix(4, 16, rng);
    CHECK(hwz::forward2d_pyramid(wide, 2) == oracle::forward_pyramid(wide, 2));
  }

  TEST_CASE("roundtrip 16x16 at every depth") {
    std::mt19937 rng(606);
    const Matrix m = testutil::random_8bit_matrix(16, 16, rng);
    for (int levels = 1; levels <= 4; ++levels) {
      CHECK(hwz::inverse2d_pyramid(hwz::forward2d_pyramid(m, levels), levels) == m);
    }
  }

  TEST_CASE("zero details reconstruct a constant") {
    const Matrix rec = hwz::inverse2d_pyramid(Matrix::from_rows({{6.0, 0.0}, {0.0, 0.0}}), 1);
    CHECK(rec == Matrix(2, 2, 6.0));
  }

  TEST_CASE("level bounds") {
    CHECK(code_of([] { hwz::forward2d_pyramid(Matrix(8, 8), 0); }) == ErrorCode::kLevelTooDeep);
    CHECK(code_of([] { hwz::forward2d_pyramid(Matrix(8, 8), 4); }) == ErrorCode::kLevelTooDeep);
    CHECK(code_of([] { hwz::forward2d_pyramid(Matrix(1, 8), 1); }) == ErrorCode::kLevelTooDeep);
    CHECK(code_of([] { hwz::inverse2d_pyramid(Matrix(4, 16), 3); }) == ErrorCode::kLevelTooDeep);
    CHECK(code_of([] { hwz::forward2d_pyramid(Matrix(6, 8), 1); }) == ErrorCode::kInvalidShape);
    CHECK(hwz::max_pyramid_levels(8, 8) == 3);
    CHECK(hwz::max_pyramid_levels(4, 16) == 2);
    CHECK(hwz::max_pyramid_levels(1, 8) == 0);
  }
}

TEST_SUITE("transform.properties") {
  TEST_CASE("linearity") {
    std::mt19937 rng(707);
    const Matrix x = testutil::random_matrix(8, 8, rng, -100, 100);
    const Matrix y = testutil::random_matrix(8, 8, rng, -100, 100);
    const double alpha = 0.7;
    const double beta = -2.25;
    Matrix combo(8, 8);
    for (int r = 0; r < 8; ++r) {
      for (int c = 0; c < 8; ++c) combo(r, c) = alpha * x(r, c) + beta * y(r, c);
    }
    for (const TransformSpec spec : {TransformSpec{Mode::kStandard, 1},
                                     TransformSpec{Mode::kPyramid, 2}}) {
      const Matrix fx = hwz::forward2d(x, spec);
      const Matrix fy = hwz::forward2d(y, spec);
      const Matrix fc = hwz::forward2d(combo, spec);
      for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
          CHECK(std::abs(fc(r, c) - (alpha * fx(r, c) + beta * fy(r, c))) <= 1e-9);
        }
      }
    }
  }

  TEST_CASE("both modes agree on the overall average at full depth") {
    std::mt19937 rng(808);
    const Matrix m = testutil::random_8bit_matrix(32, 32, rng);
    const Matrix s = hwz::forward2d_standard(m);
    const Matrix p = hwz::forward2d_pyramid(m, 5);
    CHECK(s(0, 0) == p(0, 0));
  }
}
