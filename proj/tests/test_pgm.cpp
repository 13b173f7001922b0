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

#include <cstdio>
#include <random>
#include <sstream>

#include "doctest.h"
#include "golden_data.hpp"
#include "hwz/error.hpp"
#include "hwz/pgm.hpp"
#include "test_util.hpp"

using hwz::Error;
using hwz::ErrorCode;
using hwz::GrayImage;

namespace {

GrayImage parse(const std::string& text) {
  std::istringstream in(text);
  return hwz::read_pgm(in);
}

ErrorCode parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected read_pgm to fail");
  return ErrorCode::kIoFailure;
}

}  // namespace

TEST_SUITE("pgm") {
  TEST_CASE("minimal ascii image") {
    const GrayImage img = parse("P2\n2 2\n255\n0 255 128 64\n");
    CHECK(img.width == 2);
    CHECK(img.height == 2);
    CHECK(img.at(0, 0) == 0);
    CHECK(img.at(0, 1) == 255);
    CHECK(img.at(1, 0) == 128);
    CHECK(img.at(1, 1) == 64);
  }

  TEST_CASE("comments are skipped") {
    const GrayImage img = parse("P2\n# a comment\n2 1\n# another\n255\n7 9\n");
    CHECK(img.at(0, 0) == 7);
    CHECK(img.at(0, 1) == 9);
  }

  TEST_CASE("binary roundtrip") {
    std::mt19937 rng(61);
    for (auto [w, h] : {std::pair{1, 1}, {32, 16}, {256, 256}}) {
      const GrayImage img = testutil::random_image(w, h, rng);
      std::stringstream buf;
      hwz::write_pgm(img, buf, /*binary=*/true);
      CHECK(hwz::read_pgm(buf) == img);
    }
  }

  TEST_CASE("ascii roundtrip") {
    std::mt19937 rng(62);
    const GrayImage img = testutil::random_image(17, 5, rng);
    std::stringstream buf;
    hwz::write_pgm(img, buf, /*binary=*/false);
    CHECK(hwz::read_pgm(buf) == img);
  }

  TEST_CASE("file roundtrip") {
    std::mt19937 rng(63);
    const GrayImage img = testutil::random_image(24, 9, rng);
    const std::string path = testutil::temp_path("pgm-roundtrip") + ".pgm";
    hwz::write_pgm(img, path);
    CHECK(hwz::read_pgm(path) == img);
    std::remove(path.c_str());
  }

  TEST_CASE("golden asset") {
    const GrayImage img = hwz::read_pgm(std::string(HWZ_ASSET_DIR) + "/block8x8.pgm");
    CHECK(img == golden::block8x8_image());
  }

  TEST_CASE("16-bit maxval is unsupported") {
    CHECK(parse_error("P2\n1 1\n65535\n0\n") == ErrorCode::kUnsupportedMaxval);
    CHECK(parse_error("P5\n1 1\n256\n??") == ErrorCode::kUnsupportedMaxval);
  }

  TEST_CASE("format errors") {
    CHECK(parse_error("P6\n1 1\n255\nx") == ErrorCode::kBadFormat);
    CHECK(parse_error("P2\n0 2\n255\n") == ErrorCode::kBadFormat);
    CHECK(parse_error("P2\n2 2\n255\n1 2 3 300\n") == ErrorCode::kBadFormat);
    CHECK(parse_error("P2\n2 2\n255\n1 2 x 4\n") == ErrorCode::kBadFormat);
    CHECK(parse_error("P2\n2 two\n255\n1 2 3 4\n") == ErrorCode::kBadFormat);
  }

  TEST_CASE("truncation") {
    CHECK(parse_error("P2\n2 2\n255\n1 2 3") == ErrorCode::kTruncatedFile);
    CHECK(parse_error("P5\n2 2\n255\nab") == ErrorCode::kTruncatedFile);
    CHECK(parse_error("P2\n2 2\n") == ErrorCode::kTruncatedFile);
  }

  TEST_CASE("missing file") {
    try {
      hwz::read_pgm(std::string("/nonexistent/nowhere.pgm"));
      FAIL("expected IoFailure");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kIoFailure);
    }
  }
}
