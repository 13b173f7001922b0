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

#ifndef HWZ_CODEC_HPP_
#define HWZ_CODEC_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hwz/matrix.hpp"
#include "hwz/threshold.hpp"
#include "hwz/transform.hpp"

namespace hwz {

// HWZ1 container, little-endian throughout:
//
//   offset  size  field
//        0     4  magic "HWZ1"
//        4     1  u8  version (= 1)
//        5     1  u8  mode (0 standard, 1 pyramid)
//        6     1  u8  levels (pyramid depth; 0 in standard mode)
//        7     1  u8  threshold_method (0 none, 1 hard, 2 soft, 3 universal)
//        8     8  f64 epsilon
//       16     4  u32 orig_width
//       20     4  u32 orig_height
//       24     4  u32 padded_width
//       28     4  u32 padded_height
//       32     4  u32 entry_count
//       36   16n  entry_count records of (u32 row, u32 col, f64 value)
//
// Entries are strictly sorted by (row, col) and hold only nonzero values,
// making the encoding canonical: equal matrices produce equal bytes.
inline constexpr size_t kMagicSize = 4;
inline constexpr size_t kHeaderSize = 36;
inline constexpr size_t kEntrySize = 16;
inline constexpr char kMagic[kMagicSize + 1] = "HWZ1";
inline constexpr uint8_t kFormatVersion = 1;

struct SparseEntry {
  uint32_t row = 0;
  uint32_t col = 0;
  double value = 0.0;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

// Coordinate-list form of a thresholded coefficient matrix.
struct SparseCoeffs {
  uint32_t padded_rows = 0;
  uint32_t padded_cols = 0;
  std::vector<SparseEntry> entries;

  friend bool operator==(const SparseCoeffs&, const SparseCoeffs&) = default;
};

struct CompressedHeader {
  uint8_t version = kFormatVersion;
  Mode mode = Mode::kStandard;
  uint8_t levels = 0;
  ThresholdMethod method = ThresholdMethod::kNone;
  double epsilon = 0.0;
  uint32_t orig_width = 0;
  uint32_t orig_height = 0;
  uint32_t padded_width = 0;
  uint32_t padded_height = 0;

  friend bool operator==(const CompressedHeader&, const CompressedHeader&) = default;
};

// All nonzero positions in row-major order; lossless.
SparseCoeffs to_sparse(const Matrix& m);

// Dense matrix with zeros everywhere else. Rejects out-of-bounds indices,
// duplicates, unsorted entries and zero values.
Matrix from_sparse(const SparseCoeffs& s);

std::vector<uint8_t> encode(const CompressedHeader& header, const SparseCoeffs& s);

std::pair<CompressedHeader, SparseCoeffs> decode(std::span<const uint8_t> data);

inline size_t encoded_size(size_t entry_count) {
  return kHeaderSize + kEntrySize * entry_count;
}

}  // namespace hwz

#endif  // HWZ_CODEC_HPP_
