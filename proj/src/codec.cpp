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

#include "hwz/codec.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <string>

#include "hwz/error.hpp"

namespace hwz {
namespace {

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xff));
  out.push_back(static_cast<uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<uint8_t>((v >> 24) & 0xff));
}

void put_f64(std::vector<uint8_t>& out, double v) {
  const uint64_t bits = std::bit_cast<uint64_t>(v);
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<uint8_t>((bits >> (8 * i)) & 0xff));
  }
}

// Cursor over the byte payload; running past the end means the payload was
// truncated.
class Reader {
 public:
  explicit Reader(std::span<const uint8_t> data) : data_(data) {}

  uint8_t u8() {
    need(1);
    return data_[pos_++];
  }

  uint32_t u32() {
    need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(data_[pos_++]) << (8 * i);
    return v;
  }

  double f64() {
    need(8);
    uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<uint64_t>(data_[pos_++]) << (8 * i);
    return std::bit_cast<double>(bits);
  }

  size_t remaining() const { return data_.size() - pos_; }

 private:
  void need(size_t n) const {
    if (data_.size() - pos_ < n) {
      throw Error(ErrorCode::kTruncatedPayload, "payload ends mid-field");
    }
  }

  std::span<const uint8_t> data_;
  size_t pos_ = 0;
};

void validate_sparse(const SparseCoeffs& s) {
  if (s.padded_rows == 0 || s.padded_cols == 0) {
    throw Error(ErrorCode::kMalformedSparse, "sparse dimensions must be positive");
  }
  for (size_t i = 0; i < s.entries.size(); ++i) {
    const SparseEntry& e = s.entries[i];
    if (e.row >= s.padded_rows || e.col >= s.padded_cols) {
      throw Error(ErrorCode::kMalformedSparse,
                  "entry index out of bounds at position " + std::to_string(i));
    }
    if (e.value == 0.0 || !std::isfinite(e.value)) {
      throw Error(ErrorCode::kMalformedSparse,
                  "entry value must be finite and nonzero at position " + std::to_string(i));
    }
    if (i > 0) {
      const SparseEntry& prev = s.entries[i - 1];
      if (prev.row > e.row || (prev.row == e.row && prev.col >= e.col)) {
        throw Error(ErrorCode::kMalformedSparse,
                    "entries not strictly sorted by (row, col) at position " + std::to_string(i));
      }
    }
  }
}

void validate_header(const CompressedHeader& h) {
  if (h.version != kFormatVersion) {
    throw Error(ErrorCode::kUnsupportedVersion,
                "unsupported format version " + std::to_string(h.version));
  }
  if (h.orig_width == 0 || h.orig_height == 0) {
    throw Error(ErrorCode::kHeaderMismatch, "original dimensions must be positive");
  }
  if (!is_pow2(static_cast<int>(h.padded_width)) || !is_pow2(static_cast<int>(h.padded_height))) {
    throw Error(ErrorCode::kHeaderMismatch, "padded dimensions must be powers of two");
  }
  if (h.padded_width < h.orig_width || h.padded_height < h.orig_height) {
    throw Error(ErrorCode::kHeaderMismatch, "padded dimensions smaller than original");
  }
  if (std::isnan(h.epsilon) || h.epsilon < 0.0) {
    throw Error(ErrorCode::kHeaderMismatch, "epsilon must be nonnegative");
  }
  if (h.mode == Mode::kPyramid) {
    const int max_levels = max_pyramid_levels(static_cast<int>(h.padded_height),
                                              static_cast<int>(h.padded_width));
    if (h.levels < 1 || static_cast<int>(h.levels) > max_levels) {
      throw Error(ErrorCode::kHeaderMismatch,
                  "pyramid levels out of range: " + std::to_string(h.levels));
    }
  }
}

}  // namespace

SparseCoeffs to_sparse(const Matrix& m) {
  SparseCoeffs s;
  s.padded_rows = static_cast<uint32_t>(m.rows());
  s.padded_cols = static_cast<uint32_t>(m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    const double* row = m.row(r);
    for (int c = 0; c < m.cols(); ++c) {
      if (row[c] != 0.0) {
        s.entries.push_back({static_cast<uint32_t>(r), static_cast<uint32_t>(c), row[c]});
      }
    }
  }
  return s;
}

Matrix from_sparse(const SparseCoeffs& s) {
  validate_sparse(s);
  Matrix m(static_cast<int>(s.padded_rows), static_cast<int>(s.padded_cols));
  for (const SparseEntry& e : s.entries) {
    m(static_cast<int>(e.row), static_cast<int>(e.col)) = e.value;
  }
  return m;
}

std::vector<uint8_t> encode(const CompressedHeader& header, const SparseCoeffs& s) {
  validate_sparse(s);
  validate_header(header);
  if (header.padded_height != s.padded_rows || header.padded_width != s.padded_cols) {
    throw Error(ErrorCode::kHeaderMismatch, "header padded dimensions do not match sparse data");
  }

  std::vector<uint8_t> out;
  out.reserve(encoded_size(s.entries.size()));
  out.insert(out.end(), kMagic, kMagic + kMagicSize);
  out.push_back(header.version);
  out.push_back(static_cast<uint8_t>(header.mode));
  out.push_back(header.levels);
  out.push_back(static_cast<uint8_t>(header.method));
  put_f64(out, header.epsilon);
  put_u32(out, header.orig_width);
  put_u32(out, header.orig_height);
  put_u32(out, header.padded_width);
  put_u32(out, header.padded_height);
  put_u32(out, static_cast<uint32_t>(s.entries.size()));
  for (const SparseEntry& e : s.entries) {
    put_u32(out, e.row);
    put_u32(out, e.col);
    put_f64(out, e.value);
  }
  return out;
}

std::pair<CompressedHeader, SparseCoeffs> decode(std::span<const uint8_t> data) {
  if (data.size() < kMagicSize) {
    throw Error(ErrorCode::kTruncatedPayload, "payload shorter than magic");
  }
  if (std::memcmp(data.data(), kMagic, kMagicSize) != 0) {
    throw Error(ErrorCode::kBadMagic, "not an HWZ1 payload");
  }
  if (data.size() < kHeaderSize) {
    throw Error(ErrorCode::kTruncatedPayload, "payload shorter than header");
  }

  Reader reader(data.subspan(kMagicSize));
  CompressedHeader h;
  h.version = reader.u8();
  if (h.version != kFormatVersion) {
    throw Error(ErrorCode::kUnsupportedVersion,
                "unsupported format version " + std::to_string(h.version));
  }
  const uint8_t mode_byte = reader.u8();
  if (mode_byte > 1) {
    throw Error(ErrorCode::kMalformedSparse, "invalid mode byte " + std::to_string(mode_byte));
  }
  h.mode = static_cast<Mode>(mode_byte);
  h.levels = reader.u8();
  const uint8_t method_byte = reader.u8();
  if (method_byte > 3) {
    throw Error(ErrorCode::kMalformedSparse, "invalid method byte " + std::to_string(method_byte));
  }
  h.method = static_cast<ThresholdMethod>(method_byte);
  h.epsilon = reader.f64();
  h.orig_width = reader.u32();
  h.orig_height = reader.u32();
  h.padded_width = reader.u32();
  h.padded_height = reader.u32();
  const uint32_t entry_count = reader.u32();

  try {
    validate_header(h);
  } catch (const Error& e) {
    // A well-formed file never fails these checks, so surface them as
    // malformed payload rather than a header/sparse mismatch.
    if (e.code() == ErrorCode::kHeaderMismatch) {
      throw Error(ErrorCode::kMalformedSparse, e.what());
    }
    throw;
  }

  const size_t expected = encoded_size(entry_count);
  if (data.size() < expected) {
    throw Error(ErrorCode::kTruncatedPayload,
                "expected " + std::to_string(expected) + " bytes, got " +
                    std::to_string(data.size()));
  }
  if (data.size() > expected) {
    throw Error(ErrorCode::kMalformedSparse, "trailing bytes after payload");
  }

  SparseCoeffs s;
  s.padded_rows = h.padded_height;
  s.padded_cols = h.padded_width;
  s.entries.reserve(entry_count);
  for (uint32_t i = 0; i < entry_count; ++i) {
    SparseEntry e;
    e.row = reader.u32();
    e.col = reader.u32();
    e.value = reader.f64();
    s.entries.push_back(e);
  }
  validate_sparse(s);
  return {h, s};
}

}  // namespace hwz
