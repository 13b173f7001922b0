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

#ifndef HWZ_PIPELINE_HPP_
#define HWZ_PIPELINE_HPP_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hwz/codec.hpp"
#include "hwz/matrix.hpp"
#include "hwz/metrics.hpp"
#include "hwz/threshold.hpp"
#include "hwz/transform.hpp"

namespace hwz {

// Pads each dimension up to the next power of two by edge replication.
// Identity when both dimensions already are powers of two.
Matrix pad_to_pow2(const GrayImage& img);

// Crops to the original dimensions, rounds half away from zero and clamps
// to [0, 255].
GrayImage crop_and_quantize(const Matrix& m, int orig_width, int orig_height);

struct CompressOptions {
  TransformSpec spec{};
  ThresholdMethod method = ThresholdMethod::kHard;
  double epsilon = 0.0;
  // When set, hard thresholding with a solved epsilon overrides
  // method/epsilon above.
  std::optional<double> target_cr;
  std::optional<double> target_psnr;
  double tol_db = 0.5;
};

struct CompressResult {
  std::vector<uint8_t> blob;
  CompressedHeader header;
  MetricsReport report;
};

// pad -> transform -> threshold -> sparse -> encode, with quality metrics
// computed against the reconstruction a decoder will produce.
CompressResult compress_image(const GrayImage& img, const CompressOptions& options);

// decode -> dense -> inverse transform -> crop/quantize.
GrayImage decompress_image(std::span<const uint8_t> blob);

// mse/psnr/energy between two rasters of equal dimensions.
MetricsReport image_metrics(const GrayImage& reference, const GrayImage& test);

// Full report for a thresholded transform: quality metrics against the
// reconstruction the decoder will produce, CR against the padded original.
MetricsReport reconstruction_report(const GrayImage& img, const Matrix& padded,
                                    const Matrix& thresholded, const TransformSpec& spec);

// Compress/decompress at epsilon 0 in standard mode and at pyramid depths
// {1, max}; true when every roundtrip is bit-exact.
bool verify_roundtrip(const GrayImage& img, std::string* detail = nullptr);

struct SweepRow {
  double epsilon = 0.0;
  ThresholdMethod method = ThresholdMethod::kHard;
  double cr = 0.0;
  double mse = 0.0;
  double psnr_db = kInfinity;
  double energy_retained_pct = 0.0;
  size_t nnz = 0;
};

// One row per (method, epsilon) for hard and soft plus the single
// universal point, ordered by method name then epsilon. Rows may be
// evaluated concurrently (HWZ_THREADS caps the workers); the output order
// is deterministic.
std::vector<SweepRow> analyze_image(const GrayImage& img, const TransformSpec& spec,
                                    std::vector<double> epsilons);

// Fixed columns: epsilon,method,cr,mse,psnr_db,energy_retained_pct,nnz.
// Infinite values are written as "inf".
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

// Shortest-ish decimal form used in reports and CSV; "inf" for infinities.
std::string format_value(double v);

}  // namespace hwz

#endif  // HWZ_PIPELINE_HPP_
