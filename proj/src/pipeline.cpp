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

#include "hwz/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include "hwz/error.hpp"
#include "hwz/parallel.hpp"
#include "hwz/rate_control.hpp"

namespace hwz {
namespace {

bool all_zero(const GrayImage& img) {
  return std::all_of(img.pixels.begin(), img.pixels.end(),
                     [](uint8_t p) { return p == 0; });
}

MetricsReport quality_metrics(const GrayImage& reference, const GrayImage& test) {
  MetricsReport rep;
  rep.mse = mse(reference, test);
  rep.psnr_db = psnr(reference, test);
  // An all-zero reference has no energy to retain; report 100 for an exact
  // reconstruction instead of failing the whole pipeline.
  if (all_zero(reference)) {
    rep.energy_retained_pct = rep.mse == 0.0 ? 100.0 : 0.0;
  } else {
    rep.energy_retained_pct = energy_retained(reference, test);
  }
  return rep;
}

}  // namespace

Matrix pad_to_pow2(const GrayImage& img) {
  const int ph = next_pow2(img.height);
  const int pw = next_pow2(img.width);
  Matrix m(ph, pw);
  for (int r = 0; r < ph; ++r) {
    const int sr = std::min(r, img.height - 1);
    for (int c = 0; c < pw; ++c) {
      const int sc = std::min(c, img.width - 1);
      m(r, c) = static_cast<double>(img.at(sr, sc));
    }
  }
  return m;
}

GrayImage crop_and_quantize(const Matrix& m, int orig_width, int orig_height) {
  if (orig_width <= 0 || orig_height <= 0 || orig_width > m.cols() || orig_height > m.rows()) {
    throw Error(ErrorCode::kInvalidShape, "crop dimensions exceed matrix dimensions");
  }
  GrayImage img(orig_width, orig_height);
  for (int r = 0; r < orig_height; ++r) {
    for (int c = 0; c < orig_width; ++c) {
      const double v = std::round(m(r, c));  // half away from zero
      img.at(r, c) = static_cast<uint8_t>(std::clamp(v, 0.0, 255.0));
    }
  }
  return img;
}

MetricsReport image_metrics(const GrayImage& reference, const GrayImage& test) {
  return quality_metrics(reference, test);
}

MetricsReport reconstruction_report(const GrayImage& img, const Matrix& padded,
                                    const Matrix& thresholded, const TransformSpec& spec) {
  const GrayImage recon =
      crop_and_quantize(inverse2d(thresholded, spec), img.width, img.height);
  MetricsReport rep = quality_metrics(img, recon);
  rep.cr = compression_ratio(padded, thresholded);
  rep.nnz_original = nnz(padded);
  rep.nnz_thresholded = nnz(thresholded);
  return rep;
}

CompressResult compress_image(const GrayImage& img, const CompressOptions& options) {
  if (options.target_cr && options.target_psnr) {
    throw Error(ErrorCode::kInvalidTarget, "choose either a CR target or a PSNR target");
  }

  const TransformSpec spec = options.spec;
  const Matrix padded = pad_to_pow2(img);
  const Matrix transformed = forward2d(padded, spec);
  const ExemptMask mask = ExemptMask::for_spec(spec, transformed.rows(), transformed.cols());

  double epsilon = 0.0;
  ThresholdMethod method = options.method;
  MetricsReport report;

  if (options.target_cr) {
    const RateControlResult rc = solve_for_cr(img, spec, *options.target_cr);
    epsilon = rc.epsilon;
    method = ThresholdMethod::kHard;
    report = rc.report;
  } else if (options.target_psnr) {
    const RateControlResult rc = solve_for_psnr(img, spec, *options.target_psnr, options.tol_db);
    epsilon = rc.epsilon;
    method = ThresholdMethod::kHard;
    report = rc.report;
  } else {
    epsilon = method == ThresholdMethod::kUniversal ? universal_epsilon(transformed, mask)
              : method == ThresholdMethod::kNone    ? 0.0
                                                    : options.epsilon;
  }

  const Matrix thresholded = apply_threshold(transformed, {method, epsilon}, mask);
  if (!options.target_cr && !options.target_psnr) {
    report = reconstruction_report(img, padded, thresholded, spec);
  }

  CompressedHeader header;
  header.version = kFormatVersion;
  header.mode = spec.mode;
  header.levels = spec.mode == Mode::kPyramid ? static_cast<uint8_t>(spec.levels) : 0;
  header.method = method;
  header.epsilon = epsilon;
  header.orig_width = static_cast<uint32_t>(img.width);
  header.orig_height = static_cast<uint32_t>(img.height);
  header.padded_width = static_cast<uint32_t>(transformed.cols());
  header.padded_height = static_cast<uint32_t>(transformed.rows());

  CompressResult result;
  result.blob = encode(header, to_sparse(thresholded));
  result.header = header;
  result.report = report;
  return result;
}

GrayImage decompress_image(std::span<const uint8_t> blob) {
  const auto [header, sparse] = decode(blob);
  const Matrix dense = from_sparse(sparse);
  TransformSpec spec;
  spec.mode = header.mode;
  spec.levels = header.mode == Mode::kPyramid ? header.levels : 1;
  const Matrix restored = inverse2d(dense, spec);
  return crop_and_quantize(restored, static_cast<int>(header.orig_width),
                           static_cast<int>(header.orig_height));
}

bool verify_roundtrip(const GrayImage& img, std::string* detail) {
  std::vector<TransformSpec> configs;
  configs.push_back({Mode::kStandard, 1});
  const int max_levels = max_pyramid_levels(next_pow2(img.height), next_pow2(img.width));
  if (max_levels >= 1) {
    configs.push_back({Mode::kPyramid, 1});
    if (max_levels > 1) configs.push_back({Mode::kPyramid, max_levels});
  }

  for (const TransformSpec& spec : configs) {
    CompressOptions options;
    options.spec = spec;
    options.method = ThresholdMethod::kHard;
    options.epsilon = 0.0;
    const CompressResult compressed = compress_image(img, options);
    const GrayImage back = decompress_image(compressed.blob);
    if (back != img) {
      if (detail != nullptr) {
        *detail = std::string("roundtrip mismatch in ") +
                  (spec.mode == Mode::kStandard ? "standard mode"
                                                : "pyramid mode, levels " +
                                                      std::to_string(spec.levels));
      }
      return false;
    }
  }
  return true;
}

std::vector<SweepRow> analyze_image(const GrayImage& img, const TransformSpec& spec,
                                    std::vector<double> epsilons) {
  for (double eps : epsilons) {
    if (std::isnan(eps) || eps < 0.0) {
      throw Error(ErrorCode::kInvalidThreshold, "sweep thresholds must be nonnegative");
    }
  }
  std::sort(epsilons.begin(), epsilons.end());
  epsilons.erase(std::unique(epsilons.begin(), epsilons.end()), epsilons.end());
  if (epsilons.empty()) {
    throw Error(ErrorCode::kInvalidThreshold, "sweep needs at least one threshold");
  }

  const Matrix padded = pad_to_pow2(img);
  const Matrix transformed = forward2d(padded, spec);
  const ExemptMask mask = ExemptMask::for_spec(spec, transformed.rows(), transformed.cols());

  std::vector<ThresholdPolicy> tasks;
  for (double eps : epsilons) tasks.push_back({ThresholdMethod::kHard, eps});
  for (double eps : epsilons) tasks.push_back({ThresholdMethod::kSoft, eps});
  tasks.push_back({ThresholdMethod::kUniversal, universal_epsilon(transformed, mask)});

  std::vector<SweepRow> rows(tasks.size());
  parallel_for(tasks.size(), [&](size_t i) {
    const Matrix thresholded = apply_threshold(transformed, tasks[i], mask);
    const MetricsReport rep = reconstruction_report(img, padded, thresholded, spec);
    rows[i] = {tasks[i].epsilon, tasks[i].method, rep.cr,
               rep.mse,          rep.psnr_db,     rep.energy_retained_pct,
               rep.nnz_thresholded};
  });
  return rows;
}

std::string format_value(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  // shortest decimal form that parses back to the same double
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "epsilon,method,cr,mse,psnr_db,energy_retained_pct,nnz\n";
  for (const SweepRow& row : rows) {
    out << format_value(row.epsilon) << ',' << threshold_method_name(row.method) << ','
        << format_value(row.cr) << ',' << format_value(row.mse) << ','
        << format_value(row.psnr_db) << ',' << format_value(row.energy_retained_pct) << ','
        << row.nnz << '\n';
  }
}

}  // namespace hwz
