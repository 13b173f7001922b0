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

#include "hwz/rate_control.hpp"

#include <algorithm>
#include <cmath>

#include "hwz/error.hpp"
#include "hwz/pipeline.hpp"

namespace hwz {
namespace {

struct SolverContext {
  Matrix padded;
  Matrix transformed;
  ExemptMask mask;
  size_t nnz_original;
};

SolverContext make_context(const GrayImage& img, const TransformSpec& spec) {
  Matrix padded = pad_to_pow2(img);
  Matrix transformed = forward2d(padded, spec);
  ExemptMask mask = ExemptMask::for_spec(spec, transformed.rows(), transformed.cols());
  const size_t n = nnz(padded);
  return {std::move(padded), std::move(transformed), mask, n};
}

std::vector<double> nonexempt_magnitudes(const Matrix& coeffs, const ExemptMask& mask) {
  std::vector<double> mags;
  for (int r = 0; r < coeffs.rows(); ++r) {
    const double* row = coeffs.row(r);
    const int skip = r < mask.block_rows() ? mask.block_cols() : 0;
    for (int c = skip; c < coeffs.cols(); ++c) {
      if (row[c] != 0.0) mags.push_back(std::abs(row[c]));
    }
  }
  std::sort(mags.begin(), mags.end());
  return mags;
}

double psnr_at(const GrayImage& img, const SolverContext& ctx, const TransformSpec& spec,
               double eps) {
  const Matrix thresholded = apply_hard(ctx.transformed, eps, ctx.mask);
  const GrayImage recon =
      crop_and_quantize(inverse2d(thresholded, spec), img.width, img.height);
  return psnr(img, recon);
}

}  // namespace

std::vector<double> threshold_candidates(const Matrix& coeffs, const ExemptMask& mask) {
  const std::vector<double> mags = nonexempt_magnitudes(coeffs, mask);
  std::vector<double> candidates{0.0};
  for (size_t i = 0; i < mags.size();) {
    size_t j = i;
    while (j < mags.size() && mags[j] == mags[i]) ++j;
    candidates.push_back(std::nextafter(mags[i], kInfinity));
    i = j;
  }
  return candidates;
}

RateControlResult solve_for_cr(const GrayImage& img, const TransformSpec& spec,
                               double target_cr) {
  if (!(target_cr >= 1.0)) {
    throw Error(ErrorCode::kInvalidTarget, "CR target must be >= 1");
  }

  const SolverContext ctx = make_context(img, spec);
  const std::vector<double> mags = nonexempt_magnitudes(ctx.transformed, ctx.mask);
  const size_t nnz_transformed = nnz(ctx.transformed);

  // Candidate i zeroes every non-exempt coefficient with magnitude <= the
  // i-th distinct magnitude; removed[i] counts them.
  std::vector<double> candidates{0.0};
  std::vector<size_t> removed{0};
  for (size_t i = 0; i < mags.size();) {
    size_t j = i;
    while (j < mags.size() && mags[j] == mags[i]) ++j;
    candidates.push_back(std::nextafter(mags[i], kInfinity));
    removed.push_back(j);
    i = j;
  }

  auto cr_at = [&](size_t i) {
    const size_t nnz_thresh = nnz_transformed - removed[i];
    if (nnz_thresh == 0) return kInfinity;
    if (ctx.nnz_original == 0) return 0.0;
    return static_cast<double>(ctx.nnz_original) / static_cast<double>(nnz_thresh);
  };

  size_t chosen = candidates.size() - 1;
  bool unreachable = true;
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (cr_at(i) >= target_cr) {
      chosen = i;
      unreachable = false;
      break;
    }
  }

  const double epsilon = candidates[chosen];
  const Matrix thresholded = apply_hard(ctx.transformed, epsilon, ctx.mask);
  MetricsReport report = reconstruction_report(img, ctx.padded, thresholded, spec);
  report.target_unreachable = unreachable;
  return {epsilon, report};
}

RateControlResult solve_for_psnr(const GrayImage& img, const TransformSpec& spec,
                                 double target_db, double tol_db) {
  if (!(target_db > 0.0)) {
    throw Error(ErrorCode::kInvalidTarget, "PSNR target must be positive");
  }
  if (!(tol_db > 0.0)) {
    throw Error(ErrorCode::kInvalidTarget, "PSNR tolerance must be positive");
  }

  const SolverContext ctx = make_context(img, spec);
  const std::vector<double> candidates = threshold_candidates(ctx.transformed, ctx.mask);
  const double floor_db = target_db - tol_db;

  auto acceptable = [&](size_t i) { return psnr_at(img, ctx, spec, candidates[i]) >= floor_db; };

  // Epsilon 0 is lossless (infinite PSNR), so index 0 always satisfies the
  // floor; bisect for the last satisfying index.
  size_t lo = 0;
  size_t hi = candidates.size();
  while (hi - lo > 1) {
    const size_t mid = lo + (hi - lo) / 2;
    if (acceptable(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  size_t chosen = lo;

  // PSNR is treated as nonincreasing in epsilon; confirm that holds around
  // the solution and rescan linearly when it does not.
  bool monotone_ok = true;
  const double p_chosen = psnr_at(img, ctx, spec, candidates[chosen]);
  if (chosen + 1 < candidates.size()) {
    const double p_next = psnr_at(img, ctx, spec, candidates[chosen + 1]);
    monotone_ok = p_next < floor_db && p_next <= p_chosen;
  }
  if (monotone_ok && chosen >= 1) {
    monotone_ok = psnr_at(img, ctx, spec, candidates[chosen - 1]) >= p_chosen;
  }
  if (!monotone_ok) {
    chosen = 0;
    for (size_t i = candidates.size(); i-- > 0;) {
      if (acceptable(i)) {
        chosen = i;
        break;
      }
    }
  }

  // Quantization can absorb sub-half-pixel perturbations, so several small
  // epsilons may still reconstruct exactly; the lossless outcome is
  // canonicalized to epsilon 0.
  if (chosen != 0 && psnr_at(img, ctx, spec, candidates[chosen]) == kInfinity) {
    chosen = 0;
  }

  const double epsilon = candidates[chosen];
  const Matrix thresholded = apply_hard(ctx.transformed, epsilon, ctx.mask);
  MetricsReport report = reconstruction_report(img, ctx.padded, thresholded, spec);
  report.target_unreachable = report.psnr_db > target_db + tol_db;
  return {epsilon, report};
}

}  // namespace hwz
