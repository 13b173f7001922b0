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

#include "hwz/threshold.hpp"

#include <cmath>

#include "hwz/error.hpp"

namespace hwz {
namespace {

void check_epsilon(double eps) {
  if (std::isnan(eps) || eps < 0.0) {
    throw Error(ErrorCode::kInvalidThreshold, "threshold must be nonnegative");
  }
}

}  // namespace

const char* threshold_method_name(ThresholdMethod method) {
  switch (method) {
    case ThresholdMethod::kNone: return "none";
    case ThresholdMethod::kHard: return "hard";
    case ThresholdMethod::kSoft: return "soft";
    case ThresholdMethod::kUniversal: return "universal";
  }
  return "unknown";
}

ExemptMask ExemptMask::for_spec(const TransformSpec& spec, int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw Error(ErrorCode::kInvalidShape, "mask dimensions must be positive");
  }
  if (spec.mode == Mode::kPyramid) {
    const int max_levels = max_pyramid_levels(rows, cols);
    if (spec.levels < 1 || spec.levels > max_levels) {
      throw Error(ErrorCode::kLevelTooDeep,
                  "pyramid levels out of range for mask: " + std::to_string(spec.levels));
    }
    return ExemptMask(rows >> spec.levels, cols >> spec.levels);
  }
  return ExemptMask(1, 1);
}

Matrix apply_hard(Matrix c, double eps, const ExemptMask& mask) {
  check_epsilon(eps);
  for (int r = 0; r < c.rows(); ++r) {
    double* row = c.row(r);
    const int skip = r < mask.block_rows() ? mask.block_cols() : 0;
    for (int j = skip; j < c.cols(); ++j) {
      if (std::abs(row[j]) < eps) row[j] = 0.0;
    }
  }
  return c;
}

Matrix apply_soft(Matrix c, double eps, const ExemptMask& mask) {
  check_epsilon(eps);
  for (int r = 0; r < c.rows(); ++r) {
    double* row = c.row(r);
    const int skip = r < mask.block_rows() ? mask.block_cols() : 0;
    for (int j = skip; j < c.cols(); ++j) {
      const double mag = std::abs(row[j]);
      if (mag < eps) {
        row[j] = 0.0;
      } else {
        row[j] = std::copysign(mag - eps, row[j]);
      }
    }
  }
  return c;
}

double universal_epsilon(const Matrix& c, const ExemptMask& mask) {
  // Two passes; long double accumulation keeps the variance accurate for
  // large coefficient counts.
  long double sum = 0.0L;
  size_t n = 0;
  for (int r = 0; r < c.rows(); ++r) {
    const double* row = c.row(r);
    const int skip = r < mask.block_rows() ? mask.block_cols() : 0;
    for (int j = skip; j < c.cols(); ++j) {
      sum += row[j];
      ++n;
    }
  }
  if (n < 2) {
    throw Error(ErrorCode::kInsufficientCoefficients,
                "universal threshold needs at least 2 non-exempt coefficients");
  }
  const long double mean = sum / static_cast<long double>(n);
  long double sq = 0.0L;
  for (int r = 0; r < c.rows(); ++r) {
    const double* row = c.row(r);
    const int skip = r < mask.block_rows() ? mask.block_cols() : 0;
    for (int j = skip; j < c.cols(); ++j) {
      const long double d = row[j] - mean;
      sq += d * d;
    }
  }
  const double sigma = std::sqrt(static_cast<double>(sq / static_cast<long double>(n)));
  return sigma * std::sqrt(2.0 * std::log2(static_cast<double>(n)));
}

Matrix apply_threshold(Matrix c, const ThresholdPolicy& policy, const ExemptMask& mask) {
  switch (policy.method) {
    case ThresholdMethod::kNone:
      return c;
    case ThresholdMethod::kHard:
    case ThresholdMethod::kUniversal:
      return apply_hard(std::move(c), policy.epsilon, mask);
    case ThresholdMethod::kSoft:
      return apply_soft(std::move(c), policy.epsilon, mask);
  }
  return c;
}

}  // namespace hwz
