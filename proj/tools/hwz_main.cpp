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
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hwz/codec.hpp"
#include "hwz/error.hpp"
#include "hwz/metrics.hpp"
#include "hwz/pgm.hpp"
#include "hwz/pipeline.hpp"
#include "hwz/rate_control.hpp"
#include "hwz/transform.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitVerification = 3;

int exit_code_for(hwz::ErrorCode code) {
  switch (code) {
    case hwz::ErrorCode::kBadFormat:
    case hwz::ErrorCode::kUnsupportedMaxval:
    case hwz::ErrorCode::kTruncatedFile:
    case hwz::ErrorCode::kIoFailure:
    case hwz::ErrorCode::kBadMagic:
    case hwz::ErrorCode::kUnsupportedVersion:
    case hwz::ErrorCode::kTruncatedPayload:
    case hwz::ErrorCode::kMalformedSparse:
    case hwz::ErrorCode::kHeaderMismatch:
      return kExitIo;
    default:
      return kExitUsage;
  }
}

std::vector<uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw hwz::Error(hwz::ErrorCode::kIoFailure, "cannot open '" + path + "' for reading");
  }
  std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw hwz::Error(hwz::ErrorCode::kIoFailure, "read from '" + path + "' failed");
  }
  return data;
}

void write_file(const std::string& path, const std::vector<uint8_t>& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw hwz::Error(hwz::ErrorCode::kIoFailure, "cannot open '" + path + "' for writing");
  }
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) {
    throw hwz::Error(hwz::ErrorCode::kIoFailure, "write to '" + path + "' failed");
  }
}

hwz::TransformSpec make_spec(const std::string& mode, int levels) {
  hwz::TransformSpec spec;
  spec.mode = mode == "pyramid" ? hwz::Mode::kPyramid : hwz::Mode::kStandard;
  spec.levels = levels;
  return spec;
}

// Accepts "15,20,25" or "lo:hi:step" (inclusive endpoints).
std::vector<double> parse_eps_list(const std::string& text) {
  const auto bad = [&] {
    return hwz::Error(hwz::ErrorCode::kInvalidThreshold,
                      "cannot parse threshold list '" + text + "'");
  };
  std::vector<double> values;
  if (text.find(':') != std::string::npos) {
    double lo = 0;
    double hi = 0;
    double step = 0;
    char c1 = 0;
    char c2 = 0;
    std::istringstream in(text);
    if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !in.eof()) {
      throw bad();
    }
    if (step <= 0 || hi < lo) throw bad();
    const auto count = static_cast<size_t>((hi - lo) / step + 1e-9) + 1;
    for (size_t k = 0; k < count; ++k) values.push_back(lo + static_cast<double>(k) * step);
  } else {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size()) throw bad();
        values.push_back(v);
      } catch (const std::logic_error&) {
        throw bad();
      }
    }
  }
  if (values.empty()) throw bad();
  return values;
}

void print_report(const hwz::MetricsReport& report, bool with_cr) {
  if (with_cr) {
    std::cout << "cr=" << hwz::format_value(report.cr) << "\n";
  }
  std::cout << "mse=" << hwz::format_value(report.mse) << "\n";
  std::cout << "psnr_db=" << hwz::format_value(report.psnr_db) << "\n";
  std::cout << "energy_retained_pct=" << hwz::format_value(report.energy_retained_pct) << "\n";
  if (with_cr) {
    std::cout << "nnz_original=" << report.nnz_original << "\n";
    std::cout << "nnz_thresholded=" << report.nnz_thresholded << "\n";
  }
}

struct CompressArgs {
  std::string input;
  std::string output;
  std::string mode = "standard";
  int levels = 1;
  std::optional<double> hard_eps;
  std::optional<double> soft_eps;
  bool universal = false;
  std::optional<double> target_cr;
  std::optional<double> target_psnr;
  double tol_db = 0.5;
};

void run_compress(const CompressArgs& args) {
  const hwz::GrayImage img = hwz::read_pgm(args.input);

  hwz::CompressOptions options;
  options.spec = make_spec(args.mode, args.levels);
  if (args.hard_eps) {
    options.method = hwz::ThresholdMethod::kHard;
    options.epsilon = *args.hard_eps;
  } else if (args.soft_eps) {
    options.method = hwz::ThresholdMethod::kSoft;
    options.epsilon = *args.soft_eps;
  } else if (args.universal) {
    options.method = hwz::ThresholdMethod::kUniversal;
  } else {
    options.method = hwz::ThresholdMethod::kHard;
    options.epsilon = 0.0;
  }
  options.target_cr = args.target_cr;
  options.target_psnr = args.target_psnr;
  options.tol_db = args.tol_db;

  const hwz::CompressResult result = hwz::compress_image(img, options);
  write_file(args.output, result.blob);

  std::cout << "mode=" << (result.header.mode == hwz::Mode::kPyramid ? "pyramid" : "standard")
            << "\n";
  if (result.header.mode == hwz::Mode::kPyramid) {
    std::cout << "levels=" << static_cast<int>(result.header.levels) << "\n";
  }
  std::cout << "method=" << hwz::threshold_method_name(result.header.method) << "\n";
  std::cout << "epsilon=" << hwz::format_value(result.header.epsilon) << "\n";
  print_report(result.report, /*with_cr=*/true);
  if (args.target_cr || args.target_psnr) {
    std::cout << "target_unreachable=" << (result.report.target_unreachable ? "true" : "false")
              << "\n";
  }
  std::cout << "wrote " << args.output << " (" << result.blob.size() << " bytes)\n";
}

void run_decompress(const std::string& input, const std::string& output) {
  const std::vector<uint8_t> blob = read_file(input);
  const hwz::GrayImage img = hwz::decompress_image(blob);
  hwz::write_pgm(img, output);
  std::cout << "wrote " << output << " (" << img.width << "x" << img.height << ")\n";
}

void run_metrics(const std::string& ref_path, const std::string& test_path, bool csv) {
  const hwz::GrayImage ref = hwz::read_pgm(ref_path);
  const hwz::GrayImage test = hwz::read_pgm(test_path);
  const hwz::MetricsReport report = hwz::image_metrics(ref, test);
  if (csv) {
    std::cout << "mse,psnr_db,energy_retained_pct\n"
              << hwz::format_value(report.mse) << ',' << hwz::format_value(report.psnr_db) << ','
              << hwz::format_value(report.energy_retained_pct) << "\n";
  } else {
    print_report(report, /*with_cr=*/false);
  }
}

int run_verify(const std::string& input) {
  const hwz::GrayImage img = hwz::read_pgm(input);
  std::string detail;
  if (hwz::verify_roundtrip(img, &detail)) {
    std::cout << "verify: PASS\n";
    return kExitSuccess;
  }
  std::cout << "verify: FAIL (" << detail << ")\n";
  return kExitVerification;
}

void run_analyze(const std::string& input, const std::string& eps_text,
                 const std::string& out_path, const std::string& mode, int levels) {
  const hwz::GrayImage img = hwz::read_pgm(input);
  const std::vector<hwz::SweepRow> rows =
      hwz::analyze_image(img, make_spec(mode, levels), parse_eps_list(eps_text));

  std::ofstream out(out_path);
  if (!out) {
    throw hwz::Error(hwz::ErrorCode::kIoFailure, "cannot open '" + out_path + "' for writing");
  }
  hwz::write_sweep_csv(rows, out);
  out.flush();
  if (!out) {
    throw hwz::Error(hwz::ErrorCode::kIoFailure, "write to '" + out_path + "' failed");
  }
  std::cout << "wrote " << out_path << " (" << rows.size() << " data rows)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Haar wavelet grayscale image compression toolkit"};
  app.require_subcommand(1);

  int exit_code = kExitSuccess;

  // compress
  CompressArgs cargs;
  CLI::App* compress = app.add_subcommand("compress", "Compress a PGM image to an .hwz file");
  compress->add_option("input", cargs.input, "input PGM")->required();
  compress->add_option("output", cargs.output, "output .hwz")->required();
  compress->add_option("--mode", cargs.mode, "decomposition mode")
      ->check(CLI::IsMember({"standard", "pyramid"}));
  compress->add_option("--levels", cargs.levels, "pyramid depth")->check(CLI::PositiveNumber);
  CLI::Option* hard = compress->add_option("--hard", cargs.hard_eps, "hard threshold epsilon");
  CLI::Option* soft = compress->add_option("--soft", cargs.soft_eps, "soft threshold epsilon");
  CLI::Option* universal =
      compress->add_flag("--universal", cargs.universal, "universal threshold");
  CLI::Option* target_cr =
      compress->add_option("--target-cr", cargs.target_cr, "solve for this compression ratio");
  CLI::Option* target_psnr =
      compress->add_option("--target-psnr", cargs.target_psnr, "solve for this PSNR (dB)");
  CLI::Option* tol = compress->add_option("--tol", cargs.tol_db, "PSNR tolerance (dB)");
  hard->excludes(soft)->excludes(universal)->excludes(target_cr)->excludes(target_psnr);
  soft->excludes(universal)->excludes(target_cr)->excludes(target_psnr);
  universal->excludes(target_cr)->excludes(target_psnr);
  target_cr->excludes(target_psnr);
  tol->needs(target_psnr);
  compress->callback([&] { run_compress(cargs); });

  // decompress
  std::string din;
  std::string dout;
  CLI::App* decompress = app.add_subcommand("decompress", "Decompress an .hwz file to PGM");
  decompress->add_option("input", din, "input .hwz")->required();
  decompress->add_option("output", dout, "output PGM")->required();
  decompress->callback([&] { run_decompress(din, dout); });

  // metrics
  std::string mref;
  std::string mtest;
  bool mcsv = false;
  CLI::App* metrics = app.add_subcommand("metrics", "Quality metrics between two PGM images");
  metrics->add_option("reference", mref, "reference PGM")->required();
  metrics->add_option("test", mtest, "test PGM")->required();
  metrics->add_flag("--csv", mcsv, "CSV output");
  metrics->callback([&] { run_metrics(mref, mtest, mcsv); });

  // verify
  std::string vin;
  CLI::App* verify = app.add_subcommand("verify", "Check the lossless roundtrip on an image");
  verify->add_option("input", vin, "input PGM")->required();
  verify->callback([&] { exit_code = run_verify(vin); });

  // analyze
  std::string ain;
  std::string aeps;
  std::string aout;
  std::string amode = "standard";
  int alevels = 1;
  CLI::App* analyze = app.add_subcommand("analyze", "Threshold sweep, CSV report");
  analyze->add_option("input", ain, "input PGM")->required();
  analyze->add_option("--eps", aeps, "comma list or lo:hi:step")->required();
  analyze->add_option("--out", aout, "output CSV path")->required();
  analyze->add_option("--mode", amode, "decomposition mode")
      ->check(CLI::IsMember({"standard", "pyramid"}));
  analyze->add_option("--levels", alevels, "pyramid depth")->check(CLI::PositiveNumber);
  analyze->callback([&] { run_analyze(ain, aeps, aout, amode, alevels); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  } catch (const hwz::Error& e) {
    std::cerr << "hwz: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "hwz: " << e.what() << "\n";
    return kExitIo;
  }
  return exit_code;
}
