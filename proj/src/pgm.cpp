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

#include "hwz/pgm.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "hwz/error.hpp"

namespace hwz {
namespace {

bool is_pgm_space(int ch) {
  return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '\v' || ch == '\f';
}

// Reads the next header token, skipping whitespace and '#' comments that
// run to end of line.
std::string next_token(std::istream& in) {
  int ch = in.get();
  while (ch != EOF && (is_pgm_space(ch) || ch == '#')) {
    if (ch == '#') {
      while (ch != EOF && ch != '\n') ch = in.get();
    }
    ch = in.get();
  }
  if (ch == EOF) {
    throw Error(ErrorCode::kTruncatedFile, "unexpected end of file in PGM data");
  }
  std::string token;
  while (ch != EOF && !is_pgm_space(ch) && ch != '#') {
    token.push_back(static_cast<char>(ch));
    ch = in.get();
  }
  // leave the terminator in the stream; P5 consumes exactly one separator
  if (ch != EOF) in.unget();
  return token;
}

long parse_number(const std::string& token, const char* what) {
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::kBadFormat, std::string("invalid ") + what + ": '" + token + "'");
    }
  }
  if (token.empty() || token.size() > 9) {
    throw Error(ErrorCode::kBadFormat, std::string("invalid ") + what + ": '" + token + "'");
  }
  return std::stol(token);
}

}  // namespace

GrayImage read_pgm(std::istream& in) {
  std::string magic = next_token(in);
  if (magic != "P2" && magic != "P5") {
    throw Error(ErrorCode::kBadFormat, "not a PGM file (magic '" + magic + "')");
  }

  const long width = parse_number(next_token(in), "width");
  const long height = parse_number(next_token(in), "height");
  const long maxval = parse_number(next_token(in), "maxval");
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kBadFormat, "image dimensions must be positive");
  }
  if (maxval <= 0) {
    throw Error(ErrorCode::kBadFormat, "maxval must be positive");
  }
  if (maxval > 255) {
    throw Error(ErrorCode::kUnsupportedMaxval,
                "maxval " + std::to_string(maxval) + " exceeds 255");
  }

  GrayImage img(static_cast<int>(width), static_cast<int>(height));
  if (magic == "P5") {
    // Exactly one whitespace byte separates the header from the raster.
    const int sep = in.get();
    if (sep == EOF) {
      throw Error(ErrorCode::kTruncatedFile, "missing raster data");
    }
    if (!is_pgm_space(sep)) {
      throw Error(ErrorCode::kBadFormat, "missing separator after maxval");
    }
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (static_cast<size_t>(in.gcount()) != img.pixels.size()) {
      throw Error(ErrorCode::kTruncatedFile, "raster shorter than width*height");
    }
  } else {
    for (size_t i = 0; i < img.pixels.size(); ++i) {
      const long v = parse_number(next_token(in), "pixel");
      if (v > maxval) {
        throw Error(ErrorCode::kBadFormat,
                    "pixel value " + std::to_string(v) + " exceeds maxval");
      }
      img.pixels[i] = static_cast<uint8_t>(v);
    }
  }
  for (uint8_t p : img.pixels) {
    if (p > maxval) {
      throw Error(ErrorCode::kBadFormat, "pixel value exceeds maxval");
    }
  }
  return img;
}

GrayImage read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoFailure, "cannot open '" + path + "' for reading");
  }
  return read_pgm(in);
}

void write_pgm(const GrayImage& img, std::ostream& out, bool binary) {
  if (binary) {
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
  } else {
    out << "P2\n" << img.width << " " << img.height << "\n255\n";
    for (int r = 0; r < img.height; ++r) {
      for (int c = 0; c < img.width; ++c) {
        out << static_cast<int>(img.at(r, c)) << (c + 1 == img.width ? "" : " ");
      }
      out << "\n";
    }
  }
  if (!out) {
    throw Error(ErrorCode::kIoFailure, "write failed");
  }
}

void write_pgm(const GrayImage& img, const std::string& path, bool binary) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIoFailure, "cannot open '" + path + "' for writing");
  }
  write_pgm(img, out, binary);
  out.flush();
  if (!out) {
    throw Error(ErrorCode::kIoFailure, "write to '" + path + "' failed");
  }
}

}  // namespace hwz
