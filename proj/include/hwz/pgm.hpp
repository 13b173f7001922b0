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

#ifndef HWZ_PGM_HPP_
#define HWZ_PGM_HPP_

#include <iosfwd>
#include <string>

#include "hwz/matrix.hpp"

namespace hwz {

// Parses binary (P5) or ASCII (P2) PGM with maxval <= 255. '#' comments in
// the header are skipped.
GrayImage read_pgm(std::istream& in);
GrayImage read_pgm(const std::string& path);

// Binary P5 by default, ASCII P2 otherwise. Always writes maxval 255.
void write_pgm(const GrayImage& img, std::ostream& out, bool binary = true);
void write_pgm(const GrayImage& img, const std::string& path, bool binary = true);

}  // namespace hwz

#endif  // HWZ_PGM_HPP_
