// Copyright 2026 The postdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POSTDIST_IO_HPP
#define POSTDIST_IO_HPP

// Channel file format:
//
//   {"name": "...", "dim_in": 2, "dim_out": 2,
//    "kraus": [ [[ [re, im], [re, im] ], [ [re, im], [re, im] ]], ... ]}
//
// Each Kraus operator is an array of rows; each entry is [re, im]. Doubles
// are printed in shortest round-trip form, so write -> read is bit-exact.

#include <filesystem>
#include <string>
#include <string_view>

#include "postdist/channel.hpp"

namespace postdist {

/// Shortest decimal string that parses back to exactly `x`.
std::string format_double(double x);

std::string channel_to_json(const Channel& ch);

/// Throws ParseError on malformed text or shapes inconsistent with the
/// declared dimensions, CapacityError past the dimension cap.
Channel channel_from_json(std::string_view text);

void write_channel_file(const std::filesystem::path& path, const Channel& ch);
Channel read_channel_file(const std::filesystem::path& path);

/// Writes `text` with LF line endings exactly as given.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace postdist

#endif  // POSTDIST_IO_HPP
