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


#include <gtest/gtest.h>

#include <filesystem>
#include <limits>

#include "postdist/error.hpp"
#include "postdist/gallery.hpp"
#include "postdist/io.hpp"
#include "postdist/random.hpp"

namespace postdist {
namespace {

bool bit_equal(const Channel& a, const Channel& b) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out() || a.rank() != b.rank() ||
      a.name() != b.name()) {
    return false;
  }
  for (std::size_t k = 0; k < a.rank(); ++k) {
    if (!(a.kraus()[k].array() == b.kraus()[k].array()).all()) return false;
  }
  return true;
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(-0.0), "-0.0");
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.normal() * std::pow(10.0, static_cast<int>(rng.uniform() * 40) - 20);
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
}

TEST(ChannelJson, RoundTripIsBitExact) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Channel ch = random_channel(1 + seed % 3, 1 + seed % 4, 1 + seed % 3, seed,
                                      seed % 2 ? RandomKind::kCptp : RandomKind::kPostselection)
                           .renamed("random " + std::to_string(seed) + " \"quoted\"");
    EXPECT_TRUE(bit_equal(channel_from_json(channel_to_json(ch)), ch));
  }
  for (const Channel& ch : gallery("nonconvexity_pair", {})) {
    EXPECT_TRUE(bit_equal(channel_from_json(channel_to_json(ch)), ch));
  }
}

TEST(ChannelJson, FileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "postdist_io_test";
  std::filesystem::create_directories(dir);
  const Channel ch = random_channel(2, 3, 2, 4, RandomKind::kPostselection).renamed("c");
  write_channel_file(dir / "c.json", ch);
  EXPECT_TRUE(bit_equal(read_channel_file(dir / "c.json"), ch));
  EXPECT_THROW(read_channel_file(dir / "missing.json"), ParseError);
  std::filesystem::remove_all(dir);
}

TEST(ChannelJson, RejectsMalformed) {
  EXPECT_THROW(channel_from_json("{"), ParseError);
  EXPECT_THROW(channel_from_json("[]"), ParseError);
  EXPECT_THROW(channel_from_json(R"({"dim_in": 1, "dim_out": 1})"), ParseError);
  EXPECT_THROW(channel_from_json(R"({"dim_in": 0, "dim_out": 1, "kraus": [[[[1,0]]]]})"),
               ParseError);
  EXPECT_THROW(channel_from_json(R"({"dim_in": 2, "dim_out": 1, "kraus": [[[[1,0]]]]})"),
               ParseError);
  EXPECT_THROW(channel_from_json(R"({"dim_in": 1, "dim_out": 1, "kraus": [[[[1]]]]})"),
               ParseError);
  EXPECT_THROW(channel_from_json(R"({"dim_in": 1, "dim_out": 1, "kraus": [[[["a",0]]]]})"),
               ParseError);
  EXPECT_THROW(channel_from_json(R"({"name": 3, "dim_in": 1, "dim_out": 1, "kraus": [[[[1,0]]]]})"),
               ParseError);
  EXPECT_THROW(channel_from_json(R"({"dim_in": 5000, "dim_out": 1, "kraus": []})"),
               CapacityError);
  const Channel ok = channel_from_json(R"({"dim_in": 1, "dim_out": 1, "kraus": [[[[1,0]]]]})");
  EXPECT_EQ(ok.rank(), 1u);
}

}  // namespace
}  // namespace postdist
