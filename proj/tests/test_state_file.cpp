// Copyright 2026 The weylgme Authors
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

#include "weylgme/state_file.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "weylgme/zoo.hpp"

using namespace weylgme;

TEST(state_file, canonical_text_round_trips_exactly) {
  std::mt19937_64 rng(99);
  for (const auto& dims : std::vector<Dims>{{2}, {2, 3}, {2, 2, 2}, {3, 3, 2}}) {
    for (int trial = 0; trial < 5; ++trial) {
      const StateFile file{oracle::random_state(dims, rng), "random \"state\"", "test"};
      const std::string text = serialize_state_file(file);
      const auto parsed = parse_state_file(text);
      EXPECT_EQ(parsed.state.dims(), dims);
      // Bit-exact values, not just close.
      EXPECT_EQ((parsed.state.matrix() - file.state.matrix()).cwiseAbs().maxCoeff(), 0.0);
      EXPECT_EQ(serialize_state_file(parsed), text);
      EXPECT_EQ(parsed.name, file.name);
      EXPECT_EQ(parsed.source, file.source);
    }
  }
}

TEST(state_file, layout) {
  const StateFile file{DensityMatrix::maximally_mixed({2}), std::nullopt, std::nullopt};
  EXPECT_EQ(serialize_state_file(file),
            "{\n"
            "  \"dims\": [2],\n"
            "  \"matrix\": [\n"
            "    [[0.5, 0], [0, 0]],\n"
            "    [[0, 0], [0.5, 0]]\n"
            "  ]\n"
            "}\n");
}

TEST(state_file, accepts_hand_written_input) {
  const auto file = parse_state_file(R"({"matrix": [[[1,0],[0,0]],[[0,0],[0,0]]],
                                         "dims": [2], "name": "ground"})");
  EXPECT_EQ(file.name, "ground");
  EXPECT_FALSE(file.source);
  EXPECT_EQ(file.state.matrix()(0, 0), Complex(1.0, 0.0));
}

TEST(state_file, rejects_malformed_input) {
  EXPECT_THROW(parse_state_file("not json"), ParseError);
  EXPECT_THROW(parse_state_file("[]"), ParseError);
  EXPECT_THROW(parse_state_file(R"({"dims": [2]})"), ParseError);
  EXPECT_THROW(parse_state_file(R"({"dims": [1], "matrix": [[[1,0]]]})"), ParseError);
  EXPECT_THROW(parse_state_file(R"({"dims": [2], "matrix": [[[1,0],[0,0]]]})"), ParseError);
  EXPECT_THROW(parse_state_file(R"({"dims": [2], "matrix": [[[1,0],[0,0]],[[0,0],0]]})"),
               ParseError);
  EXPECT_THROW(
      parse_state_file(R"({"dims": [2], "name": 3, "matrix": [[[1,0],[0,0]],[[0,0],[0,0]]]})"),
      ParseError);
}

TEST(state_file, rejects_invalid_states) {
  EXPECT_THROW(parse_state_file(R"({"dims": [2], "matrix": [[[0.45,0],[0,0]],[[0,0],[0.45,0]]]})"),
               ValidationError);
  EXPECT_THROW(parse_state_file(R"({"dims": [2], "matrix": [[[1.5,0],[0,0]],[[0,0],[-0.5,0]]]})"),
               ValidationError);
}
