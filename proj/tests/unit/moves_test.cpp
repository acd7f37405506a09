// Copyright 2026 The brp-toolkit Authors.
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


#include <gtest/gtest.h>

#include <random>

#include "brp/instance_io.hpp"
#include "brp/moves.hpp"
#include "support/reference.hpp"

namespace brp {
namespace {

Configuration fig2a() {
  return parse_instance(read_text_file(std::string(BRP_TEST_DATA) + "/fig2a.dat"));
}

TEST(Moves, AutoRetrieveSingleBlock) {
  const RetrievalResult r = auto_retrieve(Configuration(std::vector<Stack>{{1}}));
  EXPECT_TRUE(r.config.empty());
  EXPECT_EQ(r.retrieved, (std::vector<Block>{1}));
}

TEST(Moves, RelocateThenRetrieveEmptiesBay) {
  const Configuration c({{1, 2}, {}});
  const Configuration after = apply_move(c, Move::Relocate(2, 0, 1));
  const RetrievalResult r = auto_retrieve(after);
  EXPECT_EQ(r.retrieved, (std::vector<Block>{1, 2}));
  EXPECT_TRUE(r.config.empty());
}

TEST(Moves, AutoRetrieveIsIdempotent) {
  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    const Configuration c = brp_test::random_bay(rng, 3, 3);
    const RetrievalResult once = auto_retrieve(c);
    const RetrievalResult twice = auto_retrieve(once.config);
    EXPECT_EQ(once.config, twice.config);
    EXPECT_TRUE(twice.retrieved.empty());
  }
}

TEST(Moves, IllegalMovesNameThePrecondition) {
  const Configuration c({{1, 2}, {3}}, 2);
  try {
    apply_move(c, Move::Relocate(1, 0, 1));
    FAIL();
  } catch (const IllegalMove& e) {
    EXPECT_NE(e.reason().find("not topmost"), std::string::npos);
  }
  EXPECT_THROW(apply_move(c, Move::Retrieve(2, 0)), IllegalMove);
  EXPECT_THROW(apply_move(Configuration({{1, 2}, {3, 4}}, 2), Move::Relocate(2, 0, 1)),
               IllegalMove);
}

TEST(Moves, ClassifyFig2a) {
  const Configuration c = fig2a();
  EXPECT_EQ(classify_relocation(c, Move::Relocate(5, 3, 1)), MoveType::kBB);
  EXPECT_EQ(classify_relocation(c, Move::Relocate(5, 3, 0)), MoveType::kBG);
  EXPECT_EQ(classify_relocation(c, Move::Relocate(3, 2, 1)), MoveType::kGB);
  EXPECT_EQ(classify_relocation(c, Move::Relocate(3, 2, 0)), MoveType::kGG);
}

TEST(Moves, ClassifyOntoLargerBlock) {
  EXPECT_EQ(classify_relocation(Configuration({{1, 2}, {3}}), Move::Relocate(2, 0, 1)),
            MoveType::kBG);
}

TEST(Moves, ClassifyAgreesWithBadlyPlaced) {
  std::mt19937 rng(23);
  for (int i = 0; i < 100; ++i) {
    const Configuration c = brp_test::random_bay(rng, 3, 3, 1);
    for (int from = 0; from < c.num_stacks(); ++from) {
      if (c.height(from) == 0) continue;
      for (int to = 0; to < c.num_stacks(); ++to) {
        if (to == from) continue;
        const Block b = c.top(from);
        const Move m = Move::Relocate(b, from, to);
        const MoveType t = classify_relocation(c, m);
        const bool before = t == MoveType::kBB || t == MoveType::kBG;
        const bool after = t == MoveType::kBB || t == MoveType::kGB;
        EXPECT_EQ(before, is_badly_placed(c, b));
        EXPECT_EQ(after, is_badly_placed(apply_move(c, m), b));
      }
    }
  }
}

TEST(Moves, ValidateSequence) {
  EXPECT_EQ(validate_sequence(Configuration(std::vector<Stack>{{1}}), MoveSequence{{Move::Retrieve(1, 0)}}), 0);
  const Configuration c({{1, 2}, {}});
  const MoveSequence ok{{Move::Relocate(2, 0, 1), Move::Retrieve(1, 0), Move::Retrieve(2, 1)}};
  EXPECT_EQ(validate_sequence(c, ok), 1);
  EXPECT_EQ(ok.relocation_count(), 1);
  ASSERT_EQ(ok.turns().size(), 1u);
  EXPECT_EQ(ok.turns()[0].end, 3u);
  try {
    validate_sequence(c, MoveSequence{{Move::Retrieve(1, 0)}});
    FAIL();
  } catch (const IllegalMove& e) {
    EXPECT_NE(e.reason().find("block 2 blocks target"), std::string::npos);
    EXPECT_EQ(e.index(), 0u);
  }
}

TEST(Moves, IncompleteSequenceIsRejected) {
  const Configuration c({{2, 1}});
  EXPECT_THROW(validate_sequence(c, MoveSequence{{Move::Retrieve(1, 0)}}), IllegalMove);
}

TEST(Moves, RespectsHeight) {
  const Configuration c({{1, 2}, {4, 3}, {}});
  const MoveSequence onto{{Move::Relocate(2, 0, 1), Move::Retrieve(1, 0), Move::Retrieve(2, 1),
                           Move::Retrieve(3, 1), Move::Retrieve(4, 1)}};
  const MoveSequence aside{{Move::Relocate(2, 0, 2), Move::Retrieve(1, 0), Move::Retrieve(2, 2),
                            Move::Retrieve(3, 1), Move::Retrieve(4, 1)}};
  EXPECT_FALSE(respects_height(c, onto, 2));
  EXPECT_TRUE(respects_height(c, onto, 3));
  EXPECT_TRUE(respects_height(c, aside, 2));
  EXPECT_FALSE(respects_height(c, aside, 1));
}

}  // namespace
}  // namespace brp
