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

#include <algorithm>
#include <random>
#include <set>

#include "brp/bounds.hpp"
#include "brp/instance_io.hpp"
#include "support/reference.hpp"

namespace brp {
namespace {

Configuration fixture(const std::string& name) {
  return parse_instance(read_text_file(std::string(BRP_TEST_DATA) + "/" + name));
}

BlockSet set_of(const std::vector<Block>& bs) {
  BlockSet s;
  s.insert(bs);
  return s;
}

TEST(Bounds, Fig2aValues) {
  const AllBounds b = all_bounds(fixture("fig2a.dat"));
  EXPECT_EQ(b.lb1.value, 2);
  EXPECT_EQ(b.lb2.value, 2);
  EXPECT_EQ(b.lb3.value, 2);
  EXPECT_EQ(b.lb3.layers_k, 0);
  EXPECT_EQ(b.lb_n.value, 3);
  EXPECT_EQ(b.lb4.value, 3);
  EXPECT_TRUE(b.lb4.pairs.empty());
  EXPECT_TRUE(b.lb4.layers.empty());
  EXPECT_TRUE(b.lb4.p4.has_value());
}

TEST(Bounds, Fig2bValues) {
  const AllBounds b = all_bounds(fixture("fig2b.dat"));
  EXPECT_EQ(b.lb1.value, 8);
  EXPECT_EQ(b.lb2.value, 9);
  EXPECT_EQ(b.lb3.value, 10);
  EXPECT_EQ(b.lb3.layers_k, 2);
  EXPECT_EQ(b.lb_n.value, 9);
  EXPECT_EQ(b.lb4.value, 12);
  EXPECT_EQ(b.lb4.pairs.size(), 1u);
  EXPECT_EQ(b.lb4.layers.size(), 2u);
  EXPECT_FALSE(b.lb4.p4.has_value());
}

TEST(Bounds, Fig2bOverlappedLayersAroundFive) {
  const Configuration c = fixture("fig2b.dat");
  const auto pair = find_overlapped_layers(c, 5);
  ASSERT_TRUE(pair.has_value());
  EXPECT_EQ(pair->upper.blocks(), (std::vector<Block>{16, 17, 5, 19}));
  EXPECT_EQ(pair->lower.blocks(), (std::vector<Block>{6, 14, 5, 4}));
  EXPECT_EQ(pair->shared.block, 5);
  EXPECT_TRUE(overlapped_is_valid(c, *pair));
}

TEST(Bounds, Fig2bVirtualLayers) {
  const Configuration c = fixture("fig2b.dat");
  BlockSet used = set_of(find_overlapped_layers(c, 5)->blocks());
  const auto first = find_virtual_layer(c, used);
  ASSERT_TRUE(first.has_value());
  EXPECT_EQ(first->blocks(), (std::vector<Block>{2, 12, 18, 8}));
  used.insert(first->blocks());
  const auto second = find_virtual_layer(c, used);
  ASSERT_TRUE(second.has_value());
  EXPECT_EQ(second->blocks(), (std::vector<Block>{3, 10, 7, 9}));
  EXPECT_TRUE(layer_is_valid(c, *first));
  EXPECT_TRUE(layer_is_valid(c, *second));
}

TEST(Bounds, Fig2aHasNoLayers) {
  const Configuration c = fixture("fig2a.dat");
  EXPECT_FALSE(find_virtual_layer(c).has_value());
  for (Block b = 1; b <= 12; ++b) {
    if (!is_badly_placed(c, b)) EXPECT_FALSE(find_overlapped_layers(c, b).has_value()) << b;
  }
}

TEST(Bounds, FlatBayHasNoOverlappedLayers) {
  const Configuration c(std::vector<Stack>{{3}, {1}, {2}});
  for (Block b = 1; b <= 3; ++b) EXPECT_FALSE(find_overlapped_layers(c, b).has_value());
}

TEST(Bounds, NoBadlyPlacedBlocksGivesZero) {
  const AllBounds b = all_bounds(Configuration({{3, 2}, {5, 4, 1}}));
  EXPECT_EQ(b.lb1.value, 0);
  EXPECT_EQ(b.lb_n.value, 0);
  EXPECT_EQ(b.lb4.value, 0);
}

TEST(Bounds, TargetOnTopMeansNoLayers) {
  // Without the retrieval pass the target stays on top, so no top layer lies above it.
  const Configuration c({{4, 1}, {2, 3}});
  EXPECT_EQ(lb3(c, {.retrieve_first = false}).layers_k, 0);
  EXPECT_EQ(lb3(c, {.retrieve_first = false}).value, lb1(c, {.retrieve_first = false}).value);
}

TEST(Bounds, SingleStackRule) {
  // The top block is the stack's own priority: the comparison fails.
  const Configuration same({{3, 2, 1}});
  EXPECT_EQ(lb2(same, {.retrieve_first = false}).value, lb1(same, {.retrieve_first = false}).value);
  // A badly placed top block is larger than the only stack priority.
  const Configuration bp({{3, 1, 2}});
  EXPECT_EQ(lb2(bp).value, lb1(bp).value + 1);
}

TEST(Bounds, EmptyStackDisablesLayerRules) {
  const Configuration c({{1, 3, 2}, {}});
  EXPECT_EQ(lb2(c).value, lb1(c).value);
  EXPECT_EQ(lb3(c).value, lb1(c).value);
}

TEST(Bounds, RetrievalPassIsReported) {
  const BoundReport r = lb1(Configuration({{3, 1}, {2, 4}}));
  EXPECT_EQ(r.retrieved, (std::vector<Block>{1}));
  EXPECT_EQ(r.value, 1);
}

void check_certificate(const Configuration& c0, const BoundReport& r) {
  const Configuration c = auto_retrieve(c0).config;
  std::set<Block> seen;
  const auto take = [&](const std::vector<Block>& bs) {
    for (Block b : bs) EXPECT_TRUE(seen.insert(b).second) << "block " << b << " reused";
  };
  for (const auto& p : r.pairs) {
    EXPECT_TRUE(overlapped_is_valid(c, p));
    take(p.blocks());
  }
  for (const auto& l : r.layers) {
    EXPECT_TRUE(layer_is_valid(c, l));
    take(l.blocks());
  }
  EXPECT_EQ(r.value, static_cast<int>(r.bp.size()) + 2 * static_cast<int>(r.pairs.size()) +
                         static_cast<int>(r.layers.size()) + (r.p4 ? 1 : 0));
}

TEST(Bounds, SoundAndOrderedOnRandomBays) {
  std::mt19937 rng(101);
  for (int i = 0; i < 150; ++i) {
    const int h = 2 + i % 3;
    const int w = 2 + (i / 3) % 3;
    if (h * w > 10) continue;
    const Configuration c = brp_test::random_bay(rng, h, w, i % 4 == 0 ? 1 : 0);
    const int opt = brp_test::reference_optimum(brp_test::bay_of(c));
    const AllBounds b = all_bounds(c);
    EXPECT_LE(b.lb1.value, b.lb2.value);
    EXPECT_LE(b.lb2.value, b.lb3.value);
    EXPECT_LE(b.lb3.value, b.lb4.value);
    EXPECT_LE(b.lb_n.value, b.lb4.value);
    EXPECT_EQ(b.lb1.value, brp_test::count_bp(brp_test::bay_of(auto_retrieve(c).config)));
    EXPECT_LE(b.lb4.value, opt) << serialize_instance(c);
    check_certificate(c, b.lb4);
    const BoundReport alt = lb4(c, {.continue_after_failed_pair = true});
    EXPECT_LE(alt.value, opt) << serialize_instance(c);
    check_certificate(c, alt);
    EXPECT_EQ(lb4_value(c), b.lb4.value);
  }
}

TEST(Bounds, Fig2bFlagVariantIsValid) {
  const Configuration c = fixture("fig2b.dat");
  const BoundReport r = lb4(c, {.continue_after_failed_pair = true});
  EXPECT_GE(r.value, 12);
  check_certificate(c, r);
}

}  // namespace
}  // namespace brp
