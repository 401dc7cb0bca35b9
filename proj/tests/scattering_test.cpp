#include "bbs/scattering.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace bbs;

namespace {

InsertionMatrix im(std::vector<Wall> seq) {
  return InsertionMatrix(std::move(seq));
}

RiggedConfiguration rc(std::map<std::int64_t, std::vector<std::int64_t>> r) {
  return RiggedConfiguration(std::move(r));
}

State st(std::vector<Block> blocks) { return State(std::move(blocks)); }

}  // namespace

TEST_CASE("insertion matrix form") {
  CHECK(im({1, 3, 4, 6, 9, 10}).strictly_increasing());
  CHECK(im({1, 1, 3, 4}).columns() == 2);
  CHECK_FALSE(im({1, 1, 3, 4}).strictly_increasing());
  CHECK_THROWS_AS(im({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(im({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(im({1, 1, 3, 4}).to_state(), std::invalid_argument);

  const InsertionMatrix m = InsertionMatrix::from_state(st({{1, 3}, {4, 6}}));
  CHECK(m.row(0) == std::vector<Wall>{1, 4});
  CHECK(m.row(1) == std::vector<Wall>{3, 6});
}

TEST_CASE("column insertion") {
  const InsertionMatrix m = im({1, 3, 4, 6, 9, 10});
  CHECK(insert_pair(m, 5) == im({1, 3, 4, 5, 5, 6, 9, 10}));
  CHECK(insert_pairs(m, {1, 5, 8}) ==
        im({1, 1, 1, 3, 4, 5, 5, 6, 8, 8, 9, 10}));
  CHECK(insert_pair(InsertionMatrix(), 0) == im({0, 0}));

  // multiset semantics: order and duplicates do not matter
  CHECK(insert_pairs(m, {8, 1, 5}) == insert_pairs(m, {1, 5, 8}));
  CHECK(insert_pairs(m, {4, 4}) ==
        insert_pair(insert_pair(m, 4), 4));
}

TEST_CASE("staircase embeddings match the insertion example") {
  const InsertionMatrix inserted = im({1, 1, 1, 3, 4, 5, 5, 6, 8, 8, 9, 10});
  const InsertionMatrix phi1 = add_staircase(inserted, 1);
  CHECK(phi1.row(0) == std::vector<Wall>{2, 4, 9, 12, 17, 20});
  CHECK(phi1.row(1) == std::vector<Wall>{3, 7, 11, 14, 18, 22});
  const InsertionMatrix phi0 = add_staircase(inserted, 0);
  CHECK(phi0.row(0) == std::vector<Wall>{1, 3, 8, 11, 16, 19});
  CHECK(phi0.row(1) == std::vector<Wall>{2, 6, 10, 13, 17, 21});
  CHECK(add_staircase(im({0, 0}), 1) == im({1, 2}));
}

TEST_CASE("direct transform golden values") {
  CHECK(direct_transform(st({{1, 3}, {4, 6}, {9, 10}})) ==
        rc({{1, {1, 4}}, {3, {-2}}}));
  CHECK(direct_transform(st({{0, 4}, {6, 9}, {11, 12}, {15, 16}})) ==
        rc({{1, {6, 8}}, {2, {0}}, {5, {-5}}}));
  CHECK(direct_transform(State()) == RiggedConfiguration());
  CHECK(soliton_content(st({{1, 3}, {4, 6}, {9, 10}})) ==
        Partition::from_parts({3, 1, 1}));
}

TEST_CASE("inverse transform golden values") {
  CHECK(inverse_transform(rc({{1, {7, 9}}, {2, {2}}, {5, {0}}})) ==
        st({{4, 6}, {9, 11}, {12, 15}, {16, 18}}));
  CHECK(inverse_transform(rc({{1, {1, 4}}, {3, {-2}}})) ==
        st({{1, 3}, {4, 6}, {9, 10}}));
  CHECK(inverse_transform(RiggedConfiguration()) == State());
}

TEST_CASE("companion state and its three characterizations") {
  const RiggedConfiguration data = rc({{1, {7, 9}}, {2, {2}}, {5, {0}}});
  CHECK(companion_state(data) == st({{0, 4}, {6, 9}, {11, 12}, {15, 16}}));
  CHECK(companion_state(RiggedConfiguration()) == State());

  for (const Partition& shape : partitions_of(4)) {
    for (const RiggedConfiguration& r : enumerate_rcs(8, shape, false)) {
      const State companion = companion_state(r);
      // one update step reaches the inverse transform
      CHECK(evolve(companion) == inverse_transform(r));
      // lowering every rigging by its row length gives the same state
      CHECK(companion == inverse_transform(evolve_riggings(r, -1)));
      // first row of the image equals second row of the companion
      CHECK(InsertionMatrix::from_state(inverse_transform(r)).row(0) ==
            InsertionMatrix::from_state(companion).row(1));
    }
  }
}

TEST_CASE("block-staged recursion agrees with the grouped one") {
  for (std::int64_t s = 0; s <= 6; ++s) {
    for (const Partition& shape : partitions_of(s)) {
      for (const RiggedConfiguration& r : enumerate_rcs(6, shape, false)) {
        CHECK(inverse_transform_staged(r) == inverse_transform(r));
      }
    }
  }
}

TEST_CASE("round trips over the box") {
  for (std::int64_t L = 1; L <= 8; ++L) {
    for (std::int64_t s = 0; s <= L; ++s) {
      for (const State& p : enumerate_states(L, s, false)) {
        CHECK(inverse_transform(direct_transform(p)) == p);
      }
      for (const Partition& shape : partitions_of(s)) {
        for (const RiggedConfiguration& r : enumerate_rcs(L, shape, false)) {
          CHECK(direct_transform(inverse_transform(r)) == r);
        }
      }
    }
  }
}

TEST_CASE("the flow is linear in the scattering data") {
  for (std::int64_t s = 0; s <= 8; ++s) {
    for (const State& p : enumerate_states(8, s, false)) {
      CHECK(direct_transform(evolve(p)) ==
            evolve_riggings(direct_transform(p), 1));
      CHECK(soliton_content(evolve(p)) == soliton_content(p));
    }
  }
}

TEST_CASE("solve equals repeated evolution") {
  const State intro = st({{0, 4}, {6, 9}, {11, 12}, {15, 16}});
  CHECK(solve(intro, 2) == st({{6, 8}, {11, 12}, {15, 16}, {18, 23}}));
  CHECK(solve(intro, 0) == intro);
  CHECK(solve(intro, 1) == evolve(intro));

  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::int64_t> steps(0, 12);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Block> blocks;
    Wall wall = std::uniform_int_distribution<Wall>(-15, 15)(rng);
    const int n = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int k = 0; k < n; ++k) {
      const Wall left = wall + std::uniform_int_distribution<Wall>(1, 3)(rng);
      const Wall right = left + std::uniform_int_distribution<Wall>(1, 4)(rng);
      blocks.push_back(Block{left, right});
      wall = right;
    }
    const State p = st(std::move(blocks));
    const std::int64_t n_steps = steps(rng);
    State direct = p;
    for (std::int64_t t = 0; t < n_steps; ++t) direct = evolve(direct);
    CHECK(solve(p, n_steps) == direct);
  }
}

TEST_CASE("highest weight states are exactly the non-negatively rigged ones") {
  for (std::int64_t L = 1; L <= 8; ++L) {
    for (std::int64_t s = 0; s <= L; ++s) {
      for (const State& p : enumerate_states(L, s, false)) {
        const RiggedConfiguration r = direct_transform(p);
        bool non_negative = true;
        for (const auto& [len, list] : r.riggings()) {
          (void)len;
          if (list.front() < 0) non_negative = false;
        }
        CHECK(is_highest_weight(p) == non_negative);
      }
    }
  }
}

TEST_CASE("bounds agree with the transformed state") {
  for (const Partition& shape : partitions_of(5)) {
    for (const RiggedConfiguration& r : enumerate_rcs(10, shape, false)) {
      const State p = inverse_transform(r);
      const StateBounds b = bounds(r);
      CHECK(b.ball_count == p.ball_count());
      CHECK(*b.leftmost_tail == p.blocks().front().left);
      CHECK(*b.rightmost_front == p.blocks().back().right);
    }
  }
}
