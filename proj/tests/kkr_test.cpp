#include "bbs/kkr.hpp"

#include <doctest.h>

#include <stdexcept>

#include "bbs/scattering.hpp"

using namespace bbs;

namespace {

RiggedConfiguration rc(std::map<std::int64_t, std::vector<std::int64_t>> r) {
  return RiggedConfiguration(std::move(r));
}

State st(std::vector<Block> blocks) { return State(std::move(blocks)); }

}  // namespace

TEST_CASE("shortest singular row") {
  CHECK(singular_row(rc({{1, {1, 4}}, {3, {-2}}})) == 1);  // values 10 vs 8
  CHECK(singular_row(rc({{2, {0}}})) == 2);
  CHECK_FALSE(singular_row(RiggedConfiguration()).has_value());

  // A constructed tie: frontiers 2+2(1+1)=6 and 0+2(1+2)=6; the shorter wins.
  const RiggedConfiguration tie = rc({{1, {2}}, {2, {0}}});
  CHECK(*bounds(tie).rightmost_front == 6);
  CHECK(singular_row(tie) == 1);
}

TEST_CASE("box removal steps") {
  SUBCASE("length-one singular row drops a row") {
    const BoxRemoval step = remove_box(rc({{1, {1, 4}}, {3, {-2}}}));
    CHECK(step.rest == rc({{1, {1}}, {3, {-2}}}));
    CHECK(step.ball_wall == 10);
    CHECK(inverse_transform(step.rest) == st({{1, 3}, {4, 6}}));
  }
  SUBCASE("longer singular rows shrink and re-rig") {
    const BoxRemoval step = remove_box(rc({{2, {0}}}));
    CHECK(step.rest == rc({{1, {1}}}));
    CHECK(step.ball_wall == 4);
    CHECK(inverse_transform(rc({{2, {0}}})) == st({{2, 4}}));
    CHECK(inverse_transform(step.rest) == st({{2, 3}}));
  }
  SUBCASE("a single ball empties the configuration") {
    for (std::int64_t c : {-3, 0, 5}) {
      const BoxRemoval step = remove_box(rc({{1, {c}}}));
      CHECK(step.rest == RiggedConfiguration());
      CHECK(step.ball_wall == c + 2);
      CHECK(step.ball_wall == *bounds(rc({{1, {c}}})).rightmost_front);
    }
  }
  CHECK_THROWS_AS(remove_box(RiggedConfiguration()), std::invalid_argument);
}

TEST_CASE("box removal always happens at the rightmost front") {
  for (std::int64_t s = 0; s <= 7; ++s) {
    for (const Partition& shape : partitions_of(s)) {
      for (RiggedConfiguration cur : enumerate_rcs(7, shape, false)) {
        while (!cur.empty()) {
          const BoxRemoval step = remove_box(cur);
          CHECK(step.ball_wall == *bounds(cur).rightmost_front);
          CHECK(step.rest.ball_count() == cur.ball_count() - 1);
          cur = step.rest;
        }
      }
    }
  }
}

TEST_CASE("box-removal inverse golden values") {
  CHECK(kkr_inverse(rc({{1, {1, 4}}, {3, {-2}}})) ==
        st({{1, 3}, {4, 6}, {9, 10}}));
  CHECK(kkr_inverse(RiggedConfiguration()) == State());
  CHECK(kkr_inverse(rc({{1, {7, 9}}, {2, {2}}, {5, {0}}})) ==
        st({{4, 6}, {9, 11}, {12, 15}, {16, 18}}));
}

TEST_CASE("box removal agrees with the scattering inverse") {
  for (std::int64_t L = 1; L <= 8; ++L) {
    for (std::int64_t s = 0; s <= L; ++s) {
      for (const Partition& shape : partitions_of(s)) {
        for (const RiggedConfiguration& r : enumerate_rcs(L, shape, false)) {
          CHECK(kkr_inverse(r) == inverse_transform(r));
        }
      }
    }
  }
}
