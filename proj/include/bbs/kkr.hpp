#pragma once

#include <cstdint>
#include <optional>

#include "bbs/rigged.hpp"
#include "bbs/state.hpp"

namespace bbs {

// The smallest row length s with m_s > 0 that maximizes
// J^s_last + 2 sum_j min(s,j) m_j; absent for the empty shape.
std::optional<std::int64_t> singular_row(const RiggedConfiguration& rc);

struct BoxRemoval {
  RiggedConfiguration rest;
  Wall ball_wall = 0;  // the removed ball occupied the box (ball_wall-1, ball_wall)
};

// One box-removal step: shrink the shortest singular row by one box and
// re-rig it. The removed ball is the rightmost ball of the associated
// state, so ball_wall equals the current rightmost wave front. Throws on
// the empty configuration.
BoxRemoval remove_box(const RiggedConfiguration& rc);

// Rebuilds the state by iterating remove_box down to the empty
// configuration; coincides with inverse_transform.
State kkr_inverse(const RiggedConfiguration& rc);

}  // namespace bbs
