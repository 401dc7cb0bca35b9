#pragma once

#include <cstdint>
#include <vector>

#include "bbs/rigged.hpp"
#include "bbs/state.hpp"

namespace bbs {

// A two-row matrix whose entries read column by column (top, bottom, top,
// bottom, ...) are weakly increasing. Strictly increasing entries are
// exactly the valid automaton states. Stored flattened in column-read
// order.
class InsertionMatrix {
 public:
  InsertionMatrix() = default;
  explicit InsertionMatrix(std::vector<Wall> entries);
  static InsertionMatrix from_state(const State& state);

  const std::vector<Wall>& entries() const { return entries_; }
  std::int64_t columns() const {
    return static_cast<std::int64_t>(entries_.size()) / 2;
  }
  bool empty() const { return entries_.empty(); }
  bool strictly_increasing() const;
  std::vector<Wall> row(int which) const;  // 0 = wave tails, 1 = wave fronts
  State to_state() const;                  // requires strictly increasing

  bool operator==(const InsertionMatrix&) const = default;

 private:
  std::vector<Wall> entries_;
};

// Inserts the column (x, x): two copies of x spliced into the column-read
// sequence after every entry <= x.
InsertionMatrix insert_pair(const InsertionMatrix& m, Wall x);

// Inserts one column per element of xs (a multiset); the result does not
// depend on the insertion order.
InsertionMatrix insert_pairs(const InsertionMatrix& m,
                             const std::vector<Wall>& xs);

// Adds the staircase first_step, first_step+1, ... to the column-read
// sequence. first_step 1 embeds an empty/filled box pair at every wave
// tail; first_step 0 embeds a filled/empty pair at every wave front.
// The result is strictly increasing.
InsertionMatrix add_staircase(const InsertionMatrix& m, int first_step);

// State -> rigged configuration. Repeatedly subtract the largest staircase
// that keeps the sequence weakly increasing, strip duplicate pairs as
// riggings, and recurse on the remainder.
RiggedConfiguration direct_transform(const State& state);

// The shape of direct_transform(state): m_i solitons of length i.
Partition soliton_content(const State& state);

// Rigged configuration -> state, via the insertion calculus grouped by row
// length from the longest row down. Exact inverse of direct_transform.
State inverse_transform(const RiggedConfiguration& rc);

// Same recursion staged by the column blocks of the shape instead of
// grouped by row length; kept as an independent cross-check path.
State inverse_transform_staged(const RiggedConfiguration& rc);

// The state whose single evolution step gives inverse_transform(rc);
// equals inverse_transform of rc with every rigging lowered by its row
// length.
State companion_state(const RiggedConfiguration& rc);

// N-step evolution through the scattering data: transform, shift every
// rigging by steps * row length, transform back. Never calls evolve().
State solve(const State& state, std::int64_t steps);

}  // namespace bbs
