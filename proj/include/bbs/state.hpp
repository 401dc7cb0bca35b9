#pragma once

#include <cstdint>
#include <vector>

namespace bbs {

// Positions live on the walls between boxes: box j sits between walls j-1
// and j. Coordinates are signed and unbounded; a state is a finite block
// list, so the infinite line costs nothing.
using Wall = std::int64_t;

// A maximal run of balls. Balls occupy the boxes strictly between the two
// walls, i.e. boxes left+1 .. right.
struct Block {
  Wall left = 0;
  Wall right = 0;

  Wall size() const { return right - left; }
  bool operator==(const Block&) const = default;
};

// A box-ball state: blocks sorted left to right with strict interlacing
// left_1 < right_1 < left_2 < ... (touching blocks would be one block).
// The empty list is the vacuum.
class State {
 public:
  State() = default;
  explicit State(std::vector<Block> blocks);

  // Builds a state from the flattened wall sequence
  // (left_1, right_1, left_2, right_2, ...); must be strictly increasing.
  static State from_walls(const std::vector<Wall>& walls);

  const std::vector<Block>& blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }
  std::int64_t ball_count() const;
  std::vector<Wall> walls() const;
  bool filled(Wall box) const;
  std::vector<Wall> ball_boxes() const;

  bool operator==(const State&) const = default;

 private:
  std::vector<Block> blocks_;
};

enum class ArcKind { advanced, retarded };

// An arc pairing a filled box with an empty box. For advanced arcs the left
// endpoint is the filled box's left wall and the right endpoint the empty
// box's right wall; for retarded arcs the roles are swapped. Depth is the
// nesting level, innermost arcs having depth 1.
struct Arc {
  Wall left = 0;
  Wall right = 0;
  int depth = 0;

  bool operator==(const Arc&) const = default;
};

using ArcDiagram = std::vector<Arc>;

// The iterated adjacent-pair matching: advanced pairs filled-then-empty,
// retarded pairs empty-then-filled. Every ball ends up under exactly one
// arc endpoint. Result is sorted by left endpoint.
ArcDiagram arcs(const State& state, ArcKind kind);

// One time step: swap the contents of every advanced-arc pair. The retarded
// arcs of the result equal the advanced arcs of the input.
State evolve(const State& state);

// Sum of the left walls of all blocks (the corner-transfer-matrix energy).
std::int64_t energy_ctm(const State& state);

// True iff all balls are right of wall 0 and every prefix from wall 0 has
// at least as many empty boxes as filled ones.
bool is_highest_weight(const State& state);

// All states whose walls lie in [0, box_width] with exactly `balls` balls,
// in lexicographic wall order; count is C(box_width, balls) unrestricted.
std::vector<State> enumerate_states(std::int64_t box_width, std::int64_t balls,
                                    bool highest_only);

// Bit j (0-indexed) is the box between walls lo+j and lo+j+1.
std::vector<bool> occupancy(const State& state, Wall lo, Wall hi);

// Rebuilds a state from a finite bit window assumed empty outside.
State from_occupancy(const std::vector<bool>& bits, Wall origin);

}  // namespace bbs
