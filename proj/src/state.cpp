#include "bbs/state.hpp"

#include <algorithm>
#include <stdexcept>

namespace bbs {

State::State(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  Wall prev = 0;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const Block& b = blocks_[k];
    if (b.left >= b.right) {
      throw std::invalid_argument("block walls must satisfy left < right");
    }
    if (k > 0 && b.left <= prev) {
      throw std::invalid_argument(
          "blocks must be sorted and separated by at least one empty box");
    }
    prev = b.right;
  }
}

State State::from_walls(const std::vector<Wall>& walls) {
  if (walls.size() % 2 != 0) {
    throw std::invalid_argument("wall sequence must have even length");
  }
  std::vector<Block> blocks;
  blocks.reserve(walls.size() / 2);
  for (std::size_t k = 0; k + 1 < walls.size(); k += 2) {
    blocks.push_back(Block{walls[k], walls[k + 1]});
  }
  return State(std::move(blocks));  // ctor re-checks strict interlacing
}

std::int64_t State::ball_count() const {
  std::int64_t n = 0;
  for (const Block& b : blocks_) n += b.size();
  return n;
}

std::vector<Wall> State::walls() const {
  std::vector<Wall> out;
  out.reserve(2 * blocks_.size());
  for (const Block& b : blocks_) {
    out.push_back(b.left);
    out.push_back(b.right);
  }
  return out;
}

bool State::filled(Wall box) const {
  // box sits between walls box-1 and box; it is filled iff some block
  // satisfies left < box <= right.
  auto it = std::upper_bound(
      blocks_.begin(), blocks_.end(), box,
      [](Wall value, const Block& b) { return value <= b.right; });
  return it != blocks_.end() && it->left < box;
}

std::vector<Wall> State::ball_boxes() const {
  std::vector<Wall> out;
  for (const Block& b : blocks_) {
    for (Wall box = b.left + 1; box <= b.right; ++box) out.push_back(box);
  }
  return out;
}

namespace {

State state_from_sorted_boxes(const std::vector<Wall>& boxes) {
  std::vector<Block> blocks;
  std::size_t k = 0;
  while (k < boxes.size()) {
    std::size_t j = k;
    while (j + 1 < boxes.size() && boxes[j + 1] == boxes[j] + 1) ++j;
    blocks.push_back(Block{boxes[k] - 1, boxes[j]});
    k = j + 1;
  }
  return State(std::move(blocks));
}

}  // namespace

ArcDiagram arcs(const State& state, ArcKind kind) {
  ArcDiagram out;
  if (state.empty()) return out;

  const std::int64_t balls = state.ball_count();
  const Wall first = state.blocks().front().left + 1;
  const Wall last = state.blocks().back().right;
  // s extra boxes on the opening side always suffice: the matching performs
  // exactly s pops and the stack never exceeds s.
  const Wall lo = (kind == ArcKind::advanced) ? first : first - balls;
  const Wall hi = (kind == ArcKind::advanced) ? last + balls : last;

  struct Open {
    Wall box;
    int max_inner;
  };
  std::vector<Open> stack;
  for (Wall box = lo; box <= hi; ++box) {
    const bool ball = state.filled(box);
    const bool opens = (kind == ArcKind::advanced) ? ball : !ball;
    if (opens) {
      stack.push_back(Open{box, 0});
    } else if (!stack.empty()) {
      const Open open = stack.back();
      stack.pop_back();
      const int depth = open.max_inner + 1;
      if (!stack.empty()) {
        stack.back().max_inner = std::max(stack.back().max_inner, depth);
      }
      // Wall form: the opening box contributes its left wall, the closing
      // box its right wall.
      out.push_back(Arc{open.box - 1, box, depth});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Arc& a, const Arc& b) { return a.left < b.left; });
  return out;
}

State evolve(const State& state) {
  std::vector<Wall> boxes;
  boxes.reserve(state.ball_count());
  for (const Arc& arc : arcs(state, ArcKind::advanced)) {
    boxes.push_back(arc.right);  // the paired empty box receives the ball
  }
  std::sort(boxes.begin(), boxes.end());
  return state_from_sorted_boxes(boxes);
}

std::int64_t energy_ctm(const State& state) {
  std::int64_t e = 0;
  for (const Block& b : state.blocks()) e += b.left;
  return e;
}

bool is_highest_weight(const State& state) {
  const auto& blocks = state.blocks();
  if (blocks.empty()) return true;
  if (blocks.front().left < 0) return false;
  std::int64_t tails = 0;   // 2 * sum of left walls so far
  std::int64_t fronts = 0;  // 2 * sum of right walls of earlier blocks
  for (const Block& b : blocks) {
    tails += 2 * b.left;
    if (fronts + b.right > tails) return false;
    fronts += 2 * b.right;
  }
  return true;
}

namespace {

void enumerate_blocks(std::int64_t box_width, std::int64_t balls_left,
                      Wall min_left, bool highest_only,
                      std::vector<Block>& acc, std::vector<State>& out) {
  if (balls_left == 0) {
    State s{std::vector<Block>(acc)};
    if (!highest_only || is_highest_weight(s)) out.push_back(std::move(s));
    return;
  }
  for (Wall a = min_left; a + 1 <= box_width; ++a) {
    const Wall max_right = std::min<Wall>(box_width, a + balls_left);
    for (Wall b = a + 1; b <= max_right; ++b) {
      acc.push_back(Block{a, b});
      enumerate_blocks(box_width, balls_left - (b - a), b + 1, highest_only,
                       acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<State> enumerate_states(std::int64_t box_width, std::int64_t balls,
                                    bool highest_only) {
  if (box_width < 0 || balls < 0) {
    throw std::invalid_argument("enumerate_states: negative arguments");
  }
  std::vector<State> out;
  if (balls == 0) {
    out.emplace_back();
    return out;
  }
  if (balls > box_width) return out;
  std::vector<Block> acc;
  enumerate_blocks(box_width, balls, 0, highest_only, acc, out);
  return out;
}

std::vector<bool> occupancy(const State& state, Wall lo, Wall hi) {
  if (lo > hi) throw std::invalid_argument("occupancy: window must have lo <= hi");
  std::vector<bool> bits(static_cast<std::size_t>(hi - lo));
  for (Wall box = lo + 1; box <= hi; ++box) {
    bits[static_cast<std::size_t>(box - lo - 1)] = state.filled(box);
  }
  return bits;
}

State from_occupancy(const std::vector<bool>& bits, Wall origin) {
  std::vector<Wall> boxes;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j]) boxes.push_back(origin + static_cast<Wall>(j) + 1);
  }
  return state_from_sorted_boxes(boxes);
}

}  // namespace bbs
