#include "bbs/kkr.hpp"

#include <algorithm>
#include <stdexcept>

namespace bbs {

namespace {

// J^i_last + 2 sum_j min(i,j) m_j, the wall just right of the rightmost
// ball the length-i rows can account for.
std::int64_t frontier_value(const RiggedConfiguration& rc,
                            const Partition& shape, std::int64_t length) {
  std::int64_t overlap = 0;
  for (const auto& [j, mj] : shape.multiplicities()) {
    overlap += std::min(length, j) * mj;
  }
  return rc.riggings_for(length).back() + 2 * overlap;
}

}  // namespace

std::optional<std::int64_t> singular_row(const RiggedConfiguration& rc) {
  if (rc.empty()) return std::nullopt;
  const Partition shape = rc.shape();
  std::optional<std::int64_t> best;
  std::int64_t best_value = 0;
  for (const auto& [len, list] : rc.riggings()) {
    (void)list;
    const std::int64_t value = frontier_value(rc, shape, len);
    if (!best || value > best_value) {  // ties keep the smaller length
      best = len;
      best_value = value;
    }
  }
  return best;
}

BoxRemoval remove_box(const RiggedConfiguration& rc) {
  if (rc.empty()) {
    throw std::invalid_argument("remove_box: empty configuration");
  }
  const Partition shape = rc.shape();
  const std::int64_t s = *singular_row(rc);

  BoxRemoval out;
  bool first = true;
  for (const auto& [len, list] : rc.riggings()) {
    (void)list;
    const Wall frontier = frontier_value(rc, shape, len);
    if (first || frontier > out.ball_wall) out.ball_wall = frontier;
    first = false;
  }

  std::map<std::int64_t, std::vector<std::int64_t>> next = rc.riggings();
  // Remove the top rigging of the singular row; any equal rigging gives the
  // same multiset.
  const std::int64_t removed = next[s].back();
  next[s].pop_back();
  if (next[s].empty()) next.erase(s);
  if (s >= 2) {
    // The shrunk row re-enters one length shorter, rigged one less than its
    // own frontier value computed with rows of length >= s only.
    std::int64_t tall_rows = 0;
    for (const auto& [len, list] : rc.riggings()) {
      if (len >= s) tall_rows += static_cast<std::int64_t>(list.size());
    }
    const std::int64_t new_rigging = removed + 2 * tall_rows - 1;
    auto& shorter = next[s - 1];
    shorter.insert(std::upper_bound(shorter.begin(), shorter.end(),
                                    new_rigging),
                   new_rigging);
  }
  out.rest = RiggedConfiguration(std::move(next));
  return out;
}

State kkr_inverse(const RiggedConfiguration& rc) {
  std::vector<Wall> boxes;
  RiggedConfiguration cur = rc;
  while (!cur.empty()) {
    BoxRemoval step = remove_box(cur);
    boxes.push_back(step.ball_wall);
    cur = std::move(step.rest);
  }
  std::sort(boxes.begin(), boxes.end());
  // Runs of adjacent boxes assemble into blocks.
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

}  // namespace bbs
