#include "bbs/scattering.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bbs {

InsertionMatrix::InsertionMatrix(std::vector<Wall> entries)
    : entries_(std::move(entries)) {
  if (entries_.size() % 2 != 0) {
    throw std::invalid_argument("insertion matrix needs whole columns");
  }
  if (!std::is_sorted(entries_.begin(), entries_.end())) {
    throw std::invalid_argument(
        "insertion matrix entries must be weakly increasing column-wise");
  }
}

InsertionMatrix InsertionMatrix::from_state(const State& state) {
  return InsertionMatrix(state.walls());
}

bool InsertionMatrix::strictly_increasing() const {
  for (std::size_t k = 1; k < entries_.size(); ++k) {
    if (entries_[k - 1] >= entries_[k]) return false;
  }
  return true;
}

std::vector<Wall> InsertionMatrix::row(int which) const {
  std::vector<Wall> out;
  for (std::size_t k = static_cast<std::size_t>(which); k < entries_.size();
       k += 2) {
    out.push_back(entries_[k]);
  }
  return out;
}

State InsertionMatrix::to_state() const {
  if (!strictly_increasing()) {
    throw std::invalid_argument(
        "matrix is not strictly increasing, no associated state");
  }
  return State::from_walls(entries_);
}

InsertionMatrix insert_pair(const InsertionMatrix& m, Wall x) {
  std::vector<Wall> seq = m.entries();
  auto pos = std::upper_bound(seq.begin(), seq.end(), x);
  seq.insert(pos, 2, x);
  return InsertionMatrix(std::move(seq));
}

InsertionMatrix insert_pairs(const InsertionMatrix& m,
                             const std::vector<Wall>& xs) {
  std::vector<Wall> doubled;
  doubled.reserve(2 * xs.size());
  for (Wall x : xs) {
    doubled.push_back(x);
    doubled.push_back(x);
  }
  std::sort(doubled.begin(), doubled.end());
  std::vector<Wall> seq;
  seq.reserve(m.entries().size() + doubled.size());
  std::merge(m.entries().begin(), m.entries().end(), doubled.begin(),
             doubled.end(), std::back_inserter(seq));
  return InsertionMatrix(std::move(seq));
}

InsertionMatrix add_staircase(const InsertionMatrix& m, int first_step) {
  std::vector<Wall> seq = m.entries();
  for (std::size_t k = 0; k < seq.size(); ++k) {
    seq[k] += first_step + static_cast<Wall>(k);
  }
  return InsertionMatrix(std::move(seq));
}

namespace {

// One stage of the direct transform on a strictly increasing sequence:
// subtract the tightest staircase, strip equal values in pairs (those are
// the riggings), keep the rest.
struct Stage {
  std::int64_t step = 0;                 // h_i, the staircase increment
  std::vector<std::int64_t> riggings;    // one per removed pair, ascending
  std::vector<Wall> remainder;           // strictly increasing
};

Stage run_stage(const std::vector<Wall>& seq) {
  Stage stage;
  stage.step = std::numeric_limits<std::int64_t>::max();
  for (std::size_t k = 1; k < seq.size(); ++k) {
    stage.step = std::min(stage.step, seq[k] - seq[k - 1]);
  }
  std::vector<Wall> reduced(seq.size());
  for (std::size_t k = 0; k < seq.size(); ++k) {
    reduced[k] = seq[k] - static_cast<Wall>(k + 1) * stage.step;
  }
  // reduced is weakly increasing, so equal values sit in runs; a run of
  // length c yields floor(c/2) removed pairs and keeps c mod 2 copies.
  std::size_t k = 0;
  while (k < reduced.size()) {
    std::size_t j = k;
    while (j + 1 < reduced.size() && reduced[j + 1] == reduced[k]) ++j;
    const std::size_t run = j - k + 1;
    stage.riggings.insert(stage.riggings.end(), run / 2, reduced[k]);
    if (run % 2 != 0) stage.remainder.push_back(reduced[k]);
    k = j + 1;
  }
  return stage;
}

}  // namespace

RiggedConfiguration direct_transform(const State& state) {
  std::vector<Wall> seq = state.walls();
  std::map<std::int64_t, std::vector<std::int64_t>> riggings;
  std::int64_t row_length = 0;  // accumulated staircase steps so far
  while (!seq.empty()) {
    Stage stage = run_stage(seq);
    row_length += stage.step;
    riggings[row_length] = std::move(stage.riggings);
    seq = std::move(stage.remainder);
  }
  return RiggedConfiguration(std::move(riggings));
}

Partition soliton_content(const State& state) {
  return direct_transform(state).shape();
}

State inverse_transform(const RiggedConfiguration& rc) {
  InsertionMatrix m;
  for (std::int64_t len = rc.max_row_length(); len >= 1; --len) {
    m = add_staircase(insert_pairs(m, rc.riggings_for(len)), 1);
  }
  return m.to_state();
}

State companion_state(const RiggedConfiguration& rc) {
  InsertionMatrix m;
  for (std::int64_t len = rc.max_row_length(); len >= 1; --len) {
    m = add_staircase(insert_pairs(m, rc.riggings_for(len)), 0);
  }
  return m.to_state();
}

State inverse_transform_staged(const RiggedConfiguration& rc) {
  // Block form of the same recursion: stage i covers the rows of the i-th
  // distinct length (ascending), and its staircase is applied once per
  // column of that block, i.e. length difference to the next shorter block.
  std::vector<std::pair<std::int64_t, const std::vector<std::int64_t>*>>
      stages;
  for (const auto& [len, list] : rc.riggings()) {
    stages.emplace_back(len, &list);
  }
  InsertionMatrix m;
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    m = insert_pairs(m, *it->second);
    const std::int64_t shorter =
        (std::next(it) == stages.rend()) ? 0 : std::next(it)->first;
    for (std::int64_t rep = 0; rep < it->first - shorter; ++rep) {
      m = add_staircase(m, 1);
    }
  }
  return m.to_state();
}

State solve(const State& state, std::int64_t steps) {
  return inverse_transform(evolve_riggings(direct_transform(state), steps));
}

}  // namespace bbs
