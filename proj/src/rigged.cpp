#include "bbs/rigged.hpp"

#include <algorithm>
#include <stdexcept>

namespace bbs {

Partition::Partition(std::map<std::int64_t, std::int64_t> multiplicities)
    : mult_(std::move(multiplicities)) {
  for (auto it = mult_.begin(); it != mult_.end();) {
    if (it->first < 1 || it->second < 0) {
      throw std::invalid_argument("partition parts and multiplicities must be positive");
    }
    it = (it->second == 0) ? mult_.erase(it) : std::next(it);
  }
}

Partition Partition::from_parts(const std::vector<std::int64_t>& parts) {
  std::map<std::int64_t, std::int64_t> mult;
  for (std::int64_t p : parts) ++mult[p];
  return Partition(std::move(mult));
}

std::int64_t Partition::multiplicity(std::int64_t length) const {
  auto it = mult_.find(length);
  return it == mult_.end() ? 0 : it->second;
}

std::int64_t Partition::max_part() const {
  return mult_.empty() ? 0 : mult_.rbegin()->first;
}

std::int64_t Partition::weight() const {
  std::int64_t w = 0;
  for (const auto& [len, m] : mult_) w += len * m;
  return w;
}

std::int64_t Partition::row_count() const {
  std::int64_t n = 0;
  for (const auto& [len, m] : mult_) n += m;
  return n;
}

std::vector<std::int64_t> Partition::parts() const {
  std::vector<std::int64_t> out;
  for (auto it = mult_.rbegin(); it != mult_.rend(); ++it) {
    out.insert(out.end(), static_cast<std::size_t>(it->second), it->first);
  }
  return out;
}

namespace {

void build_partitions(std::int64_t total, std::int64_t max_part,
                      std::vector<std::int64_t>& acc,
                      std::vector<Partition>& out) {
  if (total == 0) {
    out.push_back(Partition::from_parts(acc));
    return;
  }
  for (std::int64_t p = std::min(total, max_part); p >= 1; --p) {
    acc.push_back(p);
    build_partitions(total - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(std::int64_t total,
                                     std::int64_t max_part) {
  if (total < 0) throw std::invalid_argument("partitions_of: negative total");
  std::vector<Partition> out;
  std::vector<std::int64_t> acc;
  build_partitions(total, max_part, acc, out);
  return out;
}

std::vector<Partition> partitions_of(std::int64_t total) {
  return partitions_of(total, total);
}

std::int64_t quadratic_energy(const Partition& shape) {
  std::int64_t phi = 0;
  for (const auto& [i, mi] : shape.multiplicities()) {
    for (const auto& [j, mj] : shape.multiplicities()) {
      phi += std::min(i, j) * mi * mj;
    }
  }
  return phi;
}

namespace {

// sum_j min(length, j) m_j
std::int64_t row_overlap(const Partition& shape, std::int64_t length) {
  std::int64_t overlap = 0;
  for (const auto& [j, mj] : shape.multiplicities()) {
    overlap += std::min(length, j) * mj;
  }
  return overlap;
}

}  // namespace

std::int64_t vacancy_number(const Partition& shape, std::int64_t box_width,
                            std::int64_t length) {
  return box_width - 2 * row_overlap(shape, length);
}

ShapeStats combinatorial_stats(const Partition& shape,
                               std::int64_t box_width) {
  ShapeStats stats;
  for (const auto& [i, mi] : shape.multiplicities()) {
    (void)mi;
    stats.vacancy[i] = vacancy_number(shape, box_width, i);
  }
  stats.phi = quadratic_energy(shape);
  return stats;
}

RiggedConfiguration::RiggedConfiguration(
    std::map<std::int64_t, std::vector<std::int64_t>> riggings)
    : riggings_(std::move(riggings)) {
  for (auto it = riggings_.begin(); it != riggings_.end();) {
    if (it->first < 1) {
      throw std::invalid_argument("row lengths must be positive");
    }
    if (it->second.empty()) {
      it = riggings_.erase(it);
    } else {
      std::sort(it->second.begin(), it->second.end());
      ++it;
    }
  }
}

const std::vector<std::int64_t>& RiggedConfiguration::riggings_for(
    std::int64_t length) const {
  static const std::vector<std::int64_t> none;
  auto it = riggings_.find(length);
  return it == riggings_.end() ? none : it->second;
}

Partition RiggedConfiguration::shape() const {
  std::map<std::int64_t, std::int64_t> mult;
  for (const auto& [len, list] : riggings_) {
    mult[len] = static_cast<std::int64_t>(list.size());
  }
  return Partition(std::move(mult));
}

std::int64_t RiggedConfiguration::ball_count() const {
  std::int64_t n = 0;
  for (const auto& [len, list] : riggings_) {
    n += len * static_cast<std::int64_t>(list.size());
  }
  return n;
}

std::int64_t RiggedConfiguration::max_row_length() const {
  return riggings_.empty() ? 0 : riggings_.rbegin()->first;
}

std::int64_t energy_rc(const RiggedConfiguration& rc) {
  std::int64_t e = quadratic_energy(rc.shape());
  for (const auto& [len, list] : rc.riggings()) {
    (void)len;
    for (std::int64_t r : list) e += r;
  }
  return e;
}

RiggedConfiguration evolve_riggings(const RiggedConfiguration& rc,
                                    std::int64_t steps) {
  std::map<std::int64_t, std::vector<std::int64_t>> next = rc.riggings();
  for (auto& [len, list] : next) {
    for (std::int64_t& r : list) r += steps * len;
  }
  return RiggedConfiguration(std::move(next));
}

StateBounds bounds(const RiggedConfiguration& rc) {
  StateBounds out;
  out.ball_count = rc.ball_count();
  if (rc.empty()) return out;
  const Partition shape = rc.shape();
  Wall tail = 0, front = 0;
  bool first = true;
  for (const auto& [len, list] : rc.riggings()) {
    const Wall t = list.front() + len;
    const Wall f = list.back() + 2 * row_overlap(shape, len);
    if (first || t < tail) tail = t;
    if (first || f > front) front = f;
    first = false;
  }
  out.leftmost_tail = tail;
  out.rightmost_front = front;
  return out;
}

namespace {

void enumerate_rigging_lists(std::int64_t lo, std::int64_t hi,
                             std::int64_t count,
                             std::vector<std::int64_t>& acc,
                             std::vector<std::vector<std::int64_t>>& out) {
  if (count == 0) {
    out.push_back(acc);
    return;
  }
  for (std::int64_t v = lo; v <= hi; ++v) {
    acc.push_back(v);
    enumerate_rigging_lists(v, hi, count - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<RiggedConfiguration> enumerate_rcs(std::int64_t box_width,
                                               const Partition& shape,
                                               bool highest_only) {
  // One weakly increasing list per row length, independently bounded.
  std::vector<std::int64_t> lengths;
  std::vector<std::vector<std::vector<std::int64_t>>> choices;
  for (const auto& [len, mult] : shape.multiplicities()) {
    const std::int64_t lo = highest_only ? 0 : -len;
    const std::int64_t hi = vacancy_number(shape, box_width, len);
    std::vector<std::vector<std::int64_t>> lists;
    std::vector<std::int64_t> acc;
    if (lo <= hi) enumerate_rigging_lists(lo, hi, mult, acc, lists);
    if (lists.empty()) return {};
    lengths.push_back(len);
    choices.push_back(std::move(lists));
  }

  std::vector<RiggedConfiguration> out;
  std::map<std::int64_t, std::vector<std::int64_t>> acc;
  auto assemble = [&](auto&& self, std::size_t idx) -> void {
    if (idx == lengths.size()) {
      out.push_back(RiggedConfiguration{acc});
      return;
    }
    for (const auto& list : choices[idx]) {
      acc[lengths[idx]] = list;
      self(self, idx + 1);
    }
    acc.erase(lengths[idx]);
  };
  assemble(assemble, 0);
  return out;
}

}  // namespace bbs
