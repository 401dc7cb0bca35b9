#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bbs/state.hpp"

namespace bbs {

// A partition stored as row length -> multiplicity, zero entries omitted.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::map<std::int64_t, std::int64_t> multiplicities);
  static Partition from_parts(const std::vector<std::int64_t>& parts);

  const std::map<std::int64_t, std::int64_t>& multiplicities() const {
    return mult_;
  }
  std::int64_t multiplicity(std::int64_t length) const;
  std::int64_t max_part() const;  // 0 for the empty partition
  std::int64_t weight() const;    // sum of all parts
  std::int64_t row_count() const;
  bool empty() const { return mult_.empty(); }
  std::vector<std::int64_t> parts() const;  // descending

  auto operator<=>(const Partition&) const = default;

 private:
  std::map<std::int64_t, std::int64_t> mult_;
};

// All partitions of `total`, every part at most `max_part`.
std::vector<Partition> partitions_of(std::int64_t total);
std::vector<Partition> partitions_of(std::int64_t total, std::int64_t max_part);

// The quadratic form sum_{i,j} min(i,j) m_i m_j.
std::int64_t quadratic_energy(const Partition& shape);

// Vacancy number p_i = box_width - 2 sum_j min(i,j) m_j.
std::int64_t vacancy_number(const Partition& shape, std::int64_t box_width,
                            std::int64_t length);

struct ShapeStats {
  std::map<std::int64_t, std::int64_t> vacancy;  // p_i for i with m_i > 0
  std::int64_t phi = 0;
};
ShapeStats combinatorial_stats(const Partition& shape, std::int64_t box_width);

// A partition together with a weakly increasing list of integer riggings
// per row length; the list length equals the row multiplicity, so the shape
// is implied by the rigging map.
class RiggedConfiguration {
 public:
  RiggedConfiguration() = default;
  explicit RiggedConfiguration(
      std::map<std::int64_t, std::vector<std::int64_t>> riggings);

  const std::map<std::int64_t, std::vector<std::int64_t>>& riggings() const {
    return riggings_;
  }
  const std::vector<std::int64_t>& riggings_for(std::int64_t length) const;
  Partition shape() const;
  bool empty() const { return riggings_.empty(); }
  std::int64_t ball_count() const;
  std::int64_t max_row_length() const;

  bool operator==(const RiggedConfiguration&) const = default;

 private:
  std::map<std::int64_t, std::vector<std::int64_t>> riggings_;
};

// quadratic_energy(shape) plus the sum of all riggings.
std::int64_t energy_rc(const RiggedConfiguration& rc);

// The linearized flow: every rigging of a length-i row grows by steps * i.
// Negative steps give past states.
RiggedConfiguration evolve_riggings(const RiggedConfiguration& rc,
                                    std::int64_t steps);

struct StateBounds {
  std::int64_t ball_count = 0;
  std::optional<Wall> leftmost_tail;
  std::optional<Wall> rightmost_front;
};

// Extent of the state the configuration maps back to: ball count |shape|,
// leftmost wave tail min_i (J^i_1 + i), rightmost wave front
// max_i (J^i_last + 2 sum_j min(i,j) m_j). Extremes are absent for the
// empty shape.
StateBounds bounds(const RiggedConfiguration& rc);

// All rigging assignments for the given shape inside a box of width
// `box_width`: each length-i list weakly increasing within
// [-i, p_i] (or [0, p_i] when highest_only).
std::vector<RiggedConfiguration> enumerate_rcs(std::int64_t box_width,
                                               const Partition& shape,
                                               bool highest_only);

}  // namespace bbs
