#pragma once

#include <cstdint>
#include <vector>

#include "bbs/qpoly.hpp"
#include "bbs/rigged.hpp"
#include "bbs/state.hpp"

namespace bbs {

enum class ContentMethod { brute, fermionic };

// Partition function over states in [0, box_width] with the given soliton
// content, weighted by q^E_CTM. brute enumerates and filters states;
// fermionic evaluates q^{phi} prod [p_i+m_i, m_i] (highest weight) or
// q^{-|shape|+phi} prod [p_i+m_i+i, m_i] (all states). The two agree
// exactly.
QPolynomial partition_function(std::int64_t box_width, const Partition& shape,
                               bool highest_only, ContentMethod method);

enum class TotalMethod { brute, closed, recursion };

// Partition function over all states in [0, box_width] with `balls` balls
// regardless of content. closed is [L s] (all) or [L s] - [L s-1]
// (highest weight); recursion evaluates
// Z(L,s) = Z(L-1,s) + sum_k q^{L-k} Z(L-k-1,s-k) from the boundary values.
QPolynomial total_partition_function(std::int64_t box_width,
                                     std::int64_t balls, bool highest_only,
                                     TotalMethod method);

struct KostkaShapeCheck {
  Partition shape;
  QPolynomial fermionic;  // q^{phi} prod [p_i+m_i, m_i]
  QPolynomial path_sum;   // sum over content-matching paths of q^{sum j theta_j}
  bool ascent_counts_ok = false;  // every path has row_count(shape) ascents
  bool ok = false;
};

struct KostkaReport {
  std::int64_t box_width = 0;
  std::int64_t balls = 0;
  QPolynomial fermionic_total;  // prefactored sum over shapes
  QPolynomial path_total;       // sum over paths of q^{sum (L-j)(1-theta_j)}
  bool global_ok = false;
  std::vector<KostkaShapeCheck> refined;

  bool all_ok() const;
};

// Checks the two Kostka-polynomial expressions for mu = (L-s, s),
// nu = (1^L): enumerates the highest-weight 0/1 paths of length L with s
// ones, classifies them by soliton content, and compares the fermionic and
// configuration-sum sides globally and per shape. Requires 2s <= L.
KostkaReport kostka_identity_check(std::int64_t box_width, std::int64_t balls);

// The energy-preserving bijection from states in [0, box_width] onto
// partitions with at most s parts each at most box_width - s: the boundary
// of the partition is built from one border strip per empty-run/filled-run
// pair, and |partition| equals E_CTM of the state. The left-packed state
// maps to the empty partition.
Partition state_to_restricted_partition(const State& state,
                                        std::int64_t box_width);

// Inverse of state_to_restricted_partition: peel border strips off the
// south-east boundary and replay the run lengths.
State partition_to_state(const Partition& partition, std::int64_t box_width,
                         std::int64_t balls);

}  // namespace bbs
