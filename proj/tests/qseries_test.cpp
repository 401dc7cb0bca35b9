#include "bbs/qseries.hpp"

#include <doctest.h>

#include <stdexcept>

#include <map>

#include "bbs/scattering.hpp"

using namespace bbs;

namespace {

QPolynomial mono(std::int64_t c, std::int64_t e) {
  return QPolynomial::monomial(Int(c), e);
}

State st(std::vector<Block> blocks) { return State(std::move(blocks)); }

}  // namespace

TEST_CASE("content partition functions") {
  const Partition two = Partition::from_parts({2});
  const Partition ones = Partition::from_parts({1, 1});
  for (ContentMethod method : {ContentMethod::brute, ContentMethod::fermionic}) {
    CHECK(partition_function(4, two, true, method) == mono(1, 2));
    CHECK(partition_function(4, ones, true, method) == mono(1, 4));
    CHECK(partition_function(9, Partition(), true, method) ==
          QPolynomial::one());
    CHECK(partition_function(9, Partition(), false, method) ==
          QPolynomial::one());
  }
  // shapes that cannot fit give the zero polynomial either way
  CHECK(partition_function(3, two, true, ContentMethod::brute).is_zero());
  CHECK(partition_function(3, two, true, ContentMethod::fermionic).is_zero());
}

TEST_CASE("brute and fermionic sides agree across a box sweep") {
  for (std::int64_t L = 1; L <= 7; ++L) {
    for (std::int64_t s = 0; s <= L; ++s) {
      for (const Partition& shape : partitions_of(s)) {
        CHECK(partition_function(L, shape, false, ContentMethod::brute) ==
              partition_function(L, shape, false, ContentMethod::fermionic));
        CHECK(partition_function(L, shape, true, ContentMethod::brute) ==
              partition_function(L, shape, true, ContentMethod::fermionic));
      }
    }
  }
}

TEST_CASE("energy is preserved by the inverse transform") {
  for (std::int64_t s = 0; s <= 7; ++s) {
    for (const Partition& shape : partitions_of(s)) {
      for (const RiggedConfiguration& r : enumerate_rcs(7, shape, false)) {
        CHECK(energy_rc(r) == energy_ctm(inverse_transform(r)));
      }
    }
  }
}

TEST_CASE("total partition functions") {
  for (TotalMethod method :
       {TotalMethod::brute, TotalMethod::closed, TotalMethod::recursion}) {
    CHECK(total_partition_function(2, 1, false, method) ==
          mono(1, 0) + mono(1, 1));
    CHECK(total_partition_function(4, 2, true, method) ==
          mono(1, 2) + mono(1, 4));
    CHECK(total_partition_function(11, 0, false, method) ==
          QPolynomial::one());
    CHECK(total_partition_function(11, 0, true, method) == QPolynomial::one());
  }
  for (std::int64_t L = 1; L <= 9; ++L) {
    for (std::int64_t s = 0; s <= L; ++s) {
      const QPolynomial brute =
          total_partition_function(L, s, false, TotalMethod::brute);
      CHECK(brute == total_partition_function(L, s, false, TotalMethod::closed));
      CHECK(brute ==
            total_partition_function(L, s, false, TotalMethod::recursion));
      const QPolynomial brute_hw =
          total_partition_function(L, s, true, TotalMethod::brute);
      CHECK(brute_hw ==
            total_partition_function(L, s, true, TotalMethod::closed));
      CHECK(brute_hw ==
            total_partition_function(L, s, true, TotalMethod::recursion));
    }
  }
}

TEST_CASE("kostka identity at the worked sizes") {
  const KostkaReport small = kostka_identity_check(4, 2);
  CHECK(small.global_ok);
  CHECK(small.path_total == mono(1, 2) + mono(1, 4));
  REQUIRE(small.refined.size() == 2);
  for (const KostkaShapeCheck& check : small.refined) {
    CHECK(check.ok);
    CHECK(check.ascent_counts_ok);
  }

  // a single all-empty path carries weight L(L-1)/2
  for (std::int64_t L = 1; L <= 8; ++L) {
    const KostkaReport empty = kostka_identity_check(L, 0);
    CHECK(empty.global_ok);
    CHECK(empty.path_total == mono(1, L * (L - 1) / 2));
  }

  CHECK(kostka_identity_check(6, 3).all_ok());
  CHECK_THROWS_AS(kostka_identity_check(3, 2), std::invalid_argument);
}

TEST_CASE("the path ascent statistic is the state energy") {
  // sum of j over walls j where box j is empty and box j+1 filled
  for (std::int64_t L = 1; L <= 8; ++L) {
    for (std::int64_t s = 0; s <= L; ++s) {
      for (const State& p : enumerate_states(L, s, false)) {
        const std::vector<bool> word = occupancy(p, 0, L);
        std::int64_t weight = 0;
        for (std::size_t j = 1; j < word.size(); ++j) {
          if (!word[j - 1] && word[j]) weight += static_cast<std::int64_t>(j);
        }
        // a block starting at wall 0 contributes zero on both sides
        CHECK(weight == energy_ctm(p));
      }
    }
  }
}

TEST_CASE("restricted partition map golden values") {
  // left-packed states collapse to the empty partition
  CHECK(state_to_restricted_partition(st({{0, 3}}), 7) == Partition());
  CHECK(state_to_restricted_partition(State(), 5) == Partition());

  CHECK(state_to_restricted_partition(st({{0, 1}}), 2) == Partition());
  CHECK(state_to_restricted_partition(st({{1, 2}}), 2) ==
        Partition::from_parts({1}));

  // the six states in [0,4] with 2 balls fill the 2x2 box of partitions
  std::map<Partition, std::int64_t> image;
  for (const State& p : enumerate_states(4, 2, false)) {
    const Partition mu = state_to_restricted_partition(p, 4);
    CHECK(mu.weight() == energy_ctm(p));
    ++image[mu];
  }
  CHECK(image.size() == 6);
  for (const auto& [mu, count] : image) {
    CHECK(count == 1);
    CHECK(mu.row_count() <= 2);
    CHECK(mu.max_part() <= 2);
  }

  CHECK_THROWS_AS(state_to_restricted_partition(st({{3, 5}}), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(state_to_restricted_partition(st({{-1, 1}}), 4),
                  std::invalid_argument);
}

TEST_CASE("restricted partition map is a weight-preserving bijection") {
  for (std::int64_t L = 1; L <= 9; ++L) {
    for (std::int64_t s = 0; s <= L; ++s) {
      QPolynomial weights;
      std::map<Partition, std::int64_t> image;
      for (const State& p : enumerate_states(L, s, false)) {
        const Partition mu = state_to_restricted_partition(p, L);
        CHECK(partition_to_state(mu, L, s) == p);
        CHECK(mu.weight() == energy_ctm(p));
        weights += mono(1, mu.weight());
        ++image[mu];
      }
      for (const auto& [mu, count] : image) {
        (void)mu;
        CHECK(count == 1);
      }
      CHECK(weights == qbinomial(L, s));
    }
  }
}

TEST_CASE("partition to state rejects out-of-box shapes") {
  CHECK_THROWS_AS(partition_to_state(Partition::from_parts({3}), 4, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(partition_to_state(Partition::from_parts({1, 1, 1}), 4, 2),
                  std::invalid_argument);
}
