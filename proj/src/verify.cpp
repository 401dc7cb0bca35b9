#include "bbs/verify.hpp"

#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "bbs/kkr.hpp"
#include "bbs/qseries.hpp"
#include "bbs/scattering.hpp"
#include "bbs/text_io.hpp"

namespace bbs {

bool all_ok(const CheckList& checks) {
  for (const CheckLine& line : checks) {
    if (!line.ok) return false;
  }
  return true;
}

namespace {

std::string shape_text(const Partition& shape) {
  if (shape.empty()) return "empty";
  std::ostringstream out;
  bool first = true;
  for (std::int64_t part : shape.parts()) {
    if (!first) out << ',';
    out << part;
    first = false;
  }
  return out.str();
}

template <class... Args>
std::string check_id(Args&&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

// Applies fn to every rigged configuration in the box, shape by shape.
template <class Fn>
void for_each_rc(std::int64_t box_width, Fn&& fn) {
  for (std::int64_t s = 0; s <= box_width; ++s) {
    for (const Partition& shape : partitions_of(s)) {
      for (const RiggedConfiguration& rc :
           enumerate_rcs(box_width, shape, false)) {
        fn(rc);
      }
    }
  }
}

State random_state(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> block_count(0, 5);
  std::uniform_int_distribution<Wall> start(-20, 20);
  std::uniform_int_distribution<Wall> gap(1, 4);
  std::uniform_int_distribution<Wall> size(1, 5);
  std::vector<Block> blocks;
  Wall wall = start(rng);
  const int n = block_count(rng);
  for (int k = 0; k < n; ++k) {
    const Wall left = wall + gap(rng);
    const Wall right = left + size(rng);
    blocks.push_back(Block{left, right});
    wall = right;
  }
  return State(std::move(blocks));
}

}  // namespace

CheckList verify_roundtrip(std::int64_t max_width) {
  CheckList out;
  for (std::int64_t L = 1; L <= max_width; ++L) {
    bool states_ok = true;
    for (std::int64_t s = 0; s <= L; ++s) {
      for (const State& p : enumerate_states(L, s, false)) {
        if (inverse_transform(direct_transform(p)) != p) states_ok = false;
      }
    }
    out.push_back({states_ok, check_id("roundtrip-state L=", L)});

    bool rcs_ok = true;
    for_each_rc(L, [&](const RiggedConfiguration& rc) {
      if (direct_transform(inverse_transform(rc)) != rc) rcs_ok = false;
    });
    out.push_back({rcs_ok, check_id("roundtrip-rc L=", L)});
  }
  return out;
}

CheckList verify_linearize(std::int64_t max_width, int fuzz_states,
                           int fuzz_max_steps) {
  CheckList out;
  for (std::int64_t L = 1; L <= max_width; ++L) {
    bool ok = true;
    for (std::int64_t s = 0; s <= L; ++s) {
      for (const State& p : enumerate_states(L, s, false)) {
        if (direct_transform(evolve(p)) !=
            evolve_riggings(direct_transform(p), 1)) {
          ok = false;
        }
      }
    }
    out.push_back({ok, check_id("linearize L=", L)});
  }

  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::int64_t> steps(0, fuzz_max_steps);
  bool fuzz_ok = true;
  for (int k = 0; k < fuzz_states; ++k) {
    const State p = random_state(rng);
    const std::int64_t n = steps(rng);
    State q = p;
    for (std::int64_t t = 0; t < n; ++t) q = evolve(q);
    if (solve(p, n) != q) fuzz_ok = false;
  }
  out.push_back({fuzz_ok, check_id("solve-fuzz states=", fuzz_states,
                                   " max-steps=", fuzz_max_steps)});
  return out;
}

CheckList verify_energy(std::int64_t max_width) {
  CheckList out;
  for (std::int64_t L = 1; L <= max_width; ++L) {
    bool ok = true;
    for_each_rc(L, [&](const RiggedConfiguration& rc) {
      if (energy_rc(rc) != energy_ctm(inverse_transform(rc))) ok = false;
    });
    out.push_back({ok, check_id("energy L=", L)});
  }
  return out;
}

CheckList verify_fermionic(std::int64_t max_width) {
  CheckList out;
  for (std::int64_t L = 1; L <= max_width; ++L) {
    for (std::int64_t s = 0; s <= L; ++s) {
      // One enumeration pass gives the brute sums for every shape at once.
      std::map<Partition, std::pair<QPolynomial, QPolynomial>> buckets;
      for (const State& p : enumerate_states(L, s, false)) {
        auto& [all, highest] = buckets[soliton_content(p)];
        const QPolynomial term = QPolynomial::monomial(1, energy_ctm(p));
        all += term;
        if (is_highest_weight(p)) highest += term;
      }
      QPolynomial sum_all, sum_highest;
      for (const Partition& shape : partitions_of(s)) {
        const auto it = buckets.find(shape);
        const QPolynomial brute_all =
            it == buckets.end() ? QPolynomial() : it->second.first;
        const QPolynomial brute_highest =
            it == buckets.end() ? QPolynomial() : it->second.second;
        const QPolynomial closed_all =
            partition_function(L, shape, false, ContentMethod::fermionic);
        const QPolynomial closed_highest =
            partition_function(L, shape, true, ContentMethod::fermionic);
        out.push_back({brute_all == closed_all,
                       check_id("fermionic-Z L=", L, " lambda=",
                                shape_text(shape))});
        out.push_back({brute_highest == closed_highest,
                       check_id("fermionic-Zplus L=", L, " lambda=",
                                shape_text(shape))});
        sum_all += closed_all;
        sum_highest += closed_highest;
      }
      out.push_back({sum_all == qbinomial(L, s),
                     check_id("bethe-all L=", L, " s=", s)});
      if (2 * s <= L) {
        out.push_back(
            {sum_highest == qbinomial(L, s) - qbinomial(L, s - 1),
             check_id("bethe-highest L=", L, " s=", s)});
      }
    }
  }
  return out;
}

namespace {

// Closed forms extended by the combinatorial conventions the recursion
// steps through: an empty interval holds exactly the vacuum.
QPolynomial z_all(std::int64_t L, std::int64_t s) {
  if (s == 0) return L >= -1 ? QPolynomial::one() : QPolynomial();
  if (s < 0 || L < 0 || s > L) return QPolynomial();
  return qbinomial(L, s);
}

QPolynomial z_highest(std::int64_t L, std::int64_t s) {
  if (s == 0) return L >= -1 ? QPolynomial::one() : QPolynomial();
  if (s < 0 || L < 0 || 2 * s > L) return QPolynomial();
  return qbinomial(L, s) - qbinomial(L, s - 1);
}

template <class Zfun>
bool recursion_holds(std::int64_t L, std::int64_t s, Zfun&& z) {
  QPolynomial rhs = z(L - 1, s);
  for (std::int64_t k = 1; k <= s; ++k) {
    rhs += z(L - k - 1, s - k).shifted(L - k);
  }
  return z(L, s) == rhs;
}

}  // namespace

CheckList verify_recursion(std::int64_t max_width) {
  CheckList out;
  for (std::int64_t L = 1; L <= max_width; ++L) {
    for (std::int64_t s = 0; s <= L; ++s) {
      const QPolynomial brute =
          total_partition_function(L, s, false, TotalMethod::brute);
      const QPolynomial closed =
          total_partition_function(L, s, false, TotalMethod::closed);
      const QPolynomial recursive =
          total_partition_function(L, s, false, TotalMethod::recursion);
      out.push_back({brute == closed && recursive == closed,
                     check_id("closed-Z L=", L, " s=", s)});
      out.push_back({recursion_holds(L, s, z_all),
                     check_id("recursion-Z L=", L, " s=", s)});
      if (2 * s <= L) {
        const QPolynomial brute_h =
            total_partition_function(L, s, true, TotalMethod::brute);
        const QPolynomial closed_h =
            total_partition_function(L, s, true, TotalMethod::closed);
        const QPolynomial recursive_h =
            total_partition_function(L, s, true, TotalMethod::recursion);
        out.push_back({brute_h == closed_h && recursive_h == closed_h,
                       check_id("closed-Zplus L=", L, " s=", s)});
        out.push_back({recursion_holds(L, s, z_highest),
                       check_id("recursion-Zplus L=", L, " s=", s)});
      }
    }
    bool boundaries =
        total_partition_function(L, 0, false, TotalMethod::brute) ==
            QPolynomial::one() &&
        total_partition_function(L, L, false, TotalMethod::brute) ==
            QPolynomial::one() &&
        total_partition_function(L, 0, true, TotalMethod::brute) ==
            QPolynomial::one();
    if (L % 2 == 1) {
      // L = 2s-1 sits on the highest-weight boundary diagonal.
      boundaries = boundaries &&
                   total_partition_function(L, (L + 1) / 2, true,
                                            TotalMethod::brute)
                       .is_zero();
    }
    out.push_back({boundaries, check_id("boundary L=", L)});
  }
  return out;
}

CheckList verify_kkr(std::int64_t max_width) {
  CheckList out;
  for (std::int64_t L = 1; L <= max_width; ++L) {
    bool inverse_ok = true;
    bool frontier_ok = true;
    for_each_rc(L, [&](const RiggedConfiguration& rc) {
      if (kkr_inverse(rc) != inverse_transform(rc)) inverse_ok = false;
      RiggedConfiguration cur = rc;
      while (!cur.empty()) {
        const BoxRemoval step = remove_box(cur);
        if (step.ball_wall != bounds(cur).rightmost_front.value()) {
          frontier_ok = false;
        }
        cur = step.rest;
      }
    });
    out.push_back({inverse_ok, check_id("kkr-inverse L=", L)});
    out.push_back({frontier_ok, check_id("kkr-frontier L=", L)});
  }
  return out;
}

CheckList verify_kostka(std::int64_t max_width) {
  CheckList out;
  for (std::int64_t L = 1; L <= max_width; ++L) {
    for (std::int64_t s = 0; 2 * s <= L; ++s) {
      const KostkaReport report = kostka_identity_check(L, s);
      out.push_back(
          {report.global_ok, check_id("kostka-global L=", L, " s=", s)});
      for (const KostkaShapeCheck& check : report.refined) {
        out.push_back({check.ok && check.ascent_counts_ok,
                       check_id("kostka-refined L=", L, " lambda=",
                                shape_text(check.shape))});
      }
    }
  }
  return out;
}

CheckList verify_borderstrip(std::int64_t max_width) {
  CheckList out;
  for (std::int64_t L = 1; L <= max_width; ++L) {
    for (std::int64_t s = 0; s <= L; ++s) {
      bool ok = true;
      std::map<Partition, std::int64_t> seen;
      QPolynomial weight_sum;
      for (const State& p : enumerate_states(L, s, false)) {
        const Partition mu = state_to_restricted_partition(p, L);
        if (mu.row_count() > s || mu.max_part() > L - s) ok = false;
        if (mu.weight() != energy_ctm(p)) ok = false;
        if (partition_to_state(mu, L, s) != p) ok = false;
        ++seen[mu];
        weight_sum += QPolynomial::monomial(1, mu.weight());
      }
      for (const auto& [mu, count] : seen) {
        (void)mu;
        if (count != 1) ok = false;
      }
      // Injective and weight-complete: the image is every partition in the
      // s x (L-s) box.
      if (weight_sum != qbinomial(L, s)) ok = false;
      out.push_back({ok, check_id("borderstrip L=", L, " s=", s)});
    }
  }
  return out;
}

std::vector<std::string> suite_names() {
  return {"roundtrip", "linearize", "energy",  "fermionic",
          "recursion", "kkr",       "kostka",  "borderstrip"};
}

CheckList run_suite(const std::string& name, std::int64_t max_width) {
  const auto scaled = [&](std::int64_t preset) {
    return max_width < 0 ? preset : max_width;
  };
  if (name == "roundtrip") return verify_roundtrip(scaled(12));
  if (name == "linearize") return verify_linearize(scaled(12));
  if (name == "energy") return verify_energy(scaled(10));
  if (name == "fermionic") return verify_fermionic(scaled(10));
  if (name == "recursion") return verify_recursion(scaled(12));
  if (name == "kkr") return verify_kkr(scaled(10));
  if (name == "kostka") return verify_kostka(scaled(10));
  if (name == "borderstrip") return verify_borderstrip(scaled(12));
  throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace bbs
