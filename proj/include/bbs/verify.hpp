#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bbs {

struct CheckLine {
  bool ok = false;
  std::string id;
};
using CheckList = std::vector<CheckLine>;

bool all_ok(const CheckList& checks);

// Exhaustive verification sweeps. Each returns one line per checked
// identity, suitable for OK/FAIL reporting.

// Both round trips of the scattering bijection over every state and every
// rigged configuration in boxes up to max_width.
CheckList verify_roundtrip(std::int64_t max_width);

// Transform-then-flow equals evolve-then-transform on the exhaustive set,
// plus solve() against repeated evolve() on fuzzed states.
CheckList verify_linearize(std::int64_t max_width, int fuzz_states = 1000,
                           int fuzz_max_steps = 20);

// energy_rc == energy_ctm of the inverse transform, exhaustively.
CheckList verify_energy(std::int64_t max_width);

// Per-shape partition functions against the fermionic closed forms, and the
// two summed-over-shapes identities.
CheckList verify_fermionic(std::int64_t max_width);

// Total partition functions against the closed q-binomial forms, the
// recursion relation, and its boundary values.
CheckList verify_recursion(std::int64_t max_width);

// Box-removal inverse equals the scattering inverse; every removal happens
// at the current rightmost wave front.
CheckList verify_kkr(std::int64_t max_width);

// The global and refined Kostka identities for all 2s <= L <= max_width.
CheckList verify_kostka(std::int64_t max_width);

// Bijectivity and weight preservation of the restricted-partition map.
CheckList verify_borderstrip(std::int64_t max_width);

// Dispatch by suite name (roundtrip, linearize, energy, fermionic,
// recursion, kkr, kostka, borderstrip); max_width < 0 picks the suite's
// default scale. Throws on an unknown name.
CheckList run_suite(const std::string& name, std::int64_t max_width = -1);

std::vector<std::string> suite_names();

}  // namespace bbs
