#pragma once

#include <string>
#include <string_view>

#include "bbs/qpoly.hpp"
#include "bbs/rigged.hpp"
#include "bbs/state.hpp"

namespace bbs {

// Canonical text forms. States: space-separated `a,b` pairs, vacuum is
// `empty`. Rigged configurations: `length:rigging` tokens, lengths
// descending, riggings ascending, empty is `empty`. Polynomials: `c*q^e`
// terms joined by ` + `, exponents ascending. parse(to_text(x)) == x.

std::string to_text(const State& state);
State parse_state(std::string_view text);

std::string to_text(const RiggedConfiguration& rc);
RiggedConfiguration parse_rc(std::string_view text);

std::string to_text(const QPolynomial& poly);
QPolynomial parse_qpolynomial(std::string_view text);

// One `.`/`o` row over the window [lo, hi] with an `@origin=` prefix.
std::string render_occupancy(const State& state, Wall lo, Wall hi);

}  // namespace bbs
