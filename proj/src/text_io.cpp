#include "bbs/text_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bbs {

namespace {

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < text.size()) {
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    std::size_t j = k;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > k) out.push_back(text.substr(k, j - k));
    k = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view token) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc() || ptr != token.end()) {
    throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
  }
  return value;
}

// Splits "a<sep>b" at the first separator character.
std::pair<std::int64_t, std::int64_t> parse_int_pair(std::string_view token,
                                                     char sep) {
  const std::size_t cut = token.find(sep);
  if (cut == std::string_view::npos) {
    throw std::invalid_argument("expected '" + std::string(1, sep) +
                                "' in token '" + std::string(token) + "'");
  }
  return {parse_int(token.substr(0, cut)), parse_int(token.substr(cut + 1))};
}

bool is_empty_literal(const std::vector<std::string_view>& tokens) {
  return tokens.size() == 1 && tokens[0] == "empty";
}

}  // namespace

std::string to_text(const State& state) {
  if (state.empty()) return "empty";
  std::ostringstream out;
  bool first = true;
  for (const Block& b : state.blocks()) {
    if (!first) out << ' ';
    out << b.left << ',' << b.right;
    first = false;
  }
  return out.str();
}

State parse_state(std::string_view text) {
  const auto tokens = split_ws(text);
  if (tokens.empty()) throw std::invalid_argument("empty state line");
  if (is_empty_literal(tokens)) return State();
  std::vector<Block> blocks;
  for (std::string_view token : tokens) {
    const auto [a, b] = parse_int_pair(token, ',');
    blocks.push_back(Block{a, b});
  }
  return State(std::move(blocks));
}

std::string to_text(const RiggedConfiguration& rc) {
  if (rc.empty()) return "empty";
  std::ostringstream out;
  bool first = true;
  // Lengths descending, riggings ascending within a length.
  for (auto it = rc.riggings().rbegin(); it != rc.riggings().rend(); ++it) {
    for (std::int64_t r : it->second) {
      if (!first) out << ' ';
      out << it->first << ':' << r;
      first = false;
    }
  }
  return out.str();
}

RiggedConfiguration parse_rc(std::string_view text) {
  const auto tokens = split_ws(text);
  if (tokens.empty()) throw std::invalid_argument("empty rigged-configuration line");
  if (is_empty_literal(tokens)) return RiggedConfiguration();
  std::map<std::int64_t, std::vector<std::int64_t>> riggings;
  for (std::string_view token : tokens) {
    const auto [len, rig] = parse_int_pair(token, ':');
    riggings[len].push_back(rig);
  }
  return RiggedConfiguration(std::move(riggings));  // ctor sorts each list
}

std::string to_text(const QPolynomial& poly) {
  if (poly.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : poly.terms()) {
    if (!first) out << " + ";
    if (e == 0) {
      out << c;
    } else {
      if (c == -1) {
        out << '-';
      } else if (c != 1) {
        out << c << '*';
      }
      out << 'q';
      if (e != 1) out << '^' << e;
    }
    first = false;
  }
  return out.str();
}

QPolynomial parse_qpolynomial(std::string_view text) {
  const auto tokens = split_ws(text);
  if (tokens.empty()) throw std::invalid_argument("empty polynomial line");
  QPolynomial poly;
  for (std::string_view token : tokens) {
    if (token == "+") continue;
    Int coeff = 1;
    std::string_view rest = token;
    if (rest.starts_with('-') && rest.size() > 1 && rest[1] == 'q') {
      coeff = -1;
      rest.remove_prefix(1);
    }
    const std::size_t star = rest.find('*');
    if (star != std::string_view::npos) {
      coeff = Int(parse_int(rest.substr(0, star)));
      rest.remove_prefix(star + 1);
    }
    std::int64_t exponent = 0;
    if (rest.starts_with('q')) {
      exponent = 1;
      rest.remove_prefix(1);
      if (rest.starts_with('^')) {
        exponent = parse_int(rest.substr(1));
        rest = {};
      } else if (!rest.empty()) {
        throw std::invalid_argument("bad polynomial token");
      }
    } else {
      coeff = Int(parse_int(rest));
    }
    poly += QPolynomial::monomial(coeff, exponent);
  }
  return poly;
}

std::string render_occupancy(const State& state, Wall lo, Wall hi) {
  std::ostringstream out;
  out << "@origin=" << lo << ' ';
  for (bool bit : occupancy(state, lo, hi)) out << (bit ? 'o' : '.');
  return out.str();
}

}  // namespace bbs
