#include "bbs/qpoly.hpp"

#include <stdexcept>
#include <vector>

namespace bbs {

QPolynomial::QPolynomial(Int constant) {
  if (constant != 0) terms_[0] = std::move(constant);
}

QPolynomial QPolynomial::monomial(Int coefficient, std::int64_t exponent) {
  QPolynomial p;
  if (coefficient != 0) p.terms_[exponent] = std::move(coefficient);
  return p;
}

Int QPolynomial::coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Int(0) : it->second;
}

std::int64_t QPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

std::int64_t QPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

Int QPolynomial::evaluate_at_one() const {
  Int total = 0;
  for (const auto& [e, c] : terms_) {
    (void)e;
    total += c;
  }
  return total;
}

QPolynomial QPolynomial::shifted(std::int64_t delta) const {
  QPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_[e + delta] = c;
  return out;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  for (const auto& [e, c] : other.terms_) {
    Int& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  for (const auto& [e, c] : other.terms_) {
    Int& slot = terms_[e];
    slot -= c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Int& slot = out.terms_[ea + eb];
      slot += ca * cb;
      if (slot == 0) out.terms_.erase(ea + eb);
    }
  }
  return out;
}

QPolynomial qbinomial(std::int64_t n, std::int64_t m) {
  if (m < 0 || n < 0 || m > n) return QPolynomial();
  // Row-by-row Pascal: [k j] = [k-1 j] + q^{k-j} [k-1 j-1].
  std::vector<QPolynomial> row(static_cast<std::size_t>(m) + 1);
  row[0] = QPolynomial::one();
  for (std::int64_t k = 1; k <= n; ++k) {
    const std::int64_t top = std::min(k, m);
    for (std::int64_t j = top; j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j)] +
          row[static_cast<std::size_t>(j - 1)].shifted(k - j);
    }
  }
  return row[static_cast<std::size_t>(m)];
}

}  // namespace bbs
