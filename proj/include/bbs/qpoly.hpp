#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>

namespace bbs {

using Int = boost::multiprecision::cpp_int;

// A Laurent polynomial in q with exact integer coefficients. Zero
// coefficients are never stored; equality is exact.
class QPolynomial {
 public:
  QPolynomial() = default;  // the zero polynomial
  explicit QPolynomial(Int constant);
  static QPolynomial monomial(Int coefficient, std::int64_t exponent);
  static QPolynomial one() { return QPolynomial(Int(1)); }

  const std::map<std::int64_t, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coefficient(std::int64_t exponent) const;
  std::int64_t min_exponent() const;  // require !is_zero()
  std::int64_t max_exponent() const;
  Int evaluate_at_one() const;
  QPolynomial shifted(std::int64_t delta) const;  // multiply by q^delta

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) {
    a += b;
    return a;
  }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) {
    a -= b;
    return a;
  }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

  bool operator==(const QPolynomial&) const = default;

 private:
  std::map<std::int64_t, Int> terms_;
};

// The Gaussian binomial coefficient, by the Pascal recurrence
// [n m] = [n-1 m] + q^{n-m} [n-1 m-1] in exact arithmetic; the zero
// polynomial outside 0 <= m <= n.
QPolynomial qbinomial(std::int64_t n, std::int64_t m);

}  // namespace bbs
