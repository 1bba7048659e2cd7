#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotid {

class PolynomialParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a coefficient leaves the 64-bit range.
class CoefficientOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// coeff * M^m_exp * L^l_exp
struct Term {
  int m_exp = 0;
  int l_exp = 0;
  std::int64_t coeff = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse Laurent polynomial in the Lickorish-Millett variables L and M with
// integer coefficients. Terms are kept sorted by (m_exp, l_exp) with no
// zero coefficients, so equality is structural.
class LMPolynomial {
 public:
  LMPolynomial() = default;
  static LMPolynomial constant(std::int64_t c);
  static LMPolynomial monomial(std::int64_t coeff, int l_exp, int m_exp);
  // Terms in any order; like terms are combined.
  static LMPolynomial from_terms(std::vector<Term> terms);

  // -(L + L^-1) M^-1, the value of a split unknotted component.
  static LMPolynomial split_factor();

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LMPolynomial& operator+=(const LMPolynomial& rhs);
  LMPolynomial& operator-=(const LMPolynomial& rhs);
  LMPolynomial operator-() const;

  friend LMPolynomial operator+(LMPolynomial lhs, const LMPolynomial& rhs) { return lhs += rhs; }
  friend LMPolynomial operator-(LMPolynomial lhs, const LMPolynomial& rhs) { return lhs -= rhs; }
  friend LMPolynomial operator*(const LMPolynomial& lhs, const LMPolynomial& rhs);
  friend bool operator==(const LMPolynomial&, const LMPolynomial&) = default;

 private:
  std::vector<Term> terms_;
};

LMPolynomial poly_add(const LMPolynomial& p, const LMPolynomial& q);
LMPolynomial poly_mul(const LMPolynomial& p, const LMPolynomial& q);
// p * coeff * L^dl * M^dm
LMPolynomial poly_mono_mul(const LMPolynomial& p, std::int64_t coeff, int dl, int dm);
LMPolynomial poly_pow(const LMPolynomial& p, unsigned n);

// (l, m) -> (-l, m): the polynomial of the mirror image.
LMPolynomial l_inverse_substitute(const LMPolynomial& p);

// e.g. "L^-2 + 3 + L^2 - M^2L^-2 - 3M^2 - M^2L^2 + M^4"
std::string format_poly(const LMPolynomial& p);
LMPolynomial parse_poly(std::string_view text);

}  // namespace knotid
