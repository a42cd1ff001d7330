#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotcalc/bigint.hpp"

namespace knotcalc {

struct ZeroPolynomial : std::domain_error {
  ZeroPolynomial() : std::domain_error("degree of the zero polynomial is undefined") {}
};

struct NotNormalizable : std::domain_error {
  explicit NotNormalizable(const std::string& why) : std::domain_error(why) {}
};

/// Exact Laurent polynomial over the integers in one variable t.
///
/// Values are kept canonical: the coefficient vector never carries zero
/// fringe entries, and the zero polynomial is exactly (min_exp = 0, empty
/// coefficients). Structural equality therefore coincides with mathematical
/// equality. All operations return fresh values; nothing mutates.
class LaurentPoly {
 public:
  /// The zero polynomial.
  LaurentPoly() = default;

  /// coeffs[j] is the coefficient of t^(min_exp + j). Zero fringes are
  /// stripped on construction.
  LaurentPoly(int min_exp, std::vector<BigInt> coeffs);

  static LaurentPoly constant(BigInt c);
  static LaurentPoly one() { return constant(1); }
  static LaurentPoly monomial(BigInt c, int exp);

  bool is_zero() const { return coeffs_.empty(); }
  int min_exp() const { return min_exp_; }
  int max_exp() const;  // throws ZeroPolynomial on the zero polynomial
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Coefficient of t^exp; zero outside the support.
  BigInt coeff(int exp) const;

  /// Coefficient vector reads the same reversed. True for the zero
  /// polynomial.
  bool is_palindromic() const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  int min_exp_ = 0;
  std::vector<BigInt> coeffs_;
};

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator-(const LaurentPoly& p);
LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);

/// n-fold product; pow(p, 0) == 1 for every p.
LaurentPoly pow(const LaurentPoly& p, unsigned n);

/// Number of nonzero coefficients.
std::size_t term_count(const LaurentPoly& p);

/// Maximum exponent of p. For a polynomial in symmetric form (palindromic,
/// centered at exponent 0) this is the degree that bounds the basic-class
/// offsets. Throws ZeroPolynomial.
int degree(const LaurentPoly& p);

/// Evaluate at t = x, x in {+1, -1}.
BigInt eval_unit(const LaurentPoly& p, int x);

/// Returns eps * t^s * p (eps = +-1, s integer) that is palindromic,
/// centered at exponent 0, and evaluates to +1 at t = 1. Throws
/// NotNormalizable when p(1) is not +-1 or no such shift exists.
LaurentPoly normalize_symmetric(const LaurentPoly& p);

/// Renders e.g. "t^2 - 2*t + 3 - 2*t^-1 + t^-2"; "0" for zero.
std::string to_string(const LaurentPoly& p);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace knotcalc
