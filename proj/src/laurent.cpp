#include "knotcalc/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace knotcalc {

LaurentPoly::LaurentPoly(int min_exp, std::vector<BigInt> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  std::size_t tail = coeffs_.size();
  while (tail > lead && coeffs_[tail - 1] == 0) --tail;
  if (lead == tail) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(tail), coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  min_exp_ += static_cast<int>(lead);
}

LaurentPoly LaurentPoly::constant(BigInt c) {
  return LaurentPoly(0, {std::move(c)});
}

LaurentPoly LaurentPoly::monomial(BigInt c, int exp) {
  return LaurentPoly(exp, {std::move(c)});
}

int LaurentPoly::max_exp() const {
  if (is_zero()) throw ZeroPolynomial();
  return min_exp_ + static_cast<int>(coeffs_.size()) - 1;
}

BigInt LaurentPoly::coeff(int exp) const {
  if (is_zero() || exp < min_exp_) return 0;
  std::size_t j = static_cast<std::size_t>(exp - min_exp_);
  if (j >= coeffs_.size()) return 0;
  return coeffs_[j];
}

bool LaurentPoly::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  const int lo = std::min(p.min_exp(), q.min_exp());
  const int hi = std::max(p.max_exp(), q.max_exp());
  std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t j = 0; j < p.coeffs().size(); ++j)
    c[static_cast<std::size_t>(p.min_exp() - lo) + j] += p.coeffs()[j];
  for (std::size_t j = 0; j < q.coeffs().size(); ++j)
    c[static_cast<std::size_t>(q.min_exp() - lo) + j] += q.coeffs()[j];
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& p) {
  std::vector<BigInt> c = p.coeffs();
  for (auto& x : c) x = -x;
  return LaurentPoly(p.min_exp(), std::move(c));
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
  return p + (-q);
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<BigInt> c(p.coeffs().size() + q.coeffs().size() - 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    for (std::size_t j = 0; j < q.coeffs().size(); ++j)
      c[i + j] += p.coeffs()[i] * q.coeffs()[j];
  return LaurentPoly(p.min_exp() + q.min_exp(), std::move(c));
}

LaurentPoly pow(const LaurentPoly& p, unsigned n) {
  LaurentPoly result = LaurentPoly::one();
  LaurentPoly base = p;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

std::size_t term_count(const LaurentPoly& p) {
  std::size_t n = 0;
  for (const auto& c : p.coeffs())
    if (c != 0) ++n;
  return n;
}

int degree(const LaurentPoly& p) {
  return p.max_exp();
}

BigInt eval_unit(const LaurentPoly& p, int x) {
  if (x != 1 && x != -1) throw std::invalid_argument("eval_unit: x must be +1 or -1");
  BigInt sum = 0;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    const long long e = static_cast<long long>(p.min_exp()) + static_cast<long long>(j);
    if (x == -1 && (e % 2) != 0)
      sum -= p.coeffs()[j];
    else
      sum += p.coeffs()[j];
  }
  return sum;
}

LaurentPoly normalize_symmetric(const LaurentPoly& p) {
  if (p.is_zero()) throw NotNormalizable("cannot normalize the zero polynomial");
  const BigInt at_one = eval_unit(p, 1);
  if (at_one != 1 && at_one != -1)
    throw NotNormalizable("value at t=1 is " + at_one.str() + ", expected +1 or -1");
  if (!p.is_palindromic())
    throw NotNormalizable("coefficient sequence is not palindromic");
  // A palindrome of even length sums to an even number, so this branch is
  // unreachable once p(1) = +-1 holds; kept as a guard for the shift claim.
  if (p.coeffs().size() % 2 == 0)
    throw NotNormalizable("no centered palindromic shift exists");
  const int half = static_cast<int>(p.coeffs().size() / 2);
  std::vector<BigInt> c = p.coeffs();
  if (at_one == -1)
    for (auto& x : c) x = -x;
  return LaurentPoly(-half, std::move(c));
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int e = p.max_exp(); e >= p.min_exp(); --e) {
    const BigInt c = p.coeff(e);
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || e == 0) out << mag.str();
    if (e != 0) {
      if (mag != 1) out << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << to_string(p);
}

}  // namespace knotcalc
