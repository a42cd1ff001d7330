#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotcalc/bigint.hpp"
#include "knotcalc/laurent.hpp"

namespace knotcalc {

struct InvalidKnot : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonCoprime : InvalidKnot {
  NonCoprime(long long p, long long q)
      : InvalidKnot("torus(" + std::to_string(p) + "," + std::to_string(q) +
                    "): parameters must be coprime and >= 1") {}
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& why, std::size_t position)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + why),
        position(position) {}
  std::size_t position;
};

/// Seifert pairing of a knot: a square 2g x 2g integer matrix V with
/// det(V - V^T) = +-1, checked on construction. The 0 x 0 matrix is the
/// unknot.
class SeifertMatrix {
 public:
  explicit SeifertMatrix(std::vector<std::vector<long long>> entries);

  std::size_t size() const { return entries_.size(); }
  long long at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<long long>>& entries() const { return entries_; }

  bool operator==(const SeifertMatrix&) const = default;

 private:
  std::vector<std::vector<long long>> entries_;
};

/// Expression tree of catalog knots and connected sums. Values are
/// immutable and cheap to copy.
class KnotExpr {
 public:
  enum class Kind { Unknot, Trefoil, FigureEight, Torus, Seifert, Sum };

  static KnotExpr unknot();
  static KnotExpr trefoil();
  static KnotExpr figure_eight();
  static KnotExpr torus(int p, int q);  // throws NonCoprime
  static KnotExpr seifert(SeifertMatrix m);
  static KnotExpr connected_sum(KnotExpr lhs, KnotExpr rhs);

  Kind kind() const;
  int torus_p() const;  // Torus only
  int torus_q() const;
  const SeifertMatrix& matrix() const;  // Seifert only
  const KnotExpr& left() const;         // Sum only
  const KnotExpr& right() const;

  bool operator==(const KnotExpr& other) const;

 private:
  struct Node;
  explicit KnotExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const KnotExpr& k);

/// Grammar: expr := atom ("#" atom)*, left associative;
/// atom := "unknot" | "trefoil" | "figure_eight" | "torus(" int "," int ")"
///       | "seifert" <json array of arrays of integers>.
KnotExpr knot_parse(std::string_view text);

/// Symmetric-normalized det(V - t V^T).
LaurentPoly seifert_alexander(const SeifertMatrix& v);

/// Symmetric-normalized (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)).
LaurentPoly torus_alexander(int p, int q);  // throws NonCoprime

/// Alexander polynomial of an expression tree; multiplicative over
/// connected sums.
LaurentPoly alexander(const KnotExpr& k);

/// |Delta_K(-1)|.
BigInt knot_determinant(const KnotExpr& k);

/// Exact quotient in Z[t, t^-1]; throws std::domain_error when the division
/// is not exact or the divisor is zero.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/// Determinant of a square matrix of Laurent polynomials by fraction-free
/// elimination.
LaurentPoly poly_matrix_det(std::vector<std::vector<LaurentPoly>> m);

}  // namespace knotcalc
