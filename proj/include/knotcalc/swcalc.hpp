#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotcalc/bigint.hpp"
#include "knotcalc/knots.hpp"
#include "knotcalc/laurent.hpp"

namespace knotcalc {

struct NotNormalized : std::domain_error {
  using std::domain_error::domain_error;
};

struct EmptySW : std::domain_error {
  using std::domain_error::domain_error;
};

/// Formal name of a second-homology class beta + 2n[T]: an opaque base label
/// naming beta, plus the integer multiple n of twice the surgery torus class.
/// Distinct labels are assumed to never differ by a multiple of 2[T], so no
/// cross-label collision can occur.
struct SWClass {
  std::string base;
  int n = 0;
  auto operator<=>(const SWClass&) const = default;
};

/// Seiberg-Witten invariants combined into a single formal polynomial: a
/// finite map from classes to nonzero integer coefficients.
class SWPolynomial {
 public:
  SWPolynomial() = default;
  explicit SWPolynomial(std::map<SWClass, BigInt> terms);  // drops zero terms

  /// Two classes +-beta with coefficient 1 each, the default modeling input
  /// for a cover with basic classes { beta, -beta }.
  static SWPolynomial two_class_fixture();

  const std::map<SWClass, BigInt>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  bool operator==(const SWPolynomial&) const = default;

 private:
  std::map<SWClass, BigInt> terms_;
};

using BasicClassSet = std::set<SWClass>;

/// Knot-surgery product formula: multiplies the invariant polynomial by
/// delta with t acting as the offset shift n -> n + j. delta must be in
/// symmetric form (palindromic, centered, value 1 at t = 1); throws
/// NotNormalized otherwise.
SWPolynomial fs_surgery_sw(const SWPolynomial& sw, const LaurentPoly& delta);

/// Surgery along the membrane torus in the double cover: one application of
/// the product formula with Delta_{K#K}. The doubling of the knot happens
/// here and nowhere else.
SWPolynomial annulus_rim_surgery_sw(const SWPolynomial& sw, const KnotExpr& k);

/// Classes with nonzero coefficient.
BasicClassSet basic_classes(const SWPolynomial& sw);

/// K_1 .. K_N where K_i is the i-fold connected sum of trefoils.
std::vector<KnotExpr> trefoil_family(int n);

struct DistinguishReport {
  std::vector<std::size_t> basic_class_counts;
  bool pairwise_distinct = false;
  /// The inference chain backing the verdict, also emitted in the JSON
  /// report under "citations".
  std::vector<std::string> citations;
};

/// Counts basic classes of the cover after annulus rim surgery via each
/// family member; the counts are pairwise distinct iff the resulting
/// manifolds are pairwise distinguished. Throws EmptySW when sw_y is empty.
DistinguishReport distinguish(const SWPolynomial& sw_y, const std::vector<KnotExpr>& family);

}  // namespace knotcalc
