#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "knotcalc/fpgroups.hpp"

namespace knotcalc {

struct DegreeTooSmall : std::domain_error {
  explicit DegreeTooSmall(int k)
      : std::domain_error("nest curve needs k >= 2, got k = " + std::to_string(k)) {}
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct InvalidMembrane : std::domain_error {
  using std::domain_error::domain_error;
};

enum class RegionTopology { Disc, Annulus, Moebius };

std::string to_string(RegionTopology t);

/// Connected component of the real projective plane cut along the k nested
/// ovals of a degree-2k curve: a disc inside the innermost oval, k - 1
/// annuli between consecutive ovals, a Moebius band outside the outermost.
struct Region {
  int index = 0;
  RegionTopology topology = RegionTopology::Disc;
  bool operator==(const Region&) const = default;
};

/// Partition of the 2k vertex pairs cut apart by the dual circle of a
/// puncture point: side_a + side_b = m.
struct HemisphereSplit {
  int side_a = 0;
  int side_b = 0;
  bool operator==(const HemisphereSplit&) const = default;
};

struct NestInvariants {
  int k = 0;
  int degree = 0;          // 2k
  int homology_class = 0;  // 2k
  long long genus = 0;     // (k-1)(2k-1)
  int expected_pi1_order = 0;  // 2k
  bool operator==(const NestInvariants&) const = default;
};

/// A maximal nest curve of even degree 2k: k ovals totally ordered by
/// inclusion. Construction enforces k >= 2.
class NestCurve {
 public:
  explicit NestCurve(int k);  // throws DegreeTooSmall

  int k() const { return k_; }
  int degree() const { return 2 * k_; }

  std::vector<Region> regions() const;
  Presentation base_presentation() const;
  Presentation complement_presentation(int membrane = 1) const;
  NestInvariants invariants() const;

  bool operator==(const NestCurve&) const = default;

 private:
  int k_;
};

/// The k + 1 regions of the nest complement, innermost first.
std::vector<Region> nest_regions(int k);

/// < a, b | a^{2k} b^{2k} > : the fundamental group of the curve complement
/// cut along the real plane, generators looping around the two halves of the
/// complexified curve.
Presentation base_presentation(int k);

/// Relators added by puncturing region i: { a^{2k-i} b^i, b^{2k-i} a^i },
/// deduplicated up to cyclic rotation (i = k collapses to one relator).
std::vector<Word> puncture_relators(int k, int i);

/// Alternative emission of the puncture relators, indexed by the hemisphere
/// split: { a^i b^{m-i}, a^{m-i} b^i } with m = 2k. Agrees with
/// puncture_relators(m/2, i) up to cyclic rotation.
std::vector<Word> hemisphere_relators(int m, int i);

/// base_presentation(k) plus puncture relators for every region except the
/// membrane annulus (1 <= membrane <= k-1); relators deduplicated.
Presentation complement_presentation(int k, int membrane = 1);

/// degree 2k, homology class 2k, genus (k-1)(2k-1), expected pi1 order 2k.
NestInvariants nest_invariants(int k);

HemisphereSplit hemisphere_split(int m, int i);

}  // namespace knotcalc
