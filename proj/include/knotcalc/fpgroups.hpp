#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotcalc/bigint.hpp"
#include "knotcalc/intmat.hpp"

namespace knotcalc {

struct ArityMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// One maximal run of a single generator: gen^exp with exp != 0.
struct Syllable {
  int gen;
  long long exp;
  bool operator==(const Syllable&) const = default;
};

/// Freely reduced word in run-length form: adjacent syllables carry distinct
/// generators, exponents are nonzero.
class Word {
 public:
  Word() = default;

  /// Free reduction of an arbitrary syllable sequence.
  static Word reduce(std::vector<Syllable> raw);

  /// Convenience: reduce({{gen, exp}, ...}).
  Word(std::initializer_list<Syllable> raw);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  std::size_t size() const { return syllables_.size(); }

  /// Total letter count, sum of |exp|.
  long long letter_count() const;

  Word inverse() const;

  /// Conjugate with first and last runs merged until the word is cyclically
  /// reduced (first and last generators differ, or at most one run).
  Word cyclically_reduced() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Syllable> syllables_;
};

/// Equality of cyclic words (rotation only, no inversion). Both inputs are
/// cyclically reduced internally first.
bool cyclically_equal(const Word& u, const Word& w);

std::string to_string(const Word& w);  // "a^6 b^-2"; "1" for the empty word
std::ostream& operator<<(std::ostream& os, const Word& w);

/// Finite presentation < x_0 ... x_{n-1} | relators >. Relators are stored
/// cyclically reduced and deduplicated up to cyclic rotation and inversion,
/// preserving first-occurrence order; trivial relators are dropped.
class Presentation {
 public:
  Presentation(int num_generators, std::vector<Word> relators);

  int num_generators() const { return num_generators_; }
  const std::vector<Word>& relators() const { return relators_; }

  bool operator==(const Presentation&) const = default;

 private:
  int num_generators_ = 1;
  std::vector<Word> relators_;
};

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<BigInt> torsion;  // divisibility chain, entries >= 2
  bool operator==(const AbelianInvariants&) const = default;
};

struct SmithForm {
  std::vector<BigInt> divisors;  // min(m, n) diagonal entries, d1 | d2 | ...
  IntMatrix u;                   // m x m, |det| = 1
  IntMatrix v;                   // n x n, |det| = 1
};

/// U * M * V = diag(divisors) with U, V unimodular and the divisors forming
/// a nonnegative divisibility chain. Pivoting picks the smallest nonzero
/// absolute value (row-major tie break), so the output is deterministic.
SmithForm smith_normal_form(IntMatrix m);

/// Invariants of the abelianized presentation, from the Smith normal form of
/// the relator exponent-sum matrix.
AbelianInvariants abelianize(const Presentation& p);

class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // validates bijectivity
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const { return images_[static_cast<std::size_t>(point)]; }

  /// Left-to-right composition: this first, then next.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  Permutation power(long long e) const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Closed, compatible coset table: every generator acts as a permutation of
/// the cosets and every relator traces back to its starting coset.
class CosetTable {
 public:
  CosetTable(int num_generators, std::vector<std::vector<int>> rows);

  int size() const { return static_cast<int>(rows_.size()); }
  int num_generators() const { return num_generators_; }

  /// Image of a coset under gen (direction +1) or its inverse (-1).
  int act(int coset, int gen, int direction) const;
  int trace(int coset, const Word& w) const;

  /// Generator action as a permutation of {0..size-1}.
  Permutation generator_action(int gen) const;

 private:
  int num_generators_;
  std::vector<std::vector<int>> rows_;  // 2 * num_generators columns
};

/// Coset enumeration over the trivial subgroup (relator-tracing strategy,
/// cosets numbered by first definition). On success the table size is the
/// group order. Returns nullopt when the table would exceed max_cosets,
/// meaning "order not certified <= bound".
std::optional<CosetTable> todd_coxeter(const Presentation& p, int max_cosets);

struct HomomorphismCheck {
  bool valid = false;          // every relator maps to the identity
  bool image_abelian = false;  // all pairwise commutators of images are trivial
  bool operator==(const HomomorphismCheck&) const = default;
};

/// Checks the assignment generator i -> images[i] on a common point set.
HomomorphismCheck verify_homomorphism(const Presentation& p,
                                      const std::vector<Permutation>& images);

/// true/false once certified; nullopt when the enumeration overflows.
/// Certification: enumerated order is exactly n and the abelianization is
/// cyclic of order n (free rank 0, torsion (n)); a group of order n with
/// cyclic abelianization of order n is cyclic.
std::optional<bool> is_cyclic_of_order(const Presentation& p, long long n, int max_cosets);

}  // namespace knotcalc
