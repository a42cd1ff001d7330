#include "knotcalc/nestcurves.hpp"

namespace knotcalc {

namespace {

constexpr int kGenA = 0;
constexpr int kGenB = 1;

void require_k(int k) {
  if (k < 2) throw DegreeTooSmall(k);
}

}  // namespace

std::string to_string(RegionTopology t) {
  switch (t) {
    case RegionTopology::Disc:
      return "disc";
    case RegionTopology::Annulus:
      return "annulus";
    case RegionTopology::Moebius:
      return "moebius";
  }
  return "";
}

std::vector<Region> nest_regions(int k) {
  require_k(k);
  std::vector<Region> regions;
  regions.reserve(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    RegionTopology t = RegionTopology::Annulus;
    if (i == 0) t = RegionTopology::Disc;
    if (i == k) t = RegionTopology::Moebius;
    regions.push_back({i, t});
  }
  return regions;
}

Presentation base_presentation(int k) {
  require_k(k);
  return Presentation(2, {Word{{kGenA, 2 * k}, {kGenB, 2 * k}}});
}

std::vector<Word> puncture_relators(int k, int i) {
  require_k(k);
  if (i < 0 || i > k)
    throw IndexOutOfRange("puncture_relators: region index " + std::to_string(i) +
                          " not in 0.." + std::to_string(k));
  const Word first{{kGenA, 2 * k - i}, {kGenB, i}};
  const Word second{{kGenB, 2 * k - i}, {kGenA, i}};
  if (cyclically_equal(first, second)) return {first};
  return {first, second};
}

std::vector<Word> hemisphere_relators(int m, int i) {
  const HemisphereSplit split = hemisphere_split(m, i);
  const Word first{{kGenA, split.side_a}, {kGenB, split.side_b}};
  const Word second{{kGenA, split.side_b}, {kGenB, split.side_a}};
  if (cyclically_equal(first, second)) return {first};
  return {first, second};
}

Presentation complement_presentation(int k, int membrane) {
  require_k(k);
  if (membrane < 1 || membrane > k - 1)
    throw InvalidMembrane("membrane region " + std::to_string(membrane) +
                          " is not an annulus (need 1.." + std::to_string(k - 1) + ")");
  std::vector<Word> relators = {Word{{kGenA, 2 * k}, {kGenB, 2 * k}}};
  for (int i = 0; i <= k; ++i) {
    if (i == membrane) continue;
    for (auto& w : puncture_relators(k, i)) relators.push_back(std::move(w));
  }
  return Presentation(2, std::move(relators));
}

NestInvariants nest_invariants(int k) {
  require_k(k);
  NestInvariants inv;
  inv.k = k;
  inv.degree = 2 * k;
  inv.homology_class = 2 * k;
  inv.genus = static_cast<long long>(k - 1) * (2 * k - 1);
  inv.expected_pi1_order = 2 * k;
  return inv;
}

NestCurve::NestCurve(int k) : k_(k) { require_k(k); }

std::vector<Region> NestCurve::regions() const { return nest_regions(k_); }

Presentation NestCurve::base_presentation() const { return knotcalc::base_presentation(k_); }

Presentation NestCurve::complement_presentation(int membrane) const {
  return knotcalc::complement_presentation(k_, membrane);
}

NestInvariants NestCurve::invariants() const { return nest_invariants(k_); }

HemisphereSplit hemisphere_split(int m, int i) {
  if (m < 2 || m % 2 != 0)
    throw IndexOutOfRange("hemisphere_split: m must be an even integer >= 2, got " +
                          std::to_string(m));
  if (i < 0 || i > m / 2)
    throw IndexOutOfRange("hemisphere_split: i must lie in 0.." + std::to_string(m / 2) +
                          ", got " + std::to_string(i));
  return {i, m - i};
}

}  // namespace knotcalc
