#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "knotcalc/knots.hpp"
#include "knotcalc/laurent.hpp"

using namespace knotcalc;

namespace {

const LaurentPoly kTrefoilDelta(-1, {1, -1, 1});          // t - 1 + t^-1
const LaurentPoly kFigureEightDelta(-1, {-1, 3, -1});     // -t + 3 - t^-1

std::vector<KnotExpr> catalog() {
  return {KnotExpr::unknot(),     KnotExpr::trefoil(),    KnotExpr::figure_eight(),
          KnotExpr::torus(2, 3),  KnotExpr::torus(2, 5),  KnotExpr::torus(3, 4),
          KnotExpr::torus(3, 5)};
}

std::mt19937 rng(911);

KnotExpr random_catalog_knot() {
  auto c = catalog();
  std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
  return c[pick(rng)];
}

KnotExpr random_tree(int leaves) {
  KnotExpr k = random_catalog_knot();
  for (int i = 1; i < leaves; ++i) {
    KnotExpr next = random_catalog_knot();
    // Attach on either side to vary the shape.
    if (std::uniform_int_distribution<int>(0, 1)(rng))
      k = KnotExpr::connected_sum(std::move(k), std::move(next));
    else
      k = KnotExpr::connected_sum(std::move(next), std::move(k));
  }
  return k;
}

std::vector<KnotExpr> leaves_of(const KnotExpr& k) {
  if (k.kind() != KnotExpr::Kind::Sum) return {k};
  auto l = leaves_of(k.left());
  const auto r = leaves_of(k.right());
  l.insert(l.end(), r.begin(), r.end());
  return l;
}

}  // namespace

TEST_CASE("parsing the knot grammar") {
  CHECK(knot_parse("trefoil # trefoil") ==
        KnotExpr::connected_sum(KnotExpr::trefoil(), KnotExpr::trefoil()));
  CHECK(knot_parse("torus(2,5)") == KnotExpr::torus(2, 5));
  CHECK(knot_parse("torus( 2 , 5 )") == KnotExpr::torus(2, 5));
  CHECK(knot_parse("unknot#figure_eight") ==
        KnotExpr::connected_sum(KnotExpr::unknot(), KnotExpr::figure_eight()));
  CHECK(knot_parse("seifert [[-1,1],[0,-1]]") ==
        KnotExpr::seifert(SeifertMatrix({{-1, 1}, {0, -1}})));

  // '#' associates to the left.
  const KnotExpr three = knot_parse("trefoil # unknot # trefoil");
  REQUIRE(three.kind() == KnotExpr::Kind::Sum);
  CHECK(three.left().kind() == KnotExpr::Kind::Sum);
  CHECK(three.right() == KnotExpr::trefoil());

  CHECK_THROWS_AS(knot_parse("torus(2,4)"), InvalidKnot);
  CHECK_THROWS_AS(knot_parse("torus(0,1)"), InvalidKnot);
  CHECK_THROWS_AS(knot_parse("granny"), ParseError);
  CHECK_THROWS_AS(knot_parse("trefoil # "), ParseError);
  CHECK_THROWS_AS(knot_parse("trefoil trefoil"), ParseError);
  CHECK_THROWS_AS(knot_parse(""), ParseError);
  CHECK_THROWS_AS(knot_parse("seifert [[1,2],[4,1]]"), InvalidKnot);  // det(V-V^T) = 4

  try {
    knot_parse("trefoil # granny");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 10);
  }
}

TEST_CASE("Seifert matrix validity") {
  CHECK_NOTHROW(SeifertMatrix({}));
  CHECK_NOTHROW(SeifertMatrix({{-1, 1}, {0, -1}}));
  CHECK_NOTHROW(SeifertMatrix({{1, 2}, {3, 4}}));                       // det(V-V^T) = 1
  CHECK_THROWS_AS(SeifertMatrix({{1, 2}, {4, 1}}), InvalidKnot);        // det(V-V^T) = 4
  CHECK_THROWS_AS(SeifertMatrix({{1, 1}, {1, 1}}), InvalidKnot);        // det(V-V^T) = 0
  CHECK_THROWS_AS(SeifertMatrix({{1, 2, 3}, {4, 5, 6}}), InvalidKnot);  // not square
  CHECK_THROWS_AS(SeifertMatrix(std::vector<std::vector<long long>>{{1}}),
                  InvalidKnot);  // odd size, det 0
}

TEST_CASE("Alexander polynomials from Seifert matrices") {
  CHECK(seifert_alexander(SeifertMatrix({{-1, 1}, {0, -1}})) == kTrefoilDelta);
  CHECK(seifert_alexander(SeifertMatrix({})) == LaurentPoly::one());
  CHECK(seifert_alexander(SeifertMatrix({{1, 1}, {0, -1}})) == kFigureEightDelta);
}

TEST_CASE("Alexander polynomials of torus knots") {
  CHECK(torus_alexander(2, 3) == kTrefoilDelta);
  for (const int q : {1, 2, 3, 7}) CHECK(torus_alexander(1, q) == LaurentPoly::one());
  // t^2 - t + 1 - t^-1 + t^-2
  CHECK(torus_alexander(2, 5) == LaurentPoly(-2, {1, -1, 1, -1, 1}));
  CHECK_THROWS_AS(torus_alexander(2, 4), NonCoprime);
  CHECK_THROWS_AS(torus_alexander(0, 3), NonCoprime);

  // Two independent computation paths agree bit-exactly.
  CHECK(torus_alexander(2, 3) == seifert_alexander(SeifertMatrix({{-1, 1}, {0, -1}})));
}

TEST_CASE("Alexander polynomial of expression trees") {
  CHECK(alexander(KnotExpr::unknot()) == LaurentPoly::one());
  const KnotExpr two = knot_parse("trefoil # trefoil");
  CHECK(alexander(two) == LaurentPoly(-2, {1, -2, 3, -2, 1}));
  const KnotExpr three = knot_parse("trefoil # trefoil # trefoil");
  CHECK(alexander(three) == pow(kTrefoilDelta, 3));
}

TEST_CASE("knot determinants") {
  CHECK(knot_determinant(KnotExpr::trefoil()) == 3);
  CHECK(knot_determinant(KnotExpr::unknot()) == 1);
  CHECK(knot_determinant(KnotExpr::figure_eight()) == 5);

  // Determinants of knots are odd across the catalog.
  for (const auto& k : catalog()) CHECK(knot_determinant(k) % 2 != 0);
}

TEST_CASE("multiplicativity over connected sums") {
  for (int i = 0; i < 100; ++i) {
    const KnotExpr a = random_catalog_knot(), b = random_catalog_knot();
    CHECK(alexander(KnotExpr::connected_sum(a, b)) == alexander(a) * alexander(b));
  }
}

TEST_CASE("symmetry and unit value at t = 1") {
  std::vector<KnotExpr> samples = catalog();
  for (int i = 0; i < 30; ++i) samples.push_back(random_tree(1 + i % 5));
  for (const auto& k : samples) {
    const LaurentPoly d = alexander(k);
    CHECK(d.is_palindromic());
    CHECK(d.min_exp() == -degree(d));
    CHECK(eval_unit(d, 1) == 1);
  }
}

TEST_CASE("connected sum order and grouping do not change the polynomial") {
  for (int i = 0; i < 50; ++i) {
    const KnotExpr tree = random_tree(2 + i % 4);
    auto leaves = leaves_of(tree);
    std::shuffle(leaves.begin(), leaves.end(), rng);
    // Rebuild right-associated from shuffled leaves.
    KnotExpr rebuilt = leaves.back();
    for (std::size_t j = leaves.size() - 1; j-- > 0;)
      rebuilt = KnotExpr::connected_sum(leaves[j], std::move(rebuilt));
    CHECK(alexander(tree) == alexander(rebuilt));
  }
}

TEST_CASE("exact division") {
  const LaurentPoly p = kTrefoilDelta * kFigureEightDelta;
  CHECK(divide_exact(p, kTrefoilDelta) == kFigureEightDelta);
  CHECK(divide_exact(p, kFigureEightDelta) == kTrefoilDelta);
  CHECK(divide_exact(LaurentPoly(), kTrefoilDelta) == LaurentPoly());
  CHECK_THROWS_AS(divide_exact(LaurentPoly(0, {1, 1}), LaurentPoly(0, {1, 1, 1})),
                  std::domain_error);
  CHECK_THROWS_AS(divide_exact(LaurentPoly(0, {1, 0, 1}), LaurentPoly(0, {1, 1})),
                  std::domain_error);
  CHECK_THROWS_AS(divide_exact(kTrefoilDelta, LaurentPoly()), std::domain_error);

  for (int i = 0; i < 100; ++i) {
    const KnotExpr a = random_catalog_knot(), b = random_catalog_knot();
    const LaurentPoly da = alexander(a), db = alexander(b);
    if (db.is_zero()) continue;
    CHECK(divide_exact(da * db, db) == da);
  }
}

TEST_CASE("polynomial matrix determinants") {
  CHECK(poly_matrix_det({}) == LaurentPoly::one());
  CHECK(poly_matrix_det({{kTrefoilDelta}}) == kTrefoilDelta);
  // Singular matrix.
  CHECK(poly_matrix_det({{kTrefoilDelta, kTrefoilDelta}, {kTrefoilDelta, kTrefoilDelta}}) ==
        LaurentPoly());
  // Row swap needed for the pivot.
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  CHECK(poly_matrix_det({{LaurentPoly(), t}, {t, LaurentPoly()}}) == -(t * t));
}

TEST_CASE("expression rendering round trips through the parser") {
  // The grammar is parenthesis-free, so only left-associated trees can come
  // back structurally identical.
  for (int i = 0; i < 40; ++i) {
    KnotExpr k = random_catalog_knot();
    for (int j = 0; j < i % 5; ++j)
      k = KnotExpr::connected_sum(std::move(k), random_catalog_knot());
    CHECK(knot_parse(to_string(k)) == k);
  }
  // Arbitrary shapes still round-trip at the invariant level.
  for (int i = 0; i < 40; ++i) {
    const KnotExpr k = random_tree(1 + i % 5);
    CHECK(alexander(knot_parse(to_string(k))) == alexander(k));
  }
  const KnotExpr s = KnotExpr::seifert(SeifertMatrix({{1, 1}, {0, -1}}));
  CHECK(knot_parse(to_string(s)) == s);
}
