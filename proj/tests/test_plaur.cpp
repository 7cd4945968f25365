#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "qbrion/plaur.hpp"
#include "qbrion/polytope.hpp"

using namespace qbrion;
using fixtures::mask_of;

TEST_CASE("family validation") {
  CHECK_NOTHROW(PiecewiseLaurent::constant(3).validate());

  for (int n = 2; n <= 4; ++n)
    for (const SetFunction& z : fixtures::gp_fixtures(n))
      CHECK_NOTHROW(piecewise_monomial(z).validate());

  PiecewiseLaurent broken(2, 2);
  broken.at({1, 2}) = LaurentPoly::variable(2, 1);
  broken.at({2, 1}) = LaurentPoly::variable(2, 2, 2);
  try {
    broken.validate();
    FAIL("expected GluingViolation");
  } catch (const GluingViolation& e) {
    CHECK(e.i == 1);
  }
}

TEST_CASE("pointwise ring operations preserve gluing") {
  PiecewiseLaurent f = piecewise_monomial(fixtures::hexagon());
  PiecewiseLaurent one = PiecewiseLaurent::constant(3);
  CHECK(family_op(f, one, FamilyOp::Mul) == f);
  PiecewiseLaurent sum = family_op(f, family_negate(f), FamilyOp::Add);
  for (std::uint64_t i = 0; i < sum.family_size(); ++i) CHECK(sum.at_index(i).is_zero());

  // Multiplying vertex families realizes the Minkowski sum.
  SetFunction a = fixtures::hexagon();
  SetFunction b = SetFunction::rank_function(Matroid::uniform(2, 3));
  CHECK(family_op(piecewise_monomial(a), piecewise_monomial(b), FamilyOp::Mul) ==
        piecewise_monomial(a + b));
}

TEST_CASE("family dual") {
  PiecewiseLaurent one = PiecewiseLaurent::constant(2);
  CHECK(family_dual(one) == one);

  PiecewiseLaurent tri = piecewise_monomial(fixtures::segment3());
  PiecewiseLaurent d = family_dual(tri);
  CHECK(d.at({1, 2}) == LaurentPoly::variable(2, 1, -3));
  CHECK(d.at({2, 1}) == LaurentPoly::variable(2, 2, -3));
  CHECK(family_dual(d) == tri);
}

TEST_CASE("omega families") {
  SECTION("Boolean on [2]") {
    PiecewiseLaurent w = omega(Matroid::boolean(2));
    CHECK(w.at({1, 2}) == LaurentPoly::variable(2, 2).times_ratio(2, 1) *
                              LaurentPoly::variable(2, 2, -1));
    CHECK(w.at({1, 2}).to_text() == "x1^-1*x2");
    CHECK(w.at({2, 1}).to_text() == "x1*x2^-1");
  }
  SECTION("U_{1,2}") {
    PiecewiseLaurent w = omega(Matroid::uniform(1, 2));
    CHECK(w.at({1, 2}) == LaurentPoly::variable(2, 1, -1));
    CHECK(w.at({2, 1}) == LaurentPoly::variable(2, 2, -1));
  }
  SECTION("every entry of a loopy matroid carries the loop inverse") {
    Matroid m = fixtures::from_lists(3, {{1, 2}});  // loop at 3
    PiecewiseLaurent w = omega(m);
    for (std::uint64_t i = 0; i < w.family_size(); ++i) {
      Permutation sigma = perm_at(3, i);
      // The co-basis product contributes x_3^{-1}; the boundary ratio
      // x_{sigma(n)}/x_{sigma(1)} may add or remove one more power.
      int expected = -1 + (sigma.back() == 3 ? 1 : 0) - (sigma.front() == 3 ? 1 : 0);
      CHECK(w.at_index(i).sole_exponent()[2] == expected);
    }
  }
  SECTION("omega always passes validation") {
    for (const Matroid& m : fixtures::matroid_fixtures(5))
      CHECK_NOTHROW(omega(m).validate());
  }
}

TEST_CASE("facet slide on families") {
  SECTION("hexagon slide matches the slid polytope's vertices") {
    PiecewiseLaurent f = piecewise_monomial(fixtures::hexagon());
    PiecewiseLaurent slid = family_slide(f, mask_of({2, 3}));
    CHECK(slid.at({2, 3, 1}) == LaurentPoly::monomial({3, 6, 3}));
    CHECK(slid.at({3, 2, 1}) == LaurentPoly::monomial({3, 3, 6}));
    CHECK(slid.at({1, 2, 3}) == f.at({1, 2, 3}));
    CHECK(slid == piecewise_monomial(slide_facet(fixtures::hexagon(), mask_of({2, 3}))));
  }
  SECTION("sliding the constant family gives the -delta_T family") {
    for (int n = 2; n <= 3; ++n) {
      for (GroundSubset t = 1; t < full_set(n); ++t) {
        PiecewiseLaurent slid = family_slide(PiecewiseLaurent::constant(n), t);
        SetFunction neg = SetFunction::zero(n) - SetFunction::delta(n, t);
        CHECK(slid == from_delta(neg));
      }
    }
  }
  SECTION("bridge identity: slide of x^a is x^{a - delta_T}") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
      int n = 2 + static_cast<int>(rng() % 3);
      SetFunction a = fixtures::random_delta(n, rng);
      for (GroundSubset t = 1; t < full_set(n); ++t) {
        CHECK(family_slide(from_delta(a), t) ==
              from_delta(a - SetFunction::delta(n, t)));
      }
    }
  }
}

TEST_CASE("family split") {
  SECTION("hexagon at {2,3}") {
    FamilySplit parts = family_split(piecewise_monomial(fixtures::hexagon()), mask_of({2, 3}));
    CHECK(parts.restrict_part.at({1, 2}) == LaurentPoly::monomial({6, 4}));
    CHECK(parts.restrict_part.at({2, 1}) == LaurentPoly::monomial({4, 6}));
    CHECK(parts.contract_part.at(Permutation{1}) == LaurentPoly::monomial({2}));
  }
  SECTION("constant family splits into constants") {
    FamilySplit parts = family_split(PiecewiseLaurent::constant(3), element_mask(2));
    CHECK(parts.restrict_part == PiecewiseLaurent::constant(1));
    CHECK(parts.contract_part == PiecewiseLaurent::constant(2));
  }
  SECTION("split agrees with the set-function split") {
    for (int n = 2; n <= 4; ++n) {
      for (const SetFunction& z : fixtures::gp_fixtures(n)) {
        for (GroundSubset t = 1; t < full_set(n); ++t) {
          FamilySplit fp = family_split(piecewise_monomial(z), t);
          SetFunctionSplit zp = split(z, t);
          CHECK(fp.restrict_part == piecewise_monomial(zp.restrict_part));
          CHECK(fp.contract_part == piecewise_monomial(zp.contract_part));
        }
      }
    }
  }
  SECTION("polynomial families are rejected") {
    PiecewiseLaurent f = PiecewiseLaurent::constant(2);
    f.at({1, 2}) += LaurentPoly::variable(2, 1) - LaurentPoly::variable(2, 2);
    CHECK_THROWS_AS(family_split(f, element_mask(1)), NotAMonomialFamily);
  }
  SECTION("inconsistent input trips the well-definedness check") {
    PiecewiseLaurent f(3, 3);
    for (std::uint64_t i = 0; i < f.family_size(); ++i)
      f.at_index(i) = LaurentPoly::constant(3, 1);
    f.at({1, 2, 3}) = LaurentPoly::variable(3, 1);
    f.at({1, 3, 2}) = LaurentPoly::variable(3, 1, 2);
    CHECK_THROWS_AS(family_split(f, element_mask(1)), WellDefinednessViolation);
  }
}

TEST_CASE("from_delta families") {
  CHECK(from_delta(SetFunction::zero(3)) == PiecewiseLaurent::constant(3));

  PiecewiseLaurent d = from_delta(SetFunction::delta(2, full_set(2)));
  CHECK(d.at({1, 2}) == LaurentPoly::variable(2, 2));
  CHECK(d.at({2, 1}) == LaurentPoly::variable(2, 1));

  // The rank function gives the base-polytope vertex family.
  for (const Matroid& m : fixtures::matroid_fixtures(4)) {
    PiecewiseLaurent f = from_delta(SetFunction::rank_function(m));
    for (std::uint64_t i = 0; i < f.family_size(); ++i) {
      Permutation sigma = perm_at(m.size(), i);
      ExponentVector e(m.size(), 0);
      GroundSubset basis = m.greedy_basis(sigma);
      for (int j = 1; j <= m.size(); ++j)
        if (basis & element_mask(j)) e[j - 1] = 1;
      CHECK(f.at_index(i) == LaurentPoly::monomial(e));
    }
  }
}

TEST_CASE("from_delta always glues, even for wild integer data") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);  // up to 5
    CHECK_NOTHROW(from_delta(fixtures::random_delta(n, rng)).validate());
  }
}

TEST_CASE("delta-coefficient splits") {
  SECTION("delta_F splits into the full-set delta and a constant shift") {
    GroundSubset f = mask_of({1, 3});
    SetFunctionSplit parts = delta_split(SetFunction::delta(3, f), f);
    CHECK(parts.restrict_part == SetFunction::delta(2, full_set(2)));
    // The contract side is normalized by a(F) = 1, so it sits at -1.
    CHECK(parts.contract_part.at(element_mask(1)) == -1);
  }
  SECTION("zero splits into zeros") {
    SetFunctionSplit parts = delta_split(SetFunction::zero(3), element_mask(2));
    CHECK(parts.restrict_part == SetFunction::zero(1));
    CHECK(parts.contract_part == SetFunction::zero(2));
  }
  SECTION("deltas incomparable to F vanish on both sides") {
    GroundSubset f = mask_of({1, 2});
    SetFunction a = SetFunction::delta(4, mask_of({2, 3}));  // neither inside nor above F
    SetFunctionSplit parts = delta_split(a, f);
    CHECK(parts.restrict_part == SetFunction::zero(2));
    CHECK(parts.contract_part == SetFunction::zero(2));
  }
  SECTION("splitting the family commutes with splitting the coefficients") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 20; ++trial) {
      int n = 2 + static_cast<int>(rng() % 3);
      SetFunction a = fixtures::random_delta(n, rng);
      for (GroundSubset t = 1; t < full_set(n); ++t) {
        FamilySplit fp = family_split(from_delta(a), t);
        SetFunctionSplit ap = delta_split(a, t);
        CHECK(fp.restrict_part == from_delta(ap.restrict_part));
        CHECK(fp.contract_part == from_delta(ap.contract_part));
      }
    }
  }
}
