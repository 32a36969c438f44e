#include <doctest.h>

#include "leibniz/catalog.hpp"
#include "leibniz/derivations.hpp"
#include "test_support.hpp"

using namespace leibniz;

TEST_SUITE("catalog") {

TEST_CASE("lei4 construction and admissibility") {
  Field f3 = Field::gf(3);
  CatalogEntry e = lei4(f3, f3.one());
  CHECK(e.kind == CatalogKind::lei4);
  CHECK(e.algebra.basis_names() == std::vector<std::string>{"a1", "a2", "a3"});
  REQUIRE(e.parameter_admissible.has_value());
  CHECK(*e.parameter_admissible == true);
  // Root search oracle: X^2 + 1 over GF(3) has no root.
  for (long x = 0; x < 3; ++x)
    CHECK(!(f3.integer(x) * f3.integer(x) + f3.one()).is_zero());

  Field f5 = Field::gf(5);
  CatalogEntry e5 = lei4(f5, f5.one());
  CHECK(*e5.parameter_admissible == false);
  CHECK((f5.integer(2) * f5.integer(2) + f5.one()).is_zero()); // 4 = -1

  CHECK_THROWS_AS(lei4(f3, f3.zero()), LambdaZeroError);
}

TEST_CASE("lei5 construction") {
  Field f2 = Field::gf(2);
  CatalogEntry e = lei5(f2, f2.one());
  CHECK(e.algebra.bracket_basis(0, 1) ==
        Vec{f2.zero(), f2.zero(), f2.one()});
  CHECK(is_zero_vector(e.algebra.bracket_basis(1, 0)));
  CHECK(!e.parameter_admissible.has_value());

  Field q = Field::rationals();
  CHECK(lei5(q, q.integer(2)).algebra.dim() == 3);
  CHECK(lei5(q, q.fraction(1, 2)).algebra.bracket_basis(1, 1) ==
        Vec{q.zero(), q.zero(), q.fraction(1, 2)});
  CHECK_THROWS_AS(lei5(q, q.zero()), LambdaZeroError);
}

TEST_CASE("reference algebras") {
  Field q = Field::rationals();

  CatalogEntry cyc = cyclic_nilpotent_dim2(q);
  Subspace fc = Subspace::span(q, 2, {unit_vector(q, 2, 1)});
  CHECK(cyc.algebra.leibniz_kernel() == fc);
  CHECK(cyc.algebra.center(Side::two_sided) == fc);
  CHECK(cyc.algebra.nilpotency_class() == 2);

  CHECK(derivation_algebra(abelian(Field::gf(2), 3).algebra).dim() == 9);

  CHECK(heisenberg(q).algebra.is_lie());
  CHECK(heisenberg(q).algebra.nilpotency_class() == 2);
}

TEST_CASE("admissibility flag values") {
  Field q = Field::rationals();
  CHECK(lei4_param_admissible(q, q.one()));           // -1 not a square in Q
  CHECK(!lei4_param_admissible(Field::gf(2), Field::gf(2).one()));
  CHECK(lei4_param_admissible(Field::gf(3), Field::gf(3).one()));
  CHECK(!lei4_param_admissible(Field::gf(5), Field::gf(5).one()));
  CHECK(!lei4_param_admissible(q, q.integer(-4)));    // X^2 - 4 has root 2
  CHECK_THROWS_AS(lei4_param_admissible(q, q.zero()), LambdaZeroError);
}

TEST_CASE("no admissible parameter exists over a 2-closed field") {
  Field f2 = Field::gf(2);
  REQUIRE(f2.is_2_closed());
  for (std::uint64_t a = 1; a < 2; ++a)
    CHECK(!lei4_param_admissible(f2, f2.integer(static_cast<long>(a))));
}

TEST_CASE("every catalog algebra satisfies the left Leibniz identity") {
  for (Field f : {Field::rationals(), Field::gf(2), Field::gf(3)}) {
    CHECK(!lei4(f, f.one()).algebra.leibniz_counterexample().has_value());
    CHECK(!lei5(f, f.one()).algebra.leibniz_counterexample().has_value());
    CHECK(!cyclic_nilpotent_dim2(f).algebra.leibniz_counterexample()
               .has_value());
    CHECK(!abelian(f, 4).algebra.leibniz_counterexample().has_value());
    CHECK(!heisenberg(f).algebra.leibniz_counterexample().has_value());
  }
}

TEST_CASE("structural facts for the lei families") {
  for (Field f : {Field::rationals(), Field::gf(2), Field::gf(3)}) {
    for (const CatalogEntry &e : {lei4(f, f.one()), lei5(f, f.one())}) {
      CAPTURE(catalog_kind_name(e.kind));
      CAPTURE(f.name());
      const LeibnizAlgebra &l = e.algebra;
      Subspace fa3 = Subspace::span(f, 3, {unit_vector(f, 3, 2)});
      CHECK(l.leibniz_kernel() == fa3);
      CHECK(l.product(l.full_space(), l.full_space()) == fa3);
      CHECK(l.center(Side::left) == fa3);
      CHECK(l.center(Side::right) == fa3);
      CHECK(l.center(Side::two_sided) == fa3);
      CHECK(l.nilpotency_class() == 2);
      CHECK(l.is_extraspecial());
    }
  }
}

TEST_CASE("named derivations per characteristic") {
  Field f2 = Field::gf(2);
  auto named4 = expected_der_basis(CatalogKind::lei4, f2);
  REQUIRE(named4.size() == 4);
  CHECK(named4[0].name == "z");
  CHECK(named4[0].matrix(2, 0) == f2.one());
  CHECK(named4[1].name == "w");
  CHECK(named4[1].matrix(2, 1) == f2.one());
  CHECK(named4[2].name == "u");
  CHECK(named4[3].name == "v");

  auto named5 = expected_der_basis(CatalogKind::lei5, f2);
  REQUIRE(named5.size() == 3);
  CHECK(named5[2].name == "u");
  CHECK(named5[2].matrix(0, 0) == f2.one());
  CHECK(named5[2].matrix(1, 1) == f2.one());
  CHECK(named5[2].matrix(2, 2) == f2.zero());

  Field q = Field::rationals();
  CHECK(expected_der_basis(CatalogKind::lei4, q).size() == 2);
  CHECK(expected_der_basis(CatalogKind::lei5, q).size() == 2);
  CHECK_THROWS_AS(expected_der_basis(CatalogKind::abelian, q),
                  std::invalid_argument);
}

TEST_CASE("named derivations generate part of the computed algebra") {
  // Each named matrix is a derivation, and the named span sits inside the
  // computed derivation space.  The containment is strict: the computed
  // space also carries the grading derivation and the coupled rotation
  // (dimension 4 in characteristic != 2, 5 for lei4 in characteristic 2).
  for (Field f : {Field::rationals(), Field::gf(2), Field::gf(3)}) {
    for (CatalogKind kind : {CatalogKind::lei4, CatalogKind::lei5}) {
      CAPTURE(f.name());
      CAPTURE(catalog_kind_name(kind));
      CatalogEntry e = kind == CatalogKind::lei4 ? lei4(f, f.one())
                                                 : lei5(f, f.one());
      DerivationAlgebra der(e.algebra);
      std::vector<Vec> flats;
      for (const NamedDerivation &nd : expected_der_basis(kind, f)) {
        CHECK(is_derivation(e.algebra, nd.matrix));
        flats.push_back(nd.matrix.flattened());
      }
      Subspace named_span = Subspace::span(f, 9, flats);
      CHECK(der.matrix_span().contains(named_span));
      CHECK(named_span.dim() == flats.size());
      std::size_t expected_dim =
          kind == CatalogKind::lei4 && f.characteristic() == 2 ? 5 : 4;
      CHECK(der.dim() == expected_dim);
      CHECK(der.dim() > named_span.dim());
    }
  }
}

TEST_CASE("kind names round-trip") {
  for (CatalogKind k : {CatalogKind::lei4, CatalogKind::lei5,
                        CatalogKind::cyclic2, CatalogKind::abelian,
                        CatalogKind::heisenberg})
    CHECK(catalog_kind_from_name(catalog_kind_name(k)) == k);
  CHECK(!catalog_kind_from_name("nope").has_value());
}

} // TEST_SUITE
