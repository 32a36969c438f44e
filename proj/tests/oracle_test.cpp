#include <doctest.h>

#include <set>

#include "leibniz/catalog.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/oracle.hpp"

using namespace leibniz;

namespace {

std::string flat_key(const Matrix &m) {
  std::string key;
  for (const Scalar &s : m.flattened()) {
    key += s.str();
    key += ',';
  }
  return key;
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("enumeration counts are powers of p matching the solver") {
  Field f2 = Field::gf(2);

  // lei4 over GF(2) carries 2^5 derivations: u, v, z, w and the coupled
  // rotation a1 -> a2, a2 -> lambda a1.
  auto der4 = enumerate_derivations(lei4(f2, f2.one()).algebra);
  CHECK(der4.size() == 32);

  // lei5 over GF(2): 2^4.
  auto der5 = enumerate_derivations(lei5(f2, f2.one()).algebra);
  CHECK(der5.size() == 16);

  // Every linear map derives an abelian algebra.
  CHECK(enumerate_derivations(abelian(f2, 2).algebra).size() == 16);
  CHECK(enumerate_derivations(abelian(f2, 1).algebra).size() == 2);
}

TEST_CASE("enumeration is lexicographic and starts at zero") {
  Field f2 = Field::gf(2);
  auto list = enumerate_derivations(lei5(f2, f2.one()).algebra);
  REQUIRE(!list.empty());
  CHECK(list.front().is_zero());
  for (std::size_t i = 0; i + 1 < list.size(); ++i) {
    // Compare as digit strings over the flattened entries.
    Vec a = list[i].flattened(), b = list[i + 1].flattened();
    bool less = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == b[k])
        continue;
      less = a[k].value() < b[k].value();
      break;
    }
    CHECK(less);
  }
}

TEST_CASE("enumerated derivation sets are closed under the linear structure") {
  Field f2 = Field::gf(2);
  auto list = enumerate_derivations(lei4(f2, f2.one()).algebra);
  std::set<std::string> keys;
  for (const Matrix &m : list)
    keys.insert(flat_key(m));
  for (const Matrix &a : list)
    for (const Matrix &b : list)
      CHECK(keys.count(flat_key(a + b)) == 1);
}

TEST_CASE("brute-force kernel spans") {
  Field f3 = Field::gf(3);
  Subspace fa3 = Subspace::span(f3, 3, {unit_vector(f3, 3, 2)});
  CHECK(leib_kernel_bruteforce(lei4(f3, f3.one()).algebra) == fa3);

  Field f2 = Field::gf(2);
  Subspace fa3_2 = Subspace::span(f2, 3, {unit_vector(f2, 3, 2)});
  CHECK(leib_kernel_bruteforce(lei5(f2, f2.one()).algebra) == fa3_2);
  CHECK(leib_kernel_bruteforce(abelian(f2, 3).algebra).dim() == 0);
}

TEST_CASE("brute-force centers and annihilators agree with the solver") {
  for (Field f : {Field::gf(2), Field::gf(3)}) {
    for (const CatalogEntry &e :
         {lei4(f, f.one()), lei5(f, f.one()), cyclic_nilpotent_dim2(f),
          heisenberg(f)}) {
      const LeibnizAlgebra &l = e.algebra;
      for (Side s : {Side::left, Side::right, Side::two_sided})
        CHECK(center_bruteforce(l, s) == l.center(s));
      for (std::size_t i = 0; i < l.dim(); ++i) {
        Vec ei = unit_vector(f, l.dim(), i);
        CHECK(annihilator_bruteforce(l, ei, Side::left) ==
              l.annihilator(ei, Side::left));
      }
    }
  }
}

TEST_CASE("compare reports") {
  Field f2 = Field::gf(2);
  OracleReport r = compare(lei4(f2, f2.one()).algebra);
  CHECK(r.derivation_count == 32);
  CHECK(r.derivation_dim == 5);
  CHECK(r.solver_dim == 5);
  CHECK(r.match);

  Field f3 = Field::gf(3);
  OracleReport r3 = compare(lei4(f3, f3.one()).algebra);
  CHECK(r3.derivation_dim == 4);
  CHECK(r3.solver_dim == 4);
  CHECK(r3.match);

  OracleReport rh = compare(heisenberg(f3).algebra);
  CHECK(rh.solver_dim == 6); // the classical value for the Heisenberg algebra
  CHECK(rh.match);
}

TEST_CASE("a third field: lei4 over GF(5) stays within budget and matches") {
  // 5^9 candidate matrices, just under the default budget; char != 2, so
  // the derivation space has dimension 4 here as well.
  Field f5 = Field::gf(5);
  OracleReport r = compare(lei4(f5, f5.one()).algebra);
  CHECK(r.derivation_dim == 4);
  CHECK(r.solver_dim == 4);
  CHECK(r.match);
}

TEST_CASE("search-space guardrails") {
  Field f3 = Field::gf(3);
  CHECK_THROWS_AS(enumerate_derivations(lei4(f3, f3.one()).algebra, 1000),
                  SearchSpaceTooLargeError);
  Field f13 = Field::gf(13);
  CHECK_THROWS_AS(leib_kernel_bruteforce(abelian(f13, 4).algebra),
                  SearchSpaceTooLargeError); // 13^4 > 4096
  Field q = Field::rationals();
  CHECK_THROWS_AS(enumerate_derivations(abelian(q, 1).algebra),
                  std::invalid_argument);
}

TEST_CASE("a non-catalog table also matches: class-3 cyclic algebra") {
  for (Field f : {Field::gf(2), Field::gf(3)}) {
    AlgebraBuilder builder(f, {"b", "c", "d"});
    builder.set_bracket(0, 0, unit_vector(f, 3, 1));
    builder.set_bracket(0, 1, unit_vector(f, 3, 2));
    OracleReport r = compare(builder.checked());
    CHECK(r.match);
    CHECK(r.derivation_dim == r.solver_dim);
  }
}

TEST_CASE("degenerate enumeration") {
  Field f2 = Field::gf(2);
  auto der0 = enumerate_derivations(abelian(f2, 0).algebra);
  CHECK(der0.size() == 1); // the empty matrix
  OracleReport r = compare(abelian(f2, 0).algebra);
  CHECK(r.derivation_dim == 0);
  CHECK(r.match);
}

} // TEST_SUITE
