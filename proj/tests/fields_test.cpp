#include <doctest.h>

#include "leibniz/field.hpp"
#include "test_support.hpp"

using namespace leibniz;
using test_support::random_nonzero_scalar;
using test_support::random_scalar;

TEST_SUITE("fields") {

TEST_CASE("construction and characteristic") {
  CHECK(Field::rationals().characteristic() == 0);
  CHECK(Field::gf(2).characteristic() == 2);
  CHECK(Field::gf(7).characteristic() == 7);
  CHECK(Field::rationals().name() == "Q");
  CHECK(Field::gf(13).name() == "GF(13)");
  CHECK_THROWS_AS(Field::gf(0), std::invalid_argument);
  CHECK_THROWS_AS(Field::gf(1), std::invalid_argument);
  CHECK_THROWS_AS(Field::gf(4), std::invalid_argument);
  CHECK_THROWS_AS(Field::gf(9), std::invalid_argument); // prime powers rejected
  CHECK_THROWS_AS(Field::gf(91), std::invalid_argument); // 7 * 13
}

TEST_CASE("exact arithmetic examples") {
  Field q = Field::rationals();
  CHECK(q.fraction(1, 2) + q.fraction(1, 3) == q.fraction(5, 6));

  Field f3 = Field::gf(3);
  CHECK(f3.integer(2) * f3.integer(2) == f3.integer(1));

  Field f5 = Field::gf(5);
  // Independent check: the unique x with 2x = 1 in GF(5), by exhaustion.
  Scalar expected = f5.zero();
  int hits = 0;
  for (long x = 0; x < 5; ++x)
    if (f5.integer(2) * f5.integer(x) == f5.one()) {
      expected = f5.integer(x);
      ++hits;
    }
  REQUIRE(hits == 1);
  CHECK(expected == f5.integer(3));
  CHECK(f5.one() / f5.integer(2) == expected);
}

TEST_CASE("division by zero and mixed fields") {
  Field q = Field::rationals();
  Field f3 = Field::gf(3);
  CHECK_THROWS_AS(q.one() / q.zero(), DivisionByZeroError);
  CHECK_THROWS_AS(f3.zero().inverse(), DivisionByZeroError);
  CHECK_THROWS_AS(q.one() + f3.one(), MixedFieldsError);
  CHECK(!(q.one() == f3.one()));
}

TEST_CASE("canonical form") {
  Field q = Field::rationals();
  CHECK(q.fraction(2, 4) == q.fraction(1, 2));
  CHECK(q.fraction(-3, 6).str() == "-1/2");
  CHECK(q.fraction(3, -6).str() == "-1/2"); // denominator kept positive
  CHECK(q.fraction(4, 2).str() == "2");
  CHECK(Scalar(q, mpq_class(6, 8)) == q.fraction(3, 4));

  Field f5 = Field::gf(5);
  CHECK(f5.integer(7) == f5.integer(2));
  CHECK(f5.integer(-1) == f5.integer(4));
  CHECK((-f5.integer(2)).str() == "3");
}

TEST_CASE("scalar parsing") {
  Field q = Field::rationals();
  CHECK(q.parse("5/6") == q.fraction(5, 6));
  CHECK(q.parse("-7") == q.integer(-7));
  CHECK(q.parse("+3/9") == q.fraction(1, 3));
  CHECK_THROWS_AS(q.parse("1.5"), ParseError);
  CHECK_THROWS_AS(q.parse("1/-2"), ParseError);
  CHECK_THROWS_AS(q.parse("1/0"), ParseError);
  CHECK_THROWS_AS(q.parse(""), ParseError);
  CHECK_THROWS_AS(q.parse("x"), ParseError);

  Field f7 = Field::gf(7);
  CHECK(f7.parse("-1") == f7.integer(6));
  CHECK(f7.parse("10") == f7.integer(3));
  CHECK_THROWS_AS(f7.parse("1/2"), ParseError); // no fractions over GF(p)
}

TEST_CASE("parse/str round trip") {
  for (Field f : {Field::rationals(), Field::gf(5), Field::gf(13)})
    for (int i = 0; i < 50; ++i) {
      Scalar s = random_scalar(f);
      CHECK(f.parse(s.str()) == s);
    }
}

TEST_CASE("field axioms on random scalars") {
  for (Field f :
       {Field::rationals(), Field::gf(2), Field::gf(5), Field::gf(7)}) {
    CAPTURE(f.name());
    for (int i = 0; i < 100; ++i) {
      Scalar a = random_scalar(f), b = random_scalar(f), c = random_scalar(f);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == f.zero());
      CHECK(a - b == a + (-b));
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == f.one());
        CHECK(a / a == f.one());
      }
    }
  }
}

TEST_CASE("square roots: examples") {
  Field f5 = Field::gf(5);
  // Oracle: collect all r in GF(5) with r^2 = 4.
  std::vector<long> roots;
  for (long r = 0; r < 5; ++r)
    if (f5.integer(r) * f5.integer(r) == f5.integer(4))
      roots.push_back(r);
  REQUIRE(roots == std::vector<long>{2, 3});
  auto w = square_root(f5.integer(4));
  REQUIRE(w.has_value());
  CHECK(*w == f5.integer(2)); // smallest witness

  Field f3 = Field::gf(3);
  for (long r = 0; r < 3; ++r)
    CHECK(f3.integer(r) * f3.integer(r) != f3.integer(2));
  CHECK(!is_square(f3.integer(2)));

  Field q = Field::rationals();
  auto r = square_root(q.fraction(9, 4));
  REQUIRE(r.has_value());
  CHECK(*r == q.fraction(3, 2));
  CHECK(!is_square(q.integer(2)));
  CHECK(!is_square(q.integer(-4)));
  auto z = square_root(q.zero());
  REQUIRE(z.has_value());
  CHECK(z->is_zero());
}

TEST_CASE("square root witness property") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    Field f = Field::gf(p);
    for (std::uint64_t a = 0; a < p; ++a) {
      Scalar s = f.integer(static_cast<long>(a));
      if (auto w = square_root(s))
        CHECK(*w * *w == s);
    }
  }
  Field q = Field::rationals();
  for (int i = 0; i < 50; ++i) {
    Scalar s = random_scalar(q);
    Scalar sq = s * s;
    auto w = square_root(sq);
    REQUIRE(w.has_value());
    CHECK(*w * *w == sq);
  }
}

TEST_CASE("square counts in odd prime fields") {
  // Including 0, exactly (p+1)/2 elements are squares.
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    Field f = Field::gf(p);
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < p; ++a)
      if (is_square(f.integer(static_cast<long>(a))))
        ++count;
    CHECK(count == (p + 1) / 2);
  }
}

TEST_CASE("2-closed fields") {
  CHECK(Field::gf(2).is_2_closed());
  CHECK(!Field::gf(3).is_2_closed());
  CHECK(!Field::gf(5).is_2_closed());
  CHECK(!Field::rationals().is_2_closed());
}

} // TEST_SUITE
