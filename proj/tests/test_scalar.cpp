#include <doctest.h>

#include "liemirror/scalar.hpp"

using namespace liemirror;

TEST_CASE("rational literals parse and print canonically") {
  CHECK(parse_rat("3/4") == Rat(3) / 4);
  CHECK(parse_rat("-6/8") == Rat(-3) / 4);
  CHECK(parse_rat("5") == Rat(5));
  CHECK(to_string(parse_rat("-6/8")) == "-3/4");
  CHECK_THROWS(parse_rat("3/"));
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("x"));
}

TEST_CASE("gaussian rational literals") {
  CHECK(parse_crat("1/2+3/4*i") == CRat(Rat(1) / 2, Rat(3) / 4));
  CHECK(parse_crat("i") == CRat::i());
  CHECK(parse_crat("-i") == CRat(Rat(0), Rat(-1)));
  CHECK(parse_crat("2-i") == CRat(Rat(2), Rat(-1)));
  CHECK(parse_crat("-3/5") == CRat(Rat(-3) / 5));
  CHECK(to_string(CRat(Rat(0), Rat(2))) == "2*i");
  CHECK(to_string(CRat(Rat(1), Rat(-1))) == "1-i");
  CHECK_THROWS(parse_crat("1+"));
}

TEST_CASE("Q(i) is a field with involutive conjugation") {
  CRat a(Rat(3) / 7, Rat(-2) / 5);
  CRat b(Rat(-1) / 2, Rat(4));
  CHECK(conj(conj(a)) == a);
  CHECK(conj(a * b) == conj(a) * conj(b));
  CHECK(conj(a + b) == conj(a) + conj(b));
  CHECK(a / b * b == a);
  CHECK((a * b) / a == b);
  CRat i = CRat::i();
  CHECK(i * i == CRat(-1));
  // norm a * conj(a) is real and nonnegative
  CRat n = a * conj(a);
  CHECK(n.im.is_zero());
  CHECK(n.re >= 0);
}

TEST_CASE("field ops keep exactness on awkward denominators") {
  Rat x = parse_rat("1000000000000000000001/3");
  Rat y = parse_rat("1/1000000000000000000001");
  CHECK(x * y == Rat(1) / 3);
}
