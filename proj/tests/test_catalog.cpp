#include <doctest.h>

#include "liemirror/catalog.hpp"
#include "liemirror/iso.hpp"
#include "liemirror/shorthand.hpp"
#include "liemirror/verify.hpp"

using namespace liemirror;

TEST_CASE("shorthand basics") {
  auto ab = parse_shorthand("(0,0,0,0,0,0)");
  CHECK(ab.dim() == 6);
  CHECK(ab.brackets().empty());

  auto h19p = parse_shorthand("(0,0,0,12,13,34+25)");
  std::vector<Rat> e1(6, Rat(0)), e2(6, Rat(0));
  e1[0] = 1;
  e2[1] = 1;
  CHECK(h19p.bracket(e1, e2)[3] == -1);

  // parameters with parenthesized linear coefficients
  std::map<std::string, Rat> params{{"a", Rat(1)}, {"b", Rat(1)}};
  auto fam = parse_shorthand("(0,0,0,a12,b13,(a+2b)14-(a+b)23)", params);
  CHECK(fam.same_structure(family_member(1, 1).sd.total));
}

TEST_CASE("shorthand rejects malformed and non-Lie input") {
  // "(0,0,12)" parses as the Heisenberg algebra; the wrong-arity rejection
  // lives in the CLI loader, which requires an even-dimensional splitting
  CHECK(parse_shorthand("(0,0,12)").dim() == 3);
  CHECK_THROWS_AS(parse_shorthand("0,0,0"), ParseError);
  CHECK_THROWS_AS(parse_shorthand("(0,0,0,xy,0,0)"), ParseError);
  CHECK_THROWS_AS(parse_shorthand("(0,0,0,11,0,0)"), ParseError);
  // de^1 = e^23 with de^2 = e^12: d(de^1) = e^123 != 0, not a Lie structure
  CHECK_THROWS_AS(parse_shorthand("(23,12,0)"), JacobiFailure);
}

TEST_CASE("shorthand round-trips through printing") {
  std::vector<std::string> cases = {
      "(0,0,0,12,13,34+25)", "(0,0,0,0,12,14+25)", "(0,0,0,-12,13,14)",
      "(0,0,0,12,0,14-23)",  "(0,0,0,0,0,0)",      "(0,0,0,1/212,13,-314+23)",
  };
  for (const auto& text : cases) {
    auto l = parse_shorthand(text);
    CHECK(parse_shorthand(print_shorthand(l)).same_structure(l));
  }
  for (const auto& e : catalog_entries()) {
    CHECK(parse_shorthand(print_shorthand(e.sd.total)).same_structure(e.sd.total));
  }
}

TEST_CASE("catalog entries expand to the expected shorthand") {
  CHECK(print_shorthand(catalog_entry("h3", BaseKind::abelian).sd.total) ==
        "(0,0,0,0,0,14-23)");
  CHECK(print_shorthand(catalog_entry("h6", BaseKind::heisenberg).sd.total) ==
        "(0,0,0,12,13,0)");
  CHECK(print_shorthand(catalog_entry("h17", BaseKind::abelian).sd.total) ==
        "(0,0,0,12,0,14)");
  CHECK(print_shorthand(catalog_entry("h19", BaseKind::heisenberg).sd.total) ==
        "(0,0,0,12,13,25+34)");
  CHECK_THROWS_AS(catalog_entry("h2", BaseKind::abelian), UnknownEntry);
  CHECK_THROWS_AS(catalog_entry("h4", BaseKind::abelian), UnknownEntry);
}

TEST_CASE("every catalog entry is nilpotent with stable fingerprints") {
  for (const auto& e : catalog_entries()) {
    CHECK(series_profile(e.sd.total).nilpotent());
    CHECK(fingerprint(e.sd.total) == fingerprint(e.sd.total));
  }
}

TEST_CASE("family closedness and integrability match the two linear conditions") {
  for (const Rat& a : {Rat(-2), Rat(0), Rat(1)})
    for (const Rat& b : {Rat(-1), Rat(1, 2), Rat(2)})
      for (const Rat& c : {Rat(0), Rat(1)})
        for (const Rat& d : {Rat(-1), Rat(2)}) {
          auto p = family_point(a, b, c, d);
          CHECK(is_closed(p.sd.total, p.omega) == (a + b + d == 0));
          CHECK(is_integrable(p.sd, p.J).integrable == (b - c - d == 0));
        }
}

TEST_CASE("loaded shorthand (0,0,0,12,13,14+23) is the h11 family type") {
  auto l = parse_shorthand("(0,0,0,12,13,14+23)");
  CHECK(fingerprint(l) == fingerprint(family_point(1, 1, 1, 1).sd.total));
}

TEST_CASE("dual table applied twice returns to the start") {
  for (const auto& claim : dual_table_claims()) {
    // find the dual of the dual name within the same block
    std::string back;
    for (const auto& other : dual_table_claims())
      if (other.name == claim.dual_name && other.base_kind == claim.base_kind)
        back = other.dual_name;
    CHECK(back == claim.name);
  }
}

TEST_CASE("curve report identifies the three rational representatives") {
  auto rep = curve_report({{Rat(1), Rat(0)}, {Rat(-1), Rat(1)}, {Rat(-2), Rat(1)}});
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.all_good());
  CHECK(rep.rows[0].evidence["identified"] == "h9");
  CHECK(rep.rows[1].evidence["identified"] == "h10");
  CHECK(rep.rows[2].evidence["identified"] == "h7");
}

TEST_CASE("generic curve points land on h11") {
  auto rep = curve_report({{Rat(1), Rat(1)}, {Rat(3), Rat(-1)}});
  CHECK(rep.all_good());
  for (const auto& r : rep.rows) CHECK(r.evidence["identified"] == "h11");
}
