#include <doctest.h>

#include "liemirror/catalog.hpp"
#include "liemirror/iso.hpp"
#include "liemirror/shorthand.hpp"

using namespace liemirror;

namespace {

// Witness whose i-th column is the stated image basis vector.
MatQ witness_columns(const std::vector<std::vector<Rat>>& cols) {
  int n = static_cast<int>(cols.size());
  MatQ w(n, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) w(r, c) = cols[c][r];
  return w;
}

std::vector<Rat> e(int n, int i, Rat s = Rat(1)) {
  std::vector<Rat> v(n, Rat(0));
  v[i] = s;
  return v;
}

}  // namespace

TEST_CASE("identity witness verifies on equal algebras") {
  auto a = catalog_entry("h9", BaseKind::abelian).sd.total;
  CHECK(verify_isomorphism(a, a, {MatQ::identity(6)}));
}

TEST_CASE("the new basis {e2,e1,e5,e3,-e4,-e6} of the (1,0) member satisfies h9") {
  // the witness carries the standard h9 presentation into the family member
  auto fam = family_member(1, 0).sd.total;
  auto h9std = parse_shorthand("(0,0,0,0,12,14+25)");
  MatQ w = witness_columns({e(6, 1), e(6, 0), e(6, 4), e(6, 2), e(6, 3, Rat(-1)),
                            e(6, 5, Rat(-1))});
  CHECK(verify_isomorphism(h9std, fam, {w}));
}

TEST_CASE("the new basis {e1,e3,e2,e4/2,e5,e6} of the (0,1) member satisfies h4") {
  auto fam = family_member(0, 1).sd.total;
  auto h4std = parse_shorthand("(0,0,0,0,12,14+23)");
  MatQ w = witness_columns({e(6, 0), e(6, 2), e(6, 1), e(6, 3, Rat(1, 2)), e(6, 4), e(6, 5)});
  CHECK(verify_isomorphism(h4std, fam, {w}));
}

TEST_CASE("rational representative of the h10 curve point") {
  // (-1, 1) with the sqrt2-free witness {e1,e2,e3,-e4,e5,-e6}
  auto a = family_member(-1, 1).sd.total;
  auto b = catalog_entry("h10", BaseKind::heisenberg).sd.total;
  MatQ w = witness_columns(
      {e(6, 0), e(6, 1), e(6, 2), e(6, 3, Rat(-1)), e(6, 4), e(6, 5, Rat(-1))});
  CHECK(verify_isomorphism(a, b, {w}));
}

TEST_CASE("rational representative of the h7 curve point") {
  auto a = family_member(-2, 1).sd.total;
  auto b = catalog_entry("h7", BaseKind::heisenberg).sd.total;
  MatQ w = witness_columns({e(6, 0), e(6, 1, Rat(-1, 2)), e(6, 2), e(6, 3, Rat(1, 4)),
                            e(6, 4), e(6, 5, Rat(1, 2))});
  CHECK(verify_isomorphism(a, b, {w}));
}

TEST_CASE("the h19 basis change from the reduction argument") {
  // (0,0,0,12,23,14+35) -> (0,0,0,12,13,34+25) via
  // {e2-e3, e1, e2+e3, -e4+e5, e4+e5, 2e6}
  auto a = parse_shorthand("(0,0,0,12,23,14+35)");
  auto b = parse_shorthand("(0,0,0,12,13,34+25)");
  std::vector<Rat> f1(6, Rat(0)), f3(6, Rat(0)), f4(6, Rat(0)), f5(6, Rat(0));
  f1[1] = 1;
  f1[2] = -1;
  f3[1] = 1;
  f3[2] = 1;
  f4[3] = -1;
  f4[4] = 1;
  f5[3] = 1;
  f5[4] = 1;
  MatQ w = witness_columns({f1, e(6, 0), f3, f4, f5, e(6, 5, Rat(2))});
  CHECK(verify_isomorphism(a, b, {w}));
  // and the catalog h19 entry is the right-hand presentation on the nose
  CHECK(catalog_entry("h19", BaseKind::heisenberg).sd.total.same_structure(b));
}

TEST_CASE("verified witnesses imply equal fingerprints") {
  auto a = family_member(1, 0).sd.total;
  auto b = parse_shorthand("(0,0,0,0,12,14+25)");
  CHECK(fingerprint(a) == fingerprint(b));
}

TEST_CASE("dimension mismatch throws") {
  auto a = LieQ::abelian(4);
  auto b = LieQ::abelian(6);
  CHECK_THROWS_AS(verify_isomorphism(a, b, {MatQ::identity(4)}), DimensionMismatch);
}

TEST_CASE("find_isomorphism returns the identity immediately on equal input") {
  auto a = catalog_entry("h11", BaseKind::heisenberg).sd.total;
  auto res = find_isomorphism(a, a);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->matrix == MatQ::identity(6));
  CHECK(res.candidates_examined == 1);
}

TEST_CASE("find_isomorphism identifies family members with catalog entries") {
  struct Row {
    Rat a, b;
    const char* name;
    BaseKind kind;
  };
  std::vector<Row> rows = {{Rat(1), Rat(0), "h9", BaseKind::abelian},
                           {Rat(0), Rat(1), "h4", BaseKind::heisenberg},
                           {Rat(-1), Rat(1), "h10", BaseKind::heisenberg},
                           {Rat(-2), Rat(1), "h7", BaseKind::heisenberg},
                           {Rat(1), Rat(1), "h11", BaseKind::heisenberg}};
  for (const auto& r : rows) {
    auto a = family_member(r.a, r.b).sd.total;
    auto b = catalog_entry(r.name, r.kind).sd.total;
    auto res = find_isomorphism(a, b);
    REQUIRE_MESSAGE(res.witness.has_value(), r.name);
    CHECK(verify_isomorphism(a, b, *res.witness));
  }
}

TEST_CASE("find_isomorphism is inconclusive but honest on non-isomorphic pairs") {
  auto a = catalog_entry("h4", BaseKind::heisenberg).sd.total;
  auto b = catalog_entry("h7", BaseKind::heisenberg).sd.total;
  auto res = find_isomorphism(a, b, {.budget = 50'000, .try_shears = false});
  CHECK_FALSE(res.witness.has_value());
  CHECK(res.fingerprint_mismatch);
}

TEST_CASE("transported algebras are found isomorphic to the original") {
  auto a = catalog_entry("h9", BaseKind::abelian).sd.total;
  MatQ s = MatQ::identity(6);
  s(0, 2) = Rat(1, 2);  // a shear the monomial tier cannot absorb alone
  auto b = transport(a, s);
  auto res = find_isomorphism(a, b);
  REQUIRE(res.witness.has_value());
  CHECK(verify_isomorphism(a, b, *res.witness));
}

TEST_CASE("seeded enumeration still finds witnesses") {
  auto a = family_member(1, 1).sd.total;
  auto b = catalog_entry("h11", BaseKind::heisenberg).sd.total;
  auto res = find_isomorphism(a, b, {.seed = 12345});
  REQUIRE(res.witness.has_value());
  CHECK(verify_isomorphism(a, b, *res.witness));
}
