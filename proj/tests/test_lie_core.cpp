#include <doctest.h>

#include <random>

#include "liemirror/catalog.hpp"
#include "liemirror/iso.hpp"
#include "liemirror/lie_algebra.hpp"
#include "liemirror/shorthand.hpp"

using namespace liemirror;

namespace {

MatQ random_invertible(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  for (;;) {
    MatQ m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Rat(num(rng), den(rng));
    if (!is_zero(det(m))) return m;
  }
}

}  // namespace

TEST_CASE("jacobi check accepts the catalog and locates corruption") {
  CHECK(check_jacobi(LieQ::abelian(6)).empty());
  CHECK(check_jacobi(heisenberg3()).empty());
  for (const auto& e : catalog_entries()) CHECK(check_jacobi(e.sd.total).empty());

  // flip one sign in h19's table; the (e1,e2,e3) cyclic sum breaks
  auto h19 = catalog_entry("h19", BaseKind::heisenberg).sd.total;
  auto table = h19.brackets();
  table[{0, 1}][3] = -table[{0, 1}][3];
  auto bad = LieQ::create_unchecked(6, table);
  auto violations = check_jacobi(bad);
  CHECK_FALSE(violations.empty());
  // brute-force cyclic-sum oracle over all triples of coordinate vectors
  int count = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        std::vector<Rat> x(6, Rat(0)), y(6, Rat(0)), z(6, Rat(0));
        x[i] = 1; y[j] = 1; z[k] = 1;
        auto s1 = bad.bracket(x, bad.bracket(y, z));
        auto s2 = bad.bracket(y, bad.bracket(z, x));
        auto s3 = bad.bracket(z, bad.bracket(x, y));
        bool nz = false;
        for (int t = 0; t < 6; ++t)
          if (!is_zero(s1[t] + s2[t] + s3[t])) nz = true;
        if (nz) ++count;
      }
  CHECK(count == static_cast<int>(violations.size()));
  CHECK_THROWS_AS(LieQ::create(6, table), JacobiFailure);
}

TEST_CASE("series profiles") {
  auto ab = series_profile(LieQ::abelian(6));
  CHECK(ab.lcs_dims == std::vector<int>{6, 0});
  CHECK(ab.center_dim == 6);
  CHECK(ab.nilpotent());

  // h11 as the family member with a,b,a+2b,a+b != 0
  auto p = family_member(1, 1);
  auto prof = series_profile(p.sd.total);
  CHECK(prof.derived_dim == 3);
  CHECK(prof.center_dim == 2);
  CHECK(prof.nilpotent());

  // four-dimensional [e1,e2] = -e3
  BracketTable<Rat> t;
  t[{0, 1}][2] = -1;
  auto four = LieQ::create(4, std::move(t));
  auto fp = series_profile(four);
  CHECK(fp.derived_dim == 1);
  CHECK(fp.center_dim == 2);

  // the solvable example is not nilpotent
  CHECK_FALSE(series_profile(solvable_example().sd.total).nilpotent());
}

TEST_CASE("CE differential on one-forms matches -a([x,y]) exactly") {
  auto l = catalog_entry("h9", BaseKind::abelian).sd.total;
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int t = 0; t < 20; ++t) {
    ExtQ alpha(6, 1);
    for (int i = 0; i < 6; ++i) alpha.add_term(1u << i, Rat(coeff(rng)));
    ExtQ da = ce_differential(l, alpha);
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        std::vector<Rat> x(6, Rat(0)), y(6, Rat(0));
        x[i] = 1; y[j] = 1;
        std::vector<std::vector<Rat>> xy = {x, y};
        Rat lhs = evaluate(da, xy);
        auto br = l.bracket(x, y);
        Rat rhs(0);
        for (int k = 0; k < 6; ++k) rhs += alpha.coefficient(1u << k) * br[k];
        CHECK(lhs + rhs == 0);
      }
  }
}

TEST_CASE("abelian one-forms are closed") {
  auto l = LieQ::abelian(5);
  ExtQ alpha = parse_form("e1+2e3-e5", 5);
  CHECK(ce_differential(l, alpha).is_zero());
}

TEST_CASE("h6 heisenberg entry reproduces de4 = e12, de5 = e13") {
  auto l = catalog_entry("h6", BaseKind::heisenberg).sd.total;
  CHECK(ce_differential_covector(l, 3) == parse_form("e12", 6));
  CHECK(ce_differential_covector(l, 4) == parse_form("e13", 6));
  CHECK(print_shorthand(l) == "(0,0,0,12,13,0)");
}

TEST_CASE("d of a two-form matches the triple-evaluation oracle on h9") {
  auto l = catalog_entry("h9", BaseKind::abelian).sd.total;
  ExtQ w = parse_form("e14", 6);
  ExtQ dw = ce_differential(l, w);
  for (int x = 0; x < 6; ++x)
    for (int y = x + 1; y < 6; ++y)
      for (int z = y + 1; z < 6; ++z) {
        std::vector<Rat> vx(6, Rat(0)), vy(6, Rat(0)), vz(6, Rat(0));
        vx[x] = 1; vy[y] = 1; vz[z] = 1;
        Rat lhs = evaluate(dw, {vx, vy, vz});
        auto cyc = [&](const std::vector<Rat>& p, const std::vector<Rat>& q,
                       const std::vector<Rat>& r) {
          auto br = l.bracket(p, q);
          std::vector<std::vector<Rat>> args = {br, r};
          return evaluate(w, args);
        };
        Rat rhs = -(cyc(vx, vy, vz) + cyc(vy, vz, vx) + cyc(vz, vx, vy));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("d composed with d vanishes in all degrees for every catalog entry") {
  for (const auto& e : catalog_entries()) {
    const auto& l = e.sd.total;
    for (int k = 0; k + 1 < l.dim(); ++k) {
      MatQ dd = ce_matrix(l, k + 1) * ce_matrix(l, k);
      CHECK(dd.is_zero_matrix());
    }
  }
}

TEST_CASE("ce_differential rejects top-degree input") {
  auto l = LieQ::abelian(3);
  ExtQ top = parse_form("e123", 3);
  CHECK_THROWS_AS(ce_differential(l, top), DegreeOverflow);
}

TEST_CASE("fingerprints separate h4 from h7 and are basis-change invariant") {
  auto h4 = catalog_entry("h4", BaseKind::heisenberg).sd.total;
  auto h7 = catalog_entry("h7", BaseKind::heisenberg).sd.total;
  CHECK_FALSE(fingerprint(h4) == fingerprint(h7));

  std::mt19937 rng(41);
  for (const auto& e : catalog_entries()) {
    auto fp = fingerprint(e.sd.total);
    for (int t = 0; t < 8; ++t) {
      MatQ w = random_invertible(rng, 6);
      CHECK(fingerprint(transport(e.sd.total, w)) == fp);
    }
  }
}

TEST_CASE("h9 built from its matrices equals the family member (1,0)") {
  auto cat = catalog_entry("h9", BaseKind::abelian).sd.total;
  auto fam = family_member(1, 0).sd.total;
  CHECK(cat.same_structure(fam));
  CHECK(fingerprint(cat) == fingerprint(fam));
}
