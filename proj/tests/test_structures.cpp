#include <doctest.h>

#include <random>

#include "liemirror/catalog.hpp"
#include "liemirror/structures.hpp"

using namespace liemirror;

namespace {

std::vector<Rat> rand_vec(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<Rat> v(n);
  for (auto& x : v) x = Rat(c(rng));
  return v;
}

MatQ span_of(int n, std::initializer_list<int> idx) {
  MatQ m(n, static_cast<int>(idx.size()));
  int c = 0;
  for (int i : idx) m(i, c++) = 1;
  return m;
}

}  // namespace

TEST_CASE("nijenhuis vanishes on abelian algebras") {
  auto l = LieQ::abelian(4);
  MatQ j(4, 4);
  j(1, 0) = 1;
  j(0, 1) = -1;
  j(3, 2) = 1;
  j(2, 3) = -1;
  std::mt19937 rng(2);
  for (int t = 0; t < 10; ++t) {
    auto v = nijenhuis(l, j, rand_vec(rng, 4), rand_vec(rng, 4));
    for (const auto& c : v) CHECK(is_zero(c));
  }
}

TEST_CASE("nijenhuis vanishes on R^n x R^n with the standard J") {
  auto sd = rn_ltimes_rn({Rat(1), Rat(-2), Rat(3)});
  MatQ j = standard_j(sd);
  int n = 6;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<Rat> x(n, Rat(0)), y(n, Rat(0));
      x[a] = 1;
      y[b] = 1;
      auto v = nijenhuis(sd.total, j, x, y);
      for (const auto& c : v) CHECK(is_zero(c));
    }
}

TEST_CASE("nijenhuis identities N(x,y) = -N(y,x) and N(x,y) = J N(x,Jy)") {
  std::mt19937 rng(6);
  for (const char* name : {"h9", "h4", "h11"}) {
    auto s = mirror_row_structure(name);
    // perturb to a non-integrable member so identities are non-trivial
    auto p = family_point(1, 1, 1, 1);
    for (const auto& l : {s.sd.total, p.sd.total}) {
      const MatQ& j = s.J;
      for (int t = 0; t < 8; ++t) {
        auto x = rand_vec(rng, 6), y = rand_vec(rng, 6);
        auto nxy = nijenhuis(l, j, x, y);
        auto nyx = nijenhuis(l, j, y, x);
        auto njy = j.apply(nijenhuis(l, j, x, j.apply(y)));
        for (int i = 0; i < 6; ++i) {
          CHECK(nxy[i] == -nyx[i]);
          CHECK(nxy[i] == njy[i]);
        }
      }
    }
  }
}

TEST_CASE("integrability on the solvable example and the family") {
  auto s = solvable_example();
  CHECK(is_integrable(s.sd.total, s.J).integrable);
  CHECK(is_integrable(s.sd, s.J).integrable);

  auto good = family_point(1, 1, 3, -2);  // b-c-d = 0
  CHECK(is_integrable(good.sd, good.J).integrable);
  auto bad = family_point(1, 1, 1, -2);  // b-c-d = 2
  CHECK_FALSE(is_integrable(bad.sd, bad.J).integrable);
}

TEST_CASE("the base-pair reduction agrees with the full Nijenhuis sweep") {
  for (const auto& ab : {std::pair{Rat(1), Rat(2)}, {Rat(-1), Rat(3)}, {Rat(0), Rat(1)}})
    for (const auto& cd : {std::pair{Rat(1), Rat(0)}, {Rat(3), Rat(-3)}, {Rat(2), Rat(-1)}}) {
      auto p = family_point(ab.first, ab.second, cd.first, cd.second);
      CHECK(is_integrable(p.sd, p.J).integrable ==
            is_integrable(p.sd.total, p.J).integrable);
    }
}

TEST_CASE("closedness examples") {
  auto ab = LieQ::abelian(6);
  CHECK(is_closed(ab, form_to_matrix(parse_form("e12+e34+e56", 6))));

  auto s = solvable_example();
  CHECK(is_closed(s.sd.total, s.omega));

  auto p = family_point(1, 1, 3, 1);  // a+b+d = 3 != 0
  CHECK_FALSE(is_closed(p.sd.total, p.omega));
}

TEST_CASE("closedness agrees with the CE-differential route") {
  std::vector<std::pair<LieQ, MatQ>> cases;
  cases.push_back({solvable_example().sd.total, solvable_example().omega});
  cases.push_back({family_point(1, 1, 3, -2).sd.total, family_member(1, 1).omega});
  cases.push_back({family_point(1, 1, 3, 1).sd.total, family_member(1, 1).omega});
  cases.push_back({catalog_entry("h6", BaseKind::heisenberg).sd.total,
                   form_to_matrix(parse_form("e16+e25-e34", 6))});
  for (const auto& [l, w] : cases)
    CHECK(is_closed(l, w) == ce_differential(l, matrix_to_form(w)).is_zero());
}

TEST_CASE("non-degeneracy basics") {
  CHECK(is_nondegenerate(form_to_matrix(parse_form("e12+e34", 4))));
  CHECK_FALSE(is_nondegenerate(form_to_matrix(parse_form("e12", 4))));
  CHECK_THROWS_AS(is_nondegenerate(MatQ(3, 3)), OddDimension);
  // omega_a for nonzero tuples
  auto sd = rn_ltimes_rn({Rat(1), Rat(2), Rat(0)});
  CHECK(is_nondegenerate(diagonal_omega(sd, {Rat(2), Rat(-1), Rat(1, 2)})));
}

TEST_CASE("lagrangian and totally real subspaces of the family") {
  auto p = family_member(1, 1);
  MatQ odd = span_of(6, {0, 2, 4}), even = span_of(6, {1, 3, 5});
  CHECK(is_lagrangian(p.omega, odd));
  CHECK(is_lagrangian(p.omega, even));
  CHECK(is_totally_real(p.J, odd));
  CHECK(is_totally_real(p.J, even));
  MatQ mixed = span_of(6, {0, 1, 2});
  CHECK_FALSE(is_totally_real(p.J, mixed));  // J e1 = e2 lies inside
}

TEST_CASE("compatibility metric signatures") {
  auto fam = family_member(1, 1);
  auto m = compatibility_metric(fam.omega, fam.J);
  CHECK(m.sig == std::make_pair(4, 2));

  auto s = solvable_example();
  auto ms = compatibility_metric(s.omega, s.J);
  CHECK(ms.sig == std::make_pair(6, 0));

  // mixed-sign a_i: compatible, indefinite
  auto sd = rn_ltimes_rn({Rat(1), Rat(2)});
  auto w = diagonal_omega(sd, {Rat(1), Rat(-1)});
  auto mm = compatibility_metric(w, standard_j(sd));
  CHECK(mm.sig == std::make_pair(2, 2));

  // an incompatible pair: e14 pairs across the J-invariant blocks
  auto p2 = family_member(1, 0);
  MatQ bad = form_to_matrix(parse_form("e14+e23+e56", 6));
  CHECK_THROWS_AS(compatibility_metric(bad, p2.J), Incompatible);
}

TEST_CASE("metric symmetry and J-orthogonality") {
  auto fam = family_member(2, -3);
  auto m = compatibility_metric(fam.omega, fam.J);
  CHECK(m.G == m.G.transpose());
  CHECK(fam.J.transpose() * m.G * fam.J == m.G);
}

TEST_CASE("pseudo-Kahler family and counterexamples") {
  for (const auto& ab :
       {std::pair{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(2), Rat(5)}, {Rat(-7), Rat(3)}}) {
    auto p = family_member(ab.first, ab.second);
    CHECK(is_pseudo_kahler(p.sd.total, p.J, p.omega));
    CHECK(is_special_lagrangian(p.sd, p.J, p.omega));
  }
  auto abelian = abelian_structure(2);
  CHECK(is_pseudo_kahler(abelian.sd.total, abelian.J, abelian.omega));

  auto bad = family_point(1, 1, 3, 1);
  CHECK_FALSE(is_pseudo_kahler(bad.sd.total, bad.J, bad.omega));
}

TEST_CASE("special Lagrangian on the four-dimensional example") {
  auto f = fourdim_structure();
  CHECK(is_special_lagrangian(f.sd, f.J, f.omega));
  // same data with omega = e12 + e34 fails: the base is not Lagrangian
  MatQ w2 = form_to_matrix(parse_form("e12+e34", 4));
  CHECK_FALSE(is_special_lagrangian(f.sd, f.J, w2));
}

TEST_CASE("h8 explicit structure is special Lagrangian") {
  auto h8 = h8_structure();
  CHECK(is_special_lagrangian(h8.sd, h8.J, h8.omega));
}

TEST_CASE("volume form: n = 1 toy") {
  auto toy = abelian_structure(1);
  auto g = base_metric(toy.sd, compatibility_metric(toy.omega, toy.J).G);
  auto rep = volume_form_check(toy.sd, toy.J, g);
  CHECK(rep.applicable);
  CHECK(rep.re_zero);
  CHECK(rep.im_nonzero);
}

TEST_CASE("volume form: n = 3 family members") {
  for (const auto& ab : {std::pair{Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(-2), Rat(1)}}) {
    auto p = family_member(ab.first, ab.second);
    auto metric = compatibility_metric(p.omega, p.J);
    auto g = base_metric(p.sd, metric.G);
    auto rep = volume_form_check(p.sd, p.J, g);
    CHECK(rep.applicable);
    CHECK(rep.re_zero);
    CHECK(rep.im_nonzero);
  }
}

TEST_CASE("volume form: n = 2 reports inapplicable") {
  auto f = fourdim_structure();
  auto g = base_metric(f.sd, compatibility_metric(f.omega, f.J).G);
  auto rep = volume_form_check(f.sd, f.J, g);
  CHECK_FALSE(rep.applicable);
  // for even n the all-J term is real: the imaginary part restricts to zero
  CHECK(rep.restriction.im.is_zero());
}

TEST_CASE("volume form rejects a degenerate base metric") {
  auto f = fourdim_structure();
  CHECK_THROWS_AS(volume_form_check(f.sd, f.J, MatQ(2, 2)),
                  NonRationalOrthonormalization);
}
