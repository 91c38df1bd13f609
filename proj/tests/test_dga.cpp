#include <doctest.h>

#include <random>

#include "liemirror/catalog.hpp"
#include "liemirror/dga.hpp"
#include "liemirror/structures.hpp"

using namespace liemirror;

namespace {

MixedElement vec_elem(int n, int i) {
  auto e = MixedElement::zero(n);
  e.vec[i] = CRat(1);
  return e;
}

MixedElement cov_elem(int n, int i) {
  auto e = MixedElement::zero(n);
  e.cov[i] = CRat(1);
  return e;
}

ExtC random_monomial(std::mt19937& rng, int n, int deg) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  uint32_t mask = 0;
  while (std::popcount(mask) < deg) mask |= 1u << pick(rng);
  ExtC e(n, deg);
  int re = coeff(rng), im = coeff(rng);
  if (re == 0 && im == 0) re = 1;
  e.add_term(mask, CRat(Rat(re), Rat(im)));
  return e;
}

}  // namespace

TEST_CASE("schouten bracket basics") {
  auto lc = complexify(catalog_entry("h9", BaseKind::abelian).sd.total);
  // two covectors commute
  auto r = schouten_bracket(lc, cov_elem(6, 1), cov_elem(6, 3));
  CHECK(r.is_zero());
  // two vectors give the ordinary bracket
  auto v = schouten_bracket(lc, vec_elem(6, 0), vec_elem(6, 1));
  CHECK(v.cov == MixedElement::zero(6).cov);
  CHECK(v.vec[3] == CRat(-1));  // [e1,e2] = -e4
}

TEST_CASE("the mixed schouten bracket reproduces the -2i v*([x,J.]) pattern") {
  auto s = mirror_row_structure("h9");
  auto lc = complexify(s.sd.total);
  auto jc = complexify(s.J);
  // a = (1-iJ)x with x = e1, b = (1-iJ)v* with v* = e2^*
  auto a = one_minus_ij(jc, vec_elem(6, 0));
  auto b = one_minus_ij(jc, cov_elem(6, 1));
  auto br = schouten_bracket(lc, a, b);
  for (const auto& c : br.vec) CHECK(is_zero(c));
  // evaluate the covector part on (1+iJ)y for basis y and compare with
  // -2i v*([x, Jy])
  for (int y = 0; y < 6; ++y) {
    auto w = vec_elem(6, y) + apply_j(jc, vec_elem(6, y)).scaled(CRat::i());
    CRat lhs(0);
    for (int i = 0; i < 6; ++i) lhs += br.cov[i] * w.vec[i];
    std::vector<Rat> ey(6, Rat(0));
    ey[y] = 1;
    auto jy = s.J.apply(ey);
    std::vector<Rat> x(6, Rat(0));
    x[0] = 1;
    auto bracket = s.sd.total.bracket(x, jy);
    CRat rhs = CRat(Rat(0), Rat(-2)) * CRat(bracket[1]);  // -2i v*([x,Jy])
    CHECK(lhs == rhs);
  }
}

TEST_CASE("abelian complex DGA: dbar = 0 and binomial Betti numbers") {
  auto s = abelian_structure(3);
  auto dga = build_complex_dga(s.sd, s.J);
  for (const auto& img : dga.dga.d1_images) CHECK(img.is_zero());
  CHECK(betti_numbers(dga.dga) == std::vector<int>{1, 6, 15, 20, 15, 6, 1});
}

TEST_CASE("complex DGA rejects non-integrable structures") {
  auto bad = family_point(1, 1, 1, -2);
  CHECK_THROWS_AS(build_complex_dga(bad.sd, bad.J), NotIntegrable);
}

TEST_CASE("dbar matches the direct Schouten-dualization oracle") {
  // Independent route: (Lambda^2 iota)(dbar g_m)(gbar_i, gbar_j) must equal
  // -iota(g_m)([gbar_i . gbar_j]) with iota = (i/2) * natural pairing.
  for (const char* name : {"4dim", "h9", "h11"}) {
    auto s = name == std::string("4dim") ? fourdim_structure() : mirror_row_structure(name);
    auto cd = build_complex_dga(s.sd, s.J);
    int n = cd.dga.gen_dim;
    const CRat sigma(Rat(0), Rat(1, 2));
    auto iota = [&](int m, const MixedElement& a) {
      return sigma * natural_pairing(cd.f1.basis[m], a);
    };
    MatC h(n, n);
    for (int m = 0; m < n; ++m)
      for (int k = 0; k < n; ++k) h(m, k) = iota(m, conj(cd.f1.basis[k]));
    for (int m = 0; m < n; ++m)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          auto gbar_i = conj(cd.f1.basis[i]);
          auto gbar_j = conj(cd.f1.basis[j]);
          CAPTURE(name);
          CRat rhs = -iota(m, schouten_bracket(cd.f1.ambient, gbar_i, gbar_j));
          CRat lhs(0);
          for (const auto& [mask, c] : cd.dga.d1_images[m].terms()) {
            int p = std::countr_zero(mask);
            int q = std::countr_zero(mask & (mask - 1));
            lhs += c * (h(p, i) * h(q, j) - h(p, j) * h(q, i));
          }
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("complex DGA differentials are antiderivations of wedge") {
  for (const char* name : {"h4", "h9", "h11"}) {
    auto s = mirror_row_structure(name);
    auto cd = build_complex_dga(s.sd, s.J);
    int n = cd.dga.gen_dim;
    std::mt19937 rng(99);
    auto d = [&](const ExtC& a) {
      auto dom = degree_masks(n, a.degree());
      std::vector<CRat> coords(dom.size(), CRat(0));
      std::map<uint32_t, int> idx;
      for (size_t i = 0; i < dom.size(); ++i) idx[dom[i]] = static_cast<int>(i);
      for (const auto& [m, c] : a.terms()) coords[idx[m]] = c;
      auto img = cd.dga.diff[a.degree()].apply(coords);
      auto cod = degree_masks(n, a.degree() + 1);
      ExtC out(n, a.degree() + 1);
      for (size_t i = 0; i < cod.size(); ++i) out.add_term(cod[i], img[i]);
      return out;
    };
    for (int t = 0; t < 10; ++t) {
      ExtC a = random_monomial(rng, n, 1 + t % 2);
      ExtC b = random_monomial(rng, n, 1 + (t / 2) % 2);
      ExtC lhs = d(wedge(a, b));
      ExtC rhs = wedge(d(a), b);
      ExtC snd = wedge(a, d(b));
      rhs = (a.degree() % 2 == 0) ? rhs + snd : rhs - snd;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("gerstenhaber extension satisfies graded Jacobi and Leibniz") {
  auto s = mirror_row_structure("h11");
  auto cd = build_complex_dga(s.sd, s.J);
  const auto& dga = cd.dga;
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    ExtC a = random_monomial(rng, 6, 1 + t % 2);
    ExtC b = random_monomial(rng, 6, 1 + (t / 2) % 2);
    ExtC c = random_monomial(rng, 6, 1 + (t / 4) % 2);
    int da = a.degree(), db = b.degree();
    // graded antisymmetry: [a.b] = -(-1)^{(|a|-1)(|b|-1)} [b.a]
    ExtC ab = gerstenhaber_bracket(dga, a, b);
    ExtC ba = gerstenhaber_bracket(dga, b, a);
    if (((da - 1) * (db - 1)) % 2 == 0)
      CHECK(ab == -ba);
    else
      CHECK(ab == ba);
    // right Leibniz
    ExtC lhs = gerstenhaber_bracket(dga, a, wedge(b, c));
    ExtC rhs = wedge(ab, c);
    ExtC snd = wedge(b, gerstenhaber_bracket(dga, a, c));
    rhs = (((da - 1) * db) % 2 == 0) ? rhs + snd : rhs - snd;
    CHECK(lhs == rhs);
    // graded Jacobi
    ExtC j1 = gerstenhaber_bracket(dga, a, gerstenhaber_bracket(dga, b, c));
    ExtC j2 = gerstenhaber_bracket(dga, ab, c);
    ExtC j3 = gerstenhaber_bracket(dga, b, gerstenhaber_bracket(dga, a, c));
    ExtC rhs2 = (((da - 1) * (db - 1)) % 2 == 0) ? j2 + j3 : j2 - j3;
    CHECK(j1 == rhs2);
  }
}

TEST_CASE("symplectic DGA basics and the scaling property") {
  auto ab = abelian_structure(2);
  auto dga = build_symplectic_dga(ab.sd.total, ab.omega);
  CHECK(dga.bracket.empty());
  for (const auto& img : dga.d1_images) CHECK(img.is_zero());

  auto s = solvable_example();
  auto dual = dual_semidirect(s.sd);
  MatQ wj = omega_from_j(s.sd, dual, s.J);
  auto sym = build_symplectic_dga(dual.product.total, wj);
  CHECK(betti_numbers(sym).size() == 7);

  // omega and 2 omega: differentials equal, brackets differ by 1/2
  auto two = build_symplectic_dga(dual.product.total, wj.scaled(Rat(2)));
  for (size_t k = 0; k < sym.diff.size(); ++k) CHECK(sym.diff[k] == two.diff[k]);
  for (const auto& [ij, comps] : sym.bracket)
    for (const auto& [k, c] : comps) {
      auto it = two.bracket.find(ij);
      REQUIRE(it != two.bracket.end());
      CHECK(it->second.at(k) == c * CRat(Rat(1, 2)));
    }
  CHECK_THROWS_AS(build_symplectic_dga(s.sd.total, MatQ(6, 6)), NotSymplectic);
}

TEST_CASE("phi is a Lie algebra isomorphism for the catalog structures") {
  for (const char* name : {"h1", "h4", "h7", "h8", "h9", "h10", "h11"}) {
    auto s = mirror_row_structure(name);
    auto dual = dual_semidirect(s.sd);
    auto cd = build_complex_dga(s.sd, s.J);
    CHECK_NOTHROW(phi_map(s.sd, dual, s.J, cd));
  }
  auto f = fourdim_structure();
  auto dual = dual_semidirect(f.sd);
  auto cd = build_complex_dga(f.sd, f.J);
  CHECK_NOTHROW(phi_map(f.sd, dual, f.J, cd));
}

TEST_CASE("pairing check returns exactly 2i") {
  std::vector<NamedStructure> cases = {abelian_structure(3), fourdim_structure(),
                                       solvable_example(),   h8_structure(),
                                       mirror_row_structure("h9"),
                                       mirror_row_structure("h11")};
  for (const auto& s : cases) {
    auto dual = dual_semidirect(s.sd);
    CHECK(pairing_check(s.sd, dual, s.J) == CRat(Rat(0), Rat(2)));
  }
}

TEST_CASE("mirror morphism is a DGA isomorphism on every catalog structure") {
  for (const char* name : {"h1", "h4", "h7", "h8", "h9", "h10", "h11"}) {
    CAPTURE(name);
    auto s = mirror_row_structure(name);
    auto dual = dual_semidirect(s.sd);
    auto cd = build_complex_dga(s.sd, s.J);
    MatQ wj = omega_from_j(s.sd, dual, s.J);
    auto sym = build_symplectic_dga(dual.product.total, wj);
    auto m = mirror_morphism(s.sd, dual, s.J, cd);
    auto res = verify_dga_isomorphism(cd.dga, sym, m);
    CHECK_MESSAGE(res.ok, res.failure);
    CHECK(res.bracket_constant == CRat(1));
    CHECK(betti_numbers(cd.dga) == betti_numbers(sym));
  }
}

TEST_CASE("identity is a DGA isomorphism") {
  auto s = mirror_row_structure("h9");
  auto cd = build_complex_dga(s.sd, s.J);
  DGAMorphism id{MatC::identity(6)};
  auto res = verify_dga_isomorphism(cd.dga, cd.dga, id);
  CHECK(res.ok);
}

TEST_CASE("non-mirror DGAs are refuted") {
  // complex DGA of the h4 structure vs symplectic DGA of h9's dual
  auto h4 = mirror_row_structure("h4");
  auto h9 = mirror_row_structure("h9");
  auto cd = build_complex_dga(h4.sd, h4.J);
  auto dual9 = dual_semidirect(h9.sd);
  MatQ wj9 = omega_from_j(h9.sd, dual9, h9.J);
  auto sym9 = build_symplectic_dga(dual9.product.total, wj9);
  bool distinguished = betti_numbers(cd.dga) != betti_numbers(sym9);
  if (!distinguished) {
    auto m = mirror_morphism(h4.sd, dual_semidirect(h4.sd), h4.J, cd);
    distinguished = !verify_dga_isomorphism(cd.dga, sym9, m).ok;
  }
  CHECK(distinguished);
}

TEST_CASE("mirror partners have equal Betti numbers; alternating sums vanish") {
  for (const char* name : {"h4", "h9", "h10"}) {
    auto s = mirror_row_structure(name);
    auto dual = dual_semidirect(s.sd);
    auto cd = build_complex_dga(s.sd, s.J);
    MatQ wj = omega_from_j(s.sd, dual, s.J);
    auto sym = build_symplectic_dga(dual.product.total, wj);
    auto b1 = betti_numbers(cd.dga), b2 = betti_numbers(sym);
    CHECK(b1 == b2);
    int alt = 0, sign = 1;
    for (int b : b1) {
      alt += sign * b;
      sign = -sign;
    }
    CHECK(alt == 0);
  }
}

TEST_CASE("the conjugate construction is conjugate-linearly isomorphic") {
  auto s = mirror_row_structure("h9");
  auto plus = build_complex_dga(s.sd, s.J);
  auto minus = build_complex_dga(s.sd, -s.J);  // f-bar of J is f^1 of -J
  CHECK(betti_numbers(plus.dga) == betti_numbers(minus.dga));
  // generators were seeded from the same real basis, so tables conjugate
  for (const auto& [ij, comps] : plus.dga.bracket)
    for (const auto& [k, c] : comps) {
      auto it = minus.dga.bracket.find(ij);
      REQUIRE(it != minus.dga.bracket.end());
      CHECK(it->second.at(k) == conj(c));
    }
}
