#include "liemirror/catalog.hpp"

#include "liemirror/shorthand.hpp"

namespace liemirror {

std::string to_string(BaseKind k) {
  return k == BaseKind::abelian ? "abelian" : "heisenberg";
}

LieQ heisenberg3() {
  BracketTable<Rat> b;
  b[{0, 1}][2] = -1;
  return LieQ::create(3, std::move(b), {"e1", "e3", "e5"});
}

namespace {

// -(strictly lower triangular matrix with the given subdiagonal entries):
// rows follow the displayed matrices on the ordered fiber basis {e2,e4,e6}.
MatQ rho_matrix(int m21, int m31, int m32) {
  MatQ m(3, 3);
  m(1, 0) = -m21;
  m(2, 0) = -m31;
  m(2, 1) = -m32;
  return m;
}

CatalogEntry make_entry(const std::string& name, BaseKind kind, MatQ r1, MatQ r3, MatQ r5) {
  Representation rho;
  rho.base = kind == BaseKind::abelian ? LieQ::abelian(3, {"e1", "e3", "e5"}) : heisenberg3();
  rho.fiber_dim = 3;
  rho.rho = {std::move(r1), std::move(r3), std::move(r5)};
  return {name, kind, build_semidirect(rho.base, rho)};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> v;
  const MatQ zero(3, 3);
  // abelian base
  v.push_back(make_entry("h3", BaseKind::abelian, rho_matrix(0, 0, 1), rho_matrix(0, 1, 0), zero));
  v.push_back(make_entry("h8", BaseKind::abelian, zero, rho_matrix(0, 1, 0), zero));
  v.push_back(make_entry("h6", BaseKind::abelian, rho_matrix(1, 0, 0), rho_matrix(0, 1, 0), zero));
  v.push_back(make_entry("h17", BaseKind::abelian, rho_matrix(1, 0, 1), zero, zero));
  v.push_back(make_entry("h9", BaseKind::abelian, rho_matrix(1, 0, 1), rho_matrix(0, 1, 0), zero));
  // Heisenberg base
  v.push_back(make_entry("h6", BaseKind::heisenberg, rho_matrix(1, 0, 0), zero, zero));
  v.push_back(
      make_entry("h7", BaseKind::heisenberg, rho_matrix(1, 0, 0), rho_matrix(0, 1, 0), zero));
  v.push_back(make_entry("h10", BaseKind::heisenberg, rho_matrix(1, 0, 1), zero, zero));
  v.push_back(
      make_entry("h11", BaseKind::heisenberg, rho_matrix(1, 0, 1), rho_matrix(0, 1, 0), zero));
  // h19 at (b, e, f) = (0, 1, 0): rho(e5) carries bd - ae = -1.
  v.push_back(make_entry("h19", BaseKind::heisenberg, rho_matrix(1, 0, 0), rho_matrix(0, 0, 1),
                         rho_matrix(0, -1, 0)));
  v.push_back(
      make_entry("h4", BaseKind::heisenberg, rho_matrix(0, 0, 1), rho_matrix(0, 1, 0), zero));
  v.push_back(make_entry("h8", BaseKind::heisenberg, zero, zero, zero));
  // the abelian algebra
  v.push_back(make_entry("h1", BaseKind::abelian, zero, zero, zero));
  return v;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name, BaseKind kind) {
  for (const auto& e : catalog_entries())
    if (e.name == name && e.base_kind == kind) return e;
  throw UnknownEntry("no catalog entry " + name + " with " + to_string(kind) + " base");
}

MatQ form_to_matrix(const ExtQ& w) {
  if (w.degree() != 2) throw DimensionMismatch("form_to_matrix: degree must be 2");
  int n = w.ambient_dim();
  MatQ b(n, n);
  for (const auto& [mask, c] : w.terms()) {
    int i = std::countr_zero(mask);
    int j = std::countr_zero(mask & (mask - 1));
    b(i, j) = c;
    b(j, i) = -c;
  }
  return b;
}

ExtQ matrix_to_form(const MatQ& b) {
  int n = b.rows();
  ExtQ w(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!is_zero(b(i, j))) w.add_term((1u << i) | (1u << j), b(i, j));
  return w;
}

MatQ standard_j(const SemidirectProduct& sd) {
  if (sd.base_dim() != sd.fiber_dim())
    throw DimensionMismatch("standard_j: base and fiber ranks differ");
  int n = sd.total.dim();
  MatQ j(n, n);
  for (int a = 0; a < sd.base_dim(); ++a) {
    j(sd.fiber_pos[a], sd.base_pos[a]) = 1;
    j(sd.base_pos[a], sd.fiber_pos[a]) = -1;
  }
  return j;
}

FamilyPoint family_point(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  FamilyPoint p;
  p.a = a;
  p.b = b;
  p.c = c;
  p.d = d;
  BracketTable<Rat> t;
  auto add = [&](int i, int j, int k, const Rat& v) {
    if (!is_zero(v)) t[{i, j}][k] = v;
  };
  // (0,0,0,a12,b13,c14+d23)
  add(0, 1, 3, -a);
  add(0, 2, 4, -b);
  add(0, 3, 5, -c);
  add(1, 2, 5, -d);
  LieQ total = LieQ::create(6, std::move(t));
  p.sd = wrap_semidirect(total, {0, 2, 4}, {1, 3, 5});
  p.J = standard_j(p.sd);
  p.omega = form_to_matrix(parse_form("e16-e25+e34", 6));
  return p;
}

FamilyPoint family_member(const Rat& a, const Rat& b) {
  return family_point(a, b, a + 2 * b, -(a + b));
}

SemidirectProduct rn_ltimes_rn(const std::vector<Rat>& rho_diag) {
  int n = static_cast<int>(rho_diag.size());
  Representation rho;
  rho.base = LieQ::abelian(n);
  rho.fiber_dim = n;
  for (int i = 0; i < n; ++i) {
    MatQ m(n, n);
    m(i, i) = rho_diag[i];
    rho.rho.push_back(std::move(m));
  }
  return build_semidirect(rho.base, rho);
}

MatQ diagonal_omega(const SemidirectProduct& sd, const std::vector<Rat>& a) {
  int n = sd.total.dim();
  MatQ b(n, n);
  for (int i = 0; i < sd.base_dim(); ++i) {
    b(sd.base_pos[i], sd.fiber_pos[i]) = a[i];
    b(sd.fiber_pos[i], sd.base_pos[i]) = -a[i];
  }
  return b;
}

NamedStructure abelian_structure(int half_dim) {
  NamedStructure s;
  s.name = half_dim == 3 ? "h1" : "abelian" + std::to_string(2 * half_dim);
  s.sd = rn_ltimes_rn(std::vector<Rat>(half_dim, Rat(0)));
  s.J = standard_j(s.sd);
  s.omega = diagonal_omega(s.sd, std::vector<Rat>(half_dim, Rat(1)));
  return s;
}

NamedStructure h8_structure() {
  NamedStructure s;
  s.name = "h8";
  s.sd = catalog_entry("h8", BaseKind::abelian).sd;
  int n = 6;
  // J e1 = e4, J e3 = e2, J e5 = e6.
  MatQ j(n, n);
  auto set_pair = [&](int from, int to) {
    j(to, from) = 1;
    j(from, to) = -1;
  };
  set_pair(0, 3);
  set_pair(2, 1);
  set_pair(4, 5);
  s.J = j;
  s.omega = form_to_matrix(parse_form("e14+e36-e25", 6));
  return s;
}

NamedStructure fourdim_structure() {
  NamedStructure s;
  s.name = "4dim";
  BracketTable<Rat> t;
  t[{0, 1}][2] = -1;  // [e1, e2] = -e3
  LieQ total = LieQ::create(4, std::move(t));
  s.sd = wrap_semidirect(total, {1, 3}, {0, 2});
  MatQ j(4, 4);
  // J e1 = e2, J e3 = e4
  j(1, 0) = 1;
  j(0, 1) = -1;
  j(3, 2) = 1;
  j(2, 3) = -1;
  s.J = j;
  s.omega = form_to_matrix(parse_form("e14-e23", 4));
  return s;
}

NamedStructure solvable_example() {
  NamedStructure s;
  s.name = "solv";
  BracketTable<Rat> base_t;
  base_t[{0, 1}][2] = -1;  // [e1, e3] = -e5
  base_t[{0, 2}][1] = 1;   // [e1, e5] = e3
  Representation rho;
  rho.base = LieQ::create(3, std::move(base_t), {"e1", "e3", "e5"});
  rho.fiber_dim = 3;
  MatQ g1(3, 3);
  g1(1, 2) = 1;
  g1(2, 1) = -1;
  rho.rho = {g1, MatQ(3, 3), MatQ(3, 3)};
  s.sd = build_semidirect(rho.base, rho);
  s.J = standard_j(s.sd);
  s.omega = form_to_matrix(parse_form("e12+e34+e56", 6));
  return s;
}

const std::vector<DualTableClaim>& dual_table_claims() {
  static const std::vector<DualTableClaim> claims = {
      {"h3", BaseKind::abelian, "h6"},      {"h6", BaseKind::abelian, "h3"},
      {"h8", BaseKind::abelian, "h8"},      {"h9", BaseKind::abelian, "h9"},
      {"h17", BaseKind::abelian, "h17"},    {"h4", BaseKind::heisenberg, "h7"},
      {"h6", BaseKind::heisenberg, "h6"},   {"h7", BaseKind::heisenberg, "h4"},
      {"h8", BaseKind::heisenberg, "h8"},   {"h10", BaseKind::heisenberg, "h10"},
      {"h11", BaseKind::heisenberg, "h11"}, {"h19", BaseKind::heisenberg, "h19"},
  };
  return claims;
}

const std::vector<MirrorClaim>& mirror_claims() {
  static const std::vector<MirrorClaim> claims = {
      {"h1", "h1", true},  {"h4", "h7", false},  {"h7", "h4", false}, {"h8", "h8", true},
      {"h9", "h9", true},  {"h10", "h10", true}, {"h11", "h11", false},
  };
  return claims;
}

NamedStructure mirror_row_structure(const std::string& name) {
  if (name == "h1") return abelian_structure(3);
  if (name == "h8") return h8_structure();
  auto from_family = [&](const Rat& a, const Rat& b) {
    FamilyPoint p = family_member(a, b);
    return NamedStructure{name, p.sd, p.J, p.omega};
  };
  if (name == "h9") return from_family(1, 0);
  if (name == "h4") return from_family(0, 1);
  if (name == "h10") return from_family(-1, 1);
  if (name == "h7") return from_family(-2, 1);
  if (name == "h11") return from_family(1, 1);
  throw UnknownEntry("no designated special Lagrangian structure for " + name);
}

}  // namespace liemirror
