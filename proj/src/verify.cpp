#include "liemirror/verify.hpp"

#include <sstream>

#include "liemirror/dga.hpp"
#include "liemirror/iso.hpp"
#include "liemirror/obstructions.hpp"
#include "liemirror/shorthand.hpp"

namespace liemirror {

namespace {

const std::vector<Rat>& nine_grid() {
  static const std::vector<Rat> g = {Rat(-2), Rat(-3, 2), Rat(-1), Rat(-1, 2), Rat(0),
                                     Rat(1, 2), Rat(1),  Rat(3, 2), Rat(2)};
  return g;
}

NamedStructure structure_by_name(const std::string& name) {
  if (name == "solv") return solvable_example();
  if (name == "4dim") return fourdim_structure();
  if (name == "abelian1") return abelian_structure(1);
  if (name == "abelian2") return abelian_structure(2);
  if (name == "h3") {
    NamedStructure s;
    s.name = "h3";
    s.sd = catalog_entry("h3", BaseKind::abelian).sd;
    s.J = standard_j(s.sd);
    s.omega = MatQ(6, 6);  // h3 carries no symplectic form; J-only row
    return s;
  }
  return mirror_row_structure(name);
}

NamedStructure structure_from_evidence(const Json& ev) {
  if (ev.contains("family")) {
    const auto& f = ev["family"];
    auto p = family_point(rat_from_json(f.at("a")), rat_from_json(f.at("b")),
                          rat_from_json(f.at("c")), rat_from_json(f.at("d")));
    return {"family", p.sd, p.J, p.omega};
  }
  return structure_by_name(ev.at("structure").get<std::string>());
}

Json family_evidence(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  Json f;
  f["a"] = to_string(a);
  f["b"] = to_string(b);
  f["c"] = to_string(c);
  f["d"] = to_string(d);
  return f;
}

std::string rat_str(const Rat& r) { return to_string(r); }

// ---------------------------------------------------------------- criterion 1

bool foundations_hold(const LieQ& l, bool expect_nilpotent) {
  if (!check_jacobi(l).empty()) return false;
  if (expect_nilpotent && !series_profile(l).nilpotent()) return false;
  for (int k = 0; k + 1 < l.dim(); ++k)
    if (!(ce_matrix(l, k + 1) * ce_matrix(l, k)).is_zero_matrix()) return false;
  return true;
}

}  // namespace

Report verify_foundations() {
  Report rep;
  rep.title = "Foundations: Jacobi, nilpotency, d.d = 0";
  for (const auto& e : catalog_entries()) {
    bool ok = foundations_hold(e.sd.total, true);
    Json ev;
    ev["kind"] = "foundations";
    ev["algebra"] = to_json(e.sd.total);
    ev["nilpotent"] = true;
    rep.add(e.name + " (" + to_string(e.base_kind) + ")",
            "Jacobi holds, nilpotent, d.d = 0 in all degrees",
            ok ? RowStatus::verified : RowStatus::refuted, ev);
  }
  return rep;
}

// ---------------------------------------------------------------- criterion 2

namespace {

bool correspondence_roundtrips(const NamedStructure& s) {
  if (!is_integrable(s.sd, s.J).integrable) return false;
  auto gamma = connection_from_complex(s.sd, s.J);
  auto chk = connection_check(gamma);
  if (!chk.flat || !chk.torsion_free) return false;
  // complex round trip
  auto built = complex_from_connection(gamma);
  auto gamma_back = connection_from_complex(built.product, built.J);
  for (size_t a = 0; a < gamma.gamma.size(); ++a)
    if (!(gamma_back.gamma[a] == gamma.gamma[a])) return false;
  // symplectic round trip
  auto lag = symplectic_from_connection(gamma);
  if (!is_closed(lag.product.total, lag.omega)) return false;
  auto gamma_sym = connection_from_symplectic(lag.product, lag.omega);
  for (size_t a = 0; a < gamma.gamma.size(); ++a)
    if (!(gamma_sym.gamma[a] == gamma.gamma[a])) return false;
  return true;
}

const std::vector<std::string>& integrable_structure_names() {
  static const std::vector<std::string> names = {"h1",  "h3",  "h4",   "h7",  "h8",
                                                 "h9",  "h10", "h11",  "4dim", "solv"};
  return names;
}

}  // namespace

Report verify_correspondences() {
  Report rep;
  rep.title = "Connections and structures: both round trips are identities";
  for (const auto& name : integrable_structure_names()) {
    auto s = structure_by_name(name);
    bool ok = correspondence_roundtrips(s);
    Json ev;
    ev["kind"] = "correspondence";
    ev["structure"] = name;
    rep.add(name, "gamma = -J rho J flat and torsion-free; complex and symplectic "
                  "round trips recover gamma",
            ok ? RowStatus::verified : RowStatus::refuted, ev);
  }
  return rep;
}

// ---------------------------------------------------------------- criterion 3

namespace {

bool duality_point_checks(const FamilyPoint& p, bool expect_closed, bool expect_integrable) {
  auto dual = dual_semidirect(p.sd);
  bool integrable = is_integrable(p.sd, p.J).integrable;
  if (integrable != expect_integrable) return false;
  MatQ wj = omega_from_j(p.sd, dual, p.J);
  if (is_closed(dual.product.total, wj) != integrable) return false;

  bool closed = is_closed(p.sd.total, p.omega);
  if (closed != expect_closed) return false;
  MatQ jw = j_from_omega(p.sd, dual, p.omega);
  if (is_integrable(dual.product.total, jw).integrable != closed) return false;
  return true;
}

bool lemma_inverse_roundtrip(const NamedStructure& s) {
  auto dual = dual_semidirect(s.sd);
  auto ddual = dual_semidirect(dual.product);
  MatQ phi = double_dual_identification(s.sd, dual, ddual);
  // phi*(J_{omega_J}) = J and phi*(omega_{J_omega}) = omega exactly
  MatQ wj = omega_from_j(s.sd, dual, s.J);
  MatQ j_back = j_from_omega(dual.product, ddual, wj);
  if (!(j_back * phi == phi * s.J)) return false;
  MatQ jw = j_from_omega(s.sd, dual, s.omega);
  MatQ w_back = omega_from_j(dual.product, ddual, jw);
  if (!(phi.transpose() * w_back * phi == s.omega)) return false;
  return true;
}

}  // namespace

Report verify_duality_formulas() {
  Report rep;
  rep.title = "omega_J closed iff J integrable; J_omega integrable iff omega closed";
  struct Probe {
    Rat a, b, c, d;
    bool closed, integrable;
  };
  std::vector<Probe> probes = {
      {Rat(1), Rat(1), Rat(3), Rat(-2), true, true},    // both constraints hold
      {Rat(2), Rat(-1), Rat(0), Rat(-1), true, true},
      {Rat(1), Rat(1), Rat(1), Rat(-2), true, false},   // integrability broken
      {Rat(1), Rat(1), Rat(0), Rat(1), false, true},    // closedness broken
      {Rat(1), Rat(2), Rat(4), Rat(0), false, false},
  };
  for (const auto& pr : probes) {
    auto p = family_point(pr.a, pr.b, pr.c, pr.d);
    bool ok = duality_point_checks(p, pr.closed, pr.integrable);
    Json ev;
    ev["kind"] = "duality_point";
    ev["family"] = family_evidence(pr.a, pr.b, pr.c, pr.d);
    ev["expect_closed"] = pr.closed;
    ev["expect_integrable"] = pr.integrable;
    rep.add("family(" + rat_str(pr.a) + "," + rat_str(pr.b) + "," + rat_str(pr.c) + "," +
                rat_str(pr.d) + ")",
            "closedness/integrability transfer along the duality exactly",
            ok ? RowStatus::verified : RowStatus::refuted, ev);
  }
  for (const char* name : {"h1", "h4", "h7", "h8", "h9", "h10", "h11", "4dim", "solv"}) {
    auto s = structure_by_name(name);
    bool ok = lemma_inverse_roundtrip(s);
    Json ev;
    ev["kind"] = "lemma_inverse";
    ev["structure"] = name;
    rep.add(name, "phi*(J_{omega_J}) = J and phi*(omega_{J_omega}) = omega",
            ok ? RowStatus::verified : RowStatus::refuted, ev);
  }
  return rep;
}

// ---------------------------------------------------------------- criterion 4

namespace {

bool family_cell_ok(const Rat& a, const Rat& b) {
  std::vector<std::pair<Rat, Rat>> cds = {
      {a + 2 * b, -(a + b)},          // both constraints hold
      {a + 2 * b + 1, -(a + b)},      // integrability off
      {a + 2 * b, -(a + b) + 1},      // both off through d
      {a + 2 * b - 1, -(a + b) - 1},  // both off
      {b - Rat(1, 2), Rat(1, 2) - a - b},
      {Rat(0), Rat(0)},
      {Rat(1), Rat(-1)},
  };
  for (const auto& [c, d] : cds) {
    auto p = family_point(a, b, c, d);
    bool closed = is_closed(p.sd.total, p.omega);
    bool integrable = is_integrable(p.sd, p.J).integrable;
    if (closed != (a + b + d == 0)) return false;
    if (integrable != (b - c - d == 0)) return false;
  }
  return true;
}

}  // namespace

Report verify_family_grid() {
  Report rep;
  rep.title = "Family constraints: closed iff a+b+d = 0, integrable iff b-c-d = 0";
  for (const Rat& a : nine_grid())
    for (const Rat& b : nine_grid()) {
      bool ok = family_cell_ok(a, b);
      Json ev;
      ev["kind"] = "family_cell";
      ev["a"] = rat_str(a);
      ev["b"] = rat_str(b);
      rep.add("(a,b) = (" + rat_str(a) + "," + rat_str(b) + ")",
              "both constraint equivalences hold over the (c,d) probes",
              ok ? RowStatus::verified : RowStatus::refuted, ev);
    }
  return rep;
}

// ---------------------------------------------------------------- criterion 5

Report verify_signatures() {
  Report rep;
  rep.title = "Metric signatures";
  for (const Rat& a : nine_grid())
    for (const Rat& b : nine_grid()) {
      auto p = family_member(a, b);
      auto m = compatibility_metric(p.omega, p.J);
      bool ok = m.sig == std::make_pair(4, 2);
      Json ev;
      ev["kind"] = "signature";
      ev["family"] = family_evidence(p.a, p.b, p.c, p.d);
      ev["expected"] = {4, 2};
      rep.add("family metric at (" + rat_str(a) + "," + rat_str(b) + ")",
              "g = omega(-, J-) has signature (4,2)",
              ok ? RowStatus::verified : RowStatus::refuted, ev);
    }
  auto s = solvable_example();
  auto m = compatibility_metric(s.omega, s.J);
  Json ev;
  ev["kind"] = "signature";
  ev["structure"] = "solv";
  ev["expected"] = {6, 0};
  rep.add("solvable example", "the metric is positive definite: signature (6,0)",
          m.sig == std::make_pair(6, 0) ? RowStatus::verified : RowStatus::refuted, ev);
  return rep;
}

// ---------------------------------------------------------------- criterion 6

Report reproduce_dual_table() {
  Report rep;
  rep.title = "Dual semi-direct products: the twelve table identifications";
  for (const auto& claim : dual_table_claims()) {
    const auto& entry = catalog_entry(claim.name, claim.base_kind);
    auto dual = dual_semidirect(entry.sd);
    const auto& target = catalog_entry(claim.dual_name, claim.base_kind).sd.total;
    auto res = find_isomorphism(dual.product.total, target);
    Json ev;
    ev["kind"] = "dual_table_row";
    ev["name"] = claim.name;
    ev["base_kind"] = to_string(claim.base_kind);
    ev["dual_name"] = claim.dual_name;
    ev["dual_algebra"] = to_json(dual.product.total);
    ev["target"] = to_json(target);
    RowStatus status = RowStatus::witness_not_found;
    if (res.witness) {
      ev["witness"] = to_json(res.witness->matrix);
      status = RowStatus::verified;
      // cross-check: the other same-kind entries must not share the print
      for (const auto& other : catalog_entries())
        if (other.base_kind == claim.base_kind && other.name != claim.dual_name &&
            other.name != "h1" &&
            fingerprint(other.sd.total) == fingerprint(dual.product.total) &&
            find_isomorphism(dual.product.total, other.sd.total).witness)
          status = RowStatus::refuted;  // ambiguous identification
    }
    rep.add(claim.name + " (" + to_string(claim.base_kind) + ")",
            "dual semi-direct product is isomorphic to " + claim.dual_name, status, ev);
  }

  // The explicit bases quoted for the family identifications.
  struct PaperWitness {
    const char* label;
    const char* source;       // shorthand of the source presentation
    Rat fa, fb;               // family member the basis lives in
    std::vector<std::vector<Rat>> cols;
  };
  auto col = [](std::initializer_list<std::pair<int, Rat>> entries) {
    std::vector<Rat> v(6, Rat(0));
    for (const auto& [i, c] : entries) v[i] = c;
    return v;
  };
  std::vector<PaperWitness> witnesses;
  witnesses.push_back({"h9 basis {e2,e1,e5,e3,-e4,-e6}", "(0,0,0,0,12,14+25)", Rat(1), Rat(0),
                       {col({{1, Rat(1)}}), col({{0, Rat(1)}}), col({{4, Rat(1)}}),
                        col({{2, Rat(1)}}), col({{3, Rat(-1)}}), col({{5, Rat(-1)}})}});
  witnesses.push_back({"h4 basis {e1,e3,e2,e4/2,e5,e6}", "(0,0,0,0,12,14+23)", Rat(0), Rat(1),
                       {col({{0, Rat(1)}}), col({{2, Rat(1)}}), col({{1, Rat(1)}}),
                        col({{3, Rat(1, 2)}}), col({{4, Rat(1)}}), col({{5, Rat(1)}})}});
  witnesses.push_back({"h10 basis {e1,e2,e3,-e4,e5,-e6} (rational curve point)", "",
                       Rat(-1), Rat(1),
                       {col({{0, Rat(1)}}), col({{1, Rat(1)}}), col({{2, Rat(1)}}),
                        col({{3, Rat(-1)}}), col({{4, Rat(1)}}), col({{5, Rat(-1)}})}});
  witnesses.push_back({"h7 basis {e1,-e2/2,e3,e4/4,e5,e6/2} (rational curve point)", "",
                       Rat(-2), Rat(1),
                       {col({{0, Rat(1)}}), col({{1, Rat(-1, 2)}}), col({{2, Rat(1)}}),
                        col({{3, Rat(1, 4)}}), col({{4, Rat(1)}}), col({{5, Rat(1, 2)}})}});
  for (const auto& w : witnesses) {
    MatQ m(6, 6);
    for (int c = 0; c < 6; ++c)
      for (int r = 0; r < 6; ++r) m(r, c) = w.cols[c][r];
    auto fam = family_member(w.fa, w.fb).sd.total;
    bool ok;
    Json ev;
    ev["kind"] = "explicit_witness";
    ev["witness"] = to_json(m);
    if (w.source[0] != '\0') {
      // the quoted basis carries the standard presentation into the family
      auto src = parse_shorthand(w.source);
      ok = verify_isomorphism(src, fam, {m});
      ev["source_shorthand"] = w.source;
      ev["target"] = to_json(fam);
    } else {
      // rational representatives map the family member onto the catalog entry
      const char* name = w.fb == Rat(1) && w.fa == Rat(-1) ? "h10" : "h7";
      auto target = catalog_entry(name, BaseKind::heisenberg).sd.total;
      ok = verify_isomorphism(fam, target, {m});
      ev["source"] = to_json(fam);
      ev["target"] = to_json(target);
    }
    ev["family"] = family_evidence(w.fa, w.fb, w.fa + 2 * w.fb, -(w.fa + w.fb));
    rep.add(w.label, "explicit basis change verifies exactly",
            ok ? RowStatus::verified : RowStatus::refuted, ev);
  }
  {
    // h19 reduction basis {e2-e3, e1, e2+e3, -e4+e5, e4+e5, 2e6}
    auto a = parse_shorthand("(0,0,0,12,23,14+35)");
    auto b = parse_shorthand("(0,0,0,12,13,34+25)");
    MatQ m(6, 6);
    m(1, 0) = 1;
    m(2, 0) = -1;
    m(0, 1) = 1;
    m(1, 2) = 1;
    m(2, 2) = 1;
    m(3, 3) = -1;
    m(4, 3) = 1;
    m(3, 4) = 1;
    m(4, 4) = 1;
    m(5, 5) = 2;
    bool ok = verify_isomorphism(a, b, {m}) &&
              catalog_entry("h19", BaseKind::heisenberg).sd.total.same_structure(b);
    Json ev;
    ev["kind"] = "explicit_witness";
    ev["witness"] = to_json(m);
    ev["source"] = to_json(a);
    ev["target"] = to_json(b);
    rep.add("h19 basis {e2-e3, e1, e2+e3, -e4+e5, e4+e5, 2e6}",
            "carries (0,0,0,12,23,14+35) onto the h19 entry",
            ok ? RowStatus::verified : RowStatus::refuted, ev);
  }
  return rep;
}

// ---------------------------------------------------------------- criterion 7

Report mirror_theorem_report() {
  Report rep;
  rep.title = "Mirror images of the special Lagrangian algebras";
  for (const auto& claim : mirror_claims()) {
    auto s = mirror_row_structure(claim.name);
    auto dual = dual_semidirect(s.sd);
    bool sl_here = is_special_lagrangian(s.sd, s.J, s.omega);
    MatQ wj = omega_from_j(s.sd, dual, s.J);
    MatQ jw = j_from_omega(s.sd, dual, s.omega);
    bool sl_dual = is_special_lagrangian(dual.product, jw, wj);

    // duals preserve the base kind, so the identification target carries the
    // same kind as the designated structure
    BaseKind kind = s.sd.base.brackets().empty() ? BaseKind::abelian : BaseKind::heisenberg;
    auto target = catalog_entry(claim.mirror_name, kind).sd.total;
    auto ident = find_isomorphism(dual.product.total, target);

    Json ev;
    ev["kind"] = "mirror_row";
    ev["structure"] = claim.name;
    ev["mirror"] = claim.mirror_name;
    ev["self_mirror"] = claim.self_mirror;
    RowStatus status = RowStatus::verified;
    if (!sl_here || !sl_dual) status = RowStatus::refuted;
    if (!ident.witness)
      status = RowStatus::witness_not_found;
    else
      ev["identification_witness"] = to_json(ident.witness->matrix);
    if (claim.self_mirror && status == RowStatus::verified) {
      auto self = find_isomorphism(s.sd.total, dual.product.total);
      if (!self.witness)
        status = RowStatus::witness_not_found;
      else
        ev["self_mirror_witness"] = to_json(self.witness->matrix);
    }
    rep.add(claim.name,
            "(omega_J, J_omega) special Lagrangian on the dual; dual isomorphic to " +
                claim.mirror_name,
            status, ev);
    if (claim.name == "h11") {
      Json note;
      note["kind"] = "external_citation";
      note["statement"] =
          "the two pseudo-Kahler structures on h11 and its mirror are inequivalent";
      rep.add("h11 structures",
              "inequivalence of the two pseudo-Kahler structures rests on a moduli "
              "argument from the literature; beyond witness search here",
              RowStatus::external_citation, note);
    }
  }
  return rep;
}

// ---------------------------------------------------------------- criterion 8

namespace {

const std::vector<std::string>& sl_structure_names() {
  static const std::vector<std::string> names = {"h1",  "h4",  "h7",  "h8",  "h9",
                                                 "h10", "h11", "4dim", "solv"};
  return names;
}

struct DGACertificate {
  bool ok = false;
  CRat lambda;
  CRat bracket_constant;
  std::vector<int> betti;
  std::string failure;
};

DGACertificate dga_certificate(const NamedStructure& s) {
  DGACertificate cert;
  auto dual = dual_semidirect(s.sd);
  auto cd = build_complex_dga(s.sd, s.J);
  phi_map(s.sd, dual, s.J, cd);  // throws BracketMismatch on failure
  cert.lambda = pairing_check(s.sd, dual, s.J);
  MatQ wj = omega_from_j(s.sd, dual, s.J);
  auto sym = build_symplectic_dga(dual.product.total, wj);
  auto m = mirror_morphism(s.sd, dual, s.J, cd);
  auto res = verify_dga_isomorphism(cd.dga, sym, m);
  cert.bracket_constant = res.bracket_constant;
  cert.failure = res.failure;
  cert.betti = betti_numbers(cd.dga);
  cert.ok = res.ok && cert.lambda == CRat(Rat(0), Rat(2)) &&
            cert.betti == betti_numbers(sym);
  return cert;
}

}  // namespace

Report verify_dga_certificates() {
  Report rep;
  rep.title = "DGA certificates: phi, the 2i pairing, isomorphism, Betti numbers";
  for (const auto& name : sl_structure_names()) {
    auto s = structure_by_name(name);
    DGACertificate cert;
    std::string failure;
    try {
      cert = dga_certificate(s);
    } catch (const Error& e) {
      failure = e.what();
    }
    Json ev;
    ev["kind"] = "dga_certificate";
    ev["structure"] = name;
    if (cert.ok) {
      ev["lambda"] = to_string(cert.lambda);
      ev["betti"] = cert.betti;
      ev["bracket_constant"] = to_string(cert.bracket_constant);
    } else {
      ev["failure"] = failure.empty() ? cert.failure : failure;
    }
    rep.add(name,
            "phi is a bracket isomorphism, the pairing constant is exactly 2i, the "
            "mirror morphism is a DGA isomorphism, Betti numbers agree",
            cert.ok ? RowStatus::verified : RowStatus::refuted, ev);
  }
  return rep;
}

// ---------------------------------------------------------------- criterion 9

Report obstruction_reports() {
  Report rep;
  rep.title = "Obstruction certificates";
  {
    auto h3 = catalog_entry("h3", BaseKind::abelian).sd.total;
    auto cert = no_symplectic_certificate(h3);
    bool ok = cert && check_no_symplectic_certificate(h3, *cert);
    Json ev;
    ev["kind"] = "no_symplectic";
    ev["algebra"] = to_json(h3);
    if (cert) {
      Json rad = Json::array();
      for (const auto& x : cert->radical) rad.push_back(to_string(x));
      ev["radical"] = rad;
      ev["closed_dim"] = cert->closed_dim;
    }
    rep.add("h3", "every closed two-form is degenerate (common radical certificate)",
            ok ? RowStatus::verified : RowStatus::refuted, ev);
  }
  {
    auto sweep = h6_special_lagrangian_sweep();
    bool ok = sweep.complete_on_sample && sweep.candidates > 0 &&
              sweep.all_degenerate == sweep.candidates && sweep.pattern_failures == 0;
    Json ev;
    ev["kind"] = "h6_sweep";
    ev["candidates"] = sweep.candidates;
    ev["all_degenerate"] = sweep.all_degenerate;
    ev["pattern_failures"] = sweep.pattern_failures;
    ev["complete_on_sample"] = sweep.complete_on_sample;
    rep.add("h6 (heisenberg base)",
            "every height-<=2 integrable totally real J forces b43 = b52 = b54 = b56 = 0 "
            "and a degenerate form",
            ok ? RowStatus::verified : RowStatus::refuted, ev);
  }
  {
    Json ev;
    ev["kind"] = "external_citation";
    ev["statement"] = "h17 admits no complex structure at all";
    rep.add("h17",
            "non-existence of complex structures is a known classification result; "
            "recorded, not re-proved",
            RowStatus::external_citation, ev);
  }
  return rep;
}

// --------------------------------------------------------------- criterion 10

namespace {

bool h1_diagonal_sweep(int n) {
  std::vector<Rat> rho(n, Rat(0));
  for (int i = 0; i < n && i < 2; ++i) rho[i] = Rat(i + 1);
  auto sd = rn_ltimes_rn(rho);
  MatQ j = standard_j(sd);
  std::vector<std::vector<Rat>> tuples = {
      std::vector<Rat>(n, Rat(1)),
      std::vector<Rat>(n, Rat(-2)),
  };
  {
    std::vector<Rat> mixed(n, Rat(1, 2));
    mixed[0] = Rat(-3);
    tuples.push_back(mixed);
    std::vector<Rat> other(n, Rat(2));
    other[n - 1] = Rat(5, 3);
    tuples.push_back(other);
  }
  for (const auto& a : tuples) {
    MatQ w = diagonal_omega(sd, a);
    if (!is_closed(sd.total, w) || !is_nondegenerate(w)) return false;
    auto m = compatibility_metric(w, j);
    bool same_sign = true;
    for (const auto& x : a) same_sign = same_sign && ((x > 0) == (a[0] > 0));
    bool definite = m.sig.first == 2 * n || m.sig.second == 2 * n;
    if (definite != same_sign) return false;
  }
  return true;
}

}  // namespace

Report verify_examples() {
  Report rep;
  rep.title = "Worked examples";
  for (int n : {2, 3, 4}) {
    bool ok = h1_diagonal_sweep(n);
    Json ev;
    ev["kind"] = "h1_sweep";
    ev["n"] = n;
    rep.add("R^" + std::to_string(n) + " x R^" + std::to_string(n),
            "omega_a is symplectic for nonzero tuples; Kahler iff all a_i share a sign",
            ok ? RowStatus::verified : RowStatus::refuted, ev);
  }
  {
    auto s = solvable_example();
    auto dual = dual_semidirect(s.sd);
    MatQ wj = omega_from_j(s.sd, dual, s.J);
    MatQ jw = j_from_omega(s.sd, dual, s.omega);
    bool kahler = compatibility_metric(s.omega, s.J).sig == std::make_pair(6, 0) &&
                  is_pseudo_kahler(s.sd.total, s.J, s.omega);
    std::string eqs = structure_equations(dual.product.total);
    std::string omega_text = to_string(matrix_to_form(wj));
    std::ostringstream jmap;
    for (int a = 0; a < 3; ++a) {
      if (a) jmap << ", ";
      int from = dual.product.base_pos[a];
      int to = -1;
      for (int p = 0; p < 6; ++p)
        if (!is_zero(jw(p, from))) to = p;
      jmap << "J(" << dual.product.total.label(from) << ")="
           << (jw(to, from) == 1 ? "" : to_string(jw(to, from))) << dual.product.total.label(to);
    }
    const std::string expected_eqs =
        "[e1,e3]=-e5, [e1,e^4]=-e^6, [e1,e5]=e3, [e1,e^6]=e^4";
    const std::string expected_omega = "e12+e34+e56";
    const std::string expected_jmap = "J(e1)=e^2, J(e3)=e^4, J(e5)=e^6";
    bool ok = kahler && eqs == expected_eqs && omega_text == expected_omega &&
              jmap.str() == expected_jmap && is_closed(dual.product.total, wj);
    Json ev;
    ev["kind"] = "solv_pipeline";
    ev["structure_equations"] = eqs;
    ev["omega_J"] = omega_text;
    ev["J_omega"] = jmap.str();
    ev["expected_structure_equations"] = expected_eqs;
    ev["expected_omega_J"] = expected_omega;
    ev["expected_J_omega"] = expected_jmap;
    rep.add("solvable example",
            "Kahler pair; dual structure equations, omega_J and J_omega match the "
            "frozen displays exactly",
            ok ? RowStatus::verified : RowStatus::refuted, ev);

    // The sign-variant equations with [e1,e^4] = e^6, [e1,e^6] = -e^4 do not
    // cooperate: omega_J fails to close on that algebra.
    BracketTable<Rat> variant = dual.product.total.brackets();
    variant[{0, 3}] = {{5, Rat(1)}};
    variant[{0, 5}] = {{3, Rat(-1)}};
    auto variant_alg = LieQ::create(6, variant, dual.product.total.labels());
    bool variant_fails = !is_closed(variant_alg, wj);
    Json ev2;
    ev2["kind"] = "solv_variant";
    ev2["variant"] = to_json(variant_alg);
    rep.add("solvable example (sign variant)",
            "flipping the dual fiber action signs breaks closedness of omega_J, "
            "pinning the corrected structure equations",
            variant_fails ? RowStatus::verified : RowStatus::refuted, ev2);
  }
  {
    // the four-dimensional self-mirror certificate with structure transport
    auto f = fourdim_structure();
    auto dual = dual_semidirect(f.sd);
    MatQ wj = omega_from_j(f.sd, dual, f.J);
    MatQ jw = j_from_omega(f.sd, dual, f.omega);
    IsoSearchOptions opts;
    opts.accept = [&](const MatQ& w) {
      return w * f.J == jw * w && w.transpose() * wj * w == f.omega;
    };
    auto res = find_isomorphism(f.sd.total, dual.product.total, opts);
    Json ev;
    ev["kind"] = "fourdim_self_mirror";
    RowStatus status = RowStatus::witness_not_found;
    if (res.witness) {
      ev["witness"] = to_json(res.witness->matrix);
      status = RowStatus::verified;
    }
    rep.add("4-dim example",
            "the mirror (dual, J_omega, omega_J) is isomorphic to (h, J, omega) itself",
            status, ev);
  }
  return rep;
}

// --------------------------------------------------------------- criterion 11

Report verify_volume_forms() {
  Report rep;
  rep.title = "Complex volume forms on the fibers";
  auto row = [&](const std::string& label, const NamedStructure& s, Json extra) {
    auto g = base_metric(s.sd, compatibility_metric(s.omega, s.J).G);
    auto r = volume_form_check(s.sd, s.J, g);
    Json ev = std::move(extra);
    ev["kind"] = "volume";
    ev["n"] = r.n;
    ev["restriction"] = to_string(r.restriction);
    bool ok = r.applicable ? (r.re_zero && r.im_nonzero) : true;
    std::string claim = r.applicable
                            ? "Re Phi restricts to zero on the fiber, Im Phi to a volume"
                            : "n is even: the odd-n assertion does not apply (reported)";
    rep.add(label, claim, ok ? RowStatus::verified : RowStatus::refuted, ev);
  };
  for (const auto& ab : std::vector<std::pair<Rat, Rat>>{
           {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(1)}, {Rat(-2), Rat(1)},
           {Rat(1), Rat(1)}}) {
    auto p = family_member(ab.first, ab.second);
    Json extra;
    extra["family"] = family_evidence(p.a, p.b, p.c, p.d);
    row("family (" + rat_str(ab.first) + "," + rat_str(ab.second) + ")",
        {"family", p.sd, p.J, p.omega}, extra);
  }
  Json e1;
  e1["structure"] = "abelian1";
  row("n = 1 toy", abelian_structure(1), e1);
  Json e2;
  e2["structure"] = "4dim";
  row("n = 2 example", fourdim_structure(), e2);
  return rep;
}

// --------------------------------------------------------------- criterion 12

namespace {

bool scaling_law_holds(const Rat& a, const Rat& b, const Rat& s, int eps) {
  auto p = family_member(a, b);
  MatQ psi(6, 6);
  psi(0, 0) = s;
  psi(1, 1) = s;
  psi(2, 2) = eps;
  psi(3, 3) = eps;
  psi(4, 4) = 1 / s;
  psi(5, 5) = 1 / s;
  // psi preserves J and omega
  if (!(psi * p.J == p.J * psi)) return false;
  if (!(psi.transpose() * p.omega * psi == p.omega)) return false;
  auto transported = transport(p.sd.total, psi);
  Rat s2 = s * s;
  auto expect = family_member(Rat(eps) * a / s2, Rat(eps) * b / s2).sd.total;
  return transported.same_structure(expect);
}

}  // namespace

Report verify_scaling_law() {
  Report rep;
  rep.title = "Diagonal scaling transports (a,b) to +-(a,b)/s^2";
  std::vector<std::pair<Rat, Rat>> pts = {{Rat(1), Rat(1)}, {Rat(2), Rat(-1)}, {Rat(1), Rat(3)}};
  std::vector<Rat> scales = {Rat(1), Rat(2), Rat(3), Rat(1, 2)};
  for (const auto& [a, b] : pts)
    for (const Rat& s : scales)
      for (int eps : {1, -1}) {
        bool ok = scaling_law_holds(a, b, s, eps);
        Json ev;
        ev["kind"] = "scaling";
        ev["a"] = rat_str(a);
        ev["b"] = rat_str(b);
        ev["s"] = rat_str(s);
        ev["eps"] = eps;
        rep.add("(a,b) = (" + rat_str(a) + "," + rat_str(b) + "), s = " + rat_str(s) +
                    ", sign " + (eps > 0 ? "+" : "-"),
                "psi = diag(s,s,e,e,1/s,1/s) transports the bracket parameters to "
                "+-(a,b)/s^2 and preserves J and omega",
                ok ? RowStatus::verified : RowStatus::refuted, ev);
      }
  return rep;
}

// ------------------------------------------------------------------ curve

Report curve_report(const std::vector<CurvePointSpec>& points, unsigned seed) {
  Report rep;
  rep.title = "Curve of special Lagrangian structures";
  for (const auto& pt : points) {
    auto p = family_member(pt.a, pt.b);
    bool sl = is_special_lagrangian(p.sd, p.J, p.omega);
    // identification against the catalog by fingerprint shortlist
    std::string identified = "";
    MatQ witness(6, 6);
    auto fp = fingerprint(p.sd.total);
    for (const auto& e : catalog_entries()) {
      if (e.sd.total.dim() != 6 || e.name == "h1") continue;
      if (!(fingerprint(e.sd.total) == fp)) continue;
      IsoSearchOptions opts;
      opts.seed = seed;
      auto res = find_isomorphism(p.sd.total, e.sd.total, opts);
      if (res.witness) {
        identified = e.name;
        witness = res.witness->matrix;
        break;
      }
    }
    bool scaling = true;
    for (const Rat& s : {Rat(2), Rat(1, 2)})
      for (int eps : {1, -1}) scaling = scaling && scaling_law_holds(pt.a, pt.b, s, eps);
    Json ev;
    ev["kind"] = "curve_point";
    ev["family"] = family_evidence(p.a, p.b, p.c, p.d);
    ev["identified"] = identified;
    if (!identified.empty()) ev["witness"] = to_json(witness);
    RowStatus status = RowStatus::verified;
    if (!sl || !scaling) status = RowStatus::refuted;
    if (identified.empty()) status = RowStatus::witness_not_found;
    rep.add("(a,b) = (" + rat_str(pt.a) + "," + rat_str(pt.b) + ")",
            "special Lagrangian; identified as " +
                (identified.empty() ? std::string("<none>") : identified) +
                "; scaling law verified",
            status, ev);
  }
  return rep;
}

Report verify_all(unsigned seed) {
  (void)seed;
  Report rep;
  rep.title = "Full verification suite";
  rep.append(verify_foundations());
  rep.append(verify_correspondences());
  rep.append(verify_duality_formulas());
  rep.append(verify_family_grid());
  rep.append(verify_signatures());
  rep.append(reproduce_dual_table());
  rep.append(mirror_theorem_report());
  rep.append(verify_dga_certificates());
  rep.append(obstruction_reports());
  rep.append(verify_examples());
  rep.append(verify_volume_forms());
  rep.append(verify_scaling_law());
  return rep;
}

// ------------------------------------------------------------------ replay

namespace {

RowStatus replay_row(const ReportRow& row) {
  const Json& ev = row.evidence;
  const std::string kind = ev.value("kind", "");
  auto pass = [](bool ok) { return ok ? RowStatus::verified : RowStatus::refuted; };

  if (kind == "foundations") {
    return pass(foundations_hold(lie_from_json(ev.at("algebra")), ev.value("nilpotent", true)));
  }
  if (kind == "correspondence") {
    return pass(correspondence_roundtrips(structure_from_evidence(ev)));
  }
  if (kind == "duality_point") {
    const auto& f = ev.at("family");
    auto p = family_point(rat_from_json(f.at("a")), rat_from_json(f.at("b")),
                          rat_from_json(f.at("c")), rat_from_json(f.at("d")));
    return pass(duality_point_checks(p, ev.at("expect_closed").get<bool>(),
                                     ev.at("expect_integrable").get<bool>()));
  }
  if (kind == "lemma_inverse") {
    return pass(lemma_inverse_roundtrip(structure_from_evidence(ev)));
  }
  if (kind == "family_cell") {
    return pass(family_cell_ok(rat_from_json(ev.at("a")), rat_from_json(ev.at("b"))));
  }
  if (kind == "signature") {
    auto s = structure_from_evidence(ev);
    auto m = compatibility_metric(s.omega, s.J);
    auto expected = ev.at("expected").get<std::vector<int>>();
    return pass(m.sig == std::make_pair(expected[0], expected[1]));
  }
  if (kind == "dual_table_row") {
    auto dual = lie_from_json(ev.at("dual_algebra"));
    auto target = lie_from_json(ev.at("target"));
    if (!ev.contains("witness")) return RowStatus::witness_not_found;
    return pass(verify_isomorphism(dual, target, {matrix_from_json(ev.at("witness"))}));
  }
  if (kind == "explicit_witness") {
    MatQ w = matrix_from_json(ev.at("witness"));
    LieQ src = ev.contains("source_shorthand")
                   ? parse_shorthand(ev.at("source_shorthand").get<std::string>())
                   : lie_from_json(ev.at("source"));
    LieQ dst = lie_from_json(ev.at("target"));
    return pass(verify_isomorphism(src, dst, {w}));
  }
  if (kind == "mirror_row") {
    auto s = mirror_row_structure(ev.at("structure").get<std::string>());
    auto dual = dual_semidirect(s.sd);
    MatQ wj = omega_from_j(s.sd, dual, s.J);
    MatQ jw = j_from_omega(s.sd, dual, s.omega);
    bool ok = is_special_lagrangian(s.sd, s.J, s.omega) &&
              is_special_lagrangian(dual.product, jw, wj);
    if (!ev.contains("identification_witness")) return RowStatus::witness_not_found;
    // the stored witness must still verify
    // (targets are reconstructed from the claim)
    // identification target:
    // re-run the row logic cheaply through verify_isomorphism
    // against all catalog entries carrying the claimed name
    bool ident = false;
    MatQ w = matrix_from_json(ev.at("identification_witness"));
    for (const auto& e : catalog_entries())
      if (e.name == ev.at("mirror").get<std::string>() && e.sd.total.dim() == 6)
        ident = ident || verify_isomorphism(dual.product.total, e.sd.total, {w});
    if (ev.at("mirror").get<std::string>() == "h1")
      ident = verify_isomorphism(dual.product.total,
                                 catalog_entry("h1", BaseKind::abelian).sd.total, {w});
    bool self_ok = true;
    if (ev.value("self_mirror", false)) {
      if (!ev.contains("self_mirror_witness")) return RowStatus::witness_not_found;
      self_ok = verify_isomorphism(s.sd.total, dual.product.total,
                                   {matrix_from_json(ev.at("self_mirror_witness"))});
    }
    return pass(ok && ident && self_ok);
  }
  if (kind == "dga_certificate") {
    auto s = structure_by_name(ev.at("structure").get<std::string>());
    try {
      auto cert = dga_certificate(s);
      return pass(cert.ok && to_string(cert.lambda) == ev.at("lambda").get<std::string>() &&
                  cert.betti == ev.at("betti").get<std::vector<int>>());
    } catch (const Error&) {
      return RowStatus::refuted;
    }
  }
  if (kind == "no_symplectic") {
    auto l = lie_from_json(ev.at("algebra"));
    NoSymplecticCertificate cert;
    for (const auto& x : ev.at("radical")) cert.radical.push_back(rat_from_json(x));
    cert.closed_dim = ev.at("closed_dim").get<int>();
    auto fresh = no_symplectic_certificate(l);
    return pass(fresh && check_no_symplectic_certificate(l, *fresh) &&
                fresh->closed_dim == cert.closed_dim);
  }
  if (kind == "h6_sweep") {
    auto sweep = h6_special_lagrangian_sweep();
    return pass(sweep.candidates == ev.at("candidates").get<long>() &&
                sweep.all_degenerate == sweep.candidates && sweep.pattern_failures == 0 &&
                sweep.complete_on_sample);
  }
  if (kind == "external_citation") return RowStatus::external_citation;
  if (kind == "h1_sweep") return pass(h1_diagonal_sweep(ev.at("n").get<int>()));
  if (kind == "solv_pipeline") {
    auto s = solvable_example();
    auto dual = dual_semidirect(s.sd);
    MatQ wj = omega_from_j(s.sd, dual, s.J);
    return pass(structure_equations(dual.product.total) ==
                    ev.at("expected_structure_equations").get<std::string>() &&
                to_string(matrix_to_form(wj)) == ev.at("expected_omega_J").get<std::string>());
  }
  if (kind == "solv_variant") {
    auto s = solvable_example();
    auto dual = dual_semidirect(s.sd);
    MatQ wj = omega_from_j(s.sd, dual, s.J);
    auto variant = lie_from_json(ev.at("variant"));
    return pass(!is_closed(variant, wj));
  }
  if (kind == "fourdim_self_mirror") {
    if (!ev.contains("witness")) return RowStatus::witness_not_found;
    auto f = fourdim_structure();
    auto dual = dual_semidirect(f.sd);
    MatQ wj = omega_from_j(f.sd, dual, f.J);
    MatQ jw = j_from_omega(f.sd, dual, f.omega);
    MatQ w = matrix_from_json(ev.at("witness"));
    return pass(verify_isomorphism(f.sd.total, dual.product.total, {w}) &&
                w * f.J == jw * w && w.transpose() * wj * w == f.omega);
  }
  if (kind == "volume") {
    auto s = structure_from_evidence(ev);
    auto g = base_metric(s.sd, compatibility_metric(s.omega, s.J).G);
    auto r = volume_form_check(s.sd, s.J, g);
    bool ok = r.applicable ? (r.re_zero && r.im_nonzero) : true;
    return pass(ok && to_string(r.restriction) == ev.at("restriction").get<std::string>());
  }
  if (kind == "scaling") {
    return pass(scaling_law_holds(rat_from_json(ev.at("a")), rat_from_json(ev.at("b")),
                                  rat_from_json(ev.at("s")), ev.at("eps").get<int>()));
  }
  if (kind == "curve_point") {
    const auto& f = ev.at("family");
    Rat a = rat_from_json(f.at("a")), b = rat_from_json(f.at("b"));
    auto p = family_member(a, b);
    if (!ev.contains("witness")) return RowStatus::witness_not_found;
    auto target = catalog_entry(ev.at("identified").get<std::string>(),
                                is_zero(b) ? BaseKind::abelian : BaseKind::heisenberg);
    bool ok = is_special_lagrangian(p.sd, p.J, p.omega) &&
              verify_isomorphism(p.sd.total, target.sd.total,
                                 {matrix_from_json(ev.at("witness"))});
    for (const Rat& s : {Rat(2), Rat(1, 2)})
      for (int eps : {1, -1}) ok = ok && scaling_law_holds(a, b, s, eps);
    return pass(ok);
  }
  throw ParseError("replay: unknown evidence kind '" + kind + "'");
}

}  // namespace

ReplayResult replay_report(const Json& report) {
  ReplayResult res;
  Report parsed = report_from_json(report);
  for (const auto& row : parsed.rows) {
    ++res.total;
    RowStatus fresh;
    try {
      fresh = replay_row(row);
    } catch (const Error& e) {
      res.mismatches.push_back(row.subject + ": replay error: " + e.what());
      continue;
    }
    if (fresh == row.status)
      ++res.matched;
    else
      res.mismatches.push_back(row.subject + ": stored " + to_string(row.status) +
                               ", replayed " + to_string(fresh));
  }
  return res;
}

}  // namespace liemirror
