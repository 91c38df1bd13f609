#include "liemirror/dga.hpp"

#include "liemirror/structures.hpp"

#include <algorithm>

namespace liemirror {

MixedElement MixedElement::operator+(const MixedElement& o) const {
  MixedElement r = *this;
  for (int i = 0; i < dim(); ++i) {
    r.vec[i] += o.vec[i];
    r.cov[i] += o.cov[i];
  }
  return r;
}

MixedElement MixedElement::operator-(const MixedElement& o) const {
  MixedElement r = *this;
  for (int i = 0; i < dim(); ++i) {
    r.vec[i] -= o.vec[i];
    r.cov[i] -= o.cov[i];
  }
  return r;
}

MixedElement MixedElement::scaled(const CRat& c) const {
  MixedElement r = *this;
  for (int i = 0; i < dim(); ++i) {
    r.vec[i] = r.vec[i] * c;
    r.cov[i] = r.cov[i] * c;
  }
  return r;
}

bool MixedElement::is_zero() const {
  for (const auto& c : vec)
    if (!liemirror::is_zero(c)) return false;
  for (const auto& c : cov)
    if (!liemirror::is_zero(c)) return false;
  return true;
}

MixedElement conj(const MixedElement& a) {
  MixedElement r = a;
  for (auto& c : r.vec) c = conj(c);
  for (auto& c : r.cov) c = conj(c);
  return r;
}

CRat natural_pairing(const MixedElement& a, const MixedElement& b) {
  CRat s(0);
  for (int i = 0; i < a.dim(); ++i) s += a.cov[i] * b.vec[i] + b.cov[i] * a.vec[i];
  return s;
}

MixedElement schouten_bracket(const LieC& l, const MixedElement& a, const MixedElement& b) {
  int n = l.dim();
  MixedElement out = MixedElement::zero(n);
  out.vec = l.bracket(a.vec, b.vec);
  // i_x d(beta) - i_y d(alpha), as 1-forms
  auto one_form = [&](const std::vector<CRat>& coords) {
    ExtC f(n, 1);
    for (int i = 0; i < n; ++i)
      if (!is_zero(coords[i])) f.add_term(1u << i, coords[i]);
    return f;
  };
  ExtC dbeta(n, 2), dalpha(n, 2);
  {
    ExtC beta = one_form(b.cov), alpha = one_form(a.cov);
    dbeta = ce_differential(l, beta);
    dalpha = ce_differential(l, alpha);
  }
  ExtC part = contract(a.vec, dbeta) - contract(b.vec, dalpha);
  for (const auto& [mask, c] : part.terms()) {
    int i = std::countr_zero(mask);
    out.cov[i] += c;
  }
  return out;
}

MixedElement apply_j(const MatC& J, const MixedElement& a) {
  MixedElement r = MixedElement::zero(a.dim());
  r.vec = J.apply(a.vec);
  r.cov = (-J.transpose()).apply(a.cov);
  return r;
}

MixedElement one_minus_ij(const MatC& J, const MixedElement& a) {
  return a - apply_j(J, a).scaled(CRat::i());
}

std::vector<CRat> DGAlgebra::bracket_gen(int i, int j) const {
  std::vector<CRat> v(gen_dim, CRat(0));
  if (i == j) return v;
  int s = 1, a = i, b = j;
  if (a > b) {
    std::swap(a, b);
    s = -1;
  }
  auto it = bracket.find({a, b});
  if (it == bracket.end()) return v;
  for (const auto& [k, c] : it->second) v[k] = s > 0 ? c : -c;
  return v;
}

std::vector<CRat> DGAlgebra::bracket_deg1(const std::vector<CRat>& x,
                                          const std::vector<CRat>& y) const {
  std::vector<CRat> out(gen_dim, CRat(0));
  for (const auto& [ij, comps] : bracket) {
    CRat coef = x[ij.first] * y[ij.second] - x[ij.second] * y[ij.first];
    if (is_zero(coef)) continue;
    for (const auto& [k, c] : comps) out[k] += coef * c;
  }
  return out;
}

namespace {

// Monomial helpers for the Gerstenhaber recursion.
int lowest_index(uint32_t mask) { return std::countr_zero(mask); }

ExtC monomial(int n, uint32_t mask, const CRat& c) {
  ExtC e(n, std::popcount(mask));
  e.add_term(mask, c);
  return e;
}

}  // namespace

ExtC gerstenhaber_bracket(const DGAlgebra& dga, const ExtC& a, const ExtC& b) {
  int n = dga.gen_dim;
  int da = a.degree(), db = b.degree();
  int dr = da + db - 1;
  if (da == 0 || db == 0) return ExtC(n, std::max(dr, 0));
  ExtC out(n, dr);
  if (a.is_zero() || b.is_zero()) return out;

  if (da == 1 && db == 1) {
    std::vector<CRat> x(n, CRat(0)), y(n, CRat(0));
    for (const auto& [m, c] : a.terms()) x[lowest_index(m)] = c;
    for (const auto& [m, c] : b.terms()) y[lowest_index(m)] = c;
    auto z = dga.bracket_deg1(x, y);
    for (int i = 0; i < n; ++i)
      if (!is_zero(z[i])) out.add_term(1u << i, z[i]);
    return out;
  }
  if (db > 1) {
    // [a . b1 ^ rest] = [a.b1] ^ rest + (-1)^{|a|-1} b1 ^ [a.rest]
    for (const auto& [mask, c] : b.terms()) {
      int i0 = lowest_index(mask);
      ExtC b1 = monomial(n, 1u << i0, field<CRat>::one());
      ExtC rest = monomial(n, mask & ~(1u << i0), c);
      out = out + wedge(gerstenhaber_bracket(dga, a, b1), rest);
      ExtC tail = gerstenhaber_bracket(dga, a, rest);
      ExtC term = wedge(b1, tail);
      out = ((da - 1) % 2 == 0) ? out + term : out - term;
    }
    return out;
  }
  // da > 1, db == 1:
  // [a1 ^ rest . b] = (-1)^{(|b|-1)|rest|} [a1.b] ^ rest + a1 ^ [rest.b]
  for (const auto& [mask, c] : a.terms()) {
    int i0 = lowest_index(mask);
    ExtC a1 = monomial(n, 1u << i0, c);
    ExtC rest = monomial(n, mask & ~(1u << i0), field<CRat>::one());
    ExtC head = wedge(gerstenhaber_bracket(dga, a1, b), rest);
    out = ((db - 1) * (da - 1)) % 2 == 0 ? out + head : out - head;
    out = out + wedge(a1, gerstenhaber_bracket(dga, rest, b));
  }
  return out;
}

namespace {

// Antiderivation extension of generator images to the mask basis of
// Lambda^k -> Lambda^{k+1}.
std::vector<MatC> antiderivation_matrices(int n, const std::vector<ExtC>& d1) {
  std::vector<MatC> out;
  for (int k = 0; k <= n; ++k) {
    auto dom = degree_masks(n, k);
    auto cod = degree_masks(n, k + 1);
    std::map<uint32_t, int> cidx;
    for (size_t i = 0; i < cod.size(); ++i) cidx[cod[i]] = static_cast<int>(i);
    MatC m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
    for (size_t j = 0; j < dom.size() && k + 1 <= n; ++j) {
      uint32_t mask = dom[j];
      ExtC img(n, k + 1);
      int pos = 0;
      for (int t = 0; t < n; ++t) {
        if (!(mask & (1u << t))) continue;
        ExtC rest(n, k - 1);
        rest.add_term(mask & ~(1u << t),
                      (pos % 2 == 0) ? field<CRat>::one() : -field<CRat>::one());
        img = img + wedge(d1[t], rest);
        ++pos;
      }
      for (const auto& [mm, c] : img.terms()) m(cidx[mm], static_cast<int>(j)) = c;
    }
    out.push_back(std::move(m));
  }
  return out;
}

void validate_dga(const DGAlgebra& dga) {
  // d.d = 0 in every degree
  for (int k = 0; k + 1 < static_cast<int>(dga.diff.size()); ++k)
    if (!(dga.diff[k + 1] * dga.diff[k]).is_zero_matrix())
      throw Error("DGA validation: differential does not square to zero");
  // graded Jacobi on degree one = Jacobi of the bracket table
  LieC probe = LieC::create_unchecked(dga.gen_dim, dga.bracket);
  if (!check_jacobi(probe).empty())
    throw Error("DGA validation: degree-one bracket fails Jacobi");
}

struct F1Setup {
  LieC lc;
  MatC jc;
  std::vector<MixedElement> gens;
};

DGAlgebra dga_from_f1(const F1Setup& s, DGAKind kind) {
  int n = s.lc.dim();
  const auto& gens = s.gens;
  // Closure of f^1 under the Schouten bracket: solve each bracket in the
  // generator span.
  MatC span(2 * n, n);
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < n; ++i) {
      span(i, c) = gens[c].vec[i];
      span(n + i, c) = gens[c].cov[i];
    }
  }
  DGAlgebra dga;
  dga.kind = kind;
  dga.gen_dim = n;
  std::vector<std::vector<std::vector<CRat>>> table(
      n, std::vector<std::vector<CRat>>(n, std::vector<CRat>(n, CRat(0))));
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      MixedElement br = schouten_bracket(s.lc, gens[p], gens[q]);
      std::vector<CRat> rhs(2 * n);
      for (int i = 0; i < n; ++i) {
        rhs[i] = br.vec[i];
        rhs[n + i] = br.cov[i];
      }
      auto sol = solve(span, rhs);
      if (!sol)
        throw NotIntegrable("f^1 is not closed under the Schouten bracket (pair " +
                            std::to_string(p + 1) + "," + std::to_string(q + 1) + ")");
      for (int k = 0; k < n; ++k) {
        if (!is_zero((*sol)[k])) dga.bracket[{p, q}][k] = (*sol)[k];
        table[p][q][k] = (*sol)[k];
        table[q][p][k] = -(*sol)[k];
      }
    }

  // dbar through the normalized pairing with the conjugate algebra:
  // iota(a) = (i/2) <a, .> identifies f^1 with (conj f^1)*.
  const CRat sigma(Rat(0), Rat(1, 2));
  MatC h(n, n);
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k)
      h(m, k) = sigma * natural_pairing(gens[m], conj(gens[k]));
  auto hinv_opt = inverse(h);
  if (!hinv_opt) throw Error("complex DGA: degenerate pairing between f^1 and its conjugate");
  const MatC& hinv = *hinv_opt;

  // Structure constants of conj(f^1) in the basis dual to iota, then
  // dbar g_m = -sum_{p<q} ctilde^m_{pq} g_p ^ g_q.
  for (int m = 0; m < n; ++m) {
    ExtC img(n, 2);
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        CRat ct(0);
        for (int l = 0; l < n; ++l)
          for (int mm = 0; mm < n; ++mm) {
            if (is_zero(hinv(l, p)) || is_zero(hinv(mm, q))) continue;
            for (int r = 0; r < n; ++r) {
              const CRat& c = table[l][mm][r];
              if (is_zero(c)) continue;
              // gbar_r = sum_s h(s, r) u_s
              ct += hinv(l, p) * hinv(mm, q) * conj(c) * h(m, r);
            }
          }
        if (!is_zero(ct)) img.add_term((1u << p) | (1u << q), -ct);
      }
    dga.d1_images.push_back(std::move(img));
  }
  dga.diff = antiderivation_matrices(n, dga.d1_images);
  for (int i = 0; i < n; ++i) dga.gen_labels.push_back("f" + std::to_string(i + 1));
  validate_dga(dga);
  return dga;
}

}  // namespace

ComplexDGA build_complex_dga(const LieQ& l, const MatQ& J) {
  int n = l.dim();
  if (J * J != -MatQ::identity(n)) throw ValidationError("build_complex_dga: J*J != -I");
  auto integ = is_integrable(l, J);
  if (!integ.integrable) throw NotIntegrable("build_complex_dga: J is not integrable");
  F1Setup s{complexify(l), complexify(J), {}};
  // Greedy independent (1-iJ)-images of basis vectors, then covectors.
  std::vector<MixedElement> candidates;
  for (int i = 0; i < n; ++i) {
    MixedElement e = MixedElement::zero(n);
    e.vec[i] = CRat(1);
    candidates.push_back(one_minus_ij(s.jc, e));
  }
  for (int i = 0; i < n; ++i) {
    MixedElement e = MixedElement::zero(n);
    e.cov[i] = CRat(1);
    candidates.push_back(one_minus_ij(s.jc, e));
  }
  MatC acc(2 * n, n);
  int got = 0;
  for (const auto& cand : candidates) {
    if (got == n) break;
    MatC trial = acc;
    for (int i = 0; i < n; ++i) {
      trial(i, got) = cand.vec[i];
      trial(n + i, got) = cand.cov[i];
    }
    MatC probe(2 * n, got + 1);
    for (int i = 0; i < 2 * n; ++i)
      for (int c = 0; c <= got; ++c) probe(i, c) = trial(i, c);
    if (rank(probe) == got + 1) {
      acc = trial;
      s.gens.push_back(cand);
      ++got;
    }
  }
  if (got != n) throw Error("build_complex_dga: could not assemble a basis of f^1");
  ComplexDGA out{dga_from_f1(s, DGAKind::complex_structure), {s.lc, s.jc, s.gens}};
  return out;
}

ComplexDGA build_complex_dga(const SemidirectProduct& sd, const MatQ& J) {
  int n = sd.total.dim();
  if (!is_totally_real_for(sd, J))
    throw NotTotallyReal("build_complex_dga: J is not totally real for the splitting");
  if (!is_integrable(sd, J).integrable)
    throw NotIntegrable("build_complex_dga: J is not integrable");
  F1Setup s{complexify(sd.total), complexify(J), {}};
  for (int a = 0; a < sd.base_dim(); ++a) {
    MixedElement e = MixedElement::zero(n);
    e.vec[sd.base_pos[a]] = CRat(1);
    s.gens.push_back(one_minus_ij(s.jc, e));
  }
  for (int j = 0; j < sd.fiber_dim(); ++j) {
    MixedElement e = MixedElement::zero(n);
    e.cov[sd.fiber_pos[j]] = CRat(1);
    s.gens.push_back(one_minus_ij(s.jc, e));
  }
  return {dga_from_f1(s, DGAKind::complex_structure), {s.lc, s.jc, s.gens}};
}

DGAlgebra build_symplectic_dga(const LieQ& k, const MatQ& omega) {
  int n = k.dim();
  if (!is_nondegenerate(omega) || !is_closed(k, omega))
    throw NotSymplectic("build_symplectic_dga: omega must be closed and non-degenerate");
  DGAlgebra dga;
  dga.kind = DGAKind::symplectic;
  dga.gen_dim = n;
  // omega as a map: (omega z)_j = omega(z, e_j) = (B^t z)_j.
  MatQ bt = omega.transpose();
  std::vector<std::vector<Rat>> zs;
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> e(n, Rat(0));
    e[i] = 1;
    auto z = solve(bt, e);
    if (!z) throw NotSymplectic("build_symplectic_dga: omega is degenerate");
    zs.push_back(*z);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto br = k.bracket(zs[i], zs[j]);
      auto w = bt.apply(br);
      for (int t = 0; t < n; ++t)
        if (!is_zero(w[t])) dga.bracket[{i, j}][t] = CRat(w[t]);
    }
  LieC kc = complexify(k);
  for (int t = 0; t < n; ++t) dga.d1_images.push_back(ce_differential_covector(kc, t));
  dga.diff = antiderivation_matrices(n, dga.d1_images);
  for (int i = 0; i < n; ++i) dga.gen_labels.push_back("a" + std::to_string(i + 1));
  validate_dga(dga);
  return dga;
}

namespace {

std::vector<MixedElement> phi_images(const SemidirectProduct& sd, const DualProduct& dual,
                                     const MatC& jc) {
  int n = sd.total.dim();
  std::vector<MixedElement> img(n, MixedElement::zero(n));
  for (int a = 0; a < sd.base_dim(); ++a) {
    MixedElement e = MixedElement::zero(n);
    e.vec[sd.base_pos[a]] = CRat(1);
    img[dual.product.base_pos[a]] = one_minus_ij(jc, e);
  }
  for (int s = 0; s < sd.fiber_dim(); ++s) {
    MixedElement e = MixedElement::zero(n);
    e.cov[sd.fiber_pos[dual.cov_of[s]]] = CRat(1);
    img[dual.product.fiber_pos[s]] = one_minus_ij(jc, e);
  }
  return img;
}

}  // namespace

DGAMorphism phi_map(const SemidirectProduct& sd, const DualProduct& dual, const MatQ& J,
                    const ComplexDGA& target) {
  int n = sd.total.dim();
  LieC hc = complexify(sd.total);
  MatC jc = complexify(J);
  auto img = phi_images(sd, dual, jc);
  LieC dc = complexify(dual.product.total);
  // Lie homomorphism check on all basis pairs of the dual product.
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      auto br = dc.bracket_basis(p, q);
      MixedElement lhs = MixedElement::zero(n);
      for (int k = 0; k < n; ++k)
        if (!is_zero(br[k])) lhs = lhs + img[k].scaled(br[k]);
      MixedElement rhs = schouten_bracket(hc, img[p], img[q]);
      if (!(lhs == rhs))
        throw BracketMismatch("phi is not a Lie homomorphism on dual basis pair (" +
                              std::to_string(p + 1) + "," + std::to_string(q + 1) + ")");
    }
  // Express images in the f^1 generator basis of the target.
  MatC span(2 * n, n);
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < n; ++i) {
      span(i, c) = target.f1.basis[c].vec[i];
      span(n + i, c) = target.f1.basis[c].cov[i];
    }
  DGAMorphism m;
  m.degree_one_map = MatC(n, n);
  for (int p = 0; p < n; ++p) {
    std::vector<CRat> rhs(2 * n);
    for (int i = 0; i < n; ++i) {
      rhs[i] = img[p].vec[i];
      rhs[n + i] = img[p].cov[i];
    }
    auto sol = solve(span, rhs);
    if (!sol) throw BracketMismatch("phi image does not lie in f^1");
    for (int r = 0; r < n; ++r) m.degree_one_map(r, p) = (*sol)[r];
  }
  return m;
}

CRat pairing_check(const SemidirectProduct& sd, const DualProduct& dual, const MatQ& J) {
  int n = sd.total.dim();
  MatC jc = complexify(J);
  auto img = phi_images(sd, dual, jc);
  MatQ wj = omega_from_j(sd, dual, J);
  CRat lambda(0);
  bool found = false;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      CRat lhs = natural_pairing(conj(img[p]), img[q]);
      CRat rhs = CRat(wj(p, q));
      if (is_zero(rhs)) {
        if (!is_zero(lhs))
          throw NotProportional("phi-bar* phi does not vanish where omega_J does");
        continue;
      }
      CRat ratio = lhs / rhs;
      if (!found) {
        lambda = ratio;
        found = true;
      } else if (ratio != lambda) {
        throw NotProportional("phi-bar* phi is not a constant multiple of omega_J");
      }
    }
  if (!found) throw NotProportional("omega_J vanishes identically");
  return lambda;
}

MatC exterior_power(const MatC& m, int k) {
  int n = m.rows();
  auto dom = degree_masks(n, k);
  auto cod = degree_masks(n, k);
  MatC out(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  // minors: rows S, cols T
  auto indices = [&](uint32_t mask) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) v.push_back(i);
    return v;
  };
  for (size_t r = 0; r < cod.size(); ++r) {
    auto rows = indices(cod[r]);
    for (size_t c = 0; c < dom.size(); ++c) {
      auto cols = indices(dom[c]);
      MatC sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      out(static_cast<int>(r), static_cast<int>(c)) = det(sub);
    }
  }
  return out;
}

DGAIsoResult verify_dga_isomorphism(const DGAlgebra& target, const DGAlgebra& source,
                                    const DGAMorphism& m) {
  DGAIsoResult res;
  int n = source.gen_dim;
  if (target.gen_dim != n) {
    res.failure = "generator dimension mismatch";
    return res;
  }
  if (!inverse(m.degree_one_map)) {
    res.failure = "degree-one map is not invertible";
    return res;
  }
  // Differentials in every degree: Lambda^{k+1}(m) d_src = d_tgt Lambda^k(m).
  for (int k = 0; k <= n; ++k) {
    MatC lhs = exterior_power(m.degree_one_map, k + 1) * source.diff[k];
    MatC rhs = target.diff[k] * exterior_power(m.degree_one_map, k);
    if (!(lhs == rhs)) {
      res.failure = "differentials disagree in degree " + std::to_string(k);
      return res;
    }
  }
  // Brackets up to one global constant.
  CRat c(0);
  bool found = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto bsrc = source.bracket_gen(i, j);
      auto mapped = m.degree_one_map.apply(bsrc);
      std::vector<CRat> mi(n), mj(n);
      for (int r = 0; r < n; ++r) {
        mi[r] = m.degree_one_map(r, i);
        mj[r] = m.degree_one_map(r, j);
      }
      auto btgt = target.bracket_deg1(mi, mj);
      for (int r = 0; r < n; ++r) {
        if (is_zero(btgt[r])) {
          if (!is_zero(mapped[r])) {
            res.failure = "bracket supports differ on pair (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ")";
            return res;
          }
          continue;
        }
        CRat ratio = mapped[r] / btgt[r];
        if (!found) {
          c = ratio;
          found = true;
        } else if (ratio != c) {
          res.failure = "bracket constants differ on pair (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ")";
          return res;
        }
      }
    }
  res.ok = true;
  res.bracket_constant = found ? c : CRat(1);
  return res;
}

DGAMorphism mirror_morphism(const SemidirectProduct& sd, const DualProduct& dual,
                            const MatQ& J, const ComplexDGA& target) {
  DGAMorphism phi = phi_map(sd, dual, J, target);
  MatQ wj = omega_from_j(sd, dual, J);
  // omega as a map z -> i_z omega has matrix B^t in coordinates; the
  // degree-one map of the mirror is phi . omega^{-1} on (h-dual)*.
  auto winv = inverse(wj.transpose());
  if (!winv) throw Degenerate("mirror_morphism: omega_J is degenerate");
  DGAMorphism m;
  m.degree_one_map = phi.degree_one_map * complexify(*winv);
  return m;
}

std::vector<int> betti_numbers(const DGAlgebra& dga) {
  int n = dga.gen_dim;
  std::vector<int> b;
  std::vector<int> ranks(n + 2, 0);
  for (int k = 0; k <= n; ++k) ranks[k + 1] = rank(dga.diff[k]);
  for (int k = 0; k <= n; ++k) {
    int dimk = static_cast<int>(degree_masks(n, k).size());
    b.push_back(dimk - ranks[k + 1] - ranks[k]);
  }
  return b;
}

}  // namespace liemirror
