#include "liemirror/iso.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace liemirror {

bool verify_isomorphism(const LieQ& a, const LieQ& b, const IsoWitness& w) {
  int n = a.dim();
  if (b.dim() != n) throw DimensionMismatch("verify_isomorphism: dimension mismatch");
  if (w.matrix.rows() != n || w.matrix.cols() != n)
    throw DimensionMismatch("verify_isomorphism: witness shape mismatch");
  if (!inverse(w.matrix)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto lhs = w.matrix.apply(a.bracket_basis(i, j));
      std::vector<Rat> wi(n), wj(n);
      for (int r = 0; r < n; ++r) {
        wi[r] = w.matrix(r, i);
        wj[r] = w.matrix(r, j);
      }
      auto rhs = b.bracket(wi, wj);
      if (lhs != rhs) return false;
    }
  return true;
}

namespace {

// One multiplicative constraint d[i]*d[j] = ratio * d[k].
struct ScaleEq {
  int i, j, k;
  Rat ratio;
};

const std::vector<Rat>& seed_values() {
  static const std::vector<Rat> v = [] {
    std::vector<Rat> s;
    for (const char* t : {"1", "-1", "2", "-2", "1/2", "-1/2", "3", "-3", "1/3", "-1/3"})
      s.push_back(parse_rat(t));
    return s;
  }();
  return v;
}

// Depth-first enumeration of the multiplicative system with propagation;
// free variables range over a bounded-height seed set. Every complete
// consistent assignment is offered to the sink until it returns true.
bool solve_scales(const std::vector<ScaleEq>& eqs, std::vector<Rat> d,
                  std::vector<bool> known, long& budget,
                  const std::function<bool(const std::vector<Rat>&)>& sink) {
  for (;;) {
    if (--budget < 0) return false;
    bool progress = false;
    for (const auto& e : eqs) {
      int cnt = known[e.i] + known[e.j] + known[e.k];
      if (cnt == 3) {
        if (d[e.i] * d[e.j] != e.ratio * d[e.k]) return false;
      } else if (cnt == 2) {
        if (!known[e.k]) {
          d[e.k] = d[e.i] * d[e.j] / e.ratio;
          known[e.k] = true;
        } else if (!known[e.i]) {
          d[e.i] = e.ratio * d[e.k] / d[e.j];
          known[e.i] = true;
        } else {
          d[e.j] = e.ratio * d[e.k] / d[e.i];
          known[e.j] = true;
        }
        progress = true;
      }
    }
    if (!progress) break;
  }
  int pick = -1;
  for (size_t v = 0; v < known.size(); ++v)
    if (!known[v]) {
      pick = static_cast<int>(v);
      break;
    }
  if (pick < 0) {
    for (const auto& e : eqs)
      if (d[e.i] * d[e.j] != e.ratio * d[e.k]) return false;
    return sink(d);
  }
  for (const Rat& val : seed_values()) {
    auto d2 = d;
    auto k2 = known;
    d2[pick] = val;
    k2[pick] = true;
    if (solve_scales(eqs, std::move(d2), std::move(k2), budget, sink)) return true;
    if (budget < 0) return false;
  }
  return false;
}

// Enumerates generalized-permutation witness candidates for perm, offering
// each to the sink until accepted.
bool monomial_witness(const LieQ& a, const LieQ& b, const std::vector<int>& perm,
                      long& budget, const std::function<bool(const MatQ&)>& sink) {
  int n = a.dim();
  std::vector<ScaleEq> eqs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto ca = a.bracket_basis(i, j);
      auto cb = b.bracket_basis(perm[i], perm[j]);
      // Support must match through the permutation.
      for (int k = 0; k < n; ++k) {
        bool za = is_zero(ca[k]);
        bool zb = is_zero(cb[perm[k]]);
        if (za != zb) return false;
        // w(e_i) = d_i e_{perm[i]} needs d_i d_j = (c^k_A / c^{perm k}_B) d_k.
        if (!za) eqs.push_back({i, j, k, ca[k] / cb[perm[k]]});
      }
    }
  std::vector<Rat> d(n, Rat(1));
  std::vector<bool> known(n, false);
  return solve_scales(eqs, std::move(d), std::move(known), budget, [&](const std::vector<Rat>& scales) {
    MatQ w(n, n);
    for (int i = 0; i < n; ++i) w(perm[i], i) = scales[i];
    return sink(w);
  });
}

}  // namespace

IsoSearchResult find_isomorphism(const LieQ& a, const LieQ& b,
                                 const IsoSearchOptions& opts) {
  IsoSearchResult res;
  int n = a.dim();
  if (b.dim() != n) throw DimensionMismatch("find_isomorphism: dimension mismatch");

  auto accept = [&](const MatQ& w) {
    ++res.candidates_examined;
    IsoWitness cand{w};
    if (!verify_isomorphism(a, b, cand)) return false;
    if (opts.accept && !opts.accept(w)) return false;
    res.witness = cand;
    return true;
  };

  if (accept(MatQ::identity(n))) return res;
  for (const auto& h : opts.hints)
    if (accept(h)) return res;

  if (fingerprint(a) != fingerprint(b)) {
    res.fingerprint_mismatch = true;
    return res;
  }

  long budget = opts.budget;

  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    if (opts.seed != 0) {
      std::mt19937 rng(opts.seed);
      std::shuffle(perms.begin(), perms.end(), rng);
    }
  }

  auto monomial_pass = [&](const LieQ& src, const MatQ* pre) -> bool {
    for (const auto& p : perms) {
      if (--budget < 0) {
        res.budget_exceeded = true;
        return false;
      }
      bool found = monomial_witness(src, b, p, budget, [&](const MatQ& w) {
        MatQ full = pre ? w * (*pre) : w;
        return accept(full);
      });
      if (found) return true;
      if (budget < 0) {
        res.budget_exceeded = true;
        return false;
      }
    }
    return false;
  };

  if (monomial_pass(a, nullptr)) return res;
  if (res.budget_exceeded || !opts.try_shears) return res;

  // Second tier: a single elementary shear composed with a monomial map.
  static const std::vector<Rat> shear_ts = [] {
    std::vector<Rat> s;
    for (const char* t : {"1", "-1", "2", "-2", "1/2", "-1/2"}) s.push_back(parse_rat(t));
    return s;
  }();
  for (int u = 0; u < n && !res.witness; ++u)
    for (int v = 0; v < n && !res.witness; ++v) {
      if (u == v) continue;
      for (const Rat& t : shear_ts) {
        MatQ s = MatQ::identity(n);
        s(u, v) = t;
        LieQ a2 = transport(a, s);
        if (monomial_pass(a2, &s)) return res;
        if (res.budget_exceeded) return res;
      }
    }
  return res;
}

}  // namespace liemirror
