#include "liemirror/obstructions.hpp"

#include <future>

#include "liemirror/catalog.hpp"
#include "liemirror/structures.hpp"

namespace liemirror {

namespace {

// Unknown index of the two-form component (i, j), i < j.
int pair_index(int n, int i, int j) {
  int idx = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (a == i && b == j) return idx;
      ++idx;
    }
  return -1;
}

// Rows of the closedness system d omega = 0 over the n(n-1)/2 components.
MatQ closedness_system(const LieQ& l) {
  int n = l.dim();
  int unknowns = n * (n - 1) / 2;
  std::vector<std::vector<Rat>> rows;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        std::vector<Rat> row(unknowns, Rat(0));
        auto add = [&](int p, int q, int r) {
          auto br = l.bracket_basis(p, q);
          for (int k = 0; k < n; ++k) {
            if (is_zero(br[k]) || k == r) continue;
            int i = k, j = r;
            Rat s = br[k];
            if (i > j) {
              std::swap(i, j);
              s = -s;
            }
            row[pair_index(n, i, j)] += s;
          }
        };
        add(x, y, z);
        add(y, z, x);
        add(z, x, y);
        bool nz = false;
        for (const auto& c : row) nz = nz || !is_zero(c);
        if (nz) rows.push_back(std::move(row));
      }
  MatQ m(static_cast<int>(rows.size()), unknowns);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < unknowns; ++c) m(static_cast<int>(r), c) = rows[r][c];
  return m;
}

MatQ components_to_form(const std::vector<Rat>& v, int n) {
  MatQ b(n, n);
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      b(i, j) = v[idx];
      b(j, i) = -v[idx];
      ++idx;
    }
  return b;
}

}  // namespace

std::optional<NoSymplecticCertificate> no_symplectic_certificate(const LieQ& l) {
  int n = l.dim();
  MatQ sys = closedness_system(l);
  auto closed = kernel_basis(sys);
  NoSymplecticCertificate cert;
  cert.closed_dim = static_cast<int>(closed.size());
  for (const auto& v : closed) cert.closed_basis.push_back(components_to_form(v, n));
  if (cert.closed_basis.empty()) {
    // no closed two-forms at all: any vector certifies
    cert.radical.assign(n, Rat(0));
    cert.radical[0] = 1;
    return cert;
  }
  // common radical: stack all Gram matrices and take the kernel
  MatQ stacked(n * static_cast<int>(cert.closed_basis.size()), n);
  for (size_t a = 0; a < cert.closed_basis.size(); ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        stacked(static_cast<int>(a) * n + i, j) = cert.closed_basis[a](i, j);
  auto common = kernel_basis(stacked);
  if (common.empty()) return std::nullopt;
  cert.radical = common.front();
  return cert;
}

bool check_no_symplectic_certificate(const LieQ& l, const NoSymplecticCertificate& c) {
  // the radical must be nonzero ...
  bool nz = false;
  for (const auto& x : c.radical) nz = nz || !is_zero(x);
  if (!nz) return false;
  // ... annihilated by every stored closed form ...
  for (const auto& b : c.closed_basis) {
    auto img = b.apply(c.radical);
    for (const auto& x : img)
      if (!is_zero(x)) return false;
  }
  // ... and the stored basis must really span the closed forms.
  MatQ sys = closedness_system(l);
  if (static_cast<int>(c.closed_basis.size()) != l.dim() * (l.dim() - 1) / 2 - rank(sys))
    return false;
  for (const auto& b : c.closed_basis)
    if (!is_closed(l, b)) return false;
  return true;
}

namespace {

const std::vector<Rat>& height2_values() {
  static const std::vector<Rat> v = {Rat(0),     Rat(1),  Rat(-1),
                                     Rat(2),     Rat(-2), Rat(1, 2),
                                     Rat(-1, 2)};
  return v;
}

// J on the total space from the base block a (J b_i = sum_j a(i,j) f_j).
MatQ j_from_block(const SemidirectProduct& sd, const MatQ& a, const MatQ& ainv) {
  int n = sd.total.dim();
  MatQ j(n, n);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      j(sd.fiber_pos[k], sd.base_pos[i]) = a(i, k);
      j(sd.base_pos[k], sd.fiber_pos[i]) = -ainv(i, k);
    }
  return j;
}

}  // namespace

H6SweepResult h6_special_lagrangian_sweep() {
  H6SweepResult res;
  const auto& sd = catalog_entry("h6", BaseKind::heisenberg).sd;
  int n = 6;

  // Unknowns m[i][j] = omega(b_i, f_j); base-base and fiber-fiber blocks
  // vanish (both factors Lagrangian). Closedness rows do not depend on J.
  auto unknown_of = [&](int p, int q) -> std::pair<int, Rat> {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (p == sd.base_pos[i] && q == sd.fiber_pos[j]) return {3 * i + j, Rat(1)};
        if (q == sd.base_pos[i] && p == sd.fiber_pos[j]) return {3 * i + j, Rat(-1)};
      }
    return {-1, Rat(0)};
  };
  std::vector<std::vector<Rat>> closed_rows;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        std::vector<Rat> row(9, Rat(0));
        auto add = [&](int p, int q, int r) {
          auto br = sd.total.bracket_basis(p, q);
          for (int k = 0; k < n; ++k) {
            if (is_zero(br[k])) continue;
            auto [idx, sgn] = unknown_of(k, r);
            if (idx >= 0) row[idx] += sgn * br[k];
          }
        };
        add(x, y, z);
        add(y, z, x);
        add(z, x, y);
        bool nz = false;
        for (const auto& c : row) nz = nz || !is_zero(c);
        if (nz) closed_rows.push_back(std::move(row));
      }

  // Completeness sample: on the height-<=1 grid, integrability of the
  // totally real J is equivalent to a31 = a33 = 0 and a32 = a21 != 0.
  {
    bool equivalent = true;
    std::vector<Rat> small = {Rat(0), Rat(1), Rat(-1)};
    int idx[9];
    for (idx[0] = 0; idx[0] < 3; ++idx[0])
      for (idx[1] = 0; idx[1] < 3; ++idx[1])
        for (idx[2] = 0; idx[2] < 3; ++idx[2])
          for (idx[3] = 0; idx[3] < 3; ++idx[3])
            for (idx[4] = 0; idx[4] < 3; ++idx[4])
              for (idx[5] = 0; idx[5] < 3; ++idx[5])
                for (idx[6] = 0; idx[6] < 3; ++idx[6])
                  for (idx[7] = 0; idx[7] < 3; ++idx[7])
                    for (idx[8] = 0; idx[8] < 3; ++idx[8]) {
                      MatQ a(3, 3);
                      for (int t = 0; t < 9; ++t) a(t / 3, t % 3) = small[idx[t]];
                      auto ainv = inverse(a);
                      if (!ainv) continue;
                      MatQ j = j_from_block(sd, a, *ainv);
                      bool integrable = is_integrable(sd, j).integrable;
                      bool constrained = is_zero(a(2, 0)) && is_zero(a(2, 2)) &&
                                         a(2, 1) == a(1, 0) && !is_zero(a(1, 0));
                      if (integrable != constrained) equivalent = false;
                    }
    res.complete_on_sample = equivalent;
  }

  // Main sweep over the height-<=2 grid of constrained blocks, parallel
  // over the a21 slices (the tasks are pure and independent).
  const auto& vals = height2_values();
  auto sweep_slice = [&](const Rat& t) {
    H6SweepResult part;
    for (const Rat& a11 : vals)
      for (const Rat& a12 : vals)
        for (const Rat& a13 : vals)
          for (const Rat& a22 : vals)
            for (const Rat& a23 : vals) {
              MatQ a(3, 3);
              a(0, 0) = a11;
              a(0, 1) = a12;
              a(0, 2) = a13;
              a(1, 0) = t;
              a(1, 1) = a22;
              a(1, 2) = a23;
              a(2, 1) = t;
              // invertibility: det = -t (a11 a23 - a13 t)
              if (is_zero(a11 * a23 - a13 * t)) continue;
              auto ainv = inverse(a);
              MatQ j = j_from_block(sd, a, *ainv);
              ++part.candidates;

              // compatibility rows on the mixed pairs
              std::vector<std::vector<Rat>> rows = closed_rows;
              for (int bi = 0; bi < 3; ++bi)
                for (int fj = 0; fj < 3; ++fj) {
                  std::vector<Rat> row(9, Rat(0));
                  int p = sd.base_pos[bi], q = sd.fiber_pos[fj];
                  // omega(Jp, Jq) - omega(p, q) = 0
                  for (int r = 0; r < n; ++r) {
                    if (is_zero(j(r, p))) continue;
                    for (int s = 0; s < n; ++s) {
                      if (is_zero(j(s, q))) continue;
                      auto [idx, sgn] = unknown_of(r, s);
                      if (idx >= 0) row[idx] += sgn * j(r, p) * j(s, q);
                    }
                  }
                  row[3 * bi + fj] -= 1;
                  rows.push_back(std::move(row));
                }
              MatQ sys(static_cast<int>(rows.size()), 9);
              for (size_t r = 0; r < rows.size(); ++r)
                for (int c = 0; c < 9; ++c) sys(static_cast<int>(r), c) = rows[r][c];
              auto sols = kernel_basis(sys);

              // forced pattern: b43 = b52 = b54 = b56 = 0, i.e. the unknowns
              // m22, m31, m32, m33 vanish on the whole solution space
              bool pattern = true;
              for (const auto& v : sols)
                if (!is_zero(v[4]) || !is_zero(v[6]) || !is_zero(v[7]) || !is_zero(v[8]))
                  pattern = false;
              bool degenerate = pattern;  // row 3 of the mixed block vanishes
              if (!pattern) {
                // fall back to checking det on the whole solution grid
                degenerate = true;
                std::vector<int> assign(sols.size(), 0);
                // det is cubic: a {0,1,2,3} grid per parameter decides
                std::vector<Rat> grid = {Rat(0), Rat(1), Rat(2), Rat(3)};
                bool done = sols.empty();
                while (!done) {
                  MatQ m(3, 3);
                  for (size_t s = 0; s < sols.size(); ++s)
                    for (int e = 0; e < 9; ++e) {
                      m(e / 3, e % 3) += grid[assign[s]] * sols[s][e];
                    }
                  if (!is_zero(det(m))) {
                    degenerate = false;
                    break;
                  }
                  size_t pos = 0;
                  while (pos < assign.size() && ++assign[pos] == 4) {
                    assign[pos] = 0;
                    ++pos;
                  }
                  if (pos == assign.size()) done = true;
                }
              }
              if (!pattern) ++part.pattern_failures;
              if (degenerate) ++part.all_degenerate;
              if (part.sample.size() < 3) {
                part.sample.push_back(
                    {a, static_cast<int>(sols.size()), pattern, degenerate});
              }
            }
    return part;
  };

  std::vector<std::future<H6SweepResult>> slices;
  for (const Rat& t : vals) {
    if (is_zero(t)) continue;  // a21 = a32 != 0
    slices.push_back(std::async(std::launch::async, sweep_slice, t));
  }
  for (auto& f : slices) {
    H6SweepResult part = f.get();
    res.candidates += part.candidates;
    res.all_degenerate += part.all_degenerate;
    res.pattern_failures += part.pattern_failures;
    for (const auto& pt : part.sample)
      if (res.sample.size() < 3) res.sample.push_back(pt);
  }
  return res;
}

}  // namespace liemirror
