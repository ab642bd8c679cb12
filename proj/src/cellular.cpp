#include "leg/cellular.hpp"

#include <string>

namespace leg {

namespace {

using PolyMat = std::vector<std::vector<Poly>>;

PolyMat zero_mat(int n) { return PolyMat(n, std::vector<Poly>(n)); }

PolyMat mul(const PolyMat& a, const PolyMat& b) {
  int n = static_cast<int>(a.size());
  PolyMat r = zero_mat(n);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      if (a[i][l].empty()) continue;
      for (int j = 0; j < n; ++j)
        if (!b[l][j].empty()) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

void add_to(PolyMat& a, const PolyMat& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) a[i][j] += b[i][j];
}

PolyMat with_identity(PolyMat m) {
  for (size_t i = 0; i < m.size(); ++i) m[i][i] += Poly::one();
  return m;
}

std::vector<int> identity_embed(int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = i;
  return e;
}

std::vector<int> swap_embed(int n, int k) {
  auto e = identity_embed(n);
  std::swap(e[k - 1], e[k]);
  return e;
}

std::vector<int> cusp_embed(int n, int k) {
  std::vector<int> e(n);
  for (int p = 0; p < n; ++p) e[p] = p < k - 1 ? p : p + 2;
  return e;
}

void check_potential(const PlatWord& w, const MaslovPotential& mu) {
  if (static_cast<int>(mu.mu.size()) != w.size() + 1)
    fail("PotentialMismatch", "potential does not match the word length");
  for (int g = 0; g <= w.size(); ++g)
    if (static_cast<int>(mu.mu[g].size()) != w.width(g))
      fail("PotentialMismatch", "potential does not match the strand count at gap " + std::to_string(g));
}

}  // namespace

CellComplex1D decomposition_from_word(const PlatWord& w, const CellOptions& opt) {
  CellComplex1D c;
  c.vertex_of_letter.assign(w.size(), -1);
  std::vector<int> extra(w.size() + 1, 0);
  for (int g : opt.extra_vertices) {
    if (g < 0 || g > w.size()) fail("StrandError", "extra vertex outside the word");
    ++extra[g];
  }
  for (int g = 0; g <= w.size(); ++g) {
    for (int t = 0; t < extra[g]; ++t) c.vertices.push_back({-1, g, w.width(g)});
    if (g == w.size()) break;
    const Letter& L = w.letters[g];
    int gap = (L.kind == Kind::Right) ? g + 1 : g;
    c.vertex_of_letter[g] = static_cast<int>(c.vertices.size());
    c.vertices.push_back({g, gap, w.width(gap)});
  }
  for (size_t v = 0; v + 1 < c.vertices.size(); ++v) {
    const Vertex& a = c.vertices[v];
    Edge e;
    e.left = static_cast<int>(v);
    e.right = static_cast<int>(v + 1);
    e.gap = a.letter >= 0 ? a.letter + 1 : a.gap;
    e.sheets = w.width(e.gap);
    // left end
    if (a.letter < 0) {
      e.at_left.embed = identity_embed(a.sheets);
    } else {
      const Letter& L = w.letters[a.letter];
      if (L.kind == Kind::Cross)
        e.at_left.embed = opt.crossing_right_order ? identity_embed(a.sheets) : swap_embed(a.sheets, L.k);
      else if (L.kind == Kind::Left) {
        e.at_left.embed = cusp_embed(a.sheets, L.k);
        e.at_left.cusp = L.k - 1;
      } else
        e.at_left.embed = identity_embed(a.sheets);
    }
    const Vertex& b = c.vertices[v + 1];
    if (b.letter < 0) {
      e.at_right.embed = identity_embed(b.sheets);
    } else {
      const Letter& L = w.letters[b.letter];
      if (L.kind == Kind::Cross)
        e.at_right.embed = opt.crossing_right_order ? swap_embed(b.sheets, L.k) : identity_embed(b.sheets);
      else if (L.kind == Kind::Right) {
        e.at_right.embed = cusp_embed(b.sheets, L.k);
        e.at_right.cusp = L.k - 1;
      } else
        e.at_right.embed = identity_embed(b.sheets);
    }
    c.edges.push_back(std::move(e));
  }
  return c;
}

CellularDga cellular_dga(const PlatWord& w, const MaslovPotential& mu, const CellOptions& opt) {
  check_potential(w, mu);
  CellularDga out;
  out.word = w;
  out.mu = mu;
  out.cells = decomposition_from_word(w, opt);
  const auto& V = out.cells.vertices;
  const auto& E = out.cells.edges;
  int rho = mu.rho;
  Dga& d = out.dga;
  d.rho = rho;

  out.vertex_mu.resize(V.size());
  for (size_t v = 0; v < V.size(); ++v) {
    const Vertex& x = V[v];
    out.vertex_mu[v] = mu.mu[x.gap];
    if (x.letter >= 0 && w.letters[x.letter].kind == Kind::Cross && opt.crossing_right_order)
      out.vertex_mu[v] = mu.mu[x.gap + 1];
  }

  out.a_gen.resize(V.size());
  for (size_t v = 0; v < V.size(); ++v) {
    int n = V[v].sheets;
    out.a_gen[v].assign(n, std::vector<int>(n, -1));
    int skip = -1;
    if (V[v].letter >= 0 && w.letters[V[v].letter].kind == Kind::Cross) skip = w.letters[V[v].letter].k - 1;
    const auto& m = out.vertex_mu[v];
    for (int span = 1; span < n; ++span)
      for (int i = 0; i + span < n; ++i) {
        int j = i + span;
        if (i == skip && j == skip + 1) continue;
        out.a_gen[v][i][j] = d.size();
        d.gens.push_back({"a@" + std::to_string(v) + ":" + std::to_string(i + 1) + "," + std::to_string(j + 1),
                          mod_deg(static_cast<long long>(m[i]) - m[j] - 1, rho)});
        Poly p;
        for (int l = i + 1; l < j; ++l) {
          int x = out.a_gen[v][i][l], y = out.a_gen[v][l][j];
          if (x >= 0 && y >= 0) p.add({x, y});
        }
        d.diff.push_back(std::move(p));
      }
  }

  auto vertex_mat = [&](int v) {
    int n = V[v].sheets;
    PolyMat m = zero_mat(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (out.a_gen[v][i][j] >= 0) m[i][j] = Poly::gen(out.a_gen[v][i][j]);
    return m;
  };
  auto embedded = [&](const Edge& e, const Attach& at, const PolyMat& m) {
    PolyMat r = zero_mat(e.sheets);
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m.size(); ++j)
        if (!m[i][j].empty()) r[at.embed[i]][at.embed[j]] = m[i][j];
    if (at.cusp >= 0) r[at.cusp][at.cusp + 1] = Poly::one();
    return r;
  };

  out.b_gen.resize(E.size());
  for (size_t ei = 0; ei < E.size(); ++ei) {
    const Edge& e = E[ei];
    int n = e.sheets;
    out.b_gen[ei].assign(n, std::vector<int>(n, -1));
    PolyMat Am = embedded(e, e.at_left, vertex_mat(e.left));
    PolyMat Ap = embedded(e, e.at_right, vertex_mat(e.right));
    const auto& m = mu.mu[e.gap];
    PolyMat B = zero_mat(n);
    for (int span = 1; span < n; ++span)
      for (int i = 0; i + span < n; ++i) {
        int j = i + span;
        int g = d.size();
        out.b_gen[ei][i][j] = g;
        d.gens.push_back({"b@" + std::to_string(ei) + ":" + std::to_string(i + 1) + "," + std::to_string(j + 1),
                          mod_deg(static_cast<long long>(m[i]) - m[j], rho)});
        // entry (i,j) of A+(I+B) + (I+B)A-, using only b's of smaller span
        Poly p = Ap[i][j] + Am[i][j];
        for (int l = i + 1; l < j; ++l) {
          if (!Ap[i][l].empty() && !B[l][j].empty()) p += Ap[i][l] * B[l][j];
          if (!B[i][l].empty() && !Am[l][j].empty()) p += B[i][l] * Am[l][j];
        }
        d.diff.push_back(std::move(p));
        B[i][j] = Poly::gen(g);
      }
  }
  validate_dga(d);
  return out;
}

BitMat boundary_matrix(const Edge& e, const Attach& at, const BitMat& vd) {
  BitMat r(e.sheets);
  for (int q = 0; q < vd.n; ++q)
    for (int p = 0; p < vd.n; ++p)
      if (vd.get(p, q)) r.set(at.embed[p], at.embed[q]);
  if (at.cusp >= 0) r.set(at.cusp, at.cusp + 1);
  return r;
}

Chd1D chd_from_aug(const CellularDga& c, const Aug& e) {
  if (static_cast<int>(e.size()) != c.dga.size()) fail("MismatchedDga", "augmentation does not match the algebra");
  Chd1D chd;
  for (size_t v = 0; v < c.cells.vertices.size(); ++v) {
    int n = c.cells.vertices[v].sheets;
    BitMat m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (c.a_gen[v][i][j] >= 0 && e[c.a_gen[v][i][j]]) m.set(i, j);
    chd.d.push_back(m);
  }
  for (size_t ei = 0; ei < c.cells.edges.size(); ++ei) {
    int n = c.cells.edges[ei].sheets;
    BitMat m = BitMat::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (e[c.b_gen[ei][i][j]]) m.set(i, j);
    chd.f.push_back(m);
  }
  std::string why = check_chd(c, chd);
  if (!why.empty()) fail("InvalidChd", why);
  return chd;
}

std::string check_chd(const CellularDga& c, const Chd1D& chd) {
  const auto& V = c.cells.vertices;
  const auto& E = c.cells.edges;
  if (chd.d.size() != V.size() || chd.f.size() != E.size()) return "wrong number of matrices";
  for (size_t v = 0; v < V.size(); ++v) {
    const BitMat& m = chd.d[v];
    if (m.n != V[v].sheets) return "d at vertex " + std::to_string(v) + " has the wrong size";
    for (int q = 0; q < m.n; ++q)
      for (int p = 0; p < m.n; ++p) {
        if (!m.get(p, q)) continue;
        int g = p < q ? c.a_gen[v][p][q] : -1;
        if (g < 0) return "d at vertex " + std::to_string(v) + " is not supported on generators";
        if (c.dga.deg(g) != 0) return "d at vertex " + std::to_string(v) + " has an entry of wrong degree";
      }
    if (!(m * m).zero()) return "d^2 != 0 at vertex " + std::to_string(v);
  }
  for (size_t ei = 0; ei < E.size(); ++ei) {
    const Edge& e = E[ei];
    const BitMat& f = chd.f[ei];
    if (f.n != e.sheets) return "f on edge " + std::to_string(ei) + " has the wrong size";
    for (int q = 0; q < f.n; ++q)
      for (int p = 0; p < f.n; ++p) {
        bool want = p == q;
        if (p > q && f.get(p, q)) return "f on edge " + std::to_string(ei) + " is not upper triangular";
        if (p == q && !f.get(p, q)) return "f on edge " + std::to_string(ei) + " is not unipotent";
        if (p < q && f.get(p, q) && c.dga.deg(c.b_gen[ei][p][q]) != 0)
          return "f on edge " + std::to_string(ei) + " has an entry of wrong degree";
        (void)want;
      }
    BitMat dm = boundary_matrix(e, e.at_left, chd.d[e.left]);
    BitMat dp = boundary_matrix(e, e.at_right, chd.d[e.right]);
    if (!(f * dm == dp * f)) return "chain map condition fails on edge " + std::to_string(ei);
  }
  return "";
}

Aug aug_from_chd(const CellularDga& c, const Chd1D& chd) {
  std::string why = check_chd(c, chd);
  if (!why.empty()) fail("InvalidChd", why);
  Aug e(c.dga.size(), 0);
  for (size_t v = 0; v < c.cells.vertices.size(); ++v)
    for (int i = 0; i < chd.d[v].n; ++i)
      for (int j = i + 1; j < chd.d[v].n; ++j)
        if (chd.d[v].get(i, j)) e[c.a_gen[v][i][j]] = 1;
  for (size_t ei = 0; ei < c.cells.edges.size(); ++ei)
    for (int i = 0; i < chd.f[ei].n; ++i)
      for (int j = i + 1; j < chd.f[ei].n; ++j)
        if (chd.f[ei].get(i, j)) e[c.b_gen[ei][i][j]] = 1;
  if (!is_augmentation(c.dga, e)) fail("InvalidChd", "diagram does not give an augmentation");
  return e;
}

Dga product_cylinder_dga(const CellularDga& c) {
  const Dga& d = c.dga;
  int n = d.size();
  Dga out;
  out.rho = d.rho;
  // i0 copy: ids 0..n-1, i1 copy: n..2n-1, hats: 2n..3n-1
  for (int g = 0; g < n; ++g) out.gens.push_back({"i0:" + d.gens[g].name, d.deg(g)});
  for (int g = 0; g < n; ++g) out.gens.push_back({"i1:" + d.gens[g].name, d.deg(g)});
  for (int g = 0; g < n; ++g) out.gens.push_back({"hat:" + d.gens[g].name, mod_deg(static_cast<long long>(d.deg(g)) + 1, d.rho)});
  std::vector<int> m0(n), m1(n);
  for (int g = 0; g < n; ++g) {
    m0[g] = g;
    m1[g] = n + g;
  }
  auto shifted = [&](const Poly& p, const std::vector<int>& map) {
    Poly r;
    for (const Mono& m : p.terms) {
      Mono x;
      for (int g : m) x.push_back(map[g]);
      r.add(x);
    }
    return r;
  };
  out.diff.resize(3 * n);
  for (int g = 0; g < n; ++g) {
    out.diff[g] = d.diff[g];
    out.diff[n + g] = shifted(d.diff[g], m1);
  }

  const auto& V = c.cells.vertices;
  const auto& E = c.cells.edges;
  // copy 0 / 1 / hat of a vertex matrix
  auto vmat = [&](int v, int copy) {
    int s = V[v].sheets;
    PolyMat m = zero_mat(s);
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) {
        int g = c.a_gen[v][i][j];
        if (g >= 0) m[i][j] = Poly::gen(copy * n + g);
      }
    return m;
  };
  auto embed = [&](const Edge& e, const Attach& at, const PolyMat& m, bool with_n) {
    PolyMat r = zero_mat(e.sheets);
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m.size(); ++j)
        if (!m[i][j].empty()) r[at.embed[i]][at.embed[j]] = m[i][j];
    if (with_n && at.cusp >= 0) r[at.cusp][at.cusp + 1] = Poly::one();
    return r;
  };
  // Vertex hats: dA^ = A1 (I + A^) + (I + A^) A0
  for (size_t v = 0; v < V.size(); ++v) {
    PolyMat A0 = vmat(v, 0), A1 = vmat(v, 1), H = vmat(v, 2);
    PolyMat r = mul(A1, with_identity(H));
    add_to(r, mul(with_identity(H), A0));
    for (int i = 0; i < V[v].sheets; ++i)
      for (int j = i + 1; j < V[v].sheets; ++j) {
        int g = c.a_gen[v][i][j];
        if (g >= 0) out.diff[2 * n + g] = r[i][j];
      }
  }
  // Edge hats: dB^ = B1 + B0 + A+^ (I + B0) + A+1 B^ + B^ A-0 + (I + B1) A-^
  for (size_t ei = 0; ei < E.size(); ++ei) {
    const Edge& e = E[ei];
    int s = e.sheets;
    PolyMat B0 = zero_mat(s), B1 = zero_mat(s), BH = zero_mat(s);
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) {
        int g = c.b_gen[ei][i][j];
        B0[i][j] = Poly::gen(g);
        B1[i][j] = Poly::gen(n + g);
        BH[i][j] = Poly::gen(2 * n + g);
      }
    PolyMat ApH = embed(e, e.at_right, vmat(e.right, 2), false);
    PolyMat AmH = embed(e, e.at_left, vmat(e.left, 2), false);
    PolyMat Ap1 = embed(e, e.at_right, vmat(e.right, 1), true);
    PolyMat Am0 = embed(e, e.at_left, vmat(e.left, 0), true);
    PolyMat r = B1;
    add_to(r, B0);
    add_to(r, mul(ApH, with_identity(B0)));
    add_to(r, mul(Ap1, BH));
    add_to(r, mul(BH, Am0));
    add_to(r, mul(with_identity(B1), AmH));
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) out.diff[2 * n + c.b_gen[ei][i][j]] = r[i][j];
  }
  validate_dga(out);
  return out;
}

bool homotopic_via_cylinder(const CellularDga& c, const Aug& e0, const Aug& e1, long long budget) {
  int n = c.dga.size();
  if (static_cast<int>(e0.size()) != n || static_cast<int>(e1.size()) != n)
    fail("MismatchedDga", "augmentations do not belong to this algebra");
  Dga cyl = product_cylinder_dga(c);
  std::vector<int8_t> fixed(3 * n, -1);
  for (int g = 0; g < n; ++g) {
    fixed[g] = static_cast<int8_t>(e0[g]);
    fixed[n + g] = static_cast<int8_t>(e1[g]);
  }
  return !extend_augmentations(cyl, fixed, budget, 1).empty();
}

}  // namespace leg
