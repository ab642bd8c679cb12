#include "leg/front.hpp"

#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>

namespace leg {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Edges between strand nodes. kind 0: same strand, 1: cusp pair (upper, lower).
struct Edge {
  int a, b, kind;
};

std::vector<Edge> strand_edges(const PlatWord& w, const StrandIndex& ix) {
  std::vector<Edge> es;
  for (int i = 0; i < w.size(); ++i) {
    const Letter& L = w.letters[i];
    int n = w.profile[i], k = L.k - 1;
    switch (L.kind) {
      case Kind::Cross:
        for (int p = 0; p < n; ++p) {
          int q = p == k ? k + 1 : p == k + 1 ? k : p;
          es.push_back({ix.id(i, p), ix.id(i + 1, q), 0});
        }
        break;
      case Kind::Left:
        for (int p = 0; p < n; ++p) es.push_back({ix.id(i, p), ix.id(i + 1, p < k ? p : p + 2), 0});
        es.push_back({ix.id(i + 1, k), ix.id(i + 1, k + 1), 1});
        break;
      case Kind::Right:
        for (int p = 0; p < n; ++p) {
          if (p == k || p == k + 1) continue;
          es.push_back({ix.id(i, p), ix.id(i + 1, p < k ? p : p - 2), 0});
        }
        es.push_back({ix.id(i, k), ix.id(i, k + 1), 1});
        break;
    }
  }
  return es;
}

}  // namespace

std::vector<int> profile_of(const std::vector<Letter>& letters, int start_width) {
  std::vector<int> prof{start_width};
  int n = start_width;
  for (size_t i = 0; i < letters.size(); ++i) {
    const Letter& L = letters[i];
    bool ok = L.k >= 1;
    if (L.kind == Kind::Left) {
      ok = ok && L.k <= n + 1;
      n += 2;
    } else {
      ok = ok && L.k <= n - 1;
      if (L.kind == Kind::Right) n -= 2;
    }
    if (!ok)
      fail("StrandError", "letter " + std::to_string(i) + " (" + render_letter(L) +
                              ") out of range for " + std::to_string(prof.back()) + " strands");
    prof.push_back(n);
  }
  return prof;
}

PlatWord make_word(std::vector<Letter> letters) {
  PlatWord w;
  w.profile = profile_of(letters, 0);
  if (w.profile.back() != 0)
    fail("OpenEndsError", std::to_string(w.profile.back()) + " strands left open");
  w.letters = std::move(letters);
  return w;
}

PlatWord parse_word(std::string_view text) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    char c = tok[0];
    if ((c != 'l' && c != 'r' && c != 's') || tok.size() < 2)
      fail("LexError", "bad token '" + tok + "'");
    for (size_t j = 1; j < tok.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(tok[j]))) fail("LexError", "bad token '" + tok + "'");
    if (tok.size() > 6) fail("LexError", "index too large in '" + tok + "'");
    letters.push_back({static_cast<Kind>(c), std::stoi(tok.substr(1))});
  }
  return make_word(std::move(letters));
}

std::string render_letter(const Letter& l) {
  return std::string(1, static_cast<char>(l.kind)) + std::to_string(l.k);
}

std::string render_word(const PlatWord& w) {
  std::string s;
  for (const Letter& l : w.letters) {
    if (!s.empty()) s += ' ';
    s += render_letter(l);
  }
  return s;
}

StrandIndex::StrandIndex(const PlatWord& w) {
  offset.resize(w.profile.size());
  for (size_t g = 0; g < w.profile.size(); ++g) {
    offset[g] = total;
    total += w.profile[g];
  }
}

Components components(const PlatWord& w) {
  StrandIndex ix(w);
  auto es = strand_edges(w, ix);
  Dsu dsu(ix.total);
  std::vector<std::vector<std::pair<int, int>>> adj(ix.total);
  for (const Edge& e : es) {
    dsu.unite(e.a, e.b);
    adj[e.a].push_back({e.b, e.kind});
    adj[e.b].push_back({e.a, e.kind});
  }
  Components c;
  c.comp.assign(ix.total, -1);
  c.dir.assign(ix.total, 0);
  // Components are numbered by their first left cusp; the upper branch there runs rightward.
  for (int i = 0; i < w.size(); ++i) {
    if (w.letters[i].kind != Kind::Left) continue;
    int start = ix.id(i + 1, w.letters[i].k - 1);
    if (c.comp[start] != -1) continue;
    int id = c.count++;
    c.first_cusp.push_back(i);
    std::queue<int> q;
    q.push(start);
    c.comp[start] = id;
    c.dir[start] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [u, kind] : adj[v]) {
        if (c.comp[u] != -1) continue;
        c.comp[u] = id;
        c.dir[u] = kind == 0 ? c.dir[v] : -c.dir[v];
        q.push(u);
      }
    }
  }
  return c;
}

namespace {

ClassicalInvariants invariants_with(const PlatWord& w, Components c, int flip) {
  StrandIndex ix(w);
  if (flip >= 0)
    for (int v = 0; v < ix.total; ++v)
      if (c.comp[v] == flip) c.dir[v] = -c.dir[v];
  ClassicalInvariants out;
  out.rot.assign(c.count, 0);
  out.self_tb.assign(c.count, 0);
  std::vector<int> down(c.count, 0), up(c.count, 0);
  for (int i = 0; i < w.size(); ++i) {
    const Letter& L = w.letters[i];
    int k = L.k - 1;
    if (L.kind == Kind::Cross) {
      int a = ix.id(i, k), b = ix.id(i, k + 1);
      int sign = c.dir[a] == c.dir[b] ? 1 : -1;
      out.writhe += sign;
      if (c.comp[a] == c.comp[b]) out.self_tb[c.comp[a]] += sign;
    } else {
      int gap = L.kind == Kind::Left ? i + 1 : i;
      int upper = ix.id(gap, k);
      int comp = c.comp[upper];
      // Left cusp traversed downward when the upper branch runs leftward.
      bool downward = L.kind == Kind::Left ? c.dir[upper] < 0 : c.dir[upper] > 0;
      (downward ? down : up)[comp]++;
      if (L.kind == Kind::Right) out.self_tb[comp] -= 1;
    }
  }
  int rights = 0;
  for (const Letter& L : w.letters) rights += L.kind == Kind::Right;
  out.tb = out.writhe - rights;
  for (int j = 0; j < c.count; ++j) out.rot[j] = (down[j] - up[j]) / 2;
  return out;
}

}  // namespace

ClassicalInvariants classical_invariants(const PlatWord& w) {
  return invariants_with(w, components(w), -1);
}

ClassicalInvariants classical_invariants_flipped(const PlatWord& w, int component) {
  return invariants_with(w, components(w), component);
}

int mod_rho(long long v, int rho) {
  if (rho == 0) return static_cast<int>(v);
  long long r = v % rho;
  return static_cast<int>(r < 0 ? r + rho : r);
}

MaslovPotential maslov_potential(const PlatWord& w, int rho, const std::vector<int>& offsets) {
  if (rho < 0) fail("NoPotential", "negative modulus");
  StrandIndex ix(w);
  auto es = strand_edges(w, ix);
  // Edge weight: value(b) - value(a). Cusp edges run (upper, lower): lower = upper - 1.
  std::vector<std::vector<std::pair<int, int>>> adj(ix.total);
  for (const Edge& e : es) {
    int wgt = e.kind == 0 ? 0 : -1;
    adj[e.a].push_back({e.b, wgt});
    adj[e.b].push_back({e.a, -wgt});
  }
  std::vector<long long> val(ix.total, 0);
  std::vector<char> seen(ix.total, 0);
  int comp = 0;
  for (int i = 0; i < w.size(); ++i) {
    if (w.letters[i].kind != Kind::Left) continue;
    int start = ix.id(i + 1, w.letters[i].k);  // lower branch
    if (seen[start]) continue;
    long long off = comp < static_cast<int>(offsets.size()) ? offsets[comp] : 0;
    ++comp;
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    val[start] = off;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [u, wgt] : adj[v]) {
        long long want = val[v] + wgt;
        if (!seen[u]) {
          seen[u] = 1;
          val[u] = want;
          q.push(u);
        } else if (mod_rho(val[u] - want, rho) != 0) {
          fail("NoPotential", "rho=" + std::to_string(rho) + " does not divide twice the rotation number of component " +
                                  std::to_string(comp - 1));
        }
      }
    }
  }
  MaslovPotential mp;
  mp.rho = rho;
  mp.mu.resize(w.profile.size());
  for (size_t g = 0; g < w.profile.size(); ++g)
    for (int p = 0; p < w.profile[g]; ++p) mp.mu[g].push_back(mod_rho(val[ix.id(static_cast<int>(g), p)], rho));
  return mp;
}

int crossing_degree(const PlatWord& w, const MaslovPotential& mu, int i) {
  if (i < 0 || i >= w.size() || w.letters[i].kind != Kind::Cross)
    fail("NotACrossing", "letter " + std::to_string(i) + " is not a crossing");
  int k = w.letters[i].k - 1;
  return deg_diff(mu.at(i, k), mu.at(i, k + 1), mu.rho);
}

namespace {

// Determinant of an integer matrix by fraction-free elimination.
__int128 bareiss(std::vector<std::vector<__int128>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  __int128 sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Alexander-type matrix with over = descending strand; t = -1 gives the coloring matrix.
long long alexander_matrix_det(const PlatWord& w, long long t) {
  StrandIndex ix(w);
  Components c = components(w);
  if (c.count != 1) return 0;
  Dsu arcs(ix.total);
  std::vector<int> under_left, under_right, over_node, sign;
  for (int i = 0; i < w.size(); ++i) {
    const Letter& L = w.letters[i];
    int n = w.profile[i], k = L.k - 1;
    if (L.kind == Kind::Cross) {
      // The under strand (left k+1 to right k) is broken here.
      for (int p = 0; p < n; ++p) {
        if (p == k + 1) continue;
        int q = p == k ? k + 1 : p;
        arcs.unite(ix.id(i, p), ix.id(i + 1, q));
      }
      under_left.push_back(ix.id(i, k + 1));
      under_right.push_back(ix.id(i + 1, k));
      over_node.push_back(ix.id(i, k));
      sign.push_back(c.dir[ix.id(i, k)] == c.dir[ix.id(i, k + 1)] ? 1 : -1);
    } else if (L.kind == Kind::Left) {
      for (int p = 0; p < n; ++p) arcs.unite(ix.id(i, p), ix.id(i + 1, p < k ? p : p + 2));
      arcs.unite(ix.id(i + 1, k), ix.id(i + 1, k + 1));
    } else {
      for (int p = 0; p < n; ++p)
        if (p != k && p != k + 1) arcs.unite(ix.id(i, p), ix.id(i + 1, p < k ? p : p - 2));
      arcs.unite(ix.id(i, k), ix.id(i, k + 1));
    }
  }
  int nc = static_cast<int>(over_node.size());
  if (nc == 0) return 1;
  std::vector<int> arc_id(ix.total, -1);
  int na = 0;
  for (int v = 0; v < ix.total; ++v) {
    int r = arcs.find(v);
    if (arc_id[r] == -1) arc_id[r] = na++;
    arc_id[v] = arc_id[r];
  }
  if (na != nc) return 0;
  std::vector<std::vector<__int128>> m(nc, std::vector<__int128>(na, 0));
  for (int j = 0; j < nc; ++j) {
    int o = arc_id[over_node[j]];
    int in = arc_id[under_left[j]], out = arc_id[under_right[j]];
    if (c.dir[under_left[j]] < 0) std::swap(in, out);
    m[j][o] += 1 - t;
    if (sign[j] > 0) {
      m[j][in] += t;
      m[j][out] -= 1;
    } else {
      m[j][in] -= 1;
      m[j][out] += t;
    }
  }
  m.pop_back();
  for (auto& row : m) row.pop_back();
  __int128 d = bareiss(m);
  if (d < 0) d = -d;
  return static_cast<long long>(d);
}

}  // namespace

long long knot_determinant(const PlatWord& w) { return alexander_matrix_det(w, -1); }

long long alexander_at(const PlatWord& w, long long t) {
  long long d = alexander_matrix_det(w, t);
  if (t != 0 && t != 1 && t != -1)
    while (d != 0 && d % t == 0) d /= t;
  return d;
}

}  // namespace leg
