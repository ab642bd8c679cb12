#include "leg/movie.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace leg {

namespace {

constexpr Kind L = Kind::Left, R = Kind::Right, S = Kind::Cross;

struct Tpl {
  Kind kind;
  int off;
};
struct Form {
  std::vector<Tpl> src, dst;  // forward: src -> dst
};

const std::vector<Form>& forms(Schema s) {
  static const std::vector<Form> r1 = {{{{L, 0}, {S, 1}, {R, 0}}, {}}, {{{L, 1}, {S, 0}, {R, 1}}, {}}};
  static const std::vector<Form> r2 = {{{{L, 0}, {S, -1}, {S, 0}}, {{L, -1}}},
                                       {{{L, 0}, {S, 1}, {S, 0}}, {{L, 1}}},
                                       {{{S, 0}, {S, -1}, {R, 0}}, {{R, -1}}},
                                       {{{S, 0}, {S, 1}, {R, 0}}, {{R, 1}}}};
  static const std::vector<Form> r3 = {{{{S, 0}, {S, 1}, {S, 0}}, {{S, 1}, {S, 0}, {S, 1}}}};
  static const std::vector<Form> ct = {{{{L, 0}, {S, -1}}, {{L, -1}, {S, 0}}},
                                       {{{L, 0}, {S, 1}}, {{L, 1}, {S, 0}}},
                                       {{{S, -1}, {R, 0}}, {{S, 0}, {R, -1}}},
                                       {{{S, 1}, {R, 0}}, {{S, 0}, {R, 1}}}};
  static const std::vector<Form> pinch = {{{}, {{R, 0}, {L, 0}}}};
  static const std::vector<Form> clasp = {{{{S, 0}, {S, 0}}, {}}};
  static const std::vector<Form> unknot = {{{{L, 0}, {R, 0}}, {}}};
  static const std::vector<Form> none;
  switch (s) {
    case Schema::R1: return r1;
    case Schema::R2: return r2;
    case Schema::R3: return r3;
    case Schema::CuspTangency: return ct;
    case Schema::Pinch: return pinch;
    case Schema::Clasp: return clasp;
    case Schema::Unknot: return unknot;
    default: return none;
  }
}

// Combinatorial content of a two-letter tangle: who crosses whom, which strands close,
// and the order strands leave in. Labels: input strands 0.., born strands 1000+.
struct Sig {
  std::vector<int> out;
  std::vector<std::pair<int, int>> cross, closed;
  bool operator==(const Sig&) const = default;
};

std::optional<Sig> simulate(int w0, const std::vector<std::pair<Letter, int>>& seq) {
  Sig s;
  s.out.resize(w0);
  std::iota(s.out.begin(), s.out.end(), 0);
  for (auto [x, id] : seq) {
    int n = static_cast<int>(s.out.size());
    if (x.kind == Kind::Left) {
      if (x.k < 1 || x.k > n + 1) return std::nullopt;
      s.out.insert(s.out.begin() + (x.k - 1), {1000 + 10 * id, 1001 + 10 * id});
    } else {
      if (x.k < 1 || x.k + 1 > n) return std::nullopt;
      auto pr = std::minmax(s.out[x.k - 1], s.out[x.k]);
      if (x.kind == Kind::Cross) {
        s.cross.push_back(pr);
        std::swap(s.out[x.k - 1], s.out[x.k]);
      } else {
        s.closed.push_back(pr);
        s.out.erase(s.out.begin() + (x.k - 1), s.out.begin() + (x.k + 1));
      }
    }
  }
  std::sort(s.cross.begin(), s.cross.end());
  std::sort(s.closed.begin(), s.closed.end());
  return s;
}

// For a left and a right cusp side by side: 0 when the left cusp sits above the cap,
// 1 below, -1 when a cap is followed by a cusp born in its place, -2 for other pairs.
int cusp_order(const Letter& x, const Letter& y) {
  if (x.kind == Kind::Left && y.kind == Kind::Right) return x.k < y.k ? 0 : 1;
  if (x.kind == Kind::Right && y.kind == Kind::Left) return y.k < x.k ? 0 : y.k > x.k ? 1 : -1;
  return -2;
}

MoveSite locate_comm(const PlatWord& w, const Move& m) {
  if (m.pos + 2 > w.size()) fail("NotApplicable", "Comm at " + std::to_string(m.pos) + ": needs two letters");
  Letter x = w.letters[m.pos], y = w.letters[m.pos + 1];
  int w0 = w.profile[m.pos];
  int src = cusp_order(x, y);
  int want = src == -1 ? std::max(m.variant, 0) : src;
  auto target = simulate(w0, {{x, 0}, {y, 1}});
  for (int ky = 1; ky <= w0 + 1; ++ky)
    for (int kx = 1; kx <= w0 + 3; ++kx) {
      Letter y2{y.kind, ky}, x2{x.kind, kx};
      if (y2 == x && x2 == y) continue;
      auto sig = simulate(w0, {{y2, 1}, {x2, 0}});
      if (!sig || !(*sig == *target)) continue;
      int dst = cusp_order(y2, x2);
      if (dst >= 0 && want >= 0 && dst != want) continue;
      auto letters = w.letters;
      letters[m.pos] = y2;
      letters[m.pos + 1] = x2;
      Move r = m;
      r.variant = src >= 0 ? src : dst >= 0 ? dst : 0;
      return {make_word(std::move(letters)), r, m.pos, 2, 2};
    }
  fail("NotApplicable", "Comm at " + std::to_string(m.pos) + ": letters do not commute");
}

// (new gap, old gap) pairs outside the window; a gap at the edge can match two old gaps.
std::vector<std::pair<int, int>> gap_pairs(const MoveSite& s) {
  std::vector<std::pair<int, int>> out;
  for (int g = 0; g <= s.pos; ++g) out.push_back({g, g});
  for (int g = s.pos + s.inserted; g <= s.word.size(); ++g)
    if (g != s.pos || s.removed != 0) out.push_back({g, g - s.inserted + s.removed});
  return out;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Union-find with offsets: val(x) = val(root) + w(x), arithmetic mod rho.
struct WDsu {
  int rho;
  std::vector<int> p;
  std::vector<long long> w;
  WDsu(int n, int r) : rho(r), p(n), w(n, 0) { std::iota(p.begin(), p.end(), 0); }
  long long red(long long v) const { return rho > 0 ? mod_rho(v, rho) : v; }
  int find(int x) {
    if (p[x] == x) return x;
    int r = find(p[x]);
    w[x] = red(w[x] + w[p[x]]);
    p[x] = r;
    return r;
  }
  // impose val(b) - val(a) = delta
  bool unite(int a, int b, long long delta) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return red(w[b] - w[a] - delta) == 0;
    // val(rb) = val(ra) + w[a] + delta - w[b]
    p[rb] = ra;
    w[rb] = red(w[a] + delta - w[b]);
    return true;
  }
};

}  // namespace

std::string schema_name(Schema s) {
  switch (s) {
    case Schema::Comm: return "Comm";
    case Schema::R1: return "R1";
    case Schema::R2: return "R2";
    case Schema::R3: return "R3";
    case Schema::CuspTangency: return "CuspTangency";
    case Schema::Pinch: return "Pinch";
    case Schema::Clasp: return "Clasp";
    case Schema::Unknot: return "Unknot";
  }
  return "?";
}

Schema schema_from_name(const std::string& s) {
  for (Schema x : {Schema::Comm, Schema::R1, Schema::R2, Schema::R3, Schema::CuspTangency, Schema::Pinch, Schema::Clasp,
                   Schema::Unknot})
    if (schema_name(x) == s) return x;
  fail("SchemaError", "unknown move schema '" + s + "'");
}

bool is_isotopy(Schema s) {
  return s == Schema::Comm || s == Schema::R1 || s == Schema::R2 || s == Schema::R3;
}

int euler_contribution(Schema s) {
  if (s == Schema::Pinch) return -1;
  if (s == Schema::Unknot) return 1;
  return 0;
}

MoveSite locate_move(const PlatWord& w, const Move& m) {
  if (m.pos < 0 || m.pos > w.size())
    fail("NotApplicable", schema_name(m.schema) + " at " + std::to_string(m.pos) + ": position out of range");
  if (m.schema == Schema::Comm) return locate_comm(w, m);
  const auto& fs = forms(m.schema);
  std::string why = "pattern does not match";
  int v0 = m.variant < 0 ? 0 : m.variant, v1 = m.variant < 0 ? static_cast<int>(fs.size()) : m.variant + 1;
  if (v0 >= static_cast<int>(fs.size()))
    fail("NotApplicable", schema_name(m.schema) + " has no variant " + std::to_string(m.variant));
  for (int v = v0; v < v1; ++v) {
    const auto& src = m.forward ? fs[v].src : fs[v].dst;
    const auto& dst = m.forward ? fs[v].dst : fs[v].src;
    int ns = static_cast<int>(src.size());
    if (m.pos + ns > w.size()) continue;
    bool ok = true;
    for (int i = 0; i < ns && ok; ++i) {
      const Letter& x = w.letters[m.pos + i];
      ok = x.kind == src[i].kind && x.k == m.k + src[i].off;
    }
    if (!ok) continue;
    std::vector<Letter> rep;
    for (const Tpl& t : dst) {
      if (m.k + t.off < 1) ok = false;
      rep.push_back({t.kind, m.k + t.off});
    }
    if (!ok) continue;
    std::vector<Letter> letters(w.letters.begin(), w.letters.begin() + m.pos);
    letters.insert(letters.end(), rep.begin(), rep.end());
    letters.insert(letters.end(), w.letters.begin() + m.pos + ns, w.letters.end());
    try {
      Move r = m;
      r.variant = v;
      return {make_word(std::move(letters)), r, m.pos, ns, static_cast<int>(dst.size())};
    } catch (const Error&) {
      why = "result is not a valid front";
    }
  }
  fail("NotApplicable", schema_name(m.schema) + (m.forward ? " forward" : " backward") + " at " + std::to_string(m.pos) +
                            " k=" + std::to_string(m.k) + ": " + why);
}

PlatWord apply_move(const PlatWord& w, const Move& m) { return locate_move(w, m).word; }

Move inverse_move(const Move& m) {
  Move r = m;
  r.forward = !m.forward;
  return r;
}

std::vector<MoveSite> moves_at(const PlatWord& w, Schema s, bool forward, int pos) {
  std::vector<MoveSite> out;
  int wmax = 0;
  for (int x : w.profile) wmax = std::max(wmax, x);
  if (s == Schema::Comm) {
    for (int v = 0; v < 2; ++v) try {
        auto site = locate_move(w, {s, forward, pos, 0, v});
        if (out.empty() || !(out[0].word == site.word)) out.push_back(site);
      } catch (const Error&) {
      }
    return out;
  }
  int nv = static_cast<int>(forms(s).size());
  for (int k = 1; k <= wmax + 3; ++k)
    for (int v = 0; v < nv; ++v) try {
        out.push_back(locate_move(w, {s, forward, pos, k, v}));
      } catch (const Error&) {
      }
  return out;
}

PlatWord end_word(const Movie& m) {
  PlatWord w = m.start;
  for (const Move& x : m.moves) w = apply_move(w, x);
  return w;
}

Movie compose_movies(const Movie& a, const Movie& b) {
  if (!(end_word(a) == b.start)) fail("MismatchedBoundary", "first movie does not end where the second starts");
  Movie r = a;
  r.moves.insert(r.moves.end(), b.moves.begin(), b.moves.end());
  return r;
}

std::optional<MaslovPotential> carry_potential(const MaslovPotential& mu, const PlatWord& old_word,
                                               const MoveSite& site) {
  (void)old_word;
  const PlatWord& nw = site.word;
  int rho = mu.rho;
  MaslovPotential base;
  try {
    base = maslov_potential(nw, rho);
  } catch (const Error&) {
    return std::nullopt;
  }
  Components cp = components(nw);
  StrandIndex ix(nw);
  std::vector<std::optional<long long>> off(cp.count);
  for (auto [g, og] : gap_pairs(site)) {
    for (int p = 0; p < nw.profile[g]; ++p) {
      int c = cp.comp[ix.id(g, p)];
      long long d = static_cast<long long>(mu.at(og, p)) - base.at(g, p);
      if (rho > 0) d = mod_rho(d, rho);
      if (!off[c]) off[c] = d;
      else if (*off[c] != d) return std::nullopt;
    }
  }
  std::vector<int> offs;
  for (auto& o : off) offs.push_back(o ? static_cast<int>(*o) : 0);
  return maslov_potential(nw, rho, offs);
}

std::optional<std::vector<MaslovPotential>> movie_potentials(const std::vector<PlatWord>& frames,
                                                             const std::vector<MoveSite>& sites, int rho) {
  int nf = static_cast<int>(frames.size());
  std::vector<MaslovPotential> base(nf);
  std::vector<Components> cps(nf);
  std::vector<int> first(nf + 1, 0);
  for (int f = 0; f < nf; ++f) {
    try {
      base[f] = maslov_potential(frames[f], rho);
    } catch (const Error&) {
      return std::nullopt;
    }
    cps[f] = components(frames[f]);
    first[f + 1] = first[f] + cps[f].count;
  }
  WDsu u(first[nf], rho);
  for (int f = 0; f + 1 < nf; ++f) {
    const PlatWord &ow = frames[f], &nw = frames[f + 1];
    StrandIndex io(ow), in(nw);
    for (auto [g, og] : gap_pairs(sites[f])) {
      for (int p = 0; p < nw.profile[g]; ++p) {
        int a = first[f] + cps[f].comp[io.id(og, p)], b = first[f + 1] + cps[f + 1].comp[in.id(g, p)];
        // base_f(x) + o_a = base_{f+1}(y) + o_b
        if (!u.unite(a, b, static_cast<long long>(base[f].at(og, p)) - base[f + 1].at(g, p))) return std::nullopt;
      }
    }
  }
  std::map<int, long long> root_val;
  for (int c = 0; c < cps[nf - 1].count; ++c) {
    int x = first[nf - 1] + c, r = u.find(x);
    if (!root_val.count(r)) root_val[r] = u.red(-u.w[x]);
  }
  std::vector<MaslovPotential> out(nf);
  for (int f = 0; f < nf; ++f) {
    std::vector<int> offs;
    for (int c = 0; c < cps[f].count; ++c) {
      int x = first[f] + c, r = u.find(x);
      long long rv = root_val.count(r) ? root_val[r] : 0;
      offs.push_back(static_cast<int>(u.red(rv + u.w[x])));
    }
    out[f] = maslov_potential(frames[f], rho, offs);
  }
  return out;
}

MovieStats validate_movie(const Movie& m, int rho) {
  MovieStats st;
  st.frames.push_back(m.start);
  for (size_t i = 0; i < m.moves.size(); ++i) {
    try {
      st.sites.push_back(locate_move(st.frames.back(), m.moves[i]));
    } catch (const Error& e) {
      fail(e.code(), "move " + std::to_string(i) + ": " + e.what());
    }
    st.frames.push_back(st.sites.back().word);
    st.euler += euler_contribution(m.moves[i].schema);
  }
  int nf = static_cast<int>(st.frames.size());
  std::vector<Components> cps(nf);
  std::vector<int> first(nf + 1, 0);
  for (int f = 0; f < nf; ++f) {
    cps[f] = components(st.frames[f]);
    first[f + 1] = first[f] + cps[f].count;
  }
  st.boundary_start = cps[0].count;
  st.boundary_end = cps[nf - 1].count;
  Dsu d(first[nf]);
  for (int f = 0; f + 1 < nf; ++f) {
    StrandIndex io(st.frames[f]), in(st.frames[f + 1]);
    for (auto [g, og] : gap_pairs(st.sites[f])) {
      for (int p = 0; p < st.frames[f + 1].profile[g]; ++p)
        d.unite(first[f] + cps[f].comp[io.id(og, p)], first[f + 1] + cps[f + 1].comp[in.id(g, p)]);
    }
  }
  std::set<int> roots;
  for (int x = 0; x < first[nf]; ++x) roots.insert(d.find(x));
  st.surface_components = static_cast<int>(roots.size());
  if (auto pots = movie_potentials(st.frames, st.sites, rho)) {
    st.has_potential = true;
    st.potentials = *pots;
  }
  st.orientable = rho == 2 ? st.has_potential : movie_potentials(st.frames, st.sites, 2).has_value();
  if (st.surface_components == 1 && st.orientable) {
    int twice = 2 - st.euler - st.boundary_start - st.boundary_end;
    if (twice >= 0 && twice % 2 == 0) st.genus = twice / 2;
  }
  for (size_t i = 0; i < m.moves.size(); ++i) {
    Schema s = m.moves[i].schema;
    if (s != Schema::Clasp && s != Schema::CuspTangency) continue;
    // the frame holding the two crossings; a cusp tangency hides a clasp next to its crossing
    int f = m.moves[i].forward || s == Schema::CuspTangency ? static_cast<int>(i) : static_cast<int>(i) + 1;
    int at = st.sites[i].pos;
    if (st.frames[f].letters[at].kind != Kind::Cross) ++at;
    Chord c{static_cast<int>(i), 0};
    if (st.has_potential) c.degree = crossing_degree(st.frames[f], st.potentials[f], at);
    st.chords.push_back(c);
  }
  return st;
}

std::string rule_tag(const MoveSite& site) {
  const Move& m = site.move;
  switch (m.schema) {
    case Schema::Pinch: return m.forward ? "pinch-split" : "pinch-merge";
    case Schema::Clasp: return m.forward ? "clasp-delete" : "clasp-create";
    case Schema::Unknot: return m.forward ? "unknot-delete" : "unknot-create";
    case Schema::CuspTangency: return "cusp-tangency";
    default: return "isotopy";
  }
}

McfSlice empty_slice(const PlatWord& w, const MaslovPotential& mu) { return build_mcf(w, mu, {}, true); }

// ---------------------------------------------------------------------------
// transport

namespace {

std::optional<Slide> push_right(Slide s, const Letter& x) {
  int k = x.k;
  if (x.kind == Kind::Cross) {
    if (s.u == k && s.l == k + 1) return std::nullopt;
    auto t = [&](int v) { return v == k ? k + 1 : v == k + 1 ? k : v; };
    Slide r{t(s.u), t(s.l)};
    if (r.u > r.l) return std::nullopt;
    return r;
  }
  if (x.kind == Kind::Left) {
    auto t = [&](int v) { return v >= k ? v + 2 : v; };
    return Slide{t(s.u), t(s.l)};
  }
  if (s.u == k || s.u == k + 1 || s.l == k || s.l == k + 1) return std::nullopt;
  auto t = [&](int v) { return v > k + 1 ? v - 2 : v; };
  return Slide{t(s.u), t(s.l)};
}

std::optional<Slide> push_left(Slide s, const Letter& x) {
  Letter y = x;
  if (x.kind == Kind::Left) y.kind = Kind::Right;
  else if (x.kind == Kind::Right) y.kind = Kind::Left;
  return push_right(s, y);
}

struct Engine {
  const McfSlice& c;
  const MoveSite& site;
  const MaslovPotential& mu2;
  const TransportOptions& opt;
  int a, r, m;

  Engine(const McfSlice& c_, const MoveSite& s_, const MaslovPotential& mu_, const TransportOptions& o)
      : c(c_), site(s_), mu2(mu_), opt(o), a(s_.pos), r(s_.removed), m(s_.inserted) {}

  const PlatWord& nw() const { return site.word; }

  BitMat d_left(int split) const { return r > 0 ? c.region[a].back() : c.region[a][split]; }
  BitMat d_right(int split) const { return r > 0 ? c.region[a + r][0] : c.region[a][split]; }

  std::optional<McfSlice> assemble(int split, const std::vector<std::vector<Slide>>& inner) const {
    const auto& os = c.slides;
    std::vector<Slide> prefix, suffix;
    if (r == 0) {
      prefix.assign(os[a].begin(), os[a].begin() + split);
      suffix.assign(os[a].begin() + split, os[a].end());
    } else {
      prefix = os[a];
      suffix = os[a + r];
    }
    SlideList s(nw().size() + 1);
    for (int g = 0; g < a; ++g) s[g] = os[g];
    auto cat = [](std::vector<Slide>& x, const std::vector<Slide>& y) { x.insert(x.end(), y.begin(), y.end()); };
    if (m == 0) {
      s[a] = prefix;
      cat(s[a], inner[0]);
      cat(s[a], suffix);
    } else {
      s[a] = prefix;
      cat(s[a], inner[0]);
      for (int j = 1; j < m; ++j) s[a + j] = inner[j];
      s[a + m] = inner[m];
      cat(s[a + m], suffix);
    }
    for (int g = a + m + 1; g <= nw().size(); ++g) s[g] = os[g - m + r];
    auto b = try_build_mcf(nw(), mu2, s, true);
    if (!b) return std::nullopt;
    for (int g = a + m + 1; g <= nw().size(); ++g)
      if (b->slides[g] != os[g - m + r] || b->region[g] != c.region[g - m + r]) return std::nullopt;
    if (!(b->region[a + m].back() == c.region[a + r].back())) return std::nullopt;
    return b;
  }

  // Letter j of the new window applied to d; nullopt when a wall fails.
  std::optional<BitMat> step(int j, BitMat d) const {
    const Letter& x = nw().letters[a + j];
    if (x.kind == Kind::Cross) {
      if (d.get(x.k - 1, x.k)) return std::nullopt;
      return conj_cross(d, x.k);
    }
    if (x.kind == Kind::Left) return cusp_extend(d, x.k);
    if (x.k < d.n && d.get(x.k - 1, x.k))
      for (const Slide& s : cusp_completion(d, x.k)) d = conj_slide(d, s.u, s.l);
    if (!is_split_at(d, x.k)) return std::nullopt;
    return cusp_contract(d, x.k);
  }

  std::vector<Slide> candidates(int j) const {
    int g = a + j, n = nw().profile[g];
    std::set<int> act;
    auto touch = [&](int k) {
      for (int v = k - 1; v <= k + 2; ++v)
        if (v >= 1 && v <= n) act.insert(v);
    };
    if (j < m) touch(nw().letters[g].k);
    if (j > 0) {
      const Letter& x = nw().letters[g - 1];
      touch(x.kind == Kind::Right ? x.k - 1 : x.k);
    }
    if (m == 0) {
      for (int i = 0; i < r; ++i) {
        const Letter& x = c.word.letters[a + i];
        if (i == 0) touch(x.k);
        if (i == r - 1) touch(x.kind == Kind::Right ? x.k - 1 : x.k);
      }
    }
    std::vector<Slide> out;
    for (int u = 1; u <= n; ++u)
      for (int l = u + 1; l <= n; ++l)
        if ((act.count(u) || act.count(l)) && mu2.at(g, u - 1) == mu2.at(g, l - 1)) out.push_back({u, l});
    return out;
  }

  std::optional<McfSlice> search(int split) const {
    std::vector<std::vector<Slide>> cand(m + 1);
    for (int j = 0; j <= m; ++j) cand[j] = candidates(j);
    BitMat dl = d_left(split), dr = d_right(split);
    std::vector<std::vector<Slide>> inner(m + 1);
    std::optional<McfSlice> found;
    long long nodes = 0;
    std::function<bool(int, const BitMat&, int)> rec = [&](int j, const BitMat& d, int left) -> bool {
      if (++nodes > 400000) return false;
      if (j == m) {
        if (d == dr && (found = assemble(split, inner))) return true;
      } else if (auto e = step(j, d)) {
        if (rec(j + 1, *e, left)) return true;
      }
      if (left == 0) return false;
      for (const Slide& s : cand[j]) {
        inner[j].push_back(s);
        bool ok = rec(j, conj_slide(d, s.u, s.l), left - 1);
        inner[j].pop_back();
        if (ok) return true;
      }
      return false;
    };
    for (int depth = 0; depth <= opt.search_depth; ++depth)
      if (rec(0, dl, depth)) return found;
    return std::nullopt;
  }

  std::optional<McfSlice> pushed(bool right) const {
    if (r < 2) return std::nullopt;
    std::vector<Slide> moved;
    if (right) {
      for (int g = a + 1; g < a + r; ++g)
        for (Slide s : c.slides[g]) {
          std::optional<Slide> t = s;
          for (int i = g; i < a + r && t; ++i) t = push_right(*t, c.word.letters[i]);
          if (!t) return std::nullopt;
          moved.push_back(*t);
        }
    } else {
      for (int g = a + 1; g < a + r; ++g)
        for (Slide s : c.slides[g]) {
          std::optional<Slide> t = s;
          for (int i = g - 1; i >= a && t; --i) t = push_left(*t, c.word.letters[i]);
          if (!t) return std::nullopt;
          moved.push_back(*t);
        }
    }
    if (moved.empty()) return std::nullopt;
    std::vector<std::vector<Slide>> inner(m + 1);
    inner[right ? m : 0] = moved;
    return assemble(0, inner);
  }

  std::vector<int> splits() const {
    std::vector<int> out;
    if (r > 0) return {0};
    for (int t = static_cast<int>(c.slides[a].size()); t >= 0; --t) out.push_back(t);
    return out;
  }

  // Precondition of the rule on this slice; empty when it holds.
  std::string precondition() const {
    const Move& mv = site.move;
    const PlatWord& ow = c.word;
    auto has_pair = [&](int g, int k) {
      for (const Slide& s : c.slides[g])
        if (s.u == k && s.l == k + 1) return true;
      return false;
    };
    if (mv.schema == Schema::Clasp && mv.forward && has_pair(a + 1, mv.k))
      return "handleslide between the clasp crossings joins their strands";
    if (mv.schema == Schema::Unknot && mv.forward && has_pair(a + 1, mv.k))
      return "handleslide inside the unknot";
    if (mv.schema == Schema::CuspTangency) {
      const Letter &x = ow.letters[a], &y = ow.letters[a + 1];
      int k = x.kind == Kind::Cross ? x.k : y.k;
      for (const Slide& s : c.slides[a + 1])
        if (s.u == k || s.u == k + 1 || s.l == k || s.l == k + 1)
          return "handleslide touches the crossing next to the cusp";
    }
    if (mv.schema == Schema::Pinch && mv.forward) {
      bool any = false;
      for (const BitMat& d : c.region[a]) any = any || is_split_at(d, mv.k);
      if (!any) return "complex does not split at the pinch";
    }
    return "";
  }

  std::optional<McfSlice> run() const {
    if (site.move.schema == Schema::Pinch && site.move.forward) {
      for (int t : splits())
        if (is_split_at(c.region[a][t], site.move.k))
          if (auto x = assemble(t, std::vector<std::vector<Slide>>(m + 1))) return x;
      return std::nullopt;
    }
    if (auto x = pushed(true)) return x;
    if (auto x = pushed(false)) return x;
    for (int t : splits())
      if (auto x = search(t)) return x;
    return std::nullopt;
  }

  // Clasp creation: all extensions whose forward clasp is equivalent to c.
  std::vector<McfSlice> clasp_births() const {
    std::vector<McfSlice> out;
    int k = site.move.k;
    int n = c.word.profile[a];
    std::vector<Slide> cand;
    for (int u = 1; u <= n; ++u)
      for (int l = u + 1; l <= n; ++l)
        if ((u == k || u == k + 1 || l == k || l == k + 1) && mu2.at(a, u - 1) == mu2.at(a, l - 1))
          cand.push_back({u, l});
    std::vector<std::vector<Slide>> seqs{{}};
    for (int len = 1; len <= opt.clasp_per_region; ++len) {
      std::vector<std::vector<Slide>> add;
      for (const auto& s : seqs)
        if (static_cast<int>(s.size()) == len - 1)
          for (const Slide& x : cand) {
            auto t = s;
            t.push_back(x);
            add.push_back(t);
          }
      seqs.insert(seqs.end(), add.begin(), add.end());
    }
    std::set<SlideList> seen;
    for (int t : splits()) {
      BitMat d0 = c.region[a][t];
      for (const auto& s0 : seqs) {
        BitMat d = d0;
        for (const Slide& x : s0) d = conj_slide(d, x.u, x.l);
        if (d.get(k - 1, k)) continue;
        d = conj_cross(d, k);
        if (d.get(k - 1, k)) continue;
        d = conj_cross(d, k);
        for (const auto& s2 : seqs) {
          BitMat e = d;
          for (const Slide& x : s2) e = conj_slide(e, x.u, x.l);
          if (!(e == d0)) continue;
          auto b = assemble(t, {s0, {}, s2});
          if (!b || seen.count(b->slides)) continue;
          // forward image: the same handleslides with the clasp removed
          SlideList back = c.slides;
          back[a].clear();
          back[a].insert(back[a].end(), c.slides[a].begin(), c.slides[a].begin() + t);
          back[a].insert(back[a].end(), s0.begin(), s0.end());
          back[a].insert(back[a].end(), s2.begin(), s2.end());
          back[a].insert(back[a].end(), c.slides[a].begin() + t, c.slides[a].end());
          auto img = try_build_mcf(c.word, c.mu, back, true);
          if (!img || !mcf_equivalent(*img, c)) continue;
          seen.insert(b->slides);
          out.push_back(*b);
        }
      }
    }
    return out;
  }
};

TransportResult transport_once(const McfSlice& c, const MoveSite& site, const MaslovPotential& mu2,
                               const TransportOptions& opt) {
  TransportResult res;
  res.tag = rule_tag(site);
  Engine e(c, site, mu2, opt);
  std::string pre = e.precondition();
  if (!pre.empty()) {
    res.reason = pre;
    return res;
  }
  if (site.move.schema == Schema::Clasp && !site.move.forward) {
    res.slices = e.clasp_births();
    res.ok = !res.slices.empty();
    if (!res.ok) res.reason = "no handleslide pattern creates the clasp";
    return res;
  }
  if (auto x = e.run()) {
    res.ok = true;
    res.slices.push_back(*x);
  } else {
    res.reason = "no local extension found";
  }
  return res;
}

}  // namespace

TransportResult transport(const McfSlice& c, const Move& m, const MaslovPotential& target_mu,
                          const TransportOptions& opt) {
  MoveSite site;
  try {
    site = locate_move(c.word, m);
  } catch (const Error& e) {
    TransportResult r;
    r.reason = e.what();
    return r;
  }
  TransportResult r = transport_once(c, site, target_mu, opt);
  if (r.ok || !opt.allow_normalize) return r;
  std::vector<const SrForm*> ms;
  try {
    ms = sr_matches(c);
  } catch (const Error&) {
    return r;
  }
  for (const SrForm* f : ms) {
    if (f->slice.slides == c.slides) continue;
    TransportResult r2 = transport_once(f->slice, site, target_mu, opt);
    if (r2.ok) {
      r2.normalized = true;
      r2.tag += ":normalized";
      return r2;
    }
  }
  return r;
}

TransportResult transport(const McfSlice& c, const Move& m, const TransportOptions& opt) {
  MoveSite site;
  try {
    site = locate_move(c.word, m);
  } catch (const Error& e) {
    TransportResult r;
    r.reason = e.what();
    return r;
  }
  auto mu2 = carry_potential(c.mu, c.word, site);
  if (!mu2) {
    TransportResult r;
    r.tag = rule_tag(site);
    r.reason = "no Maslov potential on the new frame agrees with the old one";
    return r;
  }
  return transport(c, m, *mu2, opt);
}

int aform_class_of(const McfSlice& c, AFormData* rep) {
  auto ctx = context_for(c.word, c.mu);
  int count = 0;
  std::vector<int> cls = aform_classes(c.word, c.mu, &count);
  const auto& forms = *ctx->aforms;
  for (int id = 0; id < count; ++id) {
    size_t i = std::find(cls.begin(), cls.end(), id) - cls.begin();
    McfSlice s = aform_from_values(c.word, c.mu, forms[i]);
    if (mcf_equivalent(s, c)) {
      if (rep) *rep = forms[i];
      return id;
    }
  }
  fail("InconsistencyError", "MCF is not equivalent to any A-form");
}

InducedSet induced_set_of_filling(const Movie& m, int rho, const TransportOptions& opt,
                                  const std::optional<McfSlice>& start, long long budget) {
  MovieStats st = validate_movie(m, rho);
  if (!st.has_potential) fail("NoPotential", "the movie carries no Maslov potential for rho=" + std::to_string(rho));
  InducedSet res;
  std::vector<McfSlice> cur;
  if (start) {
    if (!(start->word == m.start)) fail("MismatchedBoundary", "start slice lives on another front");
    McfSlice s = *start;
    if (s.mu != st.potentials[0]) s = build_mcf(s.word, st.potentials[0], s.slides, true);
    cur.push_back(s);
  } else {
    cur.push_back(empty_slice(m.start, st.potentials[0]));
  }
  for (size_t i = 0; i < m.moves.size(); ++i) {
    std::vector<McfSlice> next;
    for (const McfSlice& c : cur) {
      if (++res.explored > budget) fail("Budget", "induced set search exceeded its budget");
      TransportResult t = transport(c, m.moves[i], st.potentials[i + 1], opt);
      if (!t.ok) continue;
      for (McfSlice& s : t.slices) {
        bool dup = false;
        for (const McfSlice& o : next)
          if (same_slides(o, s) || mcf_equivalent(o, s)) {
            dup = true;
            break;
          }
        if (!dup) next.push_back(std::move(s));
      }
    }
    cur = std::move(next);
    if (cur.empty()) break;
  }
  std::vector<std::pair<int, size_t>> order;
  std::vector<AFormData> reps;
  for (size_t i = 0; i < cur.size(); ++i) {
    AFormData a;
    order.push_back({aform_class_of(cur[i], &a), i});
    reps.push_back(a);
  }
  std::sort(order.begin(), order.end());
  for (auto [id, i] : order) {
    res.classes.push_back(id);
    res.reps.push_back(reps[i]);
    res.finals.push_back(cur[i]);
  }
  return res;
}

}  // namespace leg
