#include "leg/mcf.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace leg {

int McfSlice::slide_count() const {
  int n = 0;
  for (const auto& g : slides) n += static_cast<int>(g.size());
  return n;
}

bool same_slides(const McfSlice& a, const McfSlice& b) {
  if (a.slides.size() != b.slides.size()) return false;
  return a.slides == b.slides && a.word == b.word;
}

BitMat conj_slide(const BitMat& d, int u, int l) {
  // h d h with h: S_l -> S_l + S_u
  BitMat r = d;
  int pu = u - 1, pl = l - 1;
  r.col[pl] ^= r.col[pu];  // d h
  uint32_t bu = 1u << pu, bl = 1u << pl;
  for (int q = 0; q < r.n; ++q)
    if (r.col[q] & bl) r.col[q] ^= bu;  // h (.)
  return r;
}

BitMat conj_cross(const BitMat& d, int k) {
  BitMat r = d;
  int p = k - 1, q = k;
  std::swap(r.col[p], r.col[q]);
  for (int c = 0; c < r.n; ++c) {
    uint32_t x = r.col[c];
    bool bp = (x >> p) & 1u, bq = (x >> q) & 1u;
    x &= ~((1u << p) | (1u << q));
    if (bp) x |= 1u << q;
    if (bq) x |= 1u << p;
    r.col[c] = x;
  }
  return r;
}

BitMat cusp_extend(const BitMat& d, int k) {
  BitMat r(d.n + 2);
  auto e = [&](int p) { return p < k - 1 ? p : p + 2; };
  for (int q = 0; q < d.n; ++q)
    for (int p = 0; p < d.n; ++p)
      if (d.get(p, q)) r.set(e(p), e(q));
  r.set(k - 1, k);
  return r;
}

BitMat cusp_contract(const BitMat& d, int k) {
  BitMat r(d.n - 2);
  auto e = [&](int p) { return p < k - 1 ? p : p + 2; };
  for (int q = 0; q < r.n; ++q)
    for (int p = 0; p < r.n; ++p)
      if (d.get(e(p), e(q))) r.set(p, q);
  return r;
}

bool is_split_at(const BitMat& d, int k) {
  int a = k - 1, b = k;
  if (!d.get(a, b)) return false;
  if (d.col[a]) return false;
  if (d.col[b] != (1u << a)) return false;
  for (int q = 0; q < d.n; ++q) {
    if (q == b) continue;
    if (d.get(a, q) || d.get(b, q)) return false;
  }
  return true;
}

std::vector<Slide> cusp_completion(const BitMat& d, int k) {
  std::vector<Slide> out;
  int a = k - 1, b = k;
  for (int i = a - 1; i >= 0; --i)
    if (d.get(i, b)) out.push_back({i + 1, k});
  for (int j = b + 1; j < d.n; ++j)
    if (d.get(a, j)) out.push_back({k + 1, j + 1});
  return out;
}

std::optional<McfSlice> try_build_mcf(const PlatWord& w, const MaslovPotential& mu, SlideList slides,
                                      bool complete_cusps, BuildStatus* status) {
  auto bad = [&](const std::string& code, int letter, const std::string& msg) -> std::optional<McfSlice> {
    if (status) *status = {false, code, letter, msg};
    return std::nullopt;
  };
  if (static_cast<int>(slides.size()) > w.size() + 1) return bad("StrandError", -1, "too many gaps in the handleslide list");
  slides.resize(w.size() + 1);
  McfSlice c;
  c.word = w;
  c.mu = mu;
  c.region.resize(w.size() + 1);
  BitMat d(0);
  for (int g = 0; g <= w.size(); ++g) {
    if (g < w.size() && complete_cusps && w.letters[g].kind == Kind::Right) {
      // apply existing slides first to see what remains to split
      BitMat t = d;
      for (const Slide& s : slides[g]) {
        if (s.u < 1 || s.l > t.n || s.u >= s.l) break;
        t = conj_slide(t, s.u, s.l);
      }
      int k = w.letters[g].k;
      if (k < t.n && t.get(k - 1, k))
        for (const Slide& s : cusp_completion(t, k)) slides[g].push_back(s);
    }
    c.region[g].push_back(d);
    for (const Slide& s : slides[g]) {
      if (s.u < 1 || s.l > d.n || s.u >= s.l)
        return bad("StrandError", g, "handleslide sheets out of range in gap " + std::to_string(g));
      if (mu.at(g, s.u - 1) != mu.at(g, s.l - 1))
        return bad("GradingError", g, "handleslide joins sheets of different potential in gap " + std::to_string(g));
      d = conj_slide(d, s.u, s.l);
      c.region[g].push_back(d);
    }
    if (g == w.size()) break;
    const Letter& L = w.letters[g];
    if (L.kind == Kind::Cross) {
      if (d.get(L.k - 1, L.k)) return bad("CrossingObstruction", g, "crossing strands connected at letter " + std::to_string(g));
      d = conj_cross(d, L.k);
    } else if (L.kind == Kind::Left) {
      d = cusp_extend(d, L.k);
    } else {
      if (!is_split_at(d, L.k)) return bad("CuspObstruction", g, "complex does not split at right cusp letter " + std::to_string(g));
      d = cusp_contract(d, L.k);
    }
  }
  c.slides = std::move(slides);
  if (status) *status = {true, "", -1, ""};
  return c;
}

McfSlice build_mcf(const PlatWord& w, const MaslovPotential& mu, SlideList slides, bool complete_cusps) {
  BuildStatus st;
  auto c = try_build_mcf(w, mu, std::move(slides), complete_cusps, &st);
  if (!c) fail(st.code, st.message);
  return *c;
}

std::string check_mcf(const McfSlice& c) {
  BuildStatus st;
  auto r = try_build_mcf(c.word, c.mu, c.slides, false, &st);
  if (!r) return st.code + ": " + st.message;
  if (r->region != c.region) return "region differentials do not match the handleslides";
  for (const auto& g : r->region)
    for (const BitMat& d : g)
      if (!d.strictly_upper() || !(d * d).zero()) return "region differential is not a strictly upper triangular complex";
  return "";
}

std::vector<int> crossing_letters(const PlatWord& w) {
  std::vector<int> out;
  for (int i = 0; i < w.size(); ++i)
    if (w.letters[i].kind == Kind::Cross) out.push_back(i);
  return out;
}

std::vector<int> crossing_numbers(const PlatWord& w, const AFormData& a) {
  auto cl = crossing_letters(w);
  std::vector<int> out;
  for (int x : a.crossings) {
    auto it = std::find(cl.begin(), cl.end(), x);
    if (it != cl.end()) out.push_back(static_cast<int>(it - cl.begin()) + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AFormData aform_from_numbers(const PlatWord& w, const std::vector<int>& numbers, const std::vector<int>& cusp_letters) {
  auto cl = crossing_letters(w);
  AFormData a;
  for (int n : numbers) {
    if (n < 1 || n > static_cast<int>(cl.size())) fail("NotACrossing", "no crossing b" + std::to_string(n));
    a.crossings.push_back(cl[n - 1]);
  }
  std::sort(a.crossings.begin(), a.crossings.end());
  a.cusps = cusp_letters;
  std::sort(a.cusps.begin(), a.cusps.end());
  return a;
}

namespace {

SlideList aform_slides(const PlatWord& w, const AFormData& marks) {
  SlideList s(w.size() + 1);
  for (int i : marks.crossings) {
    if (i < 0 || i >= w.size() || w.letters[i].kind != Kind::Cross) fail("NotACrossing", "mark on a non-crossing letter");
    s[i].push_back({w.letters[i].k, w.letters[i].k + 1});
  }
  for (int i : marks.cusps) {
    if (i < 0 || i >= w.size() || w.letters[i].kind != Kind::Right) fail("NotACrossing", "cusp mark on a non-cusp letter");
    s[i].push_back({w.letters[i].k, w.letters[i].k + 1});
  }
  return s;
}

void check_marks(const PlatWord& w, const MaslovPotential& mu, const AFormData& marks) {
  for (int i : marks.crossings) {
    if (i < 0 || i >= w.size() || w.letters[i].kind != Kind::Cross) fail("NotACrossing", "mark on a non-crossing letter");
    if (crossing_degree(w, mu, i) != 0) fail("GradingError", "marked crossing has nonzero degree");
  }
  if (!marks.cusps.empty() && mu.rho != 1) fail("GradingError", "cusp marks need rho = 1");
}

}  // namespace

std::optional<McfSlice> try_aform(const PlatWord& w, const MaslovPotential& mu, const AFormData& marks) {
  check_marks(w, mu, marks);
  return try_build_mcf(w, mu, aform_slides(w, marks), true);
}

McfSlice aform_from_values(const PlatWord& w, const MaslovPotential& mu, const AFormData& marks) {
  check_marks(w, mu, marks);
  return build_mcf(w, mu, aform_slides(w, marks), true);
}

std::vector<AFormData> enumerate_aforms(const PlatWord& w, const MaslovPotential& mu, long long budget) {
  std::vector<AFormData> out;
  AFormData cur;
  long long nodes = 0;
  std::function<void(int, BitMat)> rec = [&](int i, BitMat d) {
    if (++nodes > budget) fail("Budget", "A-form enumeration exceeded its budget");
    if (i == w.size()) {
      out.push_back(cur);
      return;
    }
    const Letter& L = w.letters[i];
    if (L.kind == Kind::Left) {
      rec(i + 1, cusp_extend(d, L.k));
    } else if (L.kind == Kind::Cross) {
      if (!d.get(L.k - 1, L.k)) rec(i + 1, conj_cross(d, L.k));
      if (crossing_degree(w, mu, i) == 0) {
        BitMat e = conj_slide(d, L.k, L.k + 1);
        if (!e.get(L.k - 1, L.k)) {
          cur.crossings.push_back(i);
          rec(i + 1, conj_cross(e, L.k));
          cur.crossings.pop_back();
        }
      }
    } else {
      auto close = [&](BitMat e) {
        if (!e.get(L.k - 1, L.k)) return;
        for (const Slide& s : cusp_completion(e, L.k)) e = conj_slide(e, s.u, s.l);
        if (!is_split_at(e, L.k)) return;
        rec(i + 1, cusp_contract(e, L.k));
      };
      close(d);
      if (mu.rho == 1) {
        cur.cusps.push_back(i);
        close(conj_slide(d, L.k, L.k + 1));
        cur.cusps.pop_back();
      }
    }
  };
  rec(0, BitMat(0));
  std::sort(out.begin(), out.end());
  return out;
}

BitMat standard_differential(const std::vector<int>& pair) {
  int n = static_cast<int>(pair.size());
  BitMat d(n);
  for (int j = 0; j < n; ++j)
    if (pair[j] < j) d.set(pair[j], j);
  return d;
}

std::vector<NormalRuling> enumerate_rulings(const PlatWord& w, const MaslovPotential& mu) {
  std::vector<NormalRuling> out;
  NormalRuling cur;
  cur.pair.resize(w.size() + 1);
  cur.role.assign(w.size(), Role::None);
  std::function<void(int)> rec = [&](int i) {
    if (i == w.size()) {
      out.push_back(cur);
      return;
    }
    const Letter& L = w.letters[i];
    const auto& P = cur.pair[i];
    int n = static_cast<int>(P.size());
    if (L.kind == Kind::Left) {
      std::vector<int> Q(n + 2);
      auto e = [&](int p) { return p < L.k - 1 ? p : p + 2; };
      for (int p = 0; p < n; ++p) Q[e(p)] = e(P[p]);
      Q[L.k - 1] = L.k;
      Q[L.k] = L.k - 1;
      cur.pair[i + 1] = Q;
      cur.role[i] = Role::None;
      rec(i + 1);
    } else if (L.kind == Kind::Right) {
      if (P[L.k - 1] != L.k) return;
      std::vector<int> Q(n - 2);
      auto e = [&](int p) { return p < L.k - 1 ? p : p + 2; };
      auto back = [&](int p) { return p < L.k - 1 ? p : p - 2; };
      for (int p = 0; p < n - 2; ++p) Q[p] = back(P[e(p)]);
      cur.pair[i + 1] = Q;
      cur.role[i] = Role::None;
      rec(i + 1);
    } else {
      int p = L.k - 1, q = L.k;
      int a = P[p], b = P[q];
      if (a == q) return;
      bool non_interlaced = (a < p && b > q) || (b < a && a < p) || (a > b && b > q);
      // follow the strands
      std::vector<int> Q(n);
      auto t = [&](int x) { return x == p ? q : x == q ? p : x; };
      for (int x = 0; x < n; ++x) Q[t(x)] = t(P[x]);
      cur.pair[i + 1] = Q;
      cur.role[i] = non_interlaced ? Role::Departure : Role::Return;
      rec(i + 1);
      if (non_interlaced && crossing_degree(w, mu, i) == 0) {
        cur.pair[i + 1] = P;
        cur.role[i] = Role::Switch;
        rec(i + 1);
      }
    }
  };
  rec(0);
  return out;
}

std::optional<LocalCluster> sr_cluster(const BitMat& left, const BitMat& right, int k, const std::vector<int>& mu_left,
                                       int rho, bool marked_return) {
  static std::map<std::string, std::optional<LocalCluster>> memo;
  std::ostringstream key;
  key << k << '|' << rho << '|' << marked_return << '|';
  for (uint32_t c : left.col) key << c << ',';
  key << '|';
  for (uint32_t c : right.col) key << c << ',';
  key << '|';
  for (int m : mu_left) key << m << ',';
  auto it = memo.find(key.str());
  if (it != memo.end()) return it->second;

  int n = left.n;
  auto partner = [&](int x) {
    for (int y = 0; y < n; ++y)
      if (left.get(x, y) || left.get(y, x)) return y;
    return -1;
  };
  std::set<int> S{k - 1, k};
  for (int x : {k - 1, k})
    if (partner(x) >= 0) S.insert(partner(x));
  auto mu_right = [&](int x) { return x == k - 1 ? mu_left[k] : x == k ? mu_left[k - 1] : mu_left[x]; };
  std::vector<Slide> cb, ca;
  for (int u : S)
    for (int l : S)
      if (u < l) {
        if (mu_left[u] == mu_left[l]) cb.push_back({u + 1, l + 1});
        if (mu_right(u) == mu_right(l)) ca.push_back({u + 1, l + 1});
      }
  std::optional<LocalCluster> found;
  Slide mark{k, k + 1};
  for (int total = marked_return ? 1 : 0; total <= 4 && !found; ++total) {
    for (int nb = total; nb >= 0 && !found; --nb) {
      if (marked_return && nb == 0) continue;
      int na = total - nb;
      if ((nb > 0 && cb.empty()) || (na > 0 && ca.empty())) continue;
      std::vector<int> idx(total, 0);
      auto limit = [&](int t) { return static_cast<int>(t < nb ? cb.size() : ca.size()); };
      for (;;) {
        LocalCluster lc;
        for (int t = 0; t < nb; ++t) lc.before.push_back(cb[idx[t]]);
        for (int t = 0; t < na; ++t) lc.after.push_back(ca[idx[nb + t]]);
        // adjacent equal slides cancel
        bool repeats = false;
        for (const auto* v : {&lc.before, &lc.after})
          for (size_t t = 1; t < v->size(); ++t) repeats = repeats || (*v)[t] == (*v)[t - 1];
        if (!repeats && (!marked_return || lc.before.front() == mark)) {
          BitMat d = left;
          for (const Slide& x : lc.before) d = conj_slide(d, x.u, x.l);
          if (!d.get(k - 1, k)) {
            d = conj_cross(d, k);
            for (const Slide& x : lc.after) d = conj_slide(d, x.u, x.l);
            if (d == right) {
              found = lc;
              break;
            }
          }
        }
        int t = total - 1;
        while (t >= 0 && ++idx[t] == limit(t)) idx[t--] = 0;
        if (t < 0) break;
      }
    }
  }
  memo[key.str()] = found;
  return found;
}

std::vector<SrForm> sr_enumerate(const PlatWord& w, const MaslovPotential& mu, long long budget) {
  std::vector<SrForm> out;
  long long count = 0;
  for (const NormalRuling& r : enumerate_rulings(w, mu)) {
    std::vector<int> rets, cusps;
    for (int i = 0; i < w.size(); ++i) {
      if (r.role[i] == Role::Return && crossing_degree(w, mu, i) == 0) rets.push_back(i);
      if (mu.rho == 1 && w.letters[i].kind == Kind::Right) cusps.push_back(i);
    }
    int nr = static_cast<int>(rets.size()), nc = static_cast<int>(cusps.size());
    if (nr + nc > 24) fail("Budget", "too many optional handleslide sites for SR enumeration");
    // clusters for switches and (potential) marked returns
    std::vector<std::optional<LocalCluster>> cl(w.size()), rl(w.size());
    bool usable = true;
    for (int i = 0; i < w.size() && usable; ++i) {
      const Letter& L = w.letters[i];
      if (L.kind != Kind::Cross) continue;
      BitMat left = standard_differential(r.pair[i]), right = standard_differential(r.pair[i + 1]);
      if (r.role[i] == Role::Switch) {
        cl[i] = sr_cluster(left, right, L.k, mu.mu[i], mu.rho, false);
        if (!cl[i]) usable = false;
      }
      if (std::find(rets.begin(), rets.end(), i) != rets.end()) rl[i] = sr_cluster(left, right, L.k, mu.mu[i], mu.rho, true);
    }
    if (!usable) fail("InconsistencyError", "no handleslide pattern found for a switch");
    for (long long mask = 0; mask < (1LL << (nr + nc)); ++mask) {
      if (++count > budget) fail("Budget", "SR enumeration exceeded its budget");
      SrForm f;
      f.ruling = r;
      SlideList s(w.size() + 1);
      std::vector<char> marked(w.size(), 0);
      bool ok = true;
      for (int t = 0; t < nr; ++t)
        if (mask >> t & 1) {
          if (!rl[rets[t]]) ok = false;
          marked[rets[t]] = 1;
          f.returns.push_back(rets[t]);
        }
      if (!ok) continue;
      for (int t = 0; t < nc; ++t)
        if (mask >> (nr + t) & 1) f.cusps.push_back(cusps[t]);
      for (int g = 0; g <= w.size(); ++g) {
        if (g > 0) {
          int i = g - 1;
          if (cl[i]) for (const Slide& x : cl[i]->after) s[g].push_back(x);
          if (marked[i]) for (const Slide& x : rl[i]->after) s[g].push_back(x);
        }
        if (g < w.size()) {
          if (cl[g]) for (const Slide& x : cl[g]->before) s[g].push_back(x);
          if (marked[g]) for (const Slide& x : rl[g]->before) s[g].push_back(x);
          if (std::find(f.cusps.begin(), f.cusps.end(), g) != f.cusps.end())
            s[g].push_back({w.letters[g].k, w.letters[g].k + 1});
        }
      }
      auto c = try_build_mcf(w, mu, s, true);
      if (!c) fail("InconsistencyError", "SR-form handleslide set failed to build");
      if (c->slides != s) fail("InconsistencyError", "SR-form needed extra cusp handleslides");
      f.slice = std::move(*c);
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::shared_ptr<McfContext> context_for(const PlatWord& w, const MaslovPotential& mu) {
  static std::map<std::string, std::shared_ptr<McfContext>> cache;
  std::ostringstream key;
  key << render_word(w) << '|' << mu.rho << '|';
  for (const auto& g : mu.mu) {
    for (int v : g) key << v << ',';
    key << ';';
  }
  auto it = cache.find(key.str());
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<McfContext>();
  ctx->word = w;
  ctx->mu = mu;
  ctx->cell = cellular_dga(w, mu);
  cache[key.str()] = ctx;
  return ctx;
}

Chd1D phi_chd(const McfSlice& c, const CellularDga& cell) {
  Chd1D chd;
  const PlatWord& w = c.word;
  for (const Vertex& v : cell.cells.vertices) {
    if (v.letter < 0) {
      chd.d.push_back(c.region[v.gap].front());
      continue;
    }
    const Letter& L = w.letters[v.letter];
    if (L.kind == Kind::Right) chd.d.push_back(c.region[v.letter + 1].front());
    else chd.d.push_back(c.region[v.letter].back());
  }
  for (const Edge& e : cell.cells.edges) {
    BitMat f = BitMat::identity(e.sheets);
    const Vertex& rv = cell.cells.vertices[e.right];
    bool carries = rv.letter >= 0 && rv.letter == e.gap;
    if (carries)
      for (const Slide& s : c.slides[e.gap]) {
        BitMat h = BitMat::identity(e.sheets);
        h.set(s.u - 1, s.l - 1);
        f = h * f;
      }
    chd.f.push_back(f);
  }
  return chd;
}

Aug phi_to_cell_aug(const McfSlice& c) {
  auto ctx = context_for(c.word, c.mu);
  Chd1D chd = phi_chd(c, ctx->cell);
  return aug_from_chd(ctx->cell, chd);
}

bool mcf_equivalent(const McfSlice& a, const McfSlice& b) {
  if (!(a.word == b.word) || a.mu != b.mu) fail("MismatchedDga", "slices live on different fronts");
  auto ctx = context_for(a.word, a.mu);
  return is_homotopic(ctx->cell.dga, phi_to_cell_aug(a), phi_to_cell_aug(b)).homotopic;
}

namespace {

const std::vector<SrForm>& srs_of(McfContext& ctx) {
  if (!ctx.srs) {
    ctx.srs = sr_enumerate(ctx.word, ctx.mu);
    ctx.sr_augs.clear();
    for (const SrForm& f : *ctx.srs) ctx.sr_augs.push_back(aug_from_chd(ctx.cell, phi_chd(f.slice, ctx.cell)));
  }
  return *ctx.srs;
}

}  // namespace

std::vector<const SrForm*> sr_matches(const McfSlice& c) {
  auto ctx = context_for(c.word, c.mu);
  const auto& srs = srs_of(*ctx);
  Aug e = phi_to_cell_aug(c);
  std::vector<const SrForm*> out;
  for (size_t t = 0; t < srs.size(); ++t)
    if (is_homotopic(ctx->cell.dga, e, ctx->sr_augs[t]).homotopic) out.push_back(&srs[t]);
  return out;
}

SrNormalized sr_normalize(const McfSlice& c) {
  auto ctx = context_for(c.word, c.mu);
  const auto& srs = srs_of(*ctx);
  for (const SrForm& f : srs)
    if (f.slice.slides == c.slides) return {f, true};
  auto m = sr_matches(c);
  if (m.empty()) fail("InconsistencyError", "no SR-form is equivalent to the given MCF");
  return {*m.front(), false};
}

std::vector<int> aform_classes(const PlatWord& w, const MaslovPotential& mu, int* count) {
  auto ctx = context_for(w, mu);
  if (!ctx->aforms) ctx->aforms = enumerate_aforms(w, mu);
  std::vector<Aug> reps;
  std::vector<int> cls;
  for (const AFormData& a : *ctx->aforms) {
    Aug e = phi_to_cell_aug(aform_from_values(w, mu, a));
    int found = -1;
    for (size_t r = 0; r < reps.size() && found < 0; ++r)
      if (is_homotopic(ctx->cell.dga, reps[r], e).homotopic) found = static_cast<int>(r);
    if (found < 0) {
      found = static_cast<int>(reps.size());
      reps.push_back(e);
    }
    cls.push_back(found);
  }
  if (count) *count = static_cast<int>(reps.size());
  return cls;
}

}  // namespace leg
