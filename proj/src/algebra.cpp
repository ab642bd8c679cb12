#include "leg/algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>

#include "leg/gf2.hpp"

namespace leg {

Poly operator+(Poly a, const Poly& b) {
  a += b;
  return a;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const Mono& x : a.terms)
    for (const Mono& y : b.terms) {
      Mono m = x;
      m.insert(m.end(), y.begin(), y.end());
      out.add(m);
    }
  return out;
}

int Dga::find(const std::string& name) const {
  for (int g = 0; g < size(); ++g)
    if (gens[g].name == name) return g;
  return -1;
}

int mono_degree(const Dga& d, const Mono& m) {
  long long s = 0;
  for (int g : m) s += d.gens[g].deg;
  return mod_deg(s, d.rho);
}

namespace {

// d applied to a single monomial by the Leibniz rule (no signs over GF(2)).
void d_mono(const Dga& d, const Mono& m, Poly& out) {
  for (size_t k = 0; k < m.size(); ++k) {
    for (const Mono& t : d.diff[m[k]].terms) {
      Mono r(m.begin(), m.begin() + k);
      r.insert(r.end(), t.begin(), t.end());
      r.insert(r.end(), m.begin() + k + 1, m.end());
      out.add(r);
    }
  }
}

}  // namespace

int mod_deg(long long v, int rho) {
  if (rho == 0) return static_cast<int>(v);
  long long r = v % rho;
  return static_cast<int>(r < 0 ? r + rho : r);
}

Poly apply_d(const Dga& d, const Poly& p) {
  Poly out;
  for (const Mono& m : p.terms) d_mono(d, m, out);
  return out;
}

Poly substitute(const Poly& p, const std::vector<Poly>& images) {
  Poly out;
  for (const Mono& m : p.terms) {
    Poly acc = Poly::one();
    for (int g : m) {
      acc = acc * images[g];
      if (acc.empty()) break;
    }
    out += acc;
  }
  return out;
}

void validate_dga(const Dga& d) {
  if (d.rho < 0) fail("DegreeError", "negative grading modulus");
  if (static_cast<int>(d.diff.size()) != d.size()) fail("NotTriangular", "differential missing for some generator");
  std::set<std::string> names;
  for (const Generator& g : d.gens)
    if (!names.insert(g.name).second) fail("NameClash", "duplicate generator " + g.name);
  for (int x = 0; x < d.size(); ++x) {
    for (const Mono& m : d.diff[x].terms) {
      for (int g : m)
        if (g < 0 || g >= x)
          fail("NotTriangular", "d(" + d.gens[x].name + ") uses a generator that is not earlier");
      if (mono_degree(d, m) != mod_deg(static_cast<long long>(d.deg(x)) - 1, d.rho))
        fail("DegreeError", "a monomial of d(" + d.gens[x].name + ") has the wrong degree");
    }
  }
  for (int x = 0; x < d.size(); ++x)
    if (!apply_d(d, d.diff[x]).empty()) fail("NotSquareZero", "d^2(" + d.gens[x].name + ") != 0");
}

Dga build_dga(int rho, std::vector<Generator> gens, std::vector<Poly> diff) {
  Dga d{rho, std::move(gens), std::move(diff)};
  for (Generator& g : d.gens) g.deg = mod_deg(g.deg, rho);
  validate_dga(d);
  return d;
}

void validate_morphism(const Dga& src, const Dga& dst, const DgaMorphism& f) {
  if (static_cast<int>(f.images.size()) != src.size()) fail("DegreeError", "morphism images do not match generators");
  if (src.rho != dst.rho) fail("DegreeError", "grading moduli differ");
  for (int x = 0; x < src.size(); ++x) {
    for (const Mono& m : f.images[x].terms) {
      for (int g : m)
        if (g < 0 || g >= dst.size()) fail("DegreeError", "image uses an unknown generator");
      if (mono_degree(dst, m) != src.deg(x)) fail("DegreeError", "image of " + src.gens[x].name + " has wrong degree");
    }
    if (apply_d(dst, f.images[x]) != substitute(src.diff[x], f.images))
      fail("NotSquareZero", "morphism does not commute with d at " + src.gens[x].name);
  }
}

DgaMorphism identity_morphism(const Dga& d) {
  DgaMorphism f;
  for (int g = 0; g < d.size(); ++g) f.images.push_back(Poly::gen(g));
  return f;
}

bool eval(const Aug& e, const Mono& m) {
  for (int g : m)
    if (!e[g]) return false;
  return true;
}

bool eval(const Aug& e, const Poly& p) {
  bool v = false;
  for (const Mono& m : p.terms) v ^= eval(e, m);
  return v;
}

bool is_augmentation(const Dga& d, const Aug& e) {
  if (static_cast<int>(e.size()) != d.size()) return false;
  for (int g = 0; g < d.size(); ++g) {
    if (e[g] && d.deg(g) != 0) return false;
    if (eval(e, d.diff[g])) return false;
  }
  return true;
}

Aug pull_back(const Aug& e, const std::vector<Poly>& images) {
  Aug out(images.size());
  for (size_t g = 0; g < images.size(); ++g) out[g] = eval(e, images[g]);
  return out;
}

HomotopyWitness is_homotopic(const Dga& d, const Aug& e1, const Aug& e2) {
  if (static_cast<int>(e1.size()) != d.size() || static_cast<int>(e2.size()) != d.size())
    fail("MismatchedDga", "augmentations do not belong to this algebra");
  int minus_one = mod_deg(-1, d.rho);
  std::vector<int> var(d.size(), -1), gen_of;
  for (int g = 0; g < d.size(); ++g)
    if (d.deg(g) == minus_one) {
      var[g] = static_cast<int>(gen_of.size());
      gen_of.push_back(g);
    }
  int nv = static_cast<int>(gen_of.size());
  std::vector<BitRow> rows;
  std::vector<uint8_t> rhs;
  for (int g = 0; g < d.size(); ++g) {
    uint8_t r = e1[g] ^ e2[g];
    BitRow row(nv);
    for (const Mono& m : d.diff[g].terms) {
      // K(x1..xn) = sum_k e1(x1..x_{k-1}) K(x_k) e2(x_{k+1}..x_n)
      size_t n = m.size();
      std::vector<uint8_t> suffix(n + 1, 1);
      for (size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] && e2[m[k]];
      bool prefix = true;
      for (size_t k = 0; k < n && prefix; ++k) {
        if (var[m[k]] >= 0 && suffix[k + 1]) row.flip(var[m[k]]);
        prefix = e1[m[k]];
      }
    }
    if (!row.any()) {
      if (r) return {};
      continue;
    }
    rows.push_back(std::move(row));
    rhs.push_back(r);
  }
  auto sol = gf2_solve(rows, rhs, nv);
  if (!sol) return {};
  HomotopyWitness w;
  w.homotopic = true;
  for (int v = 0; v < nv; ++v) w.K[gen_of[v]] = (*sol)[v];
  return w;
}

std::vector<Aug> extend_augmentations(const Dga& d, const std::vector<int8_t>& fixed, long long budget,
                                     size_t limit) {
  // Free variables: unfixed degree-0 generators in order. A constraint eps(d x) = 0 is
  // checked as soon as its last free variable is assigned.
  std::vector<int> var(d.size(), -1), gen_of;
  std::vector<uint8_t> base(d.size(), 0);
  for (int g = 0; g < d.size(); ++g) {
    if (!fixed.empty() && fixed[g] >= 0) {
      if (fixed[g] && d.deg(g) != 0) return {};
      base[g] = static_cast<uint8_t>(fixed[g]);
    } else if (d.deg(g) == 0) {
      var[g] = static_cast<int>(gen_of.size());
      gen_of.push_back(g);
    }
  }
  int nv = static_cast<int>(gen_of.size());
  struct Constraint {
    std::vector<std::vector<int>> monos;  // in variable ids
    bool constant = false;
  };
  std::vector<std::vector<Constraint>> at(nv + 1);
  for (int g = 0; g < d.size(); ++g) {
    Constraint c;
    int last = -1;
    for (const Mono& m : d.diff[g].terms) {
      std::vector<int> vs;
      bool live = true;
      for (int x : m) {
        if (var[x] >= 0) vs.push_back(var[x]);
        else if (!base[x]) {
          live = false;
          break;
        }
      }
      if (!live) continue;
      if (vs.empty()) c.constant = !c.constant;
      else {
        for (int v : vs) last = std::max(last, v);
        c.monos.push_back(std::move(vs));
      }
    }
    if (c.monos.empty()) {
      if (c.constant) return {};
      continue;
    }
    at[last].push_back(std::move(c));
  }
  std::vector<Aug> out;
  std::vector<uint8_t> val(nv, 0);
  long long visited = 0;
  std::function<void(int)> rec = [&](int v) {
    if (out.size() >= limit) return;
    if (++visited > budget)
      fail("Budget", "augmentation search exceeded " + std::to_string(budget) +
                         " candidates; cancel stabilization pairs first (reduce_dga)");
    if (v == nv) {
      Aug e = base;
      for (int j = 0; j < nv; ++j) e[gen_of[j]] = val[j];
      out.push_back(std::move(e));
      return;
    }
    for (uint8_t b = 0; b < 2; ++b) {
      val[v] = b;
      bool ok = true;
      for (const Constraint& c : at[v]) {
        bool s = c.constant;
        for (const auto& m : c.monos) {
          bool p = true;
          for (int x : m)
            if (!val[x]) {
              p = false;
              break;
            }
          s ^= p;
        }
        if (s) {
          ok = false;
          break;
        }
      }
      if (ok) rec(v + 1);
    }
    val[v] = 0;
  };
  rec(0);
  return out;
}

std::vector<Aug> enumerate_augmentations(const Dga& d, long long budget) {
  return extend_augmentations(d, {}, budget, SIZE_MAX);
}

std::vector<AugClass> partition_classes(const Dga& d, const std::vector<Aug>& augs) {
  std::vector<AugClass> classes;
  for (const Aug& e : augs) {
    bool placed = false;
    for (AugClass& c : classes)
      if (is_homotopic(d, c.rep, e).homotopic) {
        c.members.push_back(e);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({e, {e}});
  }
  return classes;
}

std::vector<AugClass> homotopy_classes(const Dga& d, long long budget) {
  return partition_classes(d, enumerate_augmentations(d, budget));
}

int class_of(const Dga& d, const std::vector<AugClass>& classes, const Aug& e) {
  for (size_t c = 0; c < classes.size(); ++c)
    if (is_homotopic(d, classes[c].rep, e).homotopic) return static_cast<int>(c);
  return -1;
}

CancelResult cancel_pair(const Dga& d, int i, int j) {
  if (i < 0 || i >= d.size() || j < 0 || j >= d.size() || i == j)
    fail("NotCancellable", "generator index out of range");
  const Poly& di = d.diff[i];
  if (!di.terms.count(Mono{j}))
    fail("NotCancellable", "d(" + d.gens[i].name + ") has no linear term " + d.gens[j].name);
  Poly w = di;
  w.add(Mono{j});
  for (const Mono& m : w.terms)
    for (int g : m)
      if (g >= j) fail("NotCancellable", "remainder of d(" + d.gens[i].name + ") is not below " + d.gens[j].name);

  CancelResult res;
  std::vector<int> newidx(d.size(), -1);
  for (int g = 0; g < d.size(); ++g)
    if (g != i && g != j) {
      newidx[g] = static_cast<int>(res.kept.size());
      res.kept.push_back(g);
    }
  res.projection.resize(d.size());
  for (int g = 0; g < d.size(); ++g) {
    if (g == i) continue;
    if (g == j) continue;
    res.projection[g] = Poly::gen(newidx[g]);
  }
  res.projection[j] = substitute(w, res.projection);  // w only involves generators below j

  Dga q;
  q.rho = d.rho;
  for (int g : res.kept) {
    q.gens.push_back(d.gens[g]);
    q.diff.push_back(substitute(d.diff[g], res.projection));
  }
  validate_dga(q);
  res.quotient = std::move(q);

  // G = g o p on original generators; H is the (G, id)-derivation with H(x_j) = x_i.
  std::vector<Poly> G(d.size());
  auto H = [&](const Poly& p) {
    Poly out;
    for (const Mono& m : p.terms) {
      for (size_t k = 0; k < m.size(); ++k) {
        if (m[k] != j) continue;
        Poly pre = Poly::one();
        for (size_t t = 0; t < k; ++t) pre = pre * G[m[t]];
        Mono rest{i};
        rest.insert(rest.end(), m.begin() + k + 1, m.end());
        out += pre * Poly{{rest}};
      }
    }
    return out;
  };
  for (int g = 0; g < d.size(); ++g) {
    if (g == i) continue;
    if (g == j) G[g] = substitute(w, G);
    else G[g] = Poly::gen(g) + H(d.diff[g]);
  }
  for (int g : res.kept) res.g.push_back(G[g]);
  res.H = {j, i};
  return res;
}

namespace {

Dga reorder(const Dga& d, const std::vector<int>& order, std::vector<int>& pos) {
  pos.assign(d.size(), -1);
  for (size_t t = 0; t < order.size(); ++t) pos[order[t]] = static_cast<int>(t);
  Dga r;
  r.rho = d.rho;
  for (int g : order) {
    r.gens.push_back(d.gens[g]);
    Poly p;
    for (const Mono& m : d.diff[g].terms) {
      Mono n;
      for (int x : m) n.push_back(pos[x]);
      p.add(n);
    }
    r.diff.push_back(std::move(p));
  }
  return r;
}

}  // namespace

Reduction reduce_dga(const Dga& d0) {
  Reduction out;
  out.reduced = d0;
  for (int g = 0; g < d0.size(); ++g) out.projection.push_back(Poly::gen(g));
  for (;;) {
    const Dga& d = out.reduced;
    int n = d.size();
    std::vector<std::vector<int>> users(n);
    for (int x = 0; x < n; ++x)
      for (const Mono& m : d.diff[x].terms)
        for (int g : m) users[g].push_back(x);
    bool done = false;
    for (int i = 0; i < n && !done; ++i) {
      for (const Mono& lin : d.diff[i].terms) {
        if (lin.size() != 1) continue;
        int j = lin[0];
        Poly w = d.diff[i];
        w.add(lin);
        bool clean = true;
        for (const Mono& m : w.terms)
          if (std::find(m.begin(), m.end(), j) != m.end()) clean = false;
        if (!clean) continue;
        // Everything that depends on x_j, transitively.
        std::vector<char> dep(n, 0);
        std::vector<int> stack{j};
        dep[j] = 1;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          for (int u : users[v])
            if (!dep[u]) {
              dep[u] = 1;
              stack.push_back(u);
            }
        }
        for (const Mono& m : w.terms)
          for (int g : m)
            if (dep[g]) clean = false;
        if (!clean) continue;
        std::vector<int> order;
        for (int g = 0; g < n; ++g)
          if (!dep[g]) order.push_back(g);
        for (int g = 0; g < n; ++g)
          if (dep[g]) order.push_back(g);
        std::vector<int> pos;
        Dga r = reorder(d, order, pos);
        CancelResult c = cancel_pair(r, pos[i], pos[j]);
        std::vector<Poly> step(n);
        for (int g = 0; g < n; ++g) step[g] = c.projection[pos[g]];
        for (Poly& p : out.projection) p = substitute(p, step);
        out.reduced = std::move(c.quotient);
        done = true;
        break;
      }
    }
    if (!done) break;
  }
  return out;
}

Dga free_product(const Dga& a, const Dga& b) {
  if (a.size() > 0 && b.size() > 0 && a.rho != b.rho) fail("DegreeError", "grading moduli differ");
  for (const Generator& g : b.gens)
    if (a.find(g.name) >= 0) fail("NameClash", "generator " + g.name + " appears in both factors");
  Dga r = a;
  if (a.size() == 0) r.rho = b.rho;
  int off = a.size();
  for (int g = 0; g < b.size(); ++g) {
    r.gens.push_back(b.gens[g]);
    Poly p;
    for (const Mono& m : b.diff[g].terms) {
      Mono n;
      for (int x : m) n.push_back(x + off);
      p.add(n);
    }
    r.diff.push_back(std::move(p));
  }
  validate_dga(r);
  return r;
}

Dga stabilize(const Dga& a, const std::vector<StabPair>& pairs) {
  Dga r = a;
  for (const StabPair& s : pairs) {
    if (r.find(s.upper) >= 0 || r.find(s.lower) >= 0 || s.upper == s.lower)
      fail("NameClash", "stabilization generator already present");
    int lo = r.size();
    r.gens.push_back({s.lower, mod_deg(static_cast<long long>(s.deg) - 1, r.rho)});
    r.diff.push_back({});
    r.gens.push_back({s.upper, mod_deg(s.deg, r.rho)});
    r.diff.push_back(Poly::gen(lo));
  }
  validate_dga(r);
  return r;
}

void validate_immersed(const ImmersedMap& m) {
  validate_dga(m.A1);
  validate_dga(m.B);
  validate_dga(m.A2);
  validate_morphism(m.A1, m.B, DgaMorphism{m.f});
  if (static_cast<int>(m.i.size()) != m.A2.size()) fail("MismatchedDga", "inclusion size mismatch");
  std::set<int> seen;
  std::vector<Poly> img;
  for (int a = 0; a < m.A2.size(); ++a) {
    int b = m.i[a];
    if (b < 0 || b >= m.B.size() || !seen.insert(b).second) fail("MismatchedDga", "inclusion is not injective");
    if (m.B.deg(b) != m.A2.deg(a)) fail("DegreeError", "inclusion changes a degree");
    img.push_back(Poly::gen(b));
  }
  for (int a = 0; a < m.A2.size(); ++a)
    if (substitute(m.A2.diff[a], img) != m.B.diff[m.i[a]])
      fail("MismatchedDga", "inclusion does not preserve the differential");
}

namespace {

bool same_dga(const Dga& a, const Dga& b) { return a.rho == b.rho && a.gens == b.gens && a.diff == b.diff; }

Poly shift(const Poly& p, const std::vector<int>& map) {
  Poly out;
  for (const Mono& m : p.terms) {
    Mono n;
    for (int x : m) n.push_back(map[x]);
    out.add(n);
  }
  return out;
}

}  // namespace

ImmersedMap pushout_compose(const ImmersedMap& m1, const ImmersedMap& m2) {
  if (!same_dga(m1.A2, m2.A1)) fail("MismatchedMiddle", "middle algebras differ");
  ImmersedMap r;
  r.A1 = m1.A1;
  r.A2 = m2.A2;
  Dga B;
  B.rho = m1.B.rho;
  for (int g = 0; g < m2.B.size(); ++g) {
    B.gens.push_back({"2:" + m2.B.gens[g].name, m2.B.gens[g].deg});
    B.diff.push_back(m2.B.diff[g]);
  }
  std::vector<int> from_a2(m1.B.size(), -1);
  for (int a = 0; a < m1.A2.size(); ++a) from_a2[m1.i[a]] = a;
  std::vector<Poly> sub(m1.B.size());
  for (int g = 0; g < m1.B.size(); ++g) {
    if (from_a2[g] >= 0) {
      sub[g] = m2.f[from_a2[g]];
      continue;
    }
    int idx = B.size();
    B.gens.push_back({"1:" + m1.B.gens[g].name, m1.B.gens[g].deg});
    B.diff.push_back(substitute(m1.B.diff[g], sub));
    sub[g] = Poly::gen(idx);
  }
  validate_dga(B);
  r.B = std::move(B);
  for (const Poly& p : m1.f) r.f.push_back(substitute(p, sub));
  r.i = m2.i;
  validate_immersed(r);
  return r;
}

ImmersedMap cylinder_compose(const ImmersedMap& m1, const ImmersedMap& m2) {
  if (!same_dga(m1.A2, m2.A1)) fail("MismatchedMiddle", "middle algebras differ");
  const Dga& A2 = m1.A2;
  Dga D;
  D.rho = m1.B.rho;
  int n1 = m1.B.size(), n2 = m2.B.size();
  std::vector<int> map1(n1), map2(n2);
  for (int g = 0; g < n1; ++g) {
    map1[g] = g;
    D.gens.push_back({"1:" + m1.B.gens[g].name, m1.B.gens[g].deg});
    D.diff.push_back(m1.B.diff[g]);
  }
  for (int g = 0; g < n2; ++g) {
    map2[g] = n1 + g;
    D.gens.push_back({"2:" + m2.B.gens[g].name, m2.B.gens[g].deg});
    D.diff.push_back(shift(m2.B.diff[g], map2));
  }
  std::vector<Poly> left(A2.size()), right(A2.size());
  for (int a = 0; a < A2.size(); ++a) {
    left[a] = Poly::gen(map1[m1.i[a]]);
    right[a] = shift(m2.f[a], map2);
  }
  int hat0 = D.size();
  for (int a = 0; a < A2.size(); ++a) {
    D.gens.push_back({"hat:" + A2.gens[a].name, mod_deg(static_cast<long long>(A2.deg(a)) + 1, D.rho)});
    Poly p = left[a] + right[a];
    // Gamma(x1..xn) = sum_k i1(x1..x_{k-1}) hat(x_k) f2(x_{k+1}..x_n)
    for (const Mono& m : A2.diff[a].terms) {
      for (size_t k = 0; k < m.size(); ++k) {
        Poly t = Poly::one();
        for (size_t s = 0; s < k; ++s) t = t * left[m[s]];
        t = t * Poly::gen(hat0 + m[k]);
        for (size_t s = k + 1; s < m.size(); ++s) t = t * right[m[s]];
        p += t;
      }
    }
    D.diff.push_back(std::move(p));
  }
  validate_dga(D);
  ImmersedMap r;
  r.A1 = m1.A1;
  r.A2 = m2.A2;
  for (const Poly& p : m1.f) r.f.push_back(shift(p, map1));
  for (int g : m2.i) r.i.push_back(map2[g]);
  r.B = std::move(D);
  validate_immersed(r);
  return r;
}

ImmersedMap ordinary_map(const Dga& A1, const Dga& A2, const DgaMorphism& f) {
  ImmersedMap m{A1, A2, A2, f.images, {}};
  for (int g = 0; g < A2.size(); ++g) m.i.push_back(g);
  validate_immersed(m);
  return m;
}

Dga mapping_cylinder(const Dga& A, const Dga& B, const DgaMorphism& f) {
  validate_morphism(A, B, f);
  Dga C;
  C.rho = A.rho;
  int na = A.size(), nb = B.size();
  std::vector<int> ma(na), mb(nb);
  for (int g = 0; g < na; ++g) {
    ma[g] = g;
    C.gens.push_back({"i0:" + A.gens[g].name, A.gens[g].deg});
    C.diff.push_back(A.diff[g]);
  }
  for (int g = 0; g < nb; ++g) {
    mb[g] = na + g;
    C.gens.push_back({"i1:" + B.gens[g].name, B.gens[g].deg});
    C.diff.push_back(shift(B.diff[g], mb));
  }
  std::vector<Poly> fa(na);
  for (int g = 0; g < na; ++g) fa[g] = shift(f.images[g], mb);
  int hat0 = C.size();
  for (int a = 0; a < na; ++a) {
    C.gens.push_back({"hat:" + A.gens[a].name, mod_deg(static_cast<long long>(A.deg(a)) + 1, C.rho)});
    Poly p = fa[a] + Poly::gen(ma[a]);
    // Gamma(x1..xn) = sum_k f(x1..x_{k-1}) hat(x_k) x_{k+1}..x_n
    for (const Mono& m : A.diff[a].terms) {
      for (size_t k = 0; k < m.size(); ++k) {
        Poly t = Poly::one();
        for (size_t s = 0; s < k; ++s) t = t * fa[m[s]];
        Mono tail{hat0 + m[k]};
        for (size_t s = k + 1; s < m.size(); ++s) tail.push_back(ma[m[s]]);
        p += t * Poly{{tail}};
      }
    }
    C.diff.push_back(std::move(p));
  }
  validate_dga(C);
  return C;
}

AugSetRelation induced_aug_set(const ImmersedMap& m, long long budget) {
  auto c2 = homotopy_classes(m.A2, budget);
  auto c1 = homotopy_classes(m.A1, budget);
  AugSetRelation r;
  r.n_target = static_cast<int>(c2.size());
  r.n_source = static_cast<int>(c1.size());
  for (const Aug& e : enumerate_augmentations(m.B, budget)) {
    Aug e2(m.A2.size());
    for (int a = 0; a < m.A2.size(); ++a) e2[a] = e[m.i[a]];
    Aug e1 = pull_back(e, m.f);
    r.pairs.insert({class_of(m.A2, c2, e2), class_of(m.A1, c1, e1)});
  }
  return r;
}

AugSetRelation compose_relations(const AugSetRelation& r1, const AugSetRelation& r2) {
  if (r1.n_target != r2.n_source) fail("MismatchedMiddle", "middle class sets differ");
  AugSetRelation r;
  r.n_source = r1.n_source;
  r.n_target = r2.n_target;
  for (auto [c3, c2] : r2.pairs)
    for (auto [b2, c1] : r1.pairs)
      if (b2 == c2) r.pairs.insert({c3, c1});
  return r;
}

Laurent linearized_poincare(const Dga& d, const Aug& e) {
  if (!is_augmentation(d, e)) fail("MismatchedDga", "not an augmentation");
  int n = d.size();
  // Column x of the linearized differential, as a row of generator coefficients.
  std::vector<BitRow> col(n, BitRow(n));
  for (int x = 0; x < n; ++x)
    for (const Mono& m : d.diff[x].terms)
      for (size_t k = 0; k < m.size(); ++k) {
        bool others = true;
        for (size_t s = 0; s < m.size() && others; ++s)
          if (s != k && !e[m[s]]) others = false;
        if (others) col[x].flip(m[k]);
      }
  std::map<int, int> dim;
  std::map<int, std::vector<BitRow>> cols_by_deg;
  for (int x = 0; x < n; ++x) {
    dim[d.deg(x)]++;
    cols_by_deg[d.deg(x)].push_back(col[x]);
  }
  std::map<int, int> rank;  // rank of d restricted to degree k
  for (auto& [k, cols] : cols_by_deg) rank[k] = gf2_rank(cols);
  Laurent out;
  for (auto [k, dk] : dim) {
    int up = mod_deg(static_cast<long long>(k) + 1, d.rho);
    int h = dk - rank[k] - (rank.count(up) ? rank[up] : 0);
    if (h) out[k] = h;
  }
  return out;
}

std::string laurent_to_string(const Laurent& p) {
  std::ostringstream os;
  bool first = true;
  for (auto [k, c] : p) {
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << "t";
    if (k != 1) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace leg
