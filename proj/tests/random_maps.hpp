#pragma once
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "leg/algebra.hpp"

// Random small triangular DGAs and immersed maps, by rejection.
namespace testsupport {

inline std::vector<leg::Mono> monomials(const std::vector<int>& degs, int rho, int deg, int n, int max_len) {
  std::vector<leg::Mono> out;
  std::vector<leg::Mono> layer{{}};
  for (int len = 0; len <= max_len; ++len) {
    std::vector<leg::Mono> next;
    for (const auto& m : layer) {
      long long d = 0;
      for (int x : m) d += degs[x];
      if (leg::mod_deg(d, rho) == leg::mod_deg(deg, rho)) out.push_back(m);
      for (int g = 0; g < n; ++g) {
        auto e = m;
        e.push_back(g);
        next.push_back(e);
      }
    }
    layer = std::move(next);
  }
  return out;
}

inline leg::Poly random_poly(std::mt19937& rng, const std::vector<leg::Mono>& pool, double p) {
  leg::Poly out;
  std::bernoulli_distribution coin(p);
  for (const auto& m : pool)
    if (coin(rng)) out.add(m);
  return out;
}

inline std::vector<int> degrees(const leg::Dga& d) {
  std::vector<int> v;
  for (const auto& g : d.gens) v.push_back(g.deg);
  return v;
}

inline leg::Dga random_dga(std::mt19937& rng, int n, int rho, const std::string& prefix) {
  leg::Dga d;
  d.rho = rho;
  std::uniform_int_distribution<int> dd(-1, 2);
  for (int i = 0; i < n; ++i) {
    int deg = leg::mod_deg(dd(rng), rho);
    d.gens.push_back({prefix + std::to_string(i), deg});
    auto pool = monomials(degrees(d), rho, deg - 1, i, 2);
    leg::Poly best;
    for (int t = 0; t < 20; ++t) {
      auto p = random_poly(rng, pool, 0.35);
      d.diff.push_back(p);
      bool ok = leg::apply_d(d, p).empty();
      d.diff.pop_back();
      if (ok) {
        best = p;
        break;
      }
    }
    d.diff.push_back(best);
  }
  leg::validate_dga(d);
  return d;
}

// Generators whose differential stays inside the chosen set.
inline std::pair<leg::Dga, std::vector<int>> random_subalgebra(std::mt19937& rng, const leg::Dga& b,
                                                               const std::string& prefix) {
  std::vector<int> pick, where(b.size(), -1);
  for (int g = 0; g < b.size(); ++g) {
    bool closed = true;
    for (const auto& m : b.diff[g].terms)
      for (int x : m) closed = closed && where[x] >= 0;
    if (closed && rng() % 2 == 0) {
      where[g] = static_cast<int>(pick.size());
      pick.push_back(g);
    }
  }
  leg::Dga a;
  a.rho = b.rho;
  for (int g : pick) {
    a.gens.push_back({prefix + std::to_string(a.size()), b.deg(g)});
    leg::Poly p;
    for (const auto& m : b.diff[g].terms) {
      leg::Mono n;
      for (int x : m) n.push_back(where[x]);
      p.add(n);
    }
    a.diff.push_back(p);
  }
  return {a, pick};
}

inline std::optional<std::vector<leg::Poly>> random_morphism(std::mt19937& rng, const leg::Dga& a, const leg::Dga& b) {
  std::vector<leg::Poly> img;
  auto bd = degrees(b);
  for (int g = 0; g < a.size(); ++g) {
    auto pool = monomials(bd, b.rho, a.deg(g), b.size(), 2);
    leg::Poly want = leg::substitute(a.diff[g], img);
    bool found = false;
    for (int t = 0; t < 200 && !found; ++t) {
      auto p = random_poly(rng, pool, 0.3);
      if (leg::apply_d(b, p) == want) {
        img.push_back(p);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return img;
}

// m1 : A1 -> B1 <- A2 and m2 : A2 -> B2 <- A3, every algebra with at most max_gens generators.
inline std::pair<leg::ImmersedMap, leg::ImmersedMap> random_map_pair(std::mt19937& rng, int max_gens = 5) {
  std::uniform_int_distribution<int> nb(1, max_gens), na(0, 3);
  int rho = static_cast<int>(rng() % 3);
  for (;;) {
    leg::Dga b1 = random_dga(rng, nb(rng), rho, "p");
    auto [a2, i1] = random_subalgebra(rng, b1, "m");
    leg::Dga a1 = random_dga(rng, na(rng), rho, "s");
    auto f1 = random_morphism(rng, a1, b1);
    if (!f1) continue;
    leg::Dga b2 = random_dga(rng, nb(rng), rho, "q");
    auto [a3, i2] = random_subalgebra(rng, b2, "t");
    auto f2 = random_morphism(rng, a2, b2);
    if (!f2) continue;
    leg::ImmersedMap m1{a1, b1, a2, *f1, i1}, m2{a2, b2, a3, *f2, i2};
    leg::validate_immersed(m1);
    leg::validate_immersed(m2);
    return {m1, m2};
  }
}

}  // namespace testsupport
