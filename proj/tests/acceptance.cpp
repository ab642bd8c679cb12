// One line per acceptance criterion; exit status 1 if any line fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "leg/cellular.hpp"
#include "leg/filler.hpp"
#include "leg/fixtures.hpp"
#include "leg/movie.hpp"
#include "random_maps.hpp"

using namespace leg;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

size_t cell_class_count(const PlatWord& w, const MaslovPotential& mu) {
  auto ctx = context_for(w, mu);
  return homotopy_classes(reduce_dga(ctx->cell.dga).reduced).size();
}

std::set<int> induced(const Movie& m) {
  auto ind = induced_set_of_filling(m, 0);
  return {ind.classes.begin(), ind.classes.end()};
}

int class_of_numbers(const PlatWord& w, const MaslovPotential& mu, const std::vector<int>& nums) {
  return aform_class_of(aform_from_values(w, mu, aform_from_numbers(w, nums)));
}

std::vector<std::vector<int>> torus_sets(int n, int i) {
  if (i == 1) return {{1}, {3}};
  if (i == 2 * n) return {{1}, {1, 2 * n}};
  return {{1}, {1, i, i + 2}};
}

// 1. d^2 = 0 on random fronts
Outcome c1() {
  std::mt19937 rng(20261);
  int done = 0, bad = 0;
  auto t0 = std::chrono::steady_clock::now();
  while (done < 500) {
    auto w = parse_word(random_word(rng, 14));
    int rho = static_cast<int>(rng() % 3);
    MaslovPotential mu;
    try {
      mu = maslov_potential(w, rho);
    } catch (const Error&) {
      continue;
    }
    auto c = cellular_dga(w, mu);
    for (int g = 0; g < c.dga.size(); ++g)
      if (!apply_d(c.dga, c.dga.diff[g]).empty()) ++bad;
    ++done;
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream o;
  o << done << " fronts, " << bad << " nonzero d^2, " << s << " s";
  return {bad == 0 && s < 10, o.str()};
}

// 2. homotopy by linear solve against the cylinder algebra
Outcome c2() {
  int pairs = 0, disagree = 0;
  std::vector<std::pair<std::string, int>> cases{{"unknot", 0}, {"unknot", 1}, {"unknot", 2}, {"T23", 0}, {"T23", 2}};
  for (auto [name, rho] : cases) {
    auto w = parse_word(fixture(name).word);
    auto c = cellular_dga(w, maslov_potential(w, rho));
    auto augs = enumerate_augmentations(c.dga);
    for (auto& a : augs)
      for (auto& b : augs) {
        ++pairs;
        if (homotopic_via_cylinder(c, a, b) != is_homotopic(c.dga, a, b).homotopic) ++disagree;
      }
  }
  std::ostringstream o;
  o << pairs << " pairs, " << disagree << " disagreements";
  return {disagree == 0, o.str()};
}

// 3. A-form classes against cellular augmentation classes
Outcome c3() {
  std::ostringstream o;
  bool ok = true;
  for (const char* name : {"unknot", "T23", "T25", "4_1", "m8_21"})
    for (int rho : {0, 1, 2}) {
      auto w = parse_word(fixture(name).word);
      auto mu = maslov_potential(w, rho);
      int n = 0;
      aform_classes(w, mu, &n);
      size_t cells = cell_class_count(w, mu);
      if (static_cast<size_t>(n) != cells) {
        ok = false;
        o << name << "/" << rho << ": " << n << " vs " << cells << "; ";
      }
    }
  auto u = parse_word("l1 r1");
  int u0 = 0, u1 = 0;
  aform_classes(u, maslov_potential(u, 0), &u0);
  aform_classes(u, maslov_potential(u, 1), &u1);
  ok = ok && u0 == 1 && u1 == 2;
  o << "unknot " << u0 << " class at rho 0, " << u1 << " at rho 1";
  return {ok, o.str()};
}

// 4. torus knot fillings
Outcome c4() {
  bool ok = true;
  std::ostringstream o;
  for (int n = 1; n <= 3; ++n) {
    auto w = torus_word(2 * n + 1);
    auto mu = maslov_potential(w, 0);
    std::set<std::set<int>> seen;
    for (int i = 1; i <= 2 * n; ++i) {
      auto m = torus_filling(n, i);
      auto st = validate_movie(m, 0);
      std::set<int> want;
      for (const auto& s : torus_sets(n, i)) want.insert(class_of_numbers(w, mu, s));
      auto got = induced(m);
      bool good = st.genus && *st.genus == n - 1 && got == want && seen.insert(got).second;
      if (!good) o << "n=" << n << " i=" << i << " wrong; ";
      ok = ok && good;
    }
  }
  o << "n = 1..3, " << (ok ? "all sets as expected and distinct" : "mismatch");
  return {ok, o.str()};
}

// 5. figure eight and m(8_21)
Outcome c5() {
  std::ostringstream o;
  bool ok = true;
  auto check = [&](bool b, const char* what) {
    if (!b) o << what << " failed; ";
    ok = ok && b;
  };
  for (const Fixture& f : fixtures()) {
    auto w = parse_word(f.word);
    auto inv = classical_invariants(w);
    check(inv.tb == f.tb && knot_determinant(w) == f.det && components(w).count == f.components &&
              static_cast<int>(crossing_letters(w).size()) == f.crossings,
          f.name.c_str());
  }
  {
    const Fixture& f = fixture("4_1");
    auto w = parse_word(f.word);
    auto mu = maslov_potential(w, 0);
    auto forms = enumerate_aforms(w, mu);
    check(forms.size() == 1, "4_1 unique A-form");
    check(induced(figure_eight_clasp_filling()) == std::set<int>{class_of_numbers(w, mu, b_numbers(f, {1, 2}))},
          "4_1 clasp movie");
  }
  {
    const Fixture& f = fixture("m8_21");
    auto w = parse_word(f.word);
    auto mu = maslov_potential(w, 0);
    int c3 = class_of_numbers(w, mu, b_numbers(f, {1, 4, 5}));
    int c4 = class_of_numbers(w, mu, b_numbers(f, {1, 2, 4, 5}));
    check(induced(m821_pinch_filling()) == std::set<int>{c3}, "m8_21 pinch movie");
    check(induced(m821_clasp_filling()).count(c4) == 1, "m8_21 clasp movie");
    auto slice = aform_from_values(w, mu, aform_from_numbers(w, b_numbers(f, {1, 2, 4, 5})));
    auto p = linearized_poincare(context_for(w, mu)->cell.dga, phi_to_cell_aug(slice));
    long long odd = 0;
    for (auto [d, c] : p) odd += (d % 2 != 0) ? c : 0;
    check(laurent_to_string(p) == "t^-1 + 4 + 2t", "m8_21 poincare");
    check(odd != 1, "m8_21 not of the form t + 2g");
    o << "m8_21 {b1 b2 b4 b5}: " << laurent_to_string(p);
  }
  return {ok, o.str()};
}

// 6. fill and verify every class
Outcome c6() {
  auto t0 = std::chrono::steady_clock::now();
  int certs = 0, bad = 0;
  std::ostringstream o;
  for (const char* name : {"unknot", "T23", "4_1", "m8_21", "T25"})
    for (int rho : {0, 1, 2}) {
      auto w = parse_word(fixture(name).word);
      auto mu = maslov_potential(w, rho);
      auto forms = enumerate_aforms(w, mu);
      int n = 0;
      auto cls = aform_classes(w, mu, &n);
      std::vector<bool> done(n, false);
      for (size_t j = 0; j < forms.size(); ++j) {
        if (done[cls[j]]) continue;
        done[cls[j]] = true;
        ++certs;
        try {
          auto cert = synthesize_filling(w, mu, forms[j]);
          auto rep = verify_certificate(cert);
          if (!rep.pass || aform_class_of(cert.slices.back()) != cls[j]) {
            ++bad;
            o << name << "/" << rho << " class " << cls[j] << " " << rep.rule << "; ";
          }
        } catch (const Error& e) {
          ++bad;
          o << name << "/" << rho << " class " << cls[j] << " " << e.code() << "; ";
        }
      }
    }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o << certs << " classes, " << bad << " failures, " << s << " s";
  return {bad == 0 && s < 300, o.str()};
}

// 7. composition of immersed maps
Outcome c7() {
  std::mt19937 rng(7007);
  int bad = 0, nontrivial = 0;
  for (int t = 0; t < 100; ++t) {
    auto [m1, m2] = testsupport::random_map_pair(rng, 5);
    auto r = compose_relations(induced_aug_set(m1), induced_aug_set(m2));
    auto p = induced_aug_set(pushout_compose(m1, m2));
    auto c = induced_aug_set(cylinder_compose(m1, m2));
    if (!(p == r && c == r)) ++bad;
    if (!r.pairs.empty()) ++nontrivial;
  }
  std::ostringstream o;
  o << "100 pairs (" << nontrivial << " with nonempty relation), " << bad << " mismatches";
  return {bad == 0, o.str()};
}

// 8. canceling isotopy pairs
Outcome c8() {
  std::mt19937 rng(808);
  const Schema iso[] = {Schema::Comm, Schema::R1, Schema::R2, Schema::R3};
  int movies = 0, bad = 0;
  for (int n = 1; n <= 3; ++n)
    for (int i = 1; i <= 2 * n; ++i) {
      Movie m = torus_filling(n, i);
      auto before = induced(m);
      int inserted = 0;
      while (inserted < 50) {
        auto frames = validate_movie(m, 0).frames;
        size_t j = rng() % frames.size();
        const PlatWord& w = frames[j];
        Schema s = iso[rng() % 4];
        bool fwd = rng() % 2 == 0;
        int pos = w.size() == 0 ? 0 : static_cast<int>(rng() % (w.size() + 1));
        auto sites = moves_at(w, s, fwd, pos);
        if (sites.empty()) continue;
        Move mv = sites[rng() % sites.size()].move;
        m.moves.insert(m.moves.begin() + j, {mv, inverse_move(mv)});
        ++inserted;
      }
      ++movies;
      if (induced(m) != before) ++bad;
    }
  std::ostringstream o;
  o << movies << " movies with 50 pairs each, " << bad << " changed";
  return {bad == 0, o.str()};
}

}  // namespace

int main() {
  std::vector<std::function<Outcome()>> all{c1, c2, c3, c4, c5, c6, c7, c8};
  bool ok = true;
  for (size_t k = 0; k < all.size(); ++k) {
    Outcome r;
    try {
      r = all[k]();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %zu: %s  %s\n", k + 1, r.pass ? "PASS" : "FAIL", r.detail.c_str());
    std::fflush(stdout);
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
