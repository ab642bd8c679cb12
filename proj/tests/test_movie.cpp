#include <random>
#include <set>

#include "doctest.h"
#include "leg/fixtures.hpp"
#include "leg/movie.hpp"
#include "support.hpp"

using namespace leg;
using testsupport::code_of;

namespace {

std::set<int> class_ids(const PlatWord& w, const MaslovPotential& mu, const std::vector<std::vector<int>>& sets) {
  std::set<int> out;
  for (const auto& s : sets) out.insert(aform_class_of(aform_from_values(w, mu, aform_from_numbers(w, s))));
  return out;
}

std::vector<std::vector<int>> expected_sets(int n, int i) {
  if (i == 1) return {{1}, {3}};
  if (i == 2 * n) return {{1}, {1, 2 * n}};
  return {{1}, {1, i, i + 2}};
}

}  // namespace

TEST_CASE("move table") {
  auto w = parse_word("l1 l1 s2 s2 s2 r1 r1");
  CHECK(render_word(apply_move(w, {Schema::Clasp, true, 2, 2, -1})) == "l1 l1 s2 r1 r1");
  CHECK(code_of([&] { apply_move(w, {Schema::Clasp, true, 1, 2, -1}); }) == "NotApplicable");
  auto p = apply_move(parse_word("l1 l1 s2 r1 r1"), {Schema::Pinch, true, 3, 1, -1});
  CHECK(render_word(p) == "l1 l1 s2 r1 l1 r1 r1");
  CHECK(render_word(apply_move(p, {Schema::R1, true, 1, 1, 0})) == "l1 l1 r1 r1");
  // every move undoes its inverse
  std::mt19937 rng(7);
  int hits = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto x = parse_word(testsupport::random_word(rng, 10));
    for (Schema s : {Schema::Comm, Schema::R1, Schema::R2, Schema::R3, Schema::CuspTangency, Schema::Pinch,
                     Schema::Clasp, Schema::Unknot})
      for (bool f : {true, false})
        for (int pos = 0; pos <= x.size(); ++pos)
          for (const MoveSite& site : moves_at(x, s, f, pos)) {
            auto back = apply_move(site.word, inverse_move(site.move));
            CHECK(back == x);
            if (is_isotopy(s) || s == Schema::CuspTangency) {
              // isotopies keep the number of components; R-moves keep tb
              CHECK(components(site.word).count == components(x).count);
              if (s != Schema::CuspTangency) CHECK(classical_invariants(site.word).tb == classical_invariants(x).tb);
            }
            ++hits;
          }
  }
  CHECK(hits > 500);
}

TEST_CASE("torus filling statistics") {
  for (int n = 1; n <= 3; ++n) {
    auto st = validate_movie(torus_filling(n, 1), 0);
    CHECK(st.euler == 3 - 2 * n);
    CHECK(st.surface_components == 1);
    CHECK(st.orientable);
    REQUIRE(st.genus.has_value());
    CHECK(*st.genus == n - 1);
    CHECK(st.chords.size() == 1);
    CHECK(st.frames.back() == torus_word(2 * n + 1));
  }
}

TEST_CASE("compose and mismatched boundary") {
  Movie a{parse_word(""), {{Schema::Unknot, false, 0, 1, 0}}};
  Movie b{parse_word("l1 r1"), {{Schema::Unknot, false, 1, 1, 0}}};
  CHECK(end_word(compose_movies(a, b)) == parse_word("l1 l1 r1 r1"));
  CHECK(code_of([&] { compose_movies(b, b); }) == "MismatchedBoundary");
}

TEST_CASE("induced sets of the torus fillings") {
  for (int n = 1; n <= 2; ++n)
    for (int i = 1; i <= 2 * n; ++i) {
      CAPTURE(n);
      CAPTURE(i);
      auto m = torus_filling(n, i);
      auto ind = induced_set_of_filling(m, 0);
      auto w = torus_word(2 * n + 1);
      auto mu = maslov_potential(w, 0);
      std::set<int> got(ind.classes.begin(), ind.classes.end());
      CHECK(got.size() == ind.classes.size());
      CHECK(got == class_ids(w, mu, expected_sets(n, i)));
    }
}
