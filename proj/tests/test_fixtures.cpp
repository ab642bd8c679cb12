#include <algorithm>
#include <set>

#include "doctest.h"
#include "leg/fixtures.hpp"
#include "leg/movie.hpp"
#include "support.hpp"

using namespace leg;

namespace {

struct Fx {
  const Fixture* f;
  PlatWord w;
  MaslovPotential mu;
};
Fx fx(const std::string& name, int rho = 0) {
  const Fixture& f = fixture(name);
  auto w = parse_word(f.word);
  return {&f, w, maslov_potential(w, rho)};
}

int class_of_labels(const Fx& x, const std::vector<int>& labels) {
  return aform_class_of(aform_from_values(x.w, x.mu, aform_from_numbers(x.w, b_numbers(*x.f, labels))));
}

Laurent poincare_of(const Fx& x, const std::vector<int>& labels) {
  auto slice = aform_from_values(x.w, x.mu, aform_from_numbers(x.w, b_numbers(*x.f, labels)));
  return linearized_poincare(context_for(x.w, x.mu)->cell.dga, phi_to_cell_aug(slice));
}

}  // namespace

TEST_CASE("fixture metadata") {
  for (const Fixture& f : fixtures()) {
    CAPTURE(f.name);
    auto w = parse_word(f.word);
    CHECK(components(w).count == f.components);
    CHECK(static_cast<int>(crossing_letters(w).size()) == f.crossings);
    auto inv = classical_invariants(w);
    CHECK(inv.tb == f.tb);
    CHECK(inv.rot[0] == f.rot);
    CHECK(knot_determinant(w) == f.det);
  }
}

TEST_CASE("figure eight: one class and the clasp movie induces it") {
  auto x = fx("4_1");
  auto forms = enumerate_aforms(x.w, x.mu);
  REQUIRE(forms.size() == 1);
  auto want = b_numbers(*x.f, {1, 2});
  std::sort(want.begin(), want.end());
  CHECK(crossing_numbers(x.w, forms[0]) == want);
  auto m = figure_eight_clasp_filling();
  CHECK(end_word(m) == x.w);
  auto ind = induced_set_of_filling(m, 0);
  CHECK(ind.classes == std::vector<int>{class_of_labels(x, {1, 2})});
}

TEST_CASE("m(8_21) A-forms and movies") {
  auto x = fx("m8_21");
  CHECK(try_aform(x.w, x.mu, aform_from_numbers(x.w, b_numbers(*x.f, {1, 4, 5}))).has_value());
  CHECK(try_aform(x.w, x.mu, aform_from_numbers(x.w, b_numbers(*x.f, {1, 2, 4, 5}))).has_value());
  int c3 = class_of_labels(x, {1, 4, 5}), c4 = class_of_labels(x, {1, 2, 4, 5});
  CHECK(c3 != c4);

  auto pinch = m821_pinch_filling();
  CHECK(end_word(pinch) == x.w);
  CHECK(induced_set_of_filling(pinch, 0).classes == std::vector<int>{c3});

  auto clasp = m821_clasp_filling();
  CHECK(end_word(clasp) == x.w);
  auto st = validate_movie(clasp, 0);
  CHECK(st.chords.size() == 3);
  auto ind = induced_set_of_filling(clasp, 0);
  std::set<int> got(ind.classes.begin(), ind.classes.end());
  CHECK(got.count(c4) == 1);
}

TEST_CASE("m(8_21) linearized homology") {
  auto x = fx("m8_21");
  auto p4 = poincare_of(x, {1, 2, 4, 5});
  CHECK(laurent_to_string(p4) == "t^-1 + 4 + 2t");
  // a genus g embedded filling would give t + 2g; reduce mod 2 to compare parities
  long long even = 0, odd = 0;
  for (auto [d, c] : p4) ((d % 2 == 0) ? even : odd) += c;
  CHECK(even == 4);
  CHECK(odd == 3);
  CHECK(odd != 1);
  CHECK(laurent_to_string(poincare_of(x, {1, 4, 5})) == "2 + t");
}
