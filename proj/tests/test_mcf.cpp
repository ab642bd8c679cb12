#include "doctest.h"
#include "leg/fixtures.hpp"
#include "leg/mcf.hpp"
#include "support.hpp"

using namespace leg;
using testsupport::code_of;

namespace {

struct Fx {
  PlatWord w;
  MaslovPotential mu;
};
Fx fx(const std::string& s, int rho) {
  auto w = parse_word(s);
  return {w, maslov_potential(w, rho)};
}

size_t cell_classes(const Fx& f) {
  auto ctx = context_for(f.w, f.mu);
  return homotopy_classes(reduce_dga(ctx->cell.dga).reduced).size();
}

}  // namespace

TEST_CASE("builder basics") {
  auto u = fx("l1 r1", 0);
  auto c = build_mcf(u.w, u.mu, {});
  CHECK(c.region[1][0].get(0, 1));
  CHECK(check_mcf(c).empty());
  auto t = fx("l1 l1 s2 s2 s2 r1 r1", 0);
  CHECK(code_of([&] { build_mcf(t.w, t.mu, {}); }) == "CuspObstruction");
  auto a = aform_from_values(t.w, t.mu, aform_from_numbers(t.w, {1, 2}));
  CHECK(check_mcf(a).empty());
  // rebuild is idempotent
  auto again = build_mcf(t.w, t.mu, a.slides);
  CHECK(again.slides == a.slides);
  // handleslide between sheets of different potential
  SlideList bad(t.w.size() + 1);
  bad[2].push_back({1, 2});
  CHECK(code_of([&] { build_mcf(t.w, t.mu, bad); }) == "GradingError");
}

TEST_CASE("handleslide maps are involutions") {
  BitMat d(4);
  d.set(0, 1);
  d.set(2, 3);
  d.set(0, 3);
  for (int u = 1; u <= 4; ++u)
    for (int l = u + 1; l <= 4; ++l) CHECK(conj_slide(conj_slide(d, u, l), u, l) == d);
}

TEST_CASE("A-form counts") {
  auto u0 = fx("l1 r1", 0), u1 = fx("l1 r1", 1);
  CHECK(enumerate_aforms(u0.w, u0.mu).size() == 1);
  CHECK(enumerate_aforms(u1.w, u1.mu).size() == 2);
  auto e = fx("", 0);
  CHECK(enumerate_aforms(e.w, e.mu).size() == 1);
  auto t = fx("l1 l1 s2 s2 s2 r1 r1", 0);
  CHECK(enumerate_aforms(t.w, t.mu).size() == 5);
}

TEST_CASE("rulings") {
  auto u = fx("l1 r1", 0);
  CHECK(enumerate_rulings(u.w, u.mu).size() == 1);
  auto t = fx("l1 l1 s2 s2 s2 r1 r1", 0);
  auto rs = enumerate_rulings(t.w, t.mu);
  CHECK(rs.size() == 3);
  auto st = fx("l1 s1 r1", 1);
  CHECK(enumerate_rulings(st.w, st.mu).empty());
  for (auto& r : rs)
    for (auto& p : r.pair) {
      BitMat d = standard_differential(p);
      CHECK(d.strictly_upper());
      CHECK((d * d).zero());
    }
}

TEST_CASE("SR-forms") {
  auto u0 = fx("l1 r1", 0), u1 = fx("l1 r1", 1);
  CHECK(sr_enumerate(u0.w, u0.mu).size() == 1);
  CHECK(sr_enumerate(u1.w, u1.mu).size() == 2);
  for (const char* s : {"l1 l1 s2 s2 s2 r1 r1", "l1 l1 s2 s2 s2 s2 s2 r1 r1"})
    for (int rho : {0, 1, 2}) {
      auto f = fx(s, rho);
      for (const SrForm& x : sr_enumerate(f.w, f.mu)) {
        CHECK(check_mcf(x.slice).empty());
        // outside the clusters the differential is the standard one: check at gaps without handleslides
        for (int g = 0; g <= f.w.size(); ++g)
          if (x.slice.slides[g].empty()) CHECK(x.slice.region[g][0] == standard_differential(x.ruling.pair[g]));
      }
    }
}

TEST_CASE("phi and equivalence") {
  auto u1 = fx("l1 r1", 1);
  auto a = aform_from_values(u1.w, u1.mu, {});
  auto b = aform_from_values(u1.w, u1.mu, {{}, {1}});
  CHECK(mcf_equivalent(a, a));
  CHECK_FALSE(mcf_equivalent(a, b));
  auto n = sr_normalize(b);
  CHECK(n.form.cusps == std::vector<int>{1});
  CHECK(mcf_equivalent(n.form.slice, b));
  auto t = fx("l1 l1 s2 s2 s2 r1 r1", 0);
  auto x = aform_from_values(t.w, t.mu, aform_from_numbers(t.w, {1, 2}));
  auto nx = sr_normalize(x);
  CHECK(mcf_equivalent(nx.form.slice, x));
}

TEST_CASE("class counts agree") {
  for (const char* s : {"l1 r1", "l1 l1 s2 s2 s2 r1 r1", "l1 l1 s2 s2 s2 s2 s2 r1 r1"})
    for (int rho : {0, 1, 2}) {
      auto f = fx(s, rho);
      int n = 0;
      aform_classes(f.w, f.mu, &n);
      CHECK(static_cast<size_t>(n) == cell_classes(f));
      // every SR-form lands in some A-form class and every A-form class has an SR-form
      auto ctx = context_for(f.w, f.mu);
      for (const AFormData& m : enumerate_aforms(f.w, f.mu)) CHECK_NOTHROW(sr_normalize(aform_from_values(f.w, f.mu, m)));
    }
}

TEST_CASE("every class of m(8_21) has an SR-form") {
  auto w = parse_word(fixture("m8_21").word);
  for (int rho : {0, 1, 2}) {
    auto mu = maslov_potential(w, rho);
    for (const AFormData& a : enumerate_aforms(w, mu)) CHECK_NOTHROW(sr_normalize(aform_from_values(w, mu, a)));
  }
}
