#include "doctest.h"
#include "leg/algebra.hpp"
#include "random_maps.hpp"
#include "support.hpp"

using namespace leg;

namespace {

using testsupport::code_of;

Poly P(std::initializer_list<Mono> ms) {
  Poly p;
  for (const Mono& m : ms) p.add(m);
  return p;
}

Dga unknot(int rho) { return build_dga(rho, {{"b", 1}}, {Poly{}}); }

}  // namespace

TEST_CASE("build_dga validation") {
  CHECK(unknot(0).size() == 1);
  CHECK(build_dga(0, {{"y", 0}, {"x", 1}}, {Poly{}, P({{0}})}).size() == 2);
  CHECK(code_of([] { build_dga(0, {{"x", 0}}, {P({{0}})}); }) == "NotTriangular");
  CHECK(code_of([] { build_dga(0, {{"y", 0}, {"x", 2}}, {Poly{}, P({{0}})}); }) == "DegreeError");
  // d(z) = x with d(x) = y != 0
  CHECK(code_of([] {
          build_dga(2, {{"y", 0}, {"x", 1}, {"z", 0}}, {Poly{}, P({{0}}), P({{1}})});
        }) == "NotSquareZero");
}

TEST_CASE("homotopy") {
  auto u1 = unknot(1);
  CHECK(is_homotopic(u1, {0}, {0}).homotopic);
  CHECK_FALSE(is_homotopic(u1, {0}, {1}).homotopic);
  auto d = build_dga(2, {{"y", 0}, {"z", 0}, {"x", 1}}, {Poly{}, Poly{}, P({{0}, {1}})});
  CHECK_FALSE(is_homotopic(d, {0, 0, 0}, {1, 1, 0}).homotopic);
  CHECK(code_of([&] { is_homotopic(d, {0}, {0, 0, 0}); }) == "MismatchedDga");
  CHECK(homotopy_classes(u1).size() == 2);
  CHECK(homotopy_classes(unknot(0)).size() == 1);
}

TEST_CASE("homotopy is an equivalence on a small algebra") {
  // x,y deg 0; h deg -1... use rho = 2 so deg 1 == -1.
  auto d = build_dga(2, {{"h", 1}, {"x", 0}, {"y", 0}, {"c", 1}},
                     {Poly{}, P({{0}}), P({{0}}), P({{1}, {2}})});
  auto augs = enumerate_augmentations(d);
  for (auto& a : augs)
    for (auto& b : augs) {
      bool ab = is_homotopic(d, a, b).homotopic;
      CHECK(ab == is_homotopic(d, b, a).homotopic);
      for (auto& c : augs)
        if (ab && is_homotopic(d, b, c).homotopic) CHECK(is_homotopic(d, a, c).homotopic);
    }
  // the witness solves the system
  for (auto& a : augs)
    for (auto& b : augs) {
      auto w = is_homotopic(d, a, b);
      if (!w.homotopic) continue;
      Aug k(d.size(), 0);
      for (auto [g, v] : w.K) k[g] = v;
      for (int g = 0; g < d.size(); ++g) {
        bool s = false;
        for (const Mono& m : d.diff[g].terms)
          for (size_t p = 0; p < m.size(); ++p) {
            bool t = k[m[p]];
            for (size_t q = 0; q < p; ++q) t = t && a[m[q]];
            for (size_t q = p + 1; q < m.size(); ++q) t = t && b[m[q]];
            s ^= t;
          }
        CHECK(s == bool(a[g] ^ b[g]));
      }
    }
}

TEST_CASE("cancel, stabilize, free product") {
  auto block = build_dga(0, {{"y", 0}, {"x", 1}}, {Poly{}, P({{0}})});
  auto c = cancel_pair(block, 1, 0);
  CHECK(c.quotient.size() == 0);
  CHECK(code_of([] { cancel_pair(build_dga(0, {{"b", 1}}, {Poly{}}), 0, 0); }) == "NotCancellable");
  auto u = unknot(1);
  auto s = stabilize(u, {{"p", "q", 0}});
  CHECK(s.size() == 3);
  auto back = cancel_pair(s, 2, 1);
  CHECK(back.quotient.gens == u.gens);
  CHECK(homotopy_classes(s).size() == 2);
  CHECK(free_product(Dga{}, u).gens == u.gens);
  auto two = free_product(u, build_dga(1, {{"b2", 1}}, {Poly{}}));
  CHECK(two.size() == 2);
  CHECK(code_of([&] { free_product(u, u); }) == "NameClash");
}

TEST_CASE("cancel_pair data is a homotopy inverse") {
  auto d = build_dga(1, {{"a", 0}, {"b", 0}, {"y", 0}, {"x", 0}, {"z", 0}},
                     {Poly{}, Poly{}, Poly{}, P({{2}, {0, 1}}), P({{2}, {0, 1}})});
  // d x = y + ab; w = ab only uses gens below y
  auto c = cancel_pair(d, 3, 2);
  validate_dga(c.quotient);
  // g is a chain map quotient -> d, and p o g = id
  validate_morphism(c.quotient, d, DgaMorphism{c.g});
  for (int k = 0; k < c.quotient.size(); ++k) CHECK(substitute(c.g[k], c.projection) == Poly::gen(k));
  validate_morphism(d, c.quotient, DgaMorphism{c.projection});
  CHECK(homotopy_classes(d).size() == homotopy_classes(c.quotient).size());
}

TEST_CASE("mapping cylinder and reduction") {
  auto u = unknot(1);
  auto cyl = mapping_cylinder(u, u, identity_morphism(u));
  CHECK(cyl.size() == 3);
  CHECK(cyl.diff[2] == P({{0}, {1}}));
  CHECK(cyl.deg(2) == 0);
  auto r = reduce_dga(cyl);
  CHECK(r.reduced.size() == 1);
}

TEST_CASE("induced sets and relation composition") {
  auto u = unknot(1);
  auto m = ordinary_map(u, u, identity_morphism(u));
  auto r = induced_aug_set(m);
  CHECK(r.pairs == std::set<std::pair<int, int>>{{0, 0}, {1, 1}});
  CHECK(compose_relations(r, r) == r);
  auto p = pushout_compose(m, m);
  CHECK(induced_aug_set(p) == r);
  CHECK(induced_aug_set(cylinder_compose(m, m)) == r);
  // filling: A2 empty
  ImmersedMap fill{u, u, Dga{1, {}, {}}, {Poly::gen(0)}, {}};
  auto rf = induced_aug_set(fill);
  CHECK(rf.n_target == 1);
  CHECK(rf.pairs.size() == 2);
}

TEST_CASE("linearized poincare") {
  auto u = unknot(0);
  auto p = linearized_poincare(u, {0});
  CHECK(p == Laurent{{1, 1}});
  CHECK(laurent_to_string(p) == "t");
  auto s = stabilize(u, {{"p", "q", 3}});
  CHECK(linearized_poincare(s, {0, 0, 0}) == p);
}

TEST_CASE("random immersed maps compose") {
  std::mt19937 rng(99);
  for (int t = 0; t < 20; ++t) {
    auto [m1, m2] = testsupport::random_map_pair(rng, 4);
    auto r = compose_relations(induced_aug_set(m1), induced_aug_set(m2));
    CHECK(induced_aug_set(pushout_compose(m1, m2)) == r);
    CHECK(induced_aug_set(cylinder_compose(m1, m2)) == r);
  }
}
