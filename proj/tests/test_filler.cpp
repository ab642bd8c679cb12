#include "doctest.h"
#include "leg/filler.hpp"
#include "leg/fixtures.hpp"
#include "support.hpp"

using namespace leg;

namespace {

void round_trip(const PlatWord& w, int rho) {
  auto mu = maslov_potential(w, rho);
  for (const AFormData& a : enumerate_aforms(w, mu)) {
    CAPTURE(render_word(w));
    CAPTURE(rho);
    CAPTURE(crossing_numbers(w, a));
    auto cert = synthesize_filling(w, mu, a);
    auto rep = verify_certificate(cert);
    CAPTURE(rep.frame);
    CAPTURE(rep.rule);
    CAPTURE(rep.reason);
    CHECK(rep.pass);
    CHECK(aform_class_of(cert.slices.back()) == aform_class_of(aform_from_values(w, mu, a)));
    if (rho % 2 == 0) CHECK(validate_movie(cert.movie, rho).orientable);
  }
}

}  // namespace

TEST_CASE("unknot filling is a single move") {
  auto w = parse_word("l1 r1");
  auto cert = synthesize_filling(w, maslov_potential(w, 0), {});
  REQUIRE(cert.movie.moves.size() == 1);
  CHECK(cert.movie.moves[0].schema == Schema::Unknot);
  CHECK(verify_certificate(cert).pass);
}

TEST_CASE("trefoil fillings round trip") {
  for (int rho : {0, 1, 2}) round_trip(torus_word(3), rho);
}

TEST_CASE("unknot with cusp mark ends at the marked unknot") {
  auto w = parse_word("l1 r1");
  auto mu = maslov_potential(w, 1);
  AFormData a{{}, {1}};
  auto cert = synthesize_filling(w, mu, a);
  CHECK(verify_certificate(cert).pass);
  CHECK(cert.movie.start == w);
  CHECK(cert.slices.front().slide_count() > 0);
  CHECK_FALSE(close_with_unknot(cert).has_value());
  auto plain = synthesize_filling(w, mu, {});
  auto closed = close_with_unknot(plain);
  REQUIRE(closed.has_value());
  CHECK(closed->movie.start.size() == 0);
  CHECK(verify_certificate(*closed).pass);
}

TEST_CASE("tampered certificates fail") {
  auto w = torus_word(3);
  auto mu = maslov_potential(w, 0);
  auto forms = enumerate_aforms(w, mu);
  auto cert = synthesize_filling(w, mu, forms.front());
  // drop a handleslide somewhere
  auto cut = cert;
  bool done = false;
  for (size_t f = 0; f < cut.slices.size() && !done; ++f)
    for (auto& gap : cut.slices[f].slides)
      if (!gap.empty()) {
        gap.pop_back();
        done = true;
        break;
      }
  REQUIRE(done);
  auto r = verify_certificate(cut);
  CHECK_FALSE(r.pass);
  CHECK(r.rule == "wall");
  // swap the end slice for an inequivalent one
  auto other = cert;
  for (const auto& b : forms)
    if (!mcf_equivalent(aform_from_values(w, mu, b), cert.slices.back())) {
      other.slices.back() = aform_from_values(w, mu, b);
      break;
    }
  auto r2 = verify_certificate(other);
  CHECK_FALSE(r2.pass);
  CHECK(r2.rule == "equivalence");
}

TEST_CASE("larger fixtures round trip") {
  for (int rho : {0, 2}) round_trip(torus_word(5), rho);
}
