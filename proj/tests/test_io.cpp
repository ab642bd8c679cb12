#include <random>

#include "doctest.h"
#include "leg/cellular.hpp"
#include "leg/fixtures.hpp"
#include "leg/io.hpp"
#include "leg/render.hpp"
#include "support.hpp"

using namespace leg;
using testsupport::code_of;

TEST_CASE("word and dga json round trip") {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    auto w = parse_word(random_word(rng, 10));
    Json j = word_to_json(w);
    CHECK(word_from_json(j) == w);
    CHECK(word_from_json(Json(render_word(w))) == w);
    CHECK(word_to_json(word_from_json(j)).dump() == j.dump());
  }
  auto w = torus_word(3);
  auto d = cellular_dga(w, maslov_potential(w, 0)).dga;
  Json j = dga_to_json(d);
  Dga back = dga_from_json(j);
  CHECK(back.gens == d.gens);
  CHECK(back.diff == d.diff);
  CHECK(dga_to_json(back).dump() == j.dump());
}

TEST_CASE("mcf, movie and certificate round trip") {
  auto w = torus_word(5);
  auto mu = maslov_potential(w, 0);
  for (const AFormData& a : enumerate_aforms(w, mu)) {
    CHECK(aform_from_json(aform_to_json(a)) == a);
    auto c = aform_from_values(w, mu, a);
    Json j = mcf_to_json(c);
    auto back = mcf_from_json(j);
    CHECK(back.word == c.word);
    CHECK(back.mu == c.mu);
    CHECK(same_slides(back, c));
    CHECK(mcf_to_json(back).dump() == j.dump());
  }
  auto m = torus_filling(2, 2);
  auto mj = movie_to_json(m);
  auto mb = movie_from_json(mj);
  CHECK(mb.start == m.start);
  CHECK(mb.moves == m.moves);

  auto cert = synthesize_filling(w, mu, enumerate_aforms(w, mu).front());
  Json cj = certificate_to_json(cert);
  auto cb = certificate_from_json(Json::parse(cj.dump()));
  CHECK(certificate_to_json(cb).dump() == cj.dump());
  CHECK(verify_certificate(cb).pass);
}

TEST_CASE("schema errors") {
  CHECK(code_of([] { word_from_json(Json::parse(R"({"letters":[{"kind":"q","k":1}]})")); }) == "SchemaError");
  CHECK(code_of([] { move_from_json(Json::parse(R"({"schema":"R9","dir":"f","pos":0,"k":1})")); }) != "");
  CHECK(code_of([] { read_json_file("/nonexistent/x.json"); }) == "IOError");
}

TEST_CASE("svg output") {
  auto w = torus_word(3);
  auto mu = maslov_potential(w, 0);
  auto c = aform_from_values(w, mu, enumerate_aforms(w, mu).front());
  std::string s = front_svg(w, &c);
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("</svg>") != std::string::npos);
  CHECK(s.find("red") != std::string::npos);
  auto st = validate_movie(torus_filling(1, 1), 0);
  std::string f = frames_svg(st.frames);
  CHECK(f.find("</svg>") != std::string::npos);
}
