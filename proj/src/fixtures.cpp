#include "leg/fixtures.hpp"

#include <algorithm>

#include "leg/filler.hpp"

namespace leg {

std::string random_word(std::mt19937& rng, int max_letters) {
  std::string out;
  int n = 0, left = max_letters;
  auto put = [&](char c, int k) {
    out += (out.empty() ? "" : " ") + std::string(1, c) + std::to_string(k);
    --left;
  };
  while (left > 0) {
    if (n == 0) {
      if (left < 2 || (rng() % 5 == 0 && !out.empty())) break;
      put('l', 1 + rng() % (n + 1));
      n += 2;
      continue;
    }
    if (n / 2 >= left) {
      put('r', 1 + rng() % (n - 1));
      n -= 2;
      continue;
    }
    int c = rng() % 3;
    if (c == 0 && n / 2 + 1 < left) {
      put('l', 1 + rng() % (n + 1));
      n += 2;
    } else if (c == 1) {
      put('r', 1 + rng() % (n - 1));
      n -= 2;
    } else {
      put('s', 1 + rng() % (n - 1));
    }
  }
  return out;
}

PlatWord torus_word(int m) {
  std::vector<Letter> x{{Kind::Left, 1}, {Kind::Left, 1}};
  for (int i = 0; i < m; ++i) x.push_back({Kind::Cross, 2});
  x.push_back({Kind::Right, 1});
  x.push_back({Kind::Right, 1});
  return make_word(std::move(x));
}

Movie torus_deconstruction(int n, int i) {
  if (n < 1 || i < 1 || i > 2 * n) fail("NotApplicable", "clasp index out of range");
  Movie m;
  m.start = torus_word(2 * n + 1);
  m.moves.push_back({Schema::Clasp, true, 2 + (i - 1), 2, 0});
  for (int t = 0; t < 2 * n - 1; ++t) {
    m.moves.push_back({Schema::Pinch, true, 3, 1, 0});
    m.moves.push_back({Schema::R1, true, 1, 1, 0});
  }
  m.moves.push_back({Schema::Unknot, true, 1, 1, 0});
  m.moves.push_back({Schema::Unknot, true, 0, 1, 0});
  return m;
}

Movie reverse_movie(const Movie& m) {
  Movie r;
  r.start = end_word(m);
  for (auto it = m.moves.rbegin(); it != m.moves.rend(); ++it) r.moves.push_back(inverse_move(*it));
  return r;
}

Movie torus_filling(int n, int i) { return reverse_movie(torus_deconstruction(n, i)); }

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> f = {
      {"unknot", "l1 r1", -1, 0, 1, 1, 0, {}},
      {"T23", "l1 l1 s2 s2 s2 r1 r1", 1, 0, 3, 1, 3, {1, 2, 3}},
      {"T25", "l1 l1 s2 s2 s2 s2 s2 r1 r1", 3, 0, 5, 1, 5, {1, 2, 3, 4, 5}},
      {"T27", "l1 l1 s2 s2 s2 s2 s2 s2 s2 r1 r1", 5, 0, 7, 1, 7, {1, 2, 3, 4, 5, 6, 7}},
      // b1 is the lower of the two stacked crossings
      {"4_1", "l1 l2 s1 s3 s2 s2 s2 r3 r1", -3, 0, 5, 1, 5, {2, 1}},
      // columns (b1 b4) (b2 b5) s2 s2 (b3 b6)
      {"m8_21", "l1 l2 l2 s1 s3 s1 s3 s2 s2 s1 s3 r2 r2 r1", 1, 0, 15, 1, 8, {1, 3, 7, 2, 4, 8}},
  };
  return f;
}

const Fixture& fixture(const std::string& name) {
  for (const Fixture& f : fixtures())
    if (f.name == name) return f;
  fail("UnknownFixture", "no fixture named '" + name + "'");
}

std::vector<int> b_numbers(const Fixture& f, const std::vector<int>& labels) {
  std::vector<int> out;
  for (int l : labels) {
    if (l < 1 || l > static_cast<int>(f.b.size())) fail("UnknownFixture", f.name + " has no label b" + std::to_string(l));
    out.push_back(f.b[l - 1]);
  }
  return out;
}

Movie figure_eight_clasp_filling() {
  Movie d{parse_word(fixture("4_1").word),
          {{Schema::Clasp, true, 4, 2, 0},
           {Schema::R2, true, 3, 3, 2},
           {Schema::R1, true, 1, 1, 1},
           {Schema::Unknot, true, 0, 1, 0}}};
  return reverse_movie(d);
}

Movie m821_clasp_filling() {
  // clasps on (b2 b3), the middle pair and (b5 b6)
  Movie d{parse_word(fixture("m8_21").word),
          {{Schema::Comm, true, 5, 0, 0},
           {Schema::Clasp, true, 7, 2, 0},
           {Schema::Clasp, true, 6, 1, 0},
           {Schema::Clasp, true, 5, 3, 0},
           {Schema::Comm, true, 1, 0, 0},
           {Schema::Comm, true, 2, 0, 0},
           {Schema::Comm, true, 5, 0, 0},
           {Schema::R1, true, 3, 3, 1},
           {Schema::R1, true, 1, 1, 1},
           {Schema::Unknot, true, 0, 1, 0}}};
  return reverse_movie(d);
}

Movie m821_pinch_filling() {
  // generated: the filler's surface for {b1 b4 b5}
  const Fixture& f = fixture("m8_21");
  PlatWord w = parse_word(f.word);
  auto mu = maslov_potential(w, 0);
  return synthesize_filling(w, mu, aform_from_numbers(w, b_numbers(f, {1, 4, 5}))).movie;
}

}  // namespace leg
