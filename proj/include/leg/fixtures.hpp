#pragma once
#include <random>
#include <string>
#include <vector>

#include "leg/movie.hpp"

namespace leg {

// Random closed plat word with at most max_letters letters.
std::string random_word(std::mt19937& rng, int max_letters);

// T(2, m) as l1 l1 s2^m r1 r1.
PlatWord torus_word(int m);
// Filling of T(2, 2n+1) from the empty front that keeps crossing pair (i, i+1) as the last clasp.
Movie torus_filling(int n, int i);
// The same surface read as a deconstruction (knot to empty).
Movie torus_deconstruction(int n, int i);
// Reverse a movie: start from its end word, inverse moves in reverse order.
Movie reverse_movie(const Movie& m);

struct Fixture {
  std::string name;
  std::string word;
  int tb = 0;
  int rot = 0;
  long long det = 0;
  int components = 1;
  int crossings = 0;
  std::vector<int> b;  // crossing number of label b_1, b_2, ...
};
const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& name);
// Crossing numbers for a set of b-labels of a fixture.
std::vector<int> b_numbers(const Fixture& f, const std::vector<int>& labels);

// Fillings drawn for the figure-eight knot and m(8_21).
Movie figure_eight_clasp_filling();
Movie m821_pinch_filling();
Movie m821_clasp_filling();

}  // namespace leg
