#pragma once
#include <string>
#include <string_view>
#include <vector>

#include "leg/error.hpp"

namespace leg {

enum class Kind : char { Left = 'l', Right = 'r', Cross = 's' };

struct Letter {
  Kind kind;
  int k;  // 1-based upper strand of the pair acted on
  bool operator==(const Letter&) const = default;
};

// Gap g sits before letter g; profile has letters.size()+1 entries.
struct PlatWord {
  std::vector<Letter> letters;
  std::vector<int> profile;

  int size() const { return static_cast<int>(letters.size()); }
  int width(int gap) const { return profile[gap]; }
  bool operator==(const PlatWord& o) const { return letters == o.letters; }
};

PlatWord parse_word(std::string_view text);
// Builds and validates a word from letters (StrandError / OpenEndsError).
PlatWord make_word(std::vector<Letter> letters);
// Same, but open boundary is allowed (used for windows of a word).
std::vector<int> profile_of(const std::vector<Letter>& letters, int start_width);
std::string render_word(const PlatWord& w);
std::string render_letter(const Letter& l);

// Strand segments: node (gap, pos) with pos 0-based.
struct StrandIndex {
  std::vector<int> offset;  // offset[g] = first node id of gap g
  int total = 0;
  explicit StrandIndex(const PlatWord& w);
  int id(int gap, int pos) const { return offset[gap] + pos; }
};

struct Components {
  int count = 0;
  std::vector<int> comp;          // per node
  std::vector<int> dir;           // per node: +1 rightward, -1 leftward
  std::vector<int> first_cusp;    // per component: letter index of first left cusp
};

Components components(const PlatWord& w);

struct ClassicalInvariants {
  int tb = 0;
  int writhe = 0;
  std::vector<int> rot;        // per component
  std::vector<int> self_tb;    // per component, ignoring other components
};

ClassicalInvariants classical_invariants(const PlatWord& w);
// Same with the orientation of one component reversed.
ClassicalInvariants classical_invariants_flipped(const PlatWord& w, int component);

int mod_rho(long long v, int rho);

struct MaslovPotential {
  int rho = 0;
  std::vector<std::vector<int>> mu;  // mu[gap][pos], reduced mod rho when rho > 0
  int at(int gap, int pos) const { return mu[gap][pos]; }
  bool operator==(const MaslovPotential&) const = default;
};

MaslovPotential maslov_potential(const PlatWord& w, int rho,
                                 const std::vector<int>& offsets = {});
// mu(upper-left) - mu(lower-left), reduced mod rho.
int crossing_degree(const PlatWord& w, const MaslovPotential& mu, int i);

// Signed difference of potential values, reduced mod rho.
inline int deg_diff(int a, int b, int rho) { return mod_rho(static_cast<long long>(a) - b, rho); }

// Knot determinant |Delta(-1)| via the coloring matrix of the front diagram
// (descending strand over). Returns 0 for split or degenerate cases.
long long knot_determinant(const PlatWord& w);
// Alexander polynomial of a knot evaluated at integer t, up to sign and powers of t.
long long alexander_at(const PlatWord& w, long long t);

}  // namespace leg
