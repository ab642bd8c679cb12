#pragma once
#include <optional>
#include <string>
#include <vector>

#include "leg/mcf.hpp"

namespace leg {

enum class Schema { Comm, R1, R2, R3, CuspTangency, Pinch, Clasp, Unknot };

std::string schema_name(Schema s);
Schema schema_from_name(const std::string& s);
bool is_isotopy(Schema s);
int euler_contribution(Schema s);

// Forward is the simplifying direction: Clasp and Unknot delete, Pinch inserts "r_k l_k",
// R1 removes a zigzag, R2 removes a crossing pair at a cusp.
struct Move {
  Schema schema = Schema::Comm;
  bool forward = true;
  int pos = 0;
  int k = 1;
  int variant = -1;  // which form of the schema; -1 picks the first that applies
  bool operator==(const Move&) const = default;
};

// Letters [pos, pos + removed) of the old word became [pos, pos + inserted).
struct MoveSite {
  PlatWord word;
  Move move;  // variant resolved
  int pos = 0, removed = 0, inserted = 0;
};

MoveSite locate_move(const PlatWord& w, const Move& m);
PlatWord apply_move(const PlatWord& w, const Move& m);
Move inverse_move(const Move& m);
// Every applicable move of one schema and direction at a position (all k and variants).
std::vector<MoveSite> moves_at(const PlatWord& w, Schema s, bool forward, int pos);

struct Movie {
  PlatWord start;
  std::vector<Move> moves;
};

struct Chord {
  int move = 0;
  int degree = 0;
};

struct MovieStats {
  std::vector<PlatWord> frames;
  std::vector<MoveSite> sites;
  int euler = 0;
  int boundary_start = 0, boundary_end = 0;
  int surface_components = 0;
  bool has_potential = false;
  bool orientable = false;
  std::optional<int> genus;  // connected orientable surfaces only
  std::vector<Chord> chords;
  std::vector<MaslovPotential> potentials;  // per frame when has_potential
};

MovieStats validate_movie(const Movie& m, int rho = 0);
// Frame potentials agreeing across every move; the end word keeps its default potential.
std::optional<std::vector<MaslovPotential>> movie_potentials(const std::vector<PlatWord>& frames,
                                                             const std::vector<MoveSite>& sites, int rho);
Movie compose_movies(const Movie& a, const Movie& b);
PlatWord end_word(const Movie& m);

// Potential on the new frame agreeing with mu away from the move; nullopt if none exists.
std::optional<MaslovPotential> carry_potential(const MaslovPotential& mu, const PlatWord& old_word, const MoveSite& site);

struct TransportOptions {
  int search_depth = 4;      // handleslides placed by the local search
  int clasp_per_region = 2;  // handleslides per region when a clasp is created
  bool allow_normalize = true;
};

struct TransportResult {
  bool ok = false;
  std::vector<McfSlice> slices;
  std::string tag;
  bool normalized = false;  // the source slice was replaced by an equivalent SR-form first
  std::string reason;
};

TransportResult transport(const McfSlice& c, const Move& m, const MaslovPotential& target_mu,
                          const TransportOptions& opt = {});
TransportResult transport(const McfSlice& c, const Move& m, const TransportOptions& opt = {});
// Name of the extension rule used for a move in a given direction.
std::string rule_tag(const MoveSite& site);

McfSlice empty_slice(const PlatWord& w, const MaslovPotential& mu);

struct InducedSet {
  std::vector<McfSlice> finals;  // one slice per class
  std::vector<int> classes;      // A-form class ids on the end word, sorted
  std::vector<AFormData> reps;   // one A-form per entry of classes
  long long explored = 0;
};

InducedSet induced_set_of_filling(const Movie& m, int rho, const TransportOptions& opt = {},
                                  const std::optional<McfSlice>& start = std::nullopt, long long budget = 1 << 16);
// Class id of a slice among the A-form classes of its word, and a representative A-form.
int aform_class_of(const McfSlice& c, AFormData* rep = nullptr);

}  // namespace leg
