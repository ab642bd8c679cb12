#pragma once
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "leg/error.hpp"

namespace leg {

using Mono = std::vector<int>;  // word in generator ids; empty = 1

// GF(2) noncommutative polynomial as a set of monomials.
struct Poly {
  std::set<Mono> terms;

  Poly() = default;
  static Poly one() { return Poly{{Mono{}}}; }
  static Poly gen(int g) { return Poly{{Mono{g}}}; }
  explicit Poly(std::set<Mono> t) : terms(std::move(t)) {}

  bool empty() const { return terms.empty(); }
  void add(const Mono& m) {
    auto [it, fresh] = terms.insert(m);
    if (!fresh) terms.erase(it);
  }
  Poly& operator+=(const Poly& o) {
    for (const Mono& m : o.terms) add(m);
    return *this;
  }
  bool operator==(const Poly&) const = default;
};

Poly operator+(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

struct Generator {
  std::string name;
  int deg;
  bool operator==(const Generator&) const = default;
};

struct Dga {
  int rho = 0;
  std::vector<Generator> gens;
  std::vector<Poly> diff;

  int size() const { return static_cast<int>(gens.size()); }
  int find(const std::string& name) const;  // -1 if absent
  int deg(int g) const { return gens[g].deg; }
};

// Validates triangularity, degree and d^2 = 0; throws NotTriangular / DegreeError / NotSquareZero.
void validate_dga(const Dga& d);
Dga build_dga(int rho, std::vector<Generator> gens, std::vector<Poly> diff);

// Degree reduced mod rho (rho = 0 means integer grading).
int mod_deg(long long v, int rho);
int mono_degree(const Dga& d, const Mono& m);
Poly apply_d(const Dga& d, const Poly& p);
// Algebra map given by generator images.
Poly substitute(const Poly& p, const std::vector<Poly>& images);

// Morphism source -> target given by images of source generators.
struct DgaMorphism {
  std::vector<Poly> images;
};
void validate_morphism(const Dga& src, const Dga& dst, const DgaMorphism& f);
DgaMorphism identity_morphism(const Dga& d);

using Aug = std::vector<uint8_t>;

bool eval(const Aug& e, const Mono& m);
bool eval(const Aug& e, const Poly& p);
bool is_augmentation(const Dga& d, const Aug& e);
Aug pull_back(const Aug& e, const std::vector<Poly>& images);

struct HomotopyWitness {
  bool homotopic = false;
  std::map<int, uint8_t> K;  // values on generators of degree -1
};
HomotopyWitness is_homotopic(const Dga& d, const Aug& e1, const Aug& e2);

constexpr long long kDefaultBudget = 1LL << 24;

std::vector<Aug> enumerate_augmentations(const Dga& d, long long budget = kDefaultBudget);
// Augmentations agreeing with `fixed` where it is 0/1 (-1 = free); stops after `limit` results.
std::vector<Aug> extend_augmentations(const Dga& d, const std::vector<int8_t>& fixed, long long budget,
                                     size_t limit);

struct AugClass {
  Aug rep;
  std::vector<Aug> members;
};
std::vector<AugClass> partition_classes(const Dga& d, const std::vector<Aug>& augs);
std::vector<AugClass> homotopy_classes(const Dga& d, long long budget = kDefaultBudget);
int class_of(const Dga& d, const std::vector<AugClass>& classes, const Aug& e);

struct CancelResult {
  Dga quotient;
  std::vector<int> kept;           // quotient generator -> original generator
  std::vector<Poly> projection;    // original generator -> polynomial in quotient
  std::vector<Poly> g;             // quotient generator -> polynomial in original
  std::pair<int, int> H;           // H(x_j) = x_i as (j, i)
};
CancelResult cancel_pair(const Dga& d, int i, int j);
// Cancels pairs until none is available (reordering generators when that is harmless).
// Returns the reduced algebra plus the composite projection from the original generators.
struct Reduction {
  Dga reduced;
  std::vector<Poly> projection;
};
Reduction reduce_dga(const Dga& d);

Dga free_product(const Dga& a, const Dga& b);
struct StabPair {
  std::string upper, lower;  // d(upper) = lower
  int deg;                   // degree of upper
};
Dga stabilize(const Dga& a, const std::vector<StabPair>& pairs);

struct ImmersedMap {
  Dga A1, B, A2;
  std::vector<Poly> f;  // A1 generator -> polynomial in B
  std::vector<int> i;   // A2 generator -> B generator
};
void validate_immersed(const ImmersedMap& m);
ImmersedMap pushout_compose(const ImmersedMap& m1, const ImmersedMap& m2);
ImmersedMap cylinder_compose(const ImmersedMap& m1, const ImmersedMap& m2);
ImmersedMap ordinary_map(const Dga& A1, const Dga& A2, const DgaMorphism& f);

// Generators: i0:<name>, i1:<name>, hat:<name> for A, B and the hats.
Dga mapping_cylinder(const Dga& A, const Dga& B, const DgaMorphism& f);

struct AugSetRelation {
  int n_target = 0;  // classes of A2
  int n_source = 0;  // classes of A1
  std::set<std::pair<int, int>> pairs;  // (class in A2, class in A1)
  bool operator==(const AugSetRelation&) const = default;
};
AugSetRelation induced_aug_set(const ImmersedMap& m, long long budget = kDefaultBudget);
// r1 for A1 -> A2, r2 for A2 -> A3; result for A1 -> A3.
AugSetRelation compose_relations(const AugSetRelation& r1, const AugSetRelation& r2);

using Laurent = std::map<int, long long>;
Laurent linearized_poincare(const Dga& d, const Aug& e);
std::string laurent_to_string(const Laurent& p);

}  // namespace leg
