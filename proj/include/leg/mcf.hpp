#pragma once
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "leg/bitmat.hpp"
#include "leg/cellular.hpp"
#include "leg/front.hpp"

namespace leg {

// Handleslide between sheets u < l (1-based, at its gap): S_l -> S_l + S_u.
struct Slide {
  int u = 0, l = 0;
  bool operator==(const Slide&) const = default;
  auto operator<=>(const Slide&) const = default;
};

using SlideList = std::vector<std::vector<Slide>>;  // per gap, in sweep order

struct McfSlice {
  PlatWord word;
  MaslovPotential mu;
  SlideList slides;
  // region[g][t]: differential in gap g after the first t handleslides of that gap
  std::vector<std::vector<BitMat>> region;

  int rho() const { return mu.rho; }
  int slide_count() const;
};

bool same_slides(const McfSlice& a, const McfSlice& b);

BitMat conj_slide(const BitMat& d, int u, int l);  // 1-based
BitMat conj_cross(const BitMat& d, int k);         // swap sheets k, k+1 (1-based)
BitMat cusp_extend(const BitMat& d, int k);        // split extension for l_k
BitMat cusp_contract(const BitMat& d, int k);      // drop sheets k, k+1
bool is_split_at(const BitMat& d, int k);
// Canonical handleslides splitting off the cusp pair (k, k+1) of d.
std::vector<Slide> cusp_completion(const BitMat& d, int k);

struct BuildStatus {
  bool ok = false;
  std::string code;  // CrossingObstruction / CuspObstruction / GradingError / StrandError
  int letter = -1;
  std::string message;
};

// Sweeps left to right. With complete_cusps the canonical handleslides that split a
// right cusp are appended to the gap before it, so rebuilding the result is a no-op.
std::optional<McfSlice> try_build_mcf(const PlatWord& w, const MaslovPotential& mu, SlideList slides,
                                      bool complete_cusps = true, BuildStatus* status = nullptr);
McfSlice build_mcf(const PlatWord& w, const MaslovPotential& mu, SlideList slides, bool complete_cusps = true);
// Re-checks every wall of an existing slice; empty string when valid.
std::string check_mcf(const McfSlice& c);

struct AFormData {
  std::vector<int> crossings;  // letter indices
  std::vector<int> cusps;      // letter indices of right cusps (rho = 1 only)
  bool operator==(const AFormData&) const = default;
  auto operator<=>(const AFormData&) const = default;
};

std::vector<int> crossing_letters(const PlatWord& w);
// 1-based crossing numbers b_j for a mark set, and back.
std::vector<int> crossing_numbers(const PlatWord& w, const AFormData& a);
AFormData aform_from_numbers(const PlatWord& w, const std::vector<int>& numbers, const std::vector<int>& cusp_letters = {});

std::optional<McfSlice> try_aform(const PlatWord& w, const MaslovPotential& mu, const AFormData& marks);
McfSlice aform_from_values(const PlatWord& w, const MaslovPotential& mu, const AFormData& marks);
std::vector<AFormData> enumerate_aforms(const PlatWord& w, const MaslovPotential& mu, long long budget = 1LL << 22);

enum class Role : char { None = 0, Switch = 'S', Departure = 'D', Return = 'R' };

struct NormalRuling {
  std::vector<std::vector<int>> pair;  // per gap, 0-based partner
  std::vector<Role> role;              // per letter
  bool operator==(const NormalRuling&) const = default;
};

std::vector<NormalRuling> enumerate_rulings(const PlatWord& w, const MaslovPotential& mu);
BitMat standard_differential(const std::vector<int>& pair);

struct SrForm {
  NormalRuling ruling;
  std::vector<int> returns;  // marked return letters
  std::vector<int> cusps;    // marked right cusp letters (rho = 1)
  McfSlice slice;
};

std::vector<SrForm> sr_enumerate(const PlatWord& w, const MaslovPotential& mu, long long budget = 1LL << 16);
// Handleslides placed near one switch or marked return: before and after the crossing.
struct LocalCluster {
  std::vector<Slide> before, after;
};
std::optional<LocalCluster> sr_cluster(const BitMat& left, const BitMat& right, int k, const std::vector<int>& mu_left,
                                       int rho, bool marked_return);

// Per (word, potential) cache of the cellular algebra and normal-form lists.
struct McfContext {
  PlatWord word;
  MaslovPotential mu;
  CellularDga cell;
  std::optional<std::vector<AFormData>> aforms;
  std::optional<std::vector<SrForm>> srs;
  std::vector<Aug> sr_augs;
};
std::shared_ptr<McfContext> context_for(const PlatWord& w, const MaslovPotential& mu);

Chd1D phi_chd(const McfSlice& c, const CellularDga& cell);
Aug phi_to_cell_aug(const McfSlice& c);
bool mcf_equivalent(const McfSlice& a, const McfSlice& b);

struct SrNormalized {
  SrForm form;
  bool was_sr = false;
};
SrNormalized sr_normalize(const McfSlice& c);
// All SR-forms equivalent to c (possibly several rulings).
std::vector<const SrForm*> sr_matches(const McfSlice& c);

// Partition of A-forms into equivalence classes; returns class id per A-form.
std::vector<int> aform_classes(const PlatWord& w, const MaslovPotential& mu, int* count = nullptr);

}  // namespace leg
