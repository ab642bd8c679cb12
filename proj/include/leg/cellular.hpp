#pragma once
#include <vector>

#include "leg/algebra.hpp"
#include "leg/bitmat.hpp"
#include "leg/front.hpp"

namespace leg {

struct CellOptions {
  // Crossing vertices list their sheets in right-hand order instead of left-hand order.
  bool crossing_right_order = false;
  // Gaps receiving an extra plain vertex (a gap may appear more than once).
  std::vector<int> extra_vertices;
};

struct Vertex {
  int letter = -1;  // -1 for a plain vertex
  int gap = 0;      // gap holding the vertex sheets
  int sheets = 0;
};

// How a vertex sits at one end of an edge.
struct Attach {
  std::vector<int> embed;  // vertex sheet -> edge sheet (0-based)
  int cusp = -1;           // upper edge sheet of the cusp pair born/dying here, or -1
};

struct Edge {
  int left = 0, right = 0;  // vertex ids
  int gap = 0;
  int sheets = 0;
  Attach at_left, at_right;
};

struct CellComplex1D {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  // Vertices and edges in x-order; vertex_of_letter[i] is the vertex of letter i.
  std::vector<int> vertex_of_letter;
};

CellComplex1D decomposition_from_word(const PlatWord& w, const CellOptions& opt = {});

struct CellularDga {
  PlatWord word;
  MaslovPotential mu;
  CellComplex1D cells;
  Dga dga;
  // a_gen[v][i][j], b_gen[e][i][j]: generator id or -1 (0-based sheets, i < j)
  std::vector<std::vector<std::vector<int>>> a_gen, b_gen;
  // Potential of each vertex sheet.
  std::vector<std::vector<int>> vertex_mu;
};

CellularDga cellular_dga(const PlatWord& w, const MaslovPotential& mu, const CellOptions& opt = {});

struct Chd1D {
  std::vector<BitMat> d;  // per vertex
  std::vector<BitMat> f;  // per edge
};

Chd1D chd_from_aug(const CellularDga& c, const Aug& e);
// Throws InvalidChd when the data is not a chain homotopy diagram.
Aug aug_from_chd(const CellularDga& c, const Chd1D& chd);
// Returns an empty string for a valid diagram, else the first violated condition.
std::string check_chd(const CellularDga& c, const Chd1D& chd);

// Matrices seen from an edge: vertex matrix embedded with the N block at a cusp.
BitMat boundary_matrix(const Edge& e, const Attach& at, const BitMat& vertex_d);

// Generators i0:<g>, i1:<g>, hat:<g> in that order.
Dga product_cylinder_dga(const CellularDga& c);

bool homotopic_via_cylinder(const CellularDga& c, const Aug& e0, const Aug& e1, long long budget = kDefaultBudget);

}  // namespace leg
