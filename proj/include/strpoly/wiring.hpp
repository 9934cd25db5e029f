#pragma once

// Wiring diagrams of reduced words, their faces (chambers), the t -> m
// change of coordinates, rigorous paths, regions, canonical new paths and
// the per-node path selection used to build Bott data.
//
// Geometry conventions.  Tracks are numbered 0..n from left to right.  The
// nodes t_1..t_N (N = n(n+1)/2) are read from top to bottom; node t_j sits
// in column c = i_j and exchanges the wires on tracks c-1 and c.  The top
// boundary carries l_1,...,l_{n+1} from left to right, the bottom boundary
// l_{n+1},...,l_1.  "Strip" s (0 <= s <= N) is the horizontal band between
// t_s and t_{s+1}; strip 0 touches the top boundary and strip N the bottom
// one.  "Gap" g (0 <= g <= n+1) is the space between tracks g-1 and g; gaps
// 0 and n+1 are the two unbounded sides.  A cell is a (strip, gap) pair and
// node t_j pinches gap i_j between strips j-1 and j.  Faces are the maximal
// vertical runs of unpinched cells; the chamber C_j is the face containing
// the cell directly below t_j.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strpoly/common.hpp"
#include "strpoly/weyl_words.hpp"

namespace strpoly {

struct DiagramNode {
  int column = 0;      // i_j
  int left_wire = 0;   // wire on track column-1 just above the node
  int right_wire = 0;  // wire on track column just above the node
};

struct Face {
  int gap = 0;
  int top_strip = 0;
  int bottom_strip = 0;
};

enum class ColumnRelation { Same, Adjacent };

struct WiringDiagram {
  ReducedWord word;
  int n = 0;
  int nbar = 0;
  std::vector<DiagramNode> nodes;              // nodes[j-1] is t_j
  std::vector<std::vector<int>> strip_order;   // [strip][track] -> wire label
  std::vector<std::vector<int>> strip_pos;     // [strip][wire] -> track
  std::vector<std::vector<int>> wire_nodes;    // [wire] -> nodes on it, top to bottom (1-based)
  std::vector<Face> faces;
  std::vector<std::vector<int>> face_of_cell;  // [strip][gap] -> face id
  std::vector<int> chamber_of_node;            // [j-1] -> face id of C_j
  std::vector<std::vector<std::pair<int, ColumnRelation>>> face_boundary_nodes;  // [face] -> (node, relation)
  IntMatrix M;                                 // m = M t, rows/cols indexed by node

  // Wire order on the horizontal line at height `level`, where level 0 is
  // the bottom boundary and level N the top boundary.
  const std::vector<int>& track_occupancy(int level) const { return strip_order[nbar - level]; }
  // Node (1-based) where wires a and b cross.
  int crossing(int a, int b) const;
  // Whether node j lies on wire w.
  bool node_on_wire(int j, int w) const;
};

WiringDiagram build_diagram(const ReducedWord& word);

// Row j has +1 at the nodes bounding C_j in the column of t_j and -1 at
// the nodes bounding C_j from an adjacent column.
IntMatrix chamber_matrix(const WiringDiagram& d);

struct RigorousPath {
  int source = 0;           // k: the path runs from L_k to L_{k+1}
  std::vector<int> wires;   // wire expression l_{r_1} -> ... -> l_{r_{p+1}}
  std::vector<int> nodes;   // switch nodes in travel order, nodes[t] joins wires[t] and wires[t+1]
  IntVec w_m;               // indicator of the chambers enclosed with the bottom boundary
  IntVec w_t;               // string inequality in t-coordinates
  std::vector<int> peaks;   // switch nodes from an upward to a downward wire
  int max_peak = 0;         // smallest-index peak

  std::string str() const;  // "l1->l3->l2"
  bool operator==(const RigorousPath& o) const { return wires == o.wires && nodes == o.nodes; }
};

std::string wire_expression(const std::vector<int>& wires);

// All rigorous paths over all orientations k = 1..n, ordered by k and then
// lexicographically by (wires, nodes).
std::vector<RigorousPath> enumerate_rigorous_paths(const WiringDiagram& d);
std::vector<RigorousPath> enumerate_rigorous_paths(const ReducedWord& word);

// Equivalent to path.w_t; provided separately as an operation on a path.
IntVec string_vector_t(const WiringDiagram& d, const RigorousPath& path);

// A closed curve in the diagram made of wire segments.  `from`/`to` are
// 1-based node indices; N+1 stands for the bottom end of the wire.
struct WireLeg {
  int wire = 0;
  int from = 0;
  int to = 0;
};

// Cell flags ([strip][gap]) of the region enclosed by the legs together
// with the bottom boundary (parity rule per strip).
std::vector<std::vector<char>> enclosed_cells(const WiringDiagram& d, const std::vector<WireLeg>& legs);
// Chamber indicator (0/1 per node) of enclosed cells.  Throws
// "InvariantBreach" if an enclosed face is not a chamber or if a face is
// only partially enclosed.
IntVec enclosed_chambers(const WiringDiagram& d, const std::vector<std::vector<char>>& cells);
std::vector<WireLeg> path_legs(const WiringDiagram& d, const RigorousPath& path);

struct Region {
  int index = 0;                          // i for R_i
  std::vector<int> chambers;              // sorted node indices j with C_j inside
  std::vector<std::vector<char>> cells;   // [strip][gap]
};

// R_i, the region enclosed by l_i -> l_{i+1}, for i = 1..n.
std::vector<Region> regions(const WiringDiagram& d);
// Whether node j belongs to the closed region (touches an enclosed cell).
bool node_in_closed_region(const WiringDiagram& d, const Region& r, int j);

bool is_new(const RigorousPath& path, Bullet bullet, int n);

// The canonical D-new path through l_k and l_{n+1}.  Throws "NotFound".
RigorousPath canonical_D_new_path(const WiringDiagram& d, const std::vector<RigorousPath>& paths, int k);
RigorousPath canonical_D_new_path(const ReducedWord& word, int k);
// Index into `paths` of the canonical D-new path, or nullopt.
std::optional<int> find_canonical_D_new(const WiringDiagram& d, const std::vector<RigorousPath>& paths, int k);

struct GammaSelection {
  std::vector<int> gamma;                      // [j-1] -> index into paths of gamma_j
  std::vector<std::pair<int, int>> leftovers;  // (i, path index) for the leftover path labelled ~gamma_i
};

// Designated path for every node plus the labelled leftovers.  `delta_prev`
// is delta_{n-1} and k the last index entry of the word's witness (with
// delta_n = D).  Throws "TieUnresolvable".
GammaSelection select_gamma(const WiringDiagram& d, const std::vector<RigorousPath>& paths, Bullet delta_prev,
                            int k);

}  // namespace strpoly
