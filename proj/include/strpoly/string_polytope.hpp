#pragma once

// String cones, lambda-cones and string polytopes of reduced words in either
// the node coordinates t or the chamber coordinates m, plus the checks
// built on top of them (facets, integrality, lattice points, reflexivity)
// and the piecewise-linear transfer attached to a 3-move.

#include <vector>

#include "strpoly/polytope.hpp"
#include "strpoly/weyl_words.hpp"
#include "strpoly/wiring.hpp"

namespace strpoly {

// Weight in the basis of fundamental weights.
using Weight = std::vector<int>;

bool is_regular(const Weight& lambda);
Weight reversed_weight(const Weight& lambda);

// Coefficient vector of the lambda-inequality of node j (1-based):
//   t-coordinates:  -t_j + sum_{k>j} b_k t_k   (b_k = 1 adjacent column, -2 same column)
//   m-coordinates:  -sum_{k>=j, i_k = i_j} m_k
IntVec lambda_row(const WiringDiagram& d, int j, Coords coords);

// Row tags are "path:l1->l3->l2" and "node:j".
HPolytope string_cone(const WiringDiagram& d, const std::vector<RigorousPath>& paths, Coords coords);
HPolytope lambda_cone(const WiringDiagram& d, const Weight& lambda, Coords coords);
HPolytope string_polytope(const WiringDiagram& d, const std::vector<RigorousPath>& paths, const Weight& lambda,
                          Coords coords);

HPolytope string_cone(const ReducedWord& word, Coords coords);
HPolytope lambda_cone(const ReducedWord& word, const Weight& lambda, Coords coords);
HPolytope string_polytope(const ReducedWord& word, const Weight& lambda, Coords coords);

struct FacetCheck {
  bool all_rows_facets = false;
  std::vector<int> redundant_rows;
  std::vector<IntVec> facet_normals;  // primitive inner normals, sorted
  bool normals_match = false;         // equals {w_gamma} u {v_j} (m-coordinates)
};

// Requires a regular weight (throws "NotRegular").  Works in m-coordinates.
FacetCheck verify_facets(const ReducedWord& word, const Weight& lambda, EnumerationCaps caps = {});

// (t_k, t_{k+1}, t_{k+2}) -> (max(t_{k+2}, t_{k+1} - t_k), t_k + t_{k+2}, min(t_k, t_{k+1} - t_{k+2}))
// with k 1-based.
IntVec three_move_transfer(const IntVec& point, int k);

}  // namespace strpoly
