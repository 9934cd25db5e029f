#pragma once

// The candidate small toric resolution of a string polytope: the Bott fan
// built from the designated paths gamma_j and the lambda-inequalities, the
// star subdivisions at tau (and tau_2), the divisor of a weight, the linear
// relations that certify basepoint-freeness, and the end-to-end verdict.
//
// Construction happens on the canonical word i_delta(0,...,0,k) with
// delta_n = D (applying the letter involution when the witness ends in A)
// and is carried back to the input word through the node correspondence
// of the commutation class.  Chamber coordinates are permuted along with
// the nodes; the involution keeps node indices and reverses the weight.

#include <optional>
#include <string>
#include <vector>

#include "strpoly/moves_index.hpp"
#include "strpoly/string_polytope.hpp"
#include "strpoly/toric_fan.hpp"
#include "strpoly/wiring.hpp"

namespace strpoly {

struct Normalization {
  ReducedWord input;
  SmallWitness witness;       // witness of the input word
  bool small = false;         // k <= kappa(delta)
  bool involuted = false;     // witness ended in A; the involution was applied
  ReducedWord canonical;      // i_delta'(0,...,0,k) with delta'_n = D
  Delta canonical_delta;
  // node_map[j-1] is the input node corresponding to canonical node j.
  std::vector<int> node_map;
};

// Throws "NotSmallIndices" when no delta gives ind_delta = (0,...,0,k)
// with the word in the class of i_delta(0,...,0,k).  With
// allow_large = false the witness must also satisfy k <= kappa.
Normalization normalize(const ReducedWord& word, bool allow_large = false);

// Canonical-coordinate vector -> input-coordinate vector.
IntVec to_input_coordinates(const Normalization& norm, const IntVec& x);

struct BottData {
  Normalization norm;
  WiringDiagram diagram;              // of the canonical word
  std::vector<RigorousPath> paths;    // of the canonical word
  GammaSelection selection;
  std::vector<IntVec> v;              // v_1..v_nbar, canonical m-coordinates
  std::vector<IntVec> w;              // w_1..w_nbar
};

BottData bott_data(const ReducedWord& word, bool allow_large = false);

// Sigma_i (explicit, canonical coordinates).  Throws "NotSmallIndices",
// "TieUnresolvable", "ResourceCap" (nbar > 20).
Fan bott_manifold_fan(const ReducedWord& word);

// Cones are given as ray indices of the Bott fan (v_j -> j-1, w_j -> nbar+j-1).
struct TauCones {
  std::optional<RaySet> tau;
  std::optional<RaySet> tau2;
};
TauCones tau_cones(const BottData& data);
TauCones tau_cones(const ReducedWord& word);

struct Relation {
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
  std::string str() const;  // "w3 + v4 + w5 = w~2"
};

struct StarStep {
  int leftover = 0;        // i of the leftover path ~gamma_i
  RaySet tau = 0;
  std::string label;       // label of the new ray, "w~i"
};

struct HatSigma {
  BottData data;
  IteratedStarFan fan;            // canonical coordinates
  std::vector<StarStep> steps;
  bool heuristic = false;         // the word does not have small indices
  std::optional<Fan> explicit_fan;  // materialized for nbar <= 20
};

// Throws "NotSmallIndices" unless the word has small indices.  With
// allow_large = true words of index (0,...,0,k) for larger k are accepted:
// each leftover path is placed by locating w_~gamma in the current fan and
// subdividing the cone carrying it (all coefficients must be 1, otherwise
// "TauNotInFan").
HatSigma hat_sigma(const ReducedWord& word, bool allow_large = false);

// a_{v_j} = lambda_{i_j}, a_w = 0 (input-word letters).  Throws "NotRegular".
Divisor divisor_for_weight(const HatSigma& hs, const Weight& lambda);

// Rays of the fan in input coordinates, in fan order.
std::vector<IntVec> input_rays(const HatSigma& hs);

// Exact identities among the constructed vectors: the relation defining
// every subdivided cone, and for every primitive collection P the
// decomposition of sum(P) in the cone that contains it.  Throws
// "RelationFailed" if a stated identity does not hold.
std::vector<Relation> verify_relations(const HatSigma& hs);
std::vector<Relation> verify_relations(const ReducedWord& word);

struct ResolutionVerdict {
  ReducedWord word;
  Normalization norm;
  Weight lambda;
  int ray_count = 0;
  std::vector<std::string> ray_labels;
  std::vector<IntVec> rays;                // input coordinates
  std::vector<RaySet> primitive_collections;
  bool smooth = false;
  bool smooth_certified_by_determinants = false;
  bool rays_match = false;
  bool facets_certified = false;           // rays_match used vertex enumeration
  bool bpf = false;
  std::optional<BpfViolation> violation;   // the first violation
  std::vector<BpfViolation> violations;
  std::vector<Relation> relations;
  bool heuristic = false;
  std::string status;                      // "verified", "heuristic" or "failed"
};

// lambda defaults to (2,...,2) when empty.
ResolutionVerdict verify_small_resolution(const ReducedWord& word, Weight lambda = {}, bool allow_large = true,
                                          EnumerationCaps caps = {});

// "0+(-2)+(-2)+0" style rendering of support-value terms.
std::string terms_string(const std::vector<Q>& terms);

}  // namespace strpoly
