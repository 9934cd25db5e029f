#pragma once

// Simplicial integer fans: cone membership, primitive collections, star
// subdivisions (with the primitive-collection update rule), divisors,
// Cartier data, support functions, divisor polytopes, basepoint-freeness
// criteria and Bott fans.
//
// Cones are stored as bit sets of ray indices (at most 64 rays).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strpoly/common.hpp"
#include "strpoly/polytope.hpp"

namespace strpoly {

using RaySet = std::uint64_t;
inline constexpr int kMaxRays = 64;

RaySet ray_set(std::initializer_list<int> indices);
RaySet ray_set(const std::vector<int>& indices);
std::vector<int> ray_members(RaySet s);
inline bool is_subset(RaySet a, RaySet b) { return (a & ~b) == 0; }

struct Fan {
  int d = 0;
  std::vector<IntVec> rays;
  std::vector<RaySet> max_cones;  // sorted
  std::vector<std::string> labels;

  int ray_count() const { return static_cast<int>(rays.size()); }
  int find_ray(const std::string& label) const;
};

struct Divisor {
  std::vector<long> coeffs;  // a_rho aligned with the rays
};

// (ray index, coefficient) pairs with positive coefficients.
using Decomposition = std::vector<std::pair<int, Q>>;

bool is_cone_in_fan(const Fan& fan, RaySet s);

// Minimal non-faces, computed from the definition.
std::vector<RaySet> primitive_collections(const Fan& fan);

// Throws "TauNotInFan" or "NonSmoothStar".  The new ray is appended with
// the given label.
Fan star_subdivision(const Fan& fan, RaySet tau, const std::string& label = "u");

// Update rule for primitive collections under a star subdivision at tau;
// `new_ray` is the index the new ray receives.  Result is sorted.
std::vector<RaySet> pc_after_star(const std::vector<RaySet>& pcs, RaySet tau, int new_ray);

// Coordinates of u in the first maximal cone that contains it.
std::optional<Decomposition> locate_in_fan(const Fan& fan, const IntVec& u);

// phi_D(u) = -sum c_rho a_rho for u = sum c_rho u_rho in a cone.  Throws
// "OutsideSupport".
Q support_value(const Fan& fan, const Divisor& D, const IntVec& u);
Q support_value(const Decomposition& dec, const Divisor& D);

// m_sigma with <m_sigma, u_rho> = -a_rho for rho in sigma, per maximal cone.
// Throws "SingularCone".
std::vector<QVec> cartier_data(const Fan& fan, const Divisor& D);

// {m : <m, u_rho> >= -a_rho for all rho}.
HPolytope polytope_of_divisor(const Fan& fan, const Divisor& D);

struct BpfViolation {
  RaySet collection = 0;
  Q lhs;                    // phi_D(sum of the collection)
  Q rhs;                    // sum of phi_D over the collection
  Decomposition sum_decomposition;
  std::vector<Q> lhs_terms; // phi_D of each term of the decomposition
  std::vector<Q> rhs_terms; // phi_D of each member of the collection
};

struct BpfResult {
  bool bpf = true;
  std::vector<BpfViolation> violations;
};

using Locator = std::function<std::optional<Decomposition>(const IntVec&)>;

// phi_D(sum P) >= sum phi_D(x) for every primitive collection P.
BpfResult basepoint_free_check(const std::vector<IntVec>& rays, const Divisor& D, const std::vector<RaySet>& pcs,
                               const Locator& locate);
BpfResult is_basepoint_free(const Fan& fan, const Divisor& D);
BpfResult is_basepoint_free(const Fan& fan, const Divisor& D, const std::vector<RaySet>& pcs);
// Alternative criterion: every m_sigma lies in P_D.
bool basepoint_free_by_cartier(const Fan& fan, const Divisor& D);

// Rays v_1..v_n, w_1..w_n; maximal cones {v_j : j in S} u {w_j : j not in S}.
// Throws "NotBottData" unless both matrices are lower triangular with
// diagonals -1 (v) and +1 (w).  Throws "ResourceCap" for n > 20.
Fan bott_fan(const std::vector<IntVec>& v_columns, const std::vector<IntVec>& w_columns);
void check_bott_data(const std::vector<IntVec>& v_columns, const std::vector<IntVec>& w_columns);

// Every maximal cone is generated by a lattice basis.
bool is_smooth(const Fan& fan);
// Complete simplicial fan check: each ridge lies in exactly two maximal
// cones on opposite sides, and a generic point lies in exactly one cone.
bool check_fan_validity(const Fan& fan);

mpz_class integer_determinant(const std::vector<IntVec>& columns);

// A Bott fan followed by a sequence of star subdivisions, kept implicitly:
// the primitive collections are updated by the star rule and points are
// located by the triangular Bott decomposition followed by the star
// updates.  This scales to towers whose explicit cone list is too large.
class IteratedStarFan {
 public:
  IteratedStarFan() = default;
  IteratedStarFan(const std::vector<IntVec>& v_columns, const std::vector<IntVec>& w_columns);

  int d() const { return d_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<RaySet>& primitive_collections() const { return pcs_; }
  const std::vector<std::pair<RaySet, int>>& stars() const { return stars_; }

  bool is_cone(RaySet s) const;
  // Throws "TauNotInFan".  Returns the new ray index.
  int star(RaySet tau, const std::string& label);
  Decomposition locate(const IntVec& u) const;
  void set_label(int ray, const std::string& label) { labels_[ray] = label; }
  // Explicit fan (Bott cones followed by explicit star subdivisions).
  Fan materialize() const;

 private:
  int d_ = 0;
  std::vector<IntVec> rays_;
  std::vector<std::string> labels_;
  std::vector<IntVec> v_, w_;
  std::vector<RaySet> pcs_;
  std::vector<std::pair<RaySet, int>> stars_;
};

}  // namespace strpoly
