#pragma once

// Exact-rational H-polytopes {x : A x + b >= 0} with vertex enumeration,
// facet detection, lattice-point enumeration and a reflexivity test.
// Everything is computed with GMP rationals; no floating point is used.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "strpoly/common.hpp"

namespace strpoly {

using Q = mpq_class;
using QVec = std::vector<Q>;

enum class Coords { None, T, M };

std::string coords_name(Coords c);
Coords parse_coords(const std::string& s);

struct HPolytope {
  int d = 0;
  std::vector<QVec> A;
  QVec b;
  Coords coords = Coords::None;
  std::vector<std::string> row_tags;

  int rows() const { return static_cast<int>(A.size()); }
  void add_row(const IntVec& a, long b_value, std::string tag);
  void add_row(QVec a, Q b_value, std::string tag);
  bool contains(const QVec& x) const;
  bool contains(const IntVec& x) const;
};

struct VertexSet {
  std::vector<QVec> vertices;  // sorted, deduplicated
  bool integral = true;
};

struct EnumerationCaps {
  int max_dim = 10;
  int max_rows = 30;
};

// Exhaustive enumeration of the bases of size d with an exact solve per
// basis.  Throws "DimensionCapExceeded" beyond the caps and "NoVertices"
// when the system has no vertex (empty or unbounded-without-vertex input).
VertexSet vertices(const HPolytope& p, EnumerationCaps caps = {});

bool is_integral(const HPolytope& p, EnumerationCaps caps = {});
bool is_integral(const VertexSet& vs);

// Rank of a list of rational vectors.
int rank_of(std::vector<QVec> rows);
// Dimension of the affine hull of a point set (-1 for the empty set).
int affine_dimension(const std::vector<QVec>& pts);

struct FacetReport {
  std::vector<int> facet_rows;      // rows whose tight vertices span a hyperplane
  std::vector<int> redundant_rows;  // all other rows
  int dimension = 0;                // affine dimension of the polytope
};
FacetReport facet_report(const HPolytope& p, const VertexSet& vs);

// Row scaled to the primitive integer normal (positive multiple).
IntVec primitive_normal(const QVec& a);
// gcd-normalised copy of an integer vector (positive multiple).
IntVec primitive(const IntVec& a);

struct LatticePoints {
  long long count = 0;
  std::vector<IntVec> points;  // filled only when requested
};
// Box enumeration inside the integer bounding box of the vertices.  Throws
// "BoxCapExceeded" when the box has more than box_cap points.
LatticePoints lattice_points(const HPolytope& p, bool collect, long long box_cap = 10'000'000,
                             EnumerationCaps caps = {});

// Throws "NotIntegral" for non-integral input.
bool is_reflexive_after_translation(const HPolytope& p, EnumerationCaps caps = {});

std::string q_to_string(const Q& q);
Q q_from_string(const std::string& s);

}  // namespace strpoly
