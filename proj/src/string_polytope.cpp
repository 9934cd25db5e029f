#include "strpoly/string_polytope.hpp"

#include <algorithm>

namespace strpoly {

bool is_regular(const Weight& lambda) {
  return std::all_of(lambda.begin(), lambda.end(), [](int x) { return x > 0; });
}

Weight reversed_weight(const Weight& lambda) { return Weight(lambda.rbegin(), lambda.rend()); }

IntVec lambda_row(const WiringDiagram& d, int j, Coords coords) {
  IntVec a(d.nbar, 0);
  const int c = d.nodes[j - 1].column;
  if (coords == Coords::T) {
    a[j - 1] = -1;
    for (int k = j + 1; k <= d.nbar; ++k) {
      int ck = d.nodes[k - 1].column;
      if (ck == c)
        a[k - 1] += -2;
      else if (std::abs(ck - c) == 1)
        a[k - 1] += 1;
    }
  } else {
    for (int k = j; k <= d.nbar; ++k)
      if (d.nodes[k - 1].column == c) a[k - 1] = -1;
  }
  return a;
}

HPolytope string_cone(const WiringDiagram& d, const std::vector<RigorousPath>& paths, Coords coords) {
  if (coords == Coords::None) throw Error("BadCoords", "coordinate system required");
  HPolytope p;
  p.d = d.nbar;
  p.coords = coords;
  for (const RigorousPath& g : paths) p.add_row(coords == Coords::M ? g.w_m : g.w_t, 0, "path:" + g.str());
  return p;
}

HPolytope lambda_cone(const WiringDiagram& d, const Weight& lambda, Coords coords) {
  if (coords == Coords::None) throw Error("BadCoords", "coordinate system required");
  if (static_cast<int>(lambda.size()) != d.n)
    throw Error("BadWeightLength", "weight has " + std::to_string(lambda.size()) + " entries, expected " +
                                       std::to_string(d.n));
  HPolytope p;
  p.d = d.nbar;
  p.coords = coords;
  for (int j = 1; j <= d.nbar; ++j)
    p.add_row(lambda_row(d, j, coords), lambda[d.nodes[j - 1].column - 1], "node:" + std::to_string(j));
  return p;
}

HPolytope string_polytope(const WiringDiagram& d, const std::vector<RigorousPath>& paths, const Weight& lambda,
                          Coords coords) {
  HPolytope p = string_cone(d, paths, coords);
  HPolytope l = lambda_cone(d, lambda, coords);
  for (int r = 0; r < l.rows(); ++r) p.add_row(l.A[r], l.b[r], l.row_tags[r]);
  return p;
}

HPolytope string_cone(const ReducedWord& word, Coords coords) {
  WiringDiagram d = build_diagram(word);
  return string_cone(d, enumerate_rigorous_paths(d), coords);
}

HPolytope lambda_cone(const ReducedWord& word, const Weight& lambda, Coords coords) {
  return lambda_cone(build_diagram(word), lambda, coords);
}

HPolytope string_polytope(const ReducedWord& word, const Weight& lambda, Coords coords) {
  WiringDiagram d = build_diagram(word);
  return string_polytope(d, enumerate_rigorous_paths(d), lambda, coords);
}

FacetCheck verify_facets(const ReducedWord& word, const Weight& lambda, EnumerationCaps caps) {
  if (!is_regular(lambda)) throw Error("NotRegular", "facet verification needs a regular weight");
  WiringDiagram d = build_diagram(word);
  std::vector<RigorousPath> paths = enumerate_rigorous_paths(d);
  HPolytope p = string_polytope(d, paths, lambda, Coords::M);
  VertexSet vs = vertices(p, caps);
  FacetReport rep = facet_report(p, vs);
  FacetCheck out;
  out.redundant_rows = rep.redundant_rows;
  out.all_rows_facets = rep.redundant_rows.empty() && rep.dimension == p.d;
  for (int r : rep.facet_rows) out.facet_normals.push_back(primitive_normal(p.A[r]));
  std::sort(out.facet_normals.begin(), out.facet_normals.end());
  out.facet_normals.erase(std::unique(out.facet_normals.begin(), out.facet_normals.end()), out.facet_normals.end());
  std::vector<IntVec> expected;
  for (const RigorousPath& g : paths) expected.push_back(primitive(g.w_m));
  for (int j = 1; j <= d.nbar; ++j) expected.push_back(primitive(lambda_row(d, j, Coords::M)));
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  out.normals_match = expected == out.facet_normals;
  return out;
}

IntVec three_move_transfer(const IntVec& point, int k) {
  if (k < 1 || k + 2 > static_cast<int>(point.size()))
    throw Error("BadPosition", "3-move position out of range");
  IntVec out(point);
  const int a = point[k - 1], b = point[k], c = point[k + 1];
  out[k - 1] = std::max(c, b - a);
  out[k] = a + c;
  out[k + 1] = std::min(a, b - c);
  return out;
}

}  // namespace strpoly
