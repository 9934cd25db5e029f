#include "strpoly/wiring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace strpoly {

int WiringDiagram::crossing(int a, int b) const {
  for (int j : wire_nodes[a]) {
    const DiagramNode& nd = nodes[j - 1];
    if ((nd.left_wire == a && nd.right_wire == b) || (nd.left_wire == b && nd.right_wire == a)) return j;
  }
  throw Error("InvariantBreach", "wires " + std::to_string(a) + " and " + std::to_string(b) + " do not cross");
}

bool WiringDiagram::node_on_wire(int j, int w) const {
  const DiagramNode& nd = nodes[j - 1];
  return nd.left_wire == w || nd.right_wire == w;
}

WiringDiagram build_diagram(const ReducedWord& word) {
  WiringDiagram d;
  d.word = word;
  d.n = word.n;
  d.nbar = word.length();
  const int tracks = d.n + 1;

  std::vector<int> order(tracks);
  std::iota(order.begin(), order.end(), 1);
  d.wire_nodes.assign(tracks + 1, {});
  d.strip_order.push_back(order);
  for (int j = 1; j <= d.nbar; ++j) {
    int c = word.letters[j - 1];
    DiagramNode nd{c, order[c - 1], order[c]};
    d.nodes.push_back(nd);
    d.wire_nodes[nd.left_wire].push_back(j);
    d.wire_nodes[nd.right_wire].push_back(j);
    std::swap(order[c - 1], order[c]);
    d.strip_order.push_back(order);
  }
  for (const auto& ord : d.strip_order) {
    std::vector<int> pos(tracks + 1, -1);
    for (int t = 0; t < tracks; ++t) pos[ord[t]] = t;
    d.strip_pos.push_back(pos);
  }

  // Faces: vertical runs of cells in each gap, cut where a node pinches it.
  const int gaps = d.n + 2;
  d.face_of_cell.assign(d.nbar + 1, std::vector<int>(gaps, -1));
  for (int g = 0; g < gaps; ++g) {
    int start = 0;
    for (int s = 0; s <= d.nbar; ++s) {
      bool pinched_below = s < d.nbar && d.nodes[s].column == g;  // t_{s+1} closes the run
      if (s == d.nbar || pinched_below) {
        int id = static_cast<int>(d.faces.size());
        d.faces.push_back(Face{g, start, s});
        for (int r = start; r <= s; ++r) d.face_of_cell[r][g] = id;
        start = s + 1;
      }
    }
  }
  d.chamber_of_node.resize(d.nbar);
  for (int j = 1; j <= d.nbar; ++j) d.chamber_of_node[j - 1] = d.face_of_cell[j][d.nodes[j - 1].column];

  d.face_boundary_nodes.assign(d.faces.size(), {});
  for (std::size_t f = 0; f < d.faces.size(); ++f) {
    const Face& fc = d.faces[f];
    auto& bnd = d.face_boundary_nodes[f];
    if (fc.gap == 0 || fc.gap == d.n + 1) {
      // Side faces: only adjacent-column nodes.
    }
    if (fc.top_strip >= 1 && d.nodes[fc.top_strip - 1].column == fc.gap) bnd.emplace_back(fc.top_strip, ColumnRelation::Same);
    for (int j = fc.top_strip + 1; j <= fc.bottom_strip; ++j) {
      int c = d.nodes[j - 1].column;
      if (c == fc.gap - 1 || c == fc.gap + 1) bnd.emplace_back(j, ColumnRelation::Adjacent);
    }
    if (fc.bottom_strip < d.nbar && d.nodes[fc.bottom_strip].column == fc.gap)
      bnd.emplace_back(fc.bottom_strip + 1, ColumnRelation::Same);
    std::sort(bnd.begin(), bnd.end());
  }
  d.M = chamber_matrix(d);
  return d;
}

IntMatrix chamber_matrix(const WiringDiagram& d) {
  IntMatrix M(d.nbar, IntVec(d.nbar, 0));
  for (int j = 1; j <= d.nbar; ++j) {
    for (const auto& [node, rel] : d.face_boundary_nodes[d.chamber_of_node[j - 1]])
      M[j - 1][node - 1] += rel == ColumnRelation::Same ? 1 : -1;
  }
  return M;
}

std::string wire_expression(const std::vector<int>& wires) {
  std::ostringstream out;
  for (std::size_t i = 0; i < wires.size(); ++i) out << (i ? "->" : "") << 'l' << wires[i];
  return out.str();
}

std::string RigorousPath::str() const { return wire_expression(wires); }

std::vector<WireLeg> path_legs(const WiringDiagram& d, const RigorousPath& path) {
  std::vector<WireLeg> legs;
  int prev = d.nbar + 1;
  for (std::size_t t = 0; t < path.wires.size(); ++t) {
    int next = t < path.nodes.size() ? path.nodes[t] : d.nbar + 1;
    legs.push_back(WireLeg{path.wires[t], prev, next});
    prev = next;
  }
  return legs;
}

std::vector<std::vector<char>> enclosed_cells(const WiringDiagram& d, const std::vector<WireLeg>& legs) {
  const int gaps = d.n + 2;
  std::vector<std::vector<int>> crossings(d.nbar + 1);
  for (const WireLeg& leg : legs) {
    int lo = std::min(leg.from, leg.to), hi = std::max(leg.from, leg.to);
    for (int s = lo; s < hi && s <= d.nbar; ++s) crossings[s].push_back(d.strip_pos[s][leg.wire]);
  }
  std::vector<std::vector<char>> cells(d.nbar + 1, std::vector<char>(gaps, 0));
  for (int s = 0; s <= d.nbar; ++s) {
    for (int g = 0; g < gaps; ++g) {
      int left = 0;
      for (int p : crossings[s])
        if (p <= g - 1) ++left;
      cells[s][g] = static_cast<char>(left % 2);
    }
  }
  return cells;
}

IntVec enclosed_chambers(const WiringDiagram& d, const std::vector<std::vector<char>>& cells) {
  std::vector<int> inside(d.faces.size(), -1);
  for (int s = 0; s <= d.nbar; ++s) {
    for (std::size_t g = 0; g < cells[s].size(); ++g) {
      int f = d.face_of_cell[s][g];
      int v = cells[s][g];
      if (inside[f] >= 0 && inside[f] != v) throw Error("InvariantBreach", "face is partially enclosed");
      inside[f] = v;
    }
  }
  IntVec w(d.nbar, 0);
  std::vector<char> is_chamber(d.faces.size(), 0);
  for (int j = 1; j <= d.nbar; ++j) {
    is_chamber[d.chamber_of_node[j - 1]] = 1;
    w[j - 1] = inside[d.chamber_of_node[j - 1]] == 1 ? 1 : 0;
  }
  for (std::size_t f = 0; f < d.faces.size(); ++f)
    if (inside[f] == 1 && !is_chamber[f]) throw Error("InvariantBreach", "enclosed face is not a chamber");
  return w;
}

IntVec string_vector_t(const WiringDiagram& d, const RigorousPath& path) {
  IntVec a(d.nbar, 0);
  for (std::size_t t = 0; t < path.nodes.size(); ++t)
    a[path.nodes[t] - 1] += path.wires[t] < path.wires[t + 1] ? 1 : -1;
  return a;
}

namespace {

// Forbidden-fragment rule: at a crossing of two wires with the same
// orientation, a path on wire a may not pass straight over wire b when both
// point downward and a > b, or both point upward and a < b.  (Switching is
// always allowed.)
bool straight_allowed(int a, int b, bool a_up, bool b_up) {
  if (a_up != b_up) return true;
  return a_up ? !(a < b) : !(a > b);
}

struct PathSearch {
  const WiringDiagram& d;
  int k;
  std::vector<RigorousPath>& out;
  std::vector<char> used;
  std::vector<int> wires, switches;

  bool up(int w) const { return w <= k; }

  // Position of node j within the traversal sequence of wire w.
  std::vector<int> sequence(int w) const {
    std::vector<int> s = d.wire_nodes[w];
    if (up(w)) std::reverse(s.begin(), s.end());
    return s;
  }

  void run(int w, std::size_t from) {
    const std::vector<int> seq = sequence(w);
    std::vector<int> marked;
    auto release = [&] {
      for (int m : marked) used[m] = 0;
    };
    for (std::size_t idx = from; idx < seq.size(); ++idx) {
      const int j = seq[idx];
      if (used[j]) {  // a node may not be visited twice
        release();
        return;
      }
      const DiagramNode& nd = d.nodes[j - 1];
      const int o = nd.left_wire == w ? nd.right_wire : nd.left_wire;
      used[j] = 1;
      // Branch 1: switch to wire o and follow its orientation.
      const std::vector<int> so = sequence(o);
      const auto pos = static_cast<std::size_t>(std::find(so.begin(), so.end(), j) - so.begin());
      wires.push_back(o);
      switches.push_back(j);
      run(o, pos + 1);
      wires.pop_back();
      switches.pop_back();
      // Branch 2: continue straight along w.
      if (!straight_allowed(w, o, up(w), up(o))) {
        used[j] = 0;
        release();
        return;
      }
      marked.push_back(j);
    }
    if (!up(w) && w == k + 1) {
      RigorousPath p;
      p.source = k;
      p.wires = wires;
      p.nodes = switches;
      out.push_back(std::move(p));
    }
    release();
  }
};

}  // namespace

std::vector<RigorousPath> enumerate_rigorous_paths(const WiringDiagram& d) {
  std::vector<RigorousPath> all;
  for (int k = 1; k <= d.n; ++k) {
    std::vector<RigorousPath> found;
    PathSearch search{d, k, found, std::vector<char>(d.nbar + 1, 0), {k}, {}};
    search.run(k, 0);
    for (RigorousPath& p : found) {
      p.w_t = string_vector_t(d, p);
      p.w_m = enclosed_chambers(d, enclosed_cells(d, path_legs(d, p)));
      for (std::size_t t = 0; t < p.nodes.size(); ++t)
        if (p.wires[t] <= k && p.wires[t + 1] > k) p.peaks.push_back(p.nodes[t]);
      if (p.peaks.empty()) throw Error("InvariantBreach", "rigorous path without a peak");
      p.max_peak = *std::min_element(p.peaks.begin(), p.peaks.end());
    }
    std::sort(found.begin(), found.end(), [](const RigorousPath& a, const RigorousPath& b) {
      return std::tie(a.wires, a.nodes) < std::tie(b.wires, b.nodes);
    });
    all.insert(all.end(), found.begin(), found.end());
  }
  return all;
}

std::vector<RigorousPath> enumerate_rigorous_paths(const ReducedWord& word) {
  return enumerate_rigorous_paths(build_diagram(word));
}

std::vector<Region> regions(const WiringDiagram& d) {
  std::vector<Region> out;
  for (int i = 1; i <= d.n; ++i) {
    int x = d.crossing(i, i + 1);
    Region r;
    r.index = i;
    r.cells = enclosed_cells(d, {WireLeg{i, d.nbar + 1, x}, WireLeg{i + 1, x, d.nbar + 1}});
    IntVec ind = enclosed_chambers(d, r.cells);
    for (int j = 1; j <= d.nbar; ++j)
      if (ind[j - 1]) r.chambers.push_back(j);
    out.push_back(std::move(r));
  }
  return out;
}

bool node_in_closed_region(const WiringDiagram& d, const Region& r, int j) {
  int c = d.nodes[j - 1].column;
  return r.cells[j - 1][c] || r.cells[j][c] || r.cells[j - 1][c - 1] || r.cells[j - 1][c + 1];
}

bool is_new(const RigorousPath& path, Bullet bullet, int n) {
  int target = bullet == Bullet::D ? n + 1 : 1;
  return std::find(path.wires.begin(), path.wires.end(), target) != path.wires.end();
}

namespace {

bool strictly_decreasing(const std::vector<int>& v, std::size_t b, std::size_t e) {
  for (std::size_t i = b; i + 1 < e; ++i)
    if (!(v[i] > v[i + 1])) return false;
  return true;
}

bool lies_below_top_wire(const WiringDiagram& d, const RigorousPath& p) {
  const int top = d.n + 1;
  for (const WireLeg& leg : path_legs(d, p)) {
    int lo = std::min(leg.from, leg.to), hi = std::max(leg.from, leg.to);
    for (int s = lo; s < hi && s <= d.nbar; ++s)
      if (d.strip_pos[s][leg.wire] < d.strip_pos[s][top]) return false;
  }
  return true;
}

}  // namespace

std::optional<int> find_canonical_D_new(const WiringDiagram& d, const std::vector<RigorousPath>& paths, int k) {
  if (k < 1 || k > d.n) throw Error("BadArgument", "k outside [1..n]");
  const int top = d.n + 1;
  const int jk = d.crossing(k, top);
  std::vector<Region> regs = regions(d);
  int ak = 0;
  for (const Region& r : regs)
    if (node_in_closed_region(d, r, jk)) ak = std::max(ak, r.index);
  std::vector<int> hits;
  for (std::size_t idx = 0; idx < paths.size(); ++idx) {
    const RigorousPath& p = paths[idx];
    if (!is_new(p, Bullet::D, d.n)) continue;
    if (p.peaks.size() != 1 || p.peaks[0] != jk) continue;
    auto it = std::find(p.nodes.begin(), p.nodes.end(), jk);
    std::size_t t = static_cast<std::size_t>(it - p.nodes.begin());
    if (p.wires[t] != k || p.wires[t + 1] != top) continue;
    if (!lies_below_top_wire(d, p)) continue;
    if (!strictly_decreasing(p.wires, 0, t) || !strictly_decreasing(p.wires, t + 2, p.wires.size())) continue;
    if (p.source != ak) continue;
    hits.push_back(static_cast<int>(idx));
  }
  if (hits.size() != 1) return std::nullopt;
  // Containment in R_{a_k}.
  const Region& r = regs[ak - 1];
  for (int j = 1; j <= d.nbar; ++j)
    if (paths[hits[0]].w_m[j - 1] && !std::binary_search(r.chambers.begin(), r.chambers.end(), j))
      return std::nullopt;
  return hits[0];
}

RigorousPath canonical_D_new_path(const WiringDiagram& d, const std::vector<RigorousPath>& paths, int k) {
  auto idx = find_canonical_D_new(d, paths, k);
  if (!idx) throw Error("NotFound", "no unique canonical D-new path for k=" + std::to_string(k));
  return paths[*idx];
}

RigorousPath canonical_D_new_path(const ReducedWord& word, int k) {
  WiringDiagram d = build_diagram(word);
  return canonical_D_new_path(d, enumerate_rigorous_paths(d), k);
}

namespace {

bool subset_of(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

int weight(const IntVec& a) { return std::accumulate(a.begin(), a.end(), 0); }

}  // namespace

GammaSelection select_gamma(const WiringDiagram& d, const std::vector<RigorousPath>& paths, Bullet delta_prev, int k) {
  GammaSelection sel;
  sel.gamma.assign(d.nbar, -1);
  std::vector<std::vector<int>> by_peak(d.nbar + 1);
  for (std::size_t idx = 0; idx < paths.size(); ++idx) by_peak[paths[idx].max_peak].push_back(static_cast<int>(idx));
  std::vector<char> chosen(paths.size(), 0);
  for (int j = 1; j <= d.nbar; ++j) {
    const auto& cand = by_peak[j];
    if (cand.empty()) throw Error("TieUnresolvable", "no rigorous path has its maximal peak at t_" + std::to_string(j));
    int pick = -1;
    if (cand.size() == 1) {
      pick = cand[0];
    } else if (cand.size() == 2) {
      const IntVec& a = paths[cand[0]].w_m;
      const IntVec& b = paths[cand[1]].w_m;
      if (subset_of(a, b) || subset_of(b, a)) {
        pick = weight(a) >= weight(b) ? cand[0] : cand[1];
      } else if (d.node_on_wire(j, d.n + 1)) {
        const DiagramNode& nd = d.nodes[j - 1];
        int kk = nd.left_wire == d.n + 1 ? nd.right_wire : nd.left_wire;
        auto canon = find_canonical_D_new(d, paths, kk);
        if (canon && (*canon == cand[0] || *canon == cand[1])) pick = *canon;
      }
    }
    if (pick < 0)
      throw Error("TieUnresolvable", "cannot designate a path for the maximal peak t_" + std::to_string(j));
    sel.gamma[j - 1] = pick;
    chosen[pick] = 1;
  }
  // Label the remaining paths.
  std::vector<std::pair<int, std::vector<int>>> labels;
  const int n = d.n;
  if (delta_prev == Bullet::D) {
    labels.push_back({0, {n - k - 1, n, n - k}});
    for (int i = 2; i <= k; ++i) labels.push_back({i, {n - i, n + 1, n - i + 1}});
  } else {
    labels.push_back({0, {k + 1, 1, k + 2}});
  }
  for (std::size_t idx = 0; idx < paths.size(); ++idx) {
    if (chosen[idx]) continue;
    int label = -1;
    for (const auto& [i, expr] : labels)
      if (paths[idx].wires == expr) label = i;
    if (label < 0)
      throw Error("TieUnresolvable", "leftover path " + paths[idx].str() + " matches no labelled expression");
    sel.leftovers.emplace_back(label, static_cast<int>(idx));
  }
  std::sort(sel.leftovers.begin(), sel.leftovers.end());
  return sel;
}

}  // namespace strpoly
