#include "strpoly/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace strpoly {

namespace {

// Node correspondence between two words of one commutation class: nodes
// are matched by the pair of wires that cross there.
std::vector<int> match_nodes(const WiringDiagram& from, const WiringDiagram& to) {
  std::vector<int> out(from.nbar);
  for (int j = 1; j <= from.nbar; ++j) {
    const DiagramNode& nd = from.nodes[j - 1];
    out[j - 1] = to.crossing(nd.left_wire, nd.right_wire);
  }
  return out;
}

// Sort key for labels: subdivision rays first, then node number with w
// before v.
std::tuple<int, int, int> label_key(const std::string& s) {
  if (s.rfind("w~", 0) == 0) return {0, std::stoi(s.substr(2)), 0};
  return {1, std::stoi(s.substr(1)), s[0] == 'w' ? 0 : 1};
}

// Puts the terms of a violation into label order.
void order_terms(BpfViolation& v, const std::vector<std::string>& labels, const Divisor& D) {
  auto by_label = [&](int a, int b) { return label_key(labels[a]) < label_key(labels[b]); };
  std::sort(v.sum_decomposition.begin(), v.sum_decomposition.end(),
            [&](const auto& a, const auto& b) { return by_label(a.first, b.first); });
  v.lhs_terms.clear();
  for (const auto& [r, c] : v.sum_decomposition) v.lhs_terms.push_back(-c * D.coeffs[r]);
  std::vector<int> mem = ray_members(v.collection);
  std::sort(mem.begin(), mem.end(), by_label);
  v.rhs_terms.clear();
  for (int r : mem) v.rhs_terms.push_back(Q(-D.coeffs[r]));
}

void sort_labels(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end(), [](const std::string& a, const std::string& b) { return label_key(a) < label_key(b); });
}

}  // namespace

Normalization normalize(const ReducedWord& word, bool allow_large) {
  validate(word.letters, word.n);
  for (const SmallWitness& wit : last_entry_witnesses(word)) {
    const bool small = wit.k <= kappa(wit.delta);
    if (!small && !allow_large) continue;
    IndexVector I(word.n, 0);
    if (word.n > 0) I.back() = wit.k;
    if (!same_commutation_class(word, build_word(wit.delta, I))) continue;
    Normalization norm;
    norm.input = word;
    norm.witness = wit;
    norm.small = small;
    norm.involuted = !wit.delta.empty() && wit.delta.back() == Bullet::A;
    norm.canonical_delta = norm.involuted ? swap_bullets(wit.delta) : wit.delta;
    norm.canonical = build_word(norm.canonical_delta, I);
    const ReducedWord target = norm.involuted ? apply_involution(word) : word;
    if (!same_commutation_class(norm.canonical, target))
      throw Error("InvariantBreach", "involution does not carry the witness word to the canonical word");
    norm.node_map = match_nodes(build_diagram(norm.canonical), build_diagram(target));
    return norm;
  }
  throw Error("NotSmallIndices", "word " + word.str() + " has no witness of the form i_delta(0,...,0,k)" +
                                     (allow_large ? std::string() : std::string(" with k <= kappa")));
}

IntVec to_input_coordinates(const Normalization& norm, const IntVec& x) {
  IntVec y(x.size(), 0);
  for (std::size_t j = 0; j < x.size(); ++j) y[norm.node_map[j] - 1] = x[j];
  return y;
}

BottData bott_data(const ReducedWord& word, bool allow_large) {
  BottData bd;
  bd.norm = normalize(word, allow_large);
  bd.diagram = build_diagram(bd.norm.canonical);
  bd.paths = enumerate_rigorous_paths(bd.diagram);
  const int n = bd.diagram.n;
  const Bullet prev = n >= 2 ? bd.norm.canonical_delta[n - 2] : Bullet::D;
  bd.selection = select_gamma(bd.diagram, bd.paths, prev, bd.norm.witness.k);
  for (int j = 1; j <= bd.diagram.nbar; ++j) {
    bd.v.push_back(lambda_row(bd.diagram, j, Coords::M));
    bd.w.push_back(bd.paths[bd.selection.gamma[j - 1]].w_m);
  }
  check_bott_data(bd.v, bd.w);
  return bd;
}

Fan bott_manifold_fan(const ReducedWord& word) {
  BottData bd = bott_data(word);
  return bott_fan(bd.v, bd.w);
}

TauCones tau_cones(const BottData& bd) {
  TauCones out;
  if (bd.selection.leftovers.empty()) return out;
  const int n = bd.diagram.n;
  const int nb = bd.diagram.nbar;
  const int k = bd.norm.witness.k;
  const Bullet prev = bd.norm.canonical_delta[n - 2];
  auto vi = [&](int j) { return j - 1; };
  auto wi = [&](int j) { return nb + j - 1; };
  if (prev == Bullet::A) {
    out.tau = ray_set({wi(nb - (n + k)), vi(nb - n), wi(nb - k + 1)});
  } else if (k == 2 && n == 3) {
    out.tau = ray_set({wi(3), vi(4), wi(5)});
  } else {
    out.tau = ray_set({wi(nb - (n + k)), vi(nb - 2 * k), wi(nb - k + 1)});
    if (k == 2 && n > 3) out.tau2 = ray_set({wi(nb - 3), vi(nb - 2), wi(nb - 1)});
  }
  return out;
}

TauCones tau_cones(const ReducedWord& word) { return tau_cones(bott_data(word)); }

std::string Relation::str() const {
  auto side = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " + " : "") + v[i];
    return s.empty() ? std::string("0") : s;
  };
  return side(lhs) + " = " + side(rhs);
}

HatSigma hat_sigma(const ReducedWord& word, bool allow_large) {
  HatSigma hs;
  hs.data = bott_data(word, allow_large);
  hs.heuristic = !hs.data.norm.small;
  hs.fan = IteratedStarFan(hs.data.v, hs.data.w);
  const TauCones tc = hs.heuristic ? TauCones{} : tau_cones(hs.data);
  std::vector<RaySet> formula;
  if (tc.tau) formula.push_back(*tc.tau);
  if (tc.tau2) formula.push_back(*tc.tau2);
  if (!hs.heuristic && formula.size() != hs.data.selection.leftovers.size())
    throw Error("InvariantBreach", "number of leftover paths differs from the number of cones tau");
  for (std::size_t s = 0; s < hs.data.selection.leftovers.size(); ++s) {
    const auto& [label_i, path_idx] = hs.data.selection.leftovers[s];
    const IntVec& target = hs.data.paths[path_idx].w_m;
    RaySet tau = 0;
    if (!hs.heuristic) {
      tau = formula[s];
      IntVec sum(hs.fan.d(), 0);
      for (int r : ray_members(tau)) sum = add(sum, hs.fan.rays()[r]);
      if (sum != target)
        throw Error("RelationFailed", "rays of tau do not sum to the leftover path " + hs.data.paths[path_idx].str());
    } else {
      Decomposition dec = hs.fan.locate(target);
      for (const auto& [r, c] : dec) {
        if (c != 1) throw Error("TauNotInFan", "leftover vector is not a unit sum of rays of one cone");
        tau |= RaySet{1} << r;
      }
    }
    const std::string label = "w~" + std::to_string(label_i);
    hs.fan.star(tau, label);
    hs.steps.push_back({label_i, tau, label});
  }
  if (hs.fan.d() <= 10) hs.explicit_fan = hs.fan.materialize();
  return hs;
}

Divisor divisor_for_weight(const HatSigma& hs, const Weight& lambda) {
  const ReducedWord& word = hs.data.norm.input;
  if (static_cast<int>(lambda.size()) != word.n) throw Error("BadWeightLength", "weight must have n entries");
  if (!is_regular(lambda)) throw Error("NotRegular", "weight must be regular dominant");
  const int nb = hs.fan.d();
  Divisor D;
  D.coeffs.assign(hs.fan.rays().size(), 0);
  for (int j = 1; j <= nb; ++j) {
    const int input_node = hs.data.norm.node_map[j - 1];
    D.coeffs[j - 1] = lambda[word.letters[input_node - 1] - 1];
  }
  return D;
}

std::vector<IntVec> input_rays(const HatSigma& hs) {
  std::vector<IntVec> out;
  for (const IntVec& r : hs.fan.rays()) out.push_back(to_input_coordinates(hs.data.norm, r));
  return out;
}

std::vector<Relation> verify_relations(const HatSigma& hs) {
  std::vector<Relation> out;
  const auto& rays = hs.fan.rays();
  const auto& labels = hs.fan.labels();
  const int d = hs.fan.d();
  // Relations defining the subdivided cones.
  for (const auto& [tau, idx] : hs.fan.stars()) {
    IntVec sum(d, 0);
    Relation rel;
    for (int r : ray_members(tau)) {
      sum = add(sum, rays[r]);
      rel.lhs.push_back(labels[r]);
    }
    if (sum != rays[idx]) throw Error("RelationFailed", "star relation fails for " + labels[idx]);
    sort_labels(rel.lhs);
    rel.rhs = {labels[idx]};
    out.push_back(rel);
  }
  // One relation per primitive collection.
  for (RaySet P : hs.fan.primitive_collections()) {
    IntVec sum(d, 0);
    Relation rel;
    for (int r : ray_members(P)) {
      sum = add(sum, rays[r]);
      rel.lhs.push_back(labels[r]);
    }
    Decomposition dec = hs.fan.locate(sum);
    QVec check(d, 0);
    for (const auto& [r, c] : dec) {
      for (int i = 0; i < d; ++i) check[i] += c * rays[r][i];
      std::string coef = c == 1 ? std::string() : q_to_string(c) + "*";
      rel.rhs.push_back(coef + labels[r]);
    }
    for (int i = 0; i < d; ++i)
      if (check[i] != sum[i]) throw Error("RelationFailed", "decomposition of a primitive collection sum fails");
    sort_labels(rel.lhs);
    std::sort(rel.rhs.begin(), rel.rhs.end(), [](const std::string& a, const std::string& b) {
      auto strip = [](const std::string& s) { return s.substr(s.find('*') == std::string::npos ? 0 : s.find('*') + 1); };
      return label_key(strip(a)) < label_key(strip(b));
    });
    out.push_back(rel);
  }
  return out;
}

std::vector<Relation> verify_relations(const ReducedWord& word) { return verify_relations(hat_sigma(word)); }

std::string terms_string(const std::vector<Q>& terms) {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += "+";
    s += terms[i] < 0 ? "(" + q_to_string(terms[i]) + ")" : q_to_string(terms[i]);
  }
  return s.empty() ? "0" : s;
}

ResolutionVerdict verify_small_resolution(const ReducedWord& word, Weight lambda, bool allow_large,
                                          EnumerationCaps caps) {
  if (lambda.empty()) lambda.assign(word.n, 2);
  if (static_cast<int>(lambda.size()) != word.n) throw Error("BadWeightLength", "weight must have n entries");
  if (!is_regular(lambda)) throw Error("NotRegular", "weight must be regular dominant");
  HatSigma hs = hat_sigma(word, allow_large);
  ResolutionVerdict v;
  v.word = word;
  v.norm = hs.data.norm;
  v.lambda = lambda;
  v.heuristic = hs.heuristic;
  v.rays = input_rays(hs);
  v.ray_count = static_cast<int>(v.rays.size());
  v.ray_labels = hs.fan.labels();
  v.primitive_collections = hs.fan.primitive_collections();

  // Smoothness: structural (unimodular Bott data, stars at cones), plus
  // determinants and the fan axioms when the fan is materialized.
  v.smooth = true;
  if (hs.explicit_fan) {
    v.smooth = is_smooth(*hs.explicit_fan) && check_fan_validity(*hs.explicit_fan);
    v.smooth_certified_by_determinants = true;
  }

  // Rays against the facet normals of the string polytope.
  std::set<IntVec> ours;
  for (const IntVec& r : v.rays) ours.insert(primitive(r));
  const HPolytope poly = string_polytope(word, lambda, Coords::M);
  std::set<IntVec> theirs;
  if (word.length() <= caps.max_dim && poly.rows() <= caps.max_rows) {
    FacetCheck fc = verify_facets(word, lambda, caps);
    theirs.insert(fc.facet_normals.begin(), fc.facet_normals.end());
    v.facets_certified = fc.all_rows_facets;
  } else {
    for (const QVec& row : poly.A) theirs.insert(primitive_normal(row));
  }
  v.rays_match = ours == theirs && static_cast<int>(ours.size()) == v.ray_count;

  // Basepoint-freeness of the divisor of lambda.
  const Divisor D = divisor_for_weight(hs, lambda);
  BpfResult bpf = basepoint_free_check(hs.fan.rays(), D, v.primitive_collections,
                                       [&](const IntVec& u) { return std::optional<Decomposition>(hs.fan.locate(u)); });
  v.bpf = bpf.bpf;
  v.violations = bpf.violations;
  for (BpfViolation& viol : v.violations) order_terms(viol, v.ray_labels, D);
  if (!v.violations.empty()) v.violation = v.violations.front();
  v.relations = verify_relations(hs);

  const bool ok = v.smooth && v.rays_match && v.bpf;
  if (v.heuristic)
    v.status = ok ? "heuristic" : "failed";
  else
    v.status = ok ? "verified" : "failed";
  return v;
}

}  // namespace strpoly
