#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "strpoly/resolution.hpp"

using namespace strpoly;

namespace {

const char* kR7 = "4,3,4,2,3,4,1,2,3,4,5,4,6,5,4,3,2,1,4,3,2";

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

std::set<std::string> label_set(RaySet s, const std::vector<std::string>& labels) {
  std::set<std::string> out;
  for (int r : ray_members(s)) out.insert(labels[r]);
  return out;
}

std::set<std::set<std::string>> pc_labels(const HatSigma& hs) {
  std::set<std::set<std::string>> out;
  for (RaySet p : hs.fan.primitive_collections()) out.insert(label_set(p, hs.fan.labels()));
  return out;
}

std::multiset<std::pair<QVec, Q>> row_set(const HPolytope& p) {
  std::multiset<std::pair<QVec, Q>> rows;
  for (int r = 0; r < p.rows(); ++r) rows.insert({p.A[r], p.b[r]});
  return rows;
}

void check_bott(const char* word, const std::vector<IntVec>& v, const std::vector<IntVec>& w) {
  const BottData b = bott_data(parse_word(word));
  CHECK(b.norm.canonical.str() == word);
  CHECK(b.v == v);
  CHECK(b.w == w);
}

}  // namespace

TEST_CASE("normalization") {
  const Normalization a = normalize(parse_word("1,3,2,1,3,2"));
  CHECK(a.small);
  CHECK_FALSE(a.involuted);
  CHECK(a.canonical.str() == "1,3,2,1,3,2");
  CHECK(a.witness.k == 2);
  // a word whose only witnesses end in A is carried through the involution
  const Normalization b = normalize(parse_word("4,3,4,2,3,4,1,2,5,4,3,2,1,4,5"));
  CHECK(b.involuted);
  CHECK(b.witness.k == 2);
  CHECK(delta_to_string(b.witness.delta) == "DAADA");
  CHECK(b.canonical_delta.back() == Bullet::D);
  CHECK(same_commutation_class(b.canonical, apply_involution(b.input)));
  CHECK(code_of([] { normalize(parse_word("1,2,3,2,1,2,4,3,2,1")); }) == "NotSmallIndices");
}

TEST_CASE("Bott data of the worked examples") {
  check_bott("2,1,3,2,1,3",
             {{-1, 0, 0, -1, 0, 0}, {0, -1, 0, 0, -1, 0}, {0, 0, -1, 0, 0, -1}, {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0},
              {0, 0, 0, 0, 0, -1}},
             {{1, 1, 1, 1, 0, 0}, {0, 1, 1, 1, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0},
              {0, 0, 0, 0, 0, 1}});
  check_bott("1,2,3,2,1,2",
             {{-1, 0, 0, 0, -1, 0}, {0, -1, 0, -1, 0, -1}, {0, 0, -1, 0, 0, 0}, {0, 0, 0, -1, 0, -1},
              {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1}},
             {{1, 1, 1, 1, 0, 0}, {0, 1, 1, 1, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 1, 0},
              {0, 0, 0, 0, 0, 1}});
  check_bott("1,3,2,1,3,2",
             {{-1, 0, 0, -1, 0, 0}, {0, -1, 0, 0, -1, 0}, {0, 0, -1, 0, 0, -1}, {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0},
              {0, 0, 0, 0, 0, -1}},
             {{1, 0, 1, 0, 1, 0}, {0, 1, 1, 1, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0},
              {0, 0, 0, 0, 0, 1}});
  const Fan p1 = bott_manifold_fan(parse_word("1"));
  CHECK(p1.rays == std::vector<IntVec>{{-1}, {1}});
  CHECK(p1.max_cones.size() == 2);
}

TEST_CASE("tau cones") {
  // ray indices: v_j -> j-1, w_j -> 6+j-1
  CHECK(tau_cones(parse_word("1,3,2,1,3,2")).tau == ray_set({8, 3, 10}));
  CHECK(tau_cones(parse_word("2,1,3,2,1,3")).tau == ray_set({7, 2, 11}));
  CHECK(tau_cones(parse_word("1,2,3,2,1,2")).tau == ray_set({7, 3, 11}));
  CHECK_FALSE(tau_cones(parse_word("1,2,1,3,2,1")).tau);
  CHECK_FALSE(tau_cones(parse_word("1,3,2,1,3,2")).tau2);
  const TauCones row9 = tau_cones(parse_word("1,2,1,3,4,3,2,3,1,2"));
  CHECK(row9.tau);
  CHECK(row9.tau2);
}

TEST_CASE("relations") {
  auto has = [](const std::vector<Relation>& rels, const std::string& s) {
    return std::any_of(rels.begin(), rels.end(), [&](const Relation& r) { return r.str() == s; });
  };
  CHECK(has(verify_relations(parse_word("1,3,2,1,3,2")), "w3 + v4 + w5 = w~2"));
  CHECK(has(verify_relations(parse_word("2,1,3,2,1,3")), "w2 + v3 + w6 = w~0"));
  CHECK(has(verify_relations(parse_word("1,2,3,2,1,2")), "w2 + v4 + w6 = w~0"));
}

TEST_CASE("the resolution fan") {
  const HatSigma a = hat_sigma(parse_word("1,2,1,3,2,1"));
  CHECK(a.fan.rays().size() == 12);
  CHECK(a.steps.empty());
  const HatSigma b = hat_sigma(parse_word("1,3,2,1,3,2"));
  CHECK(b.fan.rays().size() == 13);
  CHECK(b.steps.size() == 1);
  const HatSigma c = hat_sigma(parse_word("1,2,1,3,4,3,2,3,1,2"));
  CHECK(c.fan.rays().size() == 22);
  CHECK(c.steps.size() == 2);
  CHECK_FALSE(c.heuristic);
  CHECK(code_of([] { hat_sigma(parse_word("1,2,3,2,1,2,4,3,2,1")); }) == "NotSmallIndices");
}

TEST_CASE("divisor of a weight") {
  const ReducedWord w = parse_word("1,3,2,1,3,2");
  const HatSigma hs = hat_sigma(w);
  const Divisor D = divisor_for_weight(hs, {1, 2, 3});
  // a_v = lambda of the letter, a_w = 0
  const auto& labels = hs.fan.labels();
  for (std::size_t r = 0; r < labels.size(); ++r) {
    if (labels[r][0] == 'v') {
      const int j = std::stoi(labels[r].substr(1));
      CHECK(D.coeffs[r] == Weight{1, 2, 3}[w.letters[j - 1] - 1]);
    } else {
      CHECK(D.coeffs[r] == 0);
    }
  }
  CHECK(code_of([&] { divisor_for_weight(hs, {1, 0, 3}); }) == "NotRegular");

  // P_D equals the string polytope row for row (input coordinates)
  Fan f;
  f.d = hs.fan.d();
  f.rays = input_rays(hs);
  CHECK(row_set(polytope_of_divisor(f, D)) == row_set(string_polytope(w, {1, 2, 3}, Coords::M)));

  const HatSigma p1 = hat_sigma(parse_word("1"));
  Fan g;
  g.d = 1;
  g.rays = input_rays(p1);
  const VertexSet vs = vertices(polytope_of_divisor(g, divisor_for_weight(p1, {3})));
  CHECK(vs.vertices.size() == 2);
  CHECK(vs.vertices.back()[0] == 3);
}

TEST_CASE("P_D equals the string polytope for all rank-3 words") {
  for (const auto& w : enumerate_reduced_words(3)) {
    const HatSigma hs = hat_sigma(w);
    Fan f;
    f.d = hs.fan.d();
    f.rays = input_rays(hs);
    CHECK(row_set(polytope_of_divisor(f, divisor_for_weight(hs, {2, 2, 2}))) ==
          row_set(string_polytope(w, {2, 2, 2}, Coords::M)));
  }
}

TEST_CASE("verdicts") {
  const ResolutionVerdict v = verify_small_resolution(parse_word("1,3,2,1,3,2"));
  CHECK(v.status == "verified");
  CHECK(v.smooth);
  CHECK(v.smooth_certified_by_determinants);
  CHECK(v.rays_match);
  CHECK(v.facets_certified);
  CHECK(v.bpf);
  CHECK(v.ray_count == 13);
  CHECK(v.lambda == Weight{2, 2, 2});

  for (const auto& w : enumerate_reduced_words(3)) {
    const ResolutionVerdict x = verify_small_resolution(w);
    CHECK(x.status == "verified");
    // verified => integral polytopes for fundamental weights and (2,2,2)
    for (const Weight& mu : {Weight{1, 0, 0}, Weight{0, 1, 0}, Weight{0, 0, 1}, Weight{2, 2, 2}})
      CHECK(is_integral(string_polytope(w, mu, Coords::T)));
  }

  const ResolutionVerdict a = verify_small_resolution(parse_word("4,3,4,2,3,4,1,2,5,4,3,2,1,4,5"), {2, 2, 2, 2, 2});
  CHECK(a.status == "verified");
  CHECK(a.ray_count == 31);
}

TEST_CASE("the negative example") {
  const ReducedWord w = parse_word(kR7);
  const ResolutionVerdict v = verify_small_resolution(w);
  CHECK(v.smooth);
  CHECK(v.rays_match);
  CHECK_FALSE(v.bpf);
  CHECK(v.heuristic);
  CHECK(v.status == "failed");
  CHECK(v.ray_count == 45);
  bool found = false;
  for (const BpfViolation& b : v.violations) {
    if (label_set(b.collection, v.ray_labels) != std::set<std::string>{"w~3", "v19"}) continue;
    found = true;
    CHECK(terms_string(b.lhs_terms) == "0+(-2)+(-2)+0");
    CHECK(terms_string(b.rhs_terms) == "0+(-2)");
  }
  CHECK(found);

  const HatSigma hs = hat_sigma(w, true);
  REQUIRE(hs.steps.size() == 3);
  auto has_rel = [&](const std::string& s) {
    const auto rels = verify_relations(hs);
    return std::any_of(rels.begin(), rels.end(), [&](const Relation& r) { return r.str() == s; });
  };
  CHECK(has_rel("w12 + v15 + w19 = w~0"));
  CHECK(has_rel("w17 + v18 + w20 = w~2"));
  CHECK(has_rel("w16 + v17 + v18 + w19 + w21 = w~3"));

  // the listed primitive collections, less the non-minimal {w17, w20, w~3}
  std::set<std::set<std::string>> expected;
  for (int j = 1; j <= 21; ++j) expected.insert({"w" + std::to_string(j), "v" + std::to_string(j)});
  for (std::set<std::string> p : std::vector<std::set<std::string>>{
           {"w12", "v15", "w19"}, {"w~0", "v12"}, {"w~0", "w15"}, {"w~0", "v19"},
           {"w17", "v18", "w20"}, {"w~2", "v17"}, {"w~2", "w18"}, {"w~2", "v20"},
           {"w16", "v17", "v18", "w19", "w21"}, {"w~3", "v16"}, {"w~3", "w17"}, {"w~3", "w18"},
           {"w~3", "v19"}, {"w~3", "v21"}, {"w12", "v15", "w~3"}, {"w~2", "w~3"}})
    expected.insert(p);
  CHECK(pc_labels(hs) == expected);
}

TEST_CASE("terms rendering") {
  CHECK(terms_string({Q(0), Q(-2), Q(3, 2)}) == "0+(-2)+3/2");
}
