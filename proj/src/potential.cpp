#include "strpoly/potential.hpp"

#include <algorithm>

#include "json.hpp"
#include "strpoly/moves_index.hpp"
#include "strpoly/string_polytope.hpp"
#include "strpoly/wiring.hpp"

namespace strpoly {

LaurentPotential disk_potential(const ReducedWord& word) {
  validate(word.letters, word.n);
  if (!has_small_indices(word).small)
    throw Error("NotSmallIndices", "the disk potential is only emitted for words with small indices");
  const WiringDiagram d = build_diagram(word);
  std::vector<RigorousPath> paths = enumerate_rigorous_paths(d);
  std::stable_sort(paths.begin(), paths.end(), [](const RigorousPath& a, const RigorousPath& b) {
    if (a.max_peak != b.max_peak) return a.max_peak < b.max_peak;
    return a.wires < b.wires;
  });
  LaurentPotential p;
  p.word = word;
  for (const RigorousPath& g : paths) p.terms.push_back({g.w_m, IntVec(word.n, 0)});
  p.path_terms = static_cast<int>(paths.size());
  for (int j = 1; j <= d.nbar; ++j)
    p.terms.push_back({lambda_row(d, j, Coords::M), unit_vector(word.n, word.letters[j - 1] - 1)});
  return p;
}

namespace {

std::string power(const std::string& var, int index, int e) {
  std::string s = var + std::to_string(index);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string term_text(const LaurentTerm& t) {
  std::vector<std::string> num, den;
  for (std::size_t i = 0; i < t.q_exp.size(); ++i) {
    if (t.q_exp[i] > 0) num.push_back(power("q", static_cast<int>(i) + 1, t.q_exp[i]));
    if (t.q_exp[i] < 0) den.push_back(power("q", static_cast<int>(i) + 1, -t.q_exp[i]));
  }
  for (std::size_t i = 0; i < t.y_exp.size(); ++i) {
    if (t.y_exp[i] > 0) num.push_back(power("y", static_cast<int>(i) + 1, t.y_exp[i]));
    if (t.y_exp[i] < 0) den.push_back(power("y", static_cast<int>(i) + 1, -t.y_exp[i]));
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "*" : "") + v[i];
    return s;
  };
  std::string s = num.empty() ? "1" : join(num);
  if (den.size() == 1) s += "/" + den[0];
  if (den.size() > 1) s += "/(" + join(den) + ")";
  return s;
}

std::string render(const LaurentPotential& p, const std::string& format) {
  if (format == "text") {
    std::string s;
    for (std::size_t i = 0; i < p.terms.size(); ++i) s += (i ? " + " : "") + term_text(p.terms[i]);
    return s;
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["word"] = p.word.str();
    j["term_count"] = p.terms.size();
    j["path_terms"] = p.path_terms;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const LaurentTerm& t : p.terms) {
      nlohmann::ordered_json jt;
      jt["y_exp"] = t.y_exp;
      jt["q_exp"] = t.q_exp;
      jt["text"] = term_text(t);
      terms.push_back(jt);
    }
    j["terms"] = terms;
    return j.dump();
  }
  throw Error("BadFormat", "format must be text or json");
}

}  // namespace strpoly
