#pragma once

// The disk potential of a small-index word as a formal Laurent polynomial
// in y_1..y_nbar (chamber coordinates) and q_1..q_n (weight variables):
//   sum over rigorous paths of y^{w_gamma} + sum over nodes of q_{i_j} y^{v_j}.

#include <string>
#include <vector>

#include "strpoly/weyl_words.hpp"

namespace strpoly {

struct LaurentTerm {
  IntVec y_exp;  // length nbar
  IntVec q_exp;  // length n
  bool operator==(const LaurentTerm&) const = default;
};

struct LaurentPotential {
  ReducedWord word;
  std::vector<LaurentTerm> terms;  // path terms first (by maximal peak), then node terms by j
  int path_terms = 0;
};

// Throws "NotSmallIndices".
LaurentPotential disk_potential(const ReducedWord& word);

// "q1/(y1*y4)", "y1*y3*y5", "y5", "1".
std::string term_text(const LaurentTerm& term);
// format is "text" ("y1 + q1/y1") or "json".  Throws "BadFormat".
std::string render(const LaurentPotential& p, const std::string& format);

}  // namespace strpoly
