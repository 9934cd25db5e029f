#pragma once

// Extensions and contractions of reduced words, the A/D/delta-indices,
// the words i_delta(I), the small-indices predicate and the closed formula
// for the number of rigorous paths.

#include <optional>
#include <string>
#include <vector>

#include "strpoly/weyl_words.hpp"

namespace strpoly {

using Delta = std::vector<Bullet>;
using IndexVector = std::vector<int>;

std::string delta_to_string(const Delta& delta);
Delta parse_delta(const std::string& text);
Delta swap_bullets(const Delta& delta);  // A <-> D, the effect of the letter involution

// E_D(s)(i) = i^-(s) (n+1, n, ..., 1) (i^+(s) + 1)
// E_A(s)(i) = (i^-(s) + 1) (1, ..., n+1) i^+(s)
// where i^+(s) is the suffix of length s.  Throws "BadPosition".
ReducedWord extend(const ReducedWord& word, Bullet bullet, int s);

// Drops the letters of the nodes on the extremal wire (l_{n+1} for D, l_1
// for A) and shifts the letters on the far side of it down by one.
ReducedWord contract(const ReducedWord& word, Bullet bullet);

// Number of nodes strictly below l_{n+1} (D) or strictly below l_1 (A).
int ind(const ReducedWord& word, Bullet bullet);

// I_n = ind_{delta_n}(i), then recurse on the delta_n-contraction.
IndexVector delta_index(const ReducedWord& word, const Delta& delta);

// i_delta(I).  Throws "BadBounds" unless 0 <= I_i <= i(i-1)/2.
ReducedWord build_word(const Delta& delta, const IndexVector& I);

// kappa(delta_{n-1}, delta_n): 2 if equal, n-1 otherwise (0 for n = 1).
int kappa(const Delta& delta);

struct SmallWitness {
  Delta delta;
  int k = 0;
};

struct SmallIndices {
  bool small = false;
  std::optional<SmallWitness> witness;
};

// Searches all 2^n sequences for ind_delta(word) = (0,...,0,k) with
// k <= kappa(delta) and word ~ i_delta(0,...,0,k).  Among successful
// witnesses the one with the smallest k wins, ties broken lexicographically
// with D before A.
SmallIndices has_small_indices(const ReducedWord& word);
// All delta with ind_delta(word) = (0,...,0,k) for some k (any size), in
// the same preference order.
std::vector<SmallWitness> last_entry_witnesses(const ReducedWord& word);

// |GP(i_delta(0,...,0,k))| for delta_n = D (throws "BadCase" otherwise).
int gp_count_formula(const Delta& delta, int k, int n);

}  // namespace strpoly
