#pragma once

// Reduced words of the longest element w0 of S_{n+1}: validation,
// enumeration, braid moves, commutation classes and the letter involution
// i -> n+1-i.

#include <compare>
#include <string>
#include <vector>

#include "strpoly/common.hpp"

namespace strpoly {

struct ReducedWord {
  int n = 0;        // rank; letters lie in [1..n]
  Word letters;     // length n(n+1)/2

  auto operator<=>(const ReducedWord&) const = default;
  int length() const { return static_cast<int>(letters.size()); }
  std::string str() const { return join_ints(letters); }
};

struct CommutationClass {
  std::vector<ReducedWord> members;  // sorted lexicographically
  ReducedWord representative;        // lexicographically smallest member
};

// Default rank cap for exhaustive enumeration.
inline constexpr int kDefaultMaxEnumerationRank = 5;

// Throws Error{"BadLetter" | "WrongLength" | "NotReduced"}.
ReducedWord validate(const Word& letters, int n);
// Same, with the rank inferred from the word length.
ReducedWord validate(const Word& letters);
ReducedWord parse_word(const std::string& text);

// Number of reduced words of w0 in S_{n+1} by the hook length formula
// (decimal string: the count overflows 64 bits for n >= 8).
std::string hook_length_count(int n);

// All reduced words, sorted lexicographically.  Throws "ResourceCap" when
// n > max_n.
std::vector<ReducedWord> enumerate_reduced_words(int n, int max_n = kDefaultMaxEnumerationRank);

std::vector<ReducedWord> two_move_neighbors(const ReducedWord& w);
std::vector<ReducedWord> three_move_neighbors(const ReducedWord& w);

// Lexicographically smallest word reachable by 2-moves (computed greedily
// from the heap of the word, without exploring the class).
ReducedWord commutation_normal_form(const ReducedWord& w);
bool same_commutation_class(const ReducedWord& a, const ReducedWord& b);

// Partition of all reduced words into 2-move classes, ordered by
// representative.
std::vector<CommutationClass> commutation_classes(int n, int max_n = kDefaultMaxEnumerationRank);

ReducedWord apply_involution(const ReducedWord& w);

}  // namespace strpoly
