#include "strpoly/weyl_words.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>

namespace strpoly {

ReducedWord validate(const Word& letters, int n) {
  if (n < 0) throw Error("BadLetter", "rank must be non-negative");
  for (int c : letters)
    if (c < 1 || c > n)
      throw Error("BadLetter", "letter " + std::to_string(c) + " outside [1.." + std::to_string(n) + "]");
  if (static_cast<int>(letters.size()) != nbar(n))
    throw Error("WrongLength", "word has length " + std::to_string(letters.size()) + ", expected " +
                                   std::to_string(nbar(n)));
  // Apply s_{i_1} ... s_{i_N} as position swaps; every letter must create a
  // new inversion, and the result must be the order-reversing permutation.
  std::vector<int> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 1);
  for (std::size_t j = 0; j < letters.size(); ++j) {
    int c = letters[j];
    if (perm[c - 1] > perm[c])
      throw Error("NotReduced", "letter " + std::to_string(c) + " at position " + std::to_string(j + 1) +
                                    " does not increase the length");
    std::swap(perm[c - 1], perm[c]);
  }
  return ReducedWord{n, letters};
}

ReducedWord validate(const Word& letters) {
  int n = rank_from_length(static_cast<int>(letters.size()));
  if (n < 0)
    throw Error("WrongLength", "word length " + std::to_string(letters.size()) + " is not of the form n(n+1)/2");
  return validate(letters, n);
}

ReducedWord parse_word(const std::string& text) { return validate(parse_ints(text)); }

std::string hook_length_count(int n) {
  // (nbar)! / (1^n 3^(n-1) 5^(n-2) ... (2n-1)^1)
  mpz_class num = 1, den = 1;
  for (int i = 2; i <= nbar(n); ++i) num *= i;
  for (int i = 1; i <= n; ++i) {
    mpz_class odd = 2 * i - 1, p;
    mpz_pow_ui(p.get_mpz_t(), odd.get_mpz_t(), static_cast<unsigned long>(n + 1 - i));
    den *= p;
  }
  mpz_class q = num / den;
  return q.get_str();
}

namespace {

void enumerate_rec(int n, std::vector<int>& perm, Word& prefix, std::vector<ReducedWord>& out) {
  if (static_cast<int>(prefix.size()) == nbar(n)) {
    out.push_back(ReducedWord{n, prefix});
    return;
  }
  for (int c = 1; c <= n; ++c) {
    if (perm[c - 1] < perm[c]) {
      std::swap(perm[c - 1], perm[c]);
      prefix.push_back(c);
      enumerate_rec(n, perm, prefix, out);
      prefix.pop_back();
      std::swap(perm[c - 1], perm[c]);
    }
  }
}

}  // namespace

std::vector<ReducedWord> enumerate_reduced_words(int n, int max_n) {
  if (n < 0) throw Error("BadRank", "rank must be non-negative");
  if (n > max_n)
    throw Error("ResourceCap", "enumeration of rank " + std::to_string(n) + " exceeds the cap " + std::to_string(max_n));
  std::vector<int> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 1);
  Word prefix;
  std::vector<ReducedWord> out;
  enumerate_rec(n, perm, prefix, out);  // letters tried in increasing order: output is sorted
  return out;
}

std::vector<ReducedWord> two_move_neighbors(const ReducedWord& w) {
  std::vector<ReducedWord> out;
  for (int j = 0; j + 1 < w.length(); ++j) {
    if (std::abs(w.letters[j] - w.letters[j + 1]) > 1) {
      ReducedWord v = w;
      std::swap(v.letters[j], v.letters[j + 1]);
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ReducedWord> three_move_neighbors(const ReducedWord& w) {
  std::vector<ReducedWord> out;
  for (int j = 0; j + 2 < w.length(); ++j) {
    int a = w.letters[j], b = w.letters[j + 1], c = w.letters[j + 2];
    if (a == c && std::abs(a - b) == 1) {
      ReducedWord v = w;
      v.letters[j] = b;
      v.letters[j + 1] = a;
      v.letters[j + 2] = b;
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ReducedWord commutation_normal_form(const ReducedWord& w) {
  // Letter occurrence p may be emitted once every earlier occurrence of a
  // non-commuting letter (|a-b| <= 1) has been emitted.  Emitting the
  // smallest available letter each time yields the lexicographically
  // smallest linear extension of the heap.
  const int len = w.length();
  std::vector<char> used(len, 0);
  ReducedWord out{w.n, {}};
  out.letters.reserve(len);
  for (int step = 0; step < len; ++step) {
    int best = -1;
    for (int p = 0; p < len; ++p) {
      if (used[p]) continue;
      bool free = true;
      for (int q = 0; q < p && free; ++q)
        if (!used[q] && std::abs(w.letters[q] - w.letters[p]) <= 1) free = false;
      if (free && (best < 0 || w.letters[p] < w.letters[best])) best = p;
    }
    used[best] = 1;
    out.letters.push_back(w.letters[best]);
  }
  return out;
}

bool same_commutation_class(const ReducedWord& a, const ReducedWord& b) {
  return a.n == b.n && commutation_normal_form(a) == commutation_normal_form(b);
}

std::vector<CommutationClass> commutation_classes(int n, int max_n) {
  std::vector<ReducedWord> words = enumerate_reduced_words(n, max_n);
  // Breadth-first search on the 2-move graph (words are sorted, so
  // neighbours are located by binary search).
  std::vector<int> comp(words.size(), -1);
  std::vector<CommutationClass> classes;
  for (std::size_t s = 0; s < words.size(); ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(classes.size());
    classes.emplace_back();
    std::vector<std::size_t> queue{s};
    comp[s] = id;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const ReducedWord& cur = words[queue[h]];
      classes[id].members.push_back(cur);
      for (const ReducedWord& nb : two_move_neighbors(cur)) {
        auto it = std::lower_bound(words.begin(), words.end(), nb);
        std::size_t idx = static_cast<std::size_t>(it - words.begin());
        if (comp[idx] < 0) {
          comp[idx] = id;
          queue.push_back(idx);
        }
      }
    }
    std::sort(classes[id].members.begin(), classes[id].members.end());
    classes[id].representative = classes[id].members.front();
  }
  // Seeds are visited in sorted order, so classes are already ordered by
  // representative.
  return classes;
}

ReducedWord apply_involution(const ReducedWord& w) {
  ReducedWord out = w;
  for (int& c : out.letters) c = w.n + 1 - c;
  return out;
}

}  // namespace strpoly
