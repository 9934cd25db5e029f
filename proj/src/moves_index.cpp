#include "strpoly/moves_index.hpp"

#include <algorithm>
#include <numeric>

namespace strpoly {

std::string delta_to_string(const Delta& delta) {
  std::string s;
  for (Bullet b : delta) s += b == Bullet::A ? 'A' : 'D';
  return s;
}

Delta parse_delta(const std::string& text) {
  Delta out;
  for (char c : text) {
    if (c == 'A' || c == 'a')
      out.push_back(Bullet::A);
    else if (c == 'D' || c == 'd')
      out.push_back(Bullet::D);
    else if (c != ',' && c != ' ')
      throw Error("ParseError", std::string("delta entries must be A or D, got '") + c + "'");
  }
  return out;
}

Delta swap_bullets(const Delta& delta) {
  Delta out;
  for (Bullet b : delta) out.push_back(b == Bullet::A ? Bullet::D : Bullet::A);
  return out;
}

ReducedWord extend(const ReducedWord& word, Bullet bullet, int s) {
  const int n = word.n;
  const int len = word.length();
  if (s < 0 || s > len) throw Error("BadPosition", "extension position " + std::to_string(s) + " outside [0.." + std::to_string(len) + "]");
  ReducedWord out{n + 1, {}};
  const int cut = len - s;
  if (bullet == Bullet::D) {
    for (int j = 0; j < cut; ++j) out.letters.push_back(word.letters[j]);
    for (int c = n + 1; c >= 1; --c) out.letters.push_back(c);
    for (int j = cut; j < len; ++j) out.letters.push_back(word.letters[j] + 1);
  } else {
    for (int j = 0; j < cut; ++j) out.letters.push_back(word.letters[j] + 1);
    for (int c = 1; c <= n + 1; ++c) out.letters.push_back(c);
    for (int j = cut; j < len; ++j) out.letters.push_back(word.letters[j]);
  }
  return validate(out.letters, n + 1);
}

namespace {

// Classification of every node relative to the extremal wire: -1 = on the
// wire, 0 = kept as is, 1 = kept with the letter lowered by one.  For D the
// lowered nodes are those below l_{n+1}; for A the nodes below l_1 keep
// their letter and the nodes above it are lowered.
struct Classified {
  std::vector<int> kind;
  int below = 0;
};

Classified classify(const ReducedWord& word, Bullet bullet) {
  Classified out;
  const int n = word.n;
  int pos = bullet == Bullet::D ? n : 0;  // track of the extremal wire
  for (int c : word.letters) {
    if (bullet == Bullet::D) {
      if (c == pos) {
        out.kind.push_back(-1);
        --pos;
      } else if (c <= pos - 1) {
        out.kind.push_back(0);
      } else {
        out.kind.push_back(1);
        ++out.below;
      }
    } else {
      if (c - 1 == pos) {
        out.kind.push_back(-1);
        ++pos;
      } else if (c - 1 > pos) {
        out.kind.push_back(1);
      } else {
        out.kind.push_back(0);
        ++out.below;
      }
    }
  }
  return out;
}

}  // namespace

ReducedWord contract(const ReducedWord& word, Bullet bullet) {
  if (word.n < 1) throw Error("BadRank", "contraction needs rank >= 1");
  Classified cl = classify(word, bullet);
  Word out;
  for (std::size_t j = 0; j < word.letters.size(); ++j) {
    if (cl.kind[j] == 0) out.push_back(word.letters[j]);
    if (cl.kind[j] == 1) out.push_back(word.letters[j] - 1);
  }
  return validate(out, word.n - 1);
}

int ind(const ReducedWord& word, Bullet bullet) { return classify(word, bullet).below; }

IndexVector delta_index(const ReducedWord& word, const Delta& delta) {
  if (static_cast<int>(delta.size()) != word.n)
    throw Error("BadDelta", "delta has length " + std::to_string(delta.size()) + ", expected " + std::to_string(word.n));
  IndexVector I(word.n, 0);
  ReducedWord cur = word;
  for (int i = word.n; i >= 1; --i) {
    I[i - 1] = ind(cur, delta[i - 1]);
    cur = contract(cur, delta[i - 1]);
  }
  return I;
}

ReducedWord build_word(const Delta& delta, const IndexVector& I) {
  if (delta.size() != I.size()) throw Error("BadBounds", "delta and index vector differ in length");
  ReducedWord cur{0, {}};
  for (std::size_t i = 1; i <= I.size(); ++i) {
    int bound = static_cast<int>(i * (i - 1) / 2);
    if (I[i - 1] < 0 || I[i - 1] > bound)
      throw Error("BadBounds", "I_" + std::to_string(i) + " = " + std::to_string(I[i - 1]) + " outside [0.." +
                                   std::to_string(bound) + "]");
    cur = extend(cur, delta[i - 1], I[i - 1]);
  }
  return cur;
}

int kappa(const Delta& delta) {
  const int n = static_cast<int>(delta.size());
  if (n < 2) return 0;
  return delta[n - 2] == delta[n - 1] ? 2 : n - 1;
}

namespace {

std::vector<Delta> all_deltas(int n) {
  // Lexicographic order with D before A.
  std::vector<Delta> out;
  for (long mask = 0; mask < (1L << n); ++mask) {
    Delta d(n);
    for (int i = 0; i < n; ++i) d[i] = (mask >> (n - 1 - i)) & 1 ? Bullet::A : Bullet::D;
    out.push_back(d);
  }
  return out;
}

}  // namespace

std::vector<SmallWitness> last_entry_witnesses(const ReducedWord& word) {
  std::vector<SmallWitness> out;
  for (const Delta& delta : all_deltas(word.n)) {
    IndexVector I = delta_index(word, delta);
    if (std::all_of(I.begin(), I.end() - 1, [](int x) { return x == 0; })) out.push_back({delta, I.back()});
  }
  std::stable_sort(out.begin(), out.end(), [](const SmallWitness& a, const SmallWitness& b) { return a.k < b.k; });
  return out;
}

SmallIndices has_small_indices(const ReducedWord& word) {
  SmallIndices res;
  for (const SmallWitness& w : last_entry_witnesses(word)) {
    if (w.k > kappa(w.delta)) continue;
    // The index alone does not pin down the commutation class (the words
    // i_delta(I) depend on the chosen representatives), so the witness is
    // confirmed by class membership of i_delta(0,...,0,k).
    IndexVector I(word.n, 0);
    I.back() = w.k;
    if (same_commutation_class(word, build_word(w.delta, I))) {
      res.small = true;
      res.witness = w;
      break;
    }
  }
  return res;
}

int gp_count_formula(const Delta& delta, int k, int n) {
  if (n < 2 || static_cast<int>(delta.size()) != n || delta[n - 1] != Bullet::D || k < 0 || k > n - 1)
    throw Error("BadCase", "formula needs n >= 2, delta_n = D and 0 <= k <= n-1");
  const int nb = nbar(n);
  if (k == 0) return nb;
  if (delta[n - 2] == Bullet::D) return k == n - 1 ? nb + k - 1 : nb + k;
  return k == n - 1 ? nb : nb + 1;
}

}  // namespace strpoly
