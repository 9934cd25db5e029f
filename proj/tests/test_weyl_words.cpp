#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "strpoly/weyl_words.hpp"

using namespace strpoly;

namespace {

// Independent reducedness oracle: apply the transpositions to 0..n and
// count inversions of the result.
bool reduced_for_w0(const Word& letters, int n) {
  std::vector<int> perm(n + 1);
  for (int i = 0; i <= n; ++i) perm[i] = i;
  int inversions = 0;
  for (int s : letters) {
    if (perm[s - 1] < perm[s]) ++inversions;
    else --inversions;
    std::swap(perm[s - 1], perm[s]);
  }
  return inversions == nbar(n);
}

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("hook length counts") {
  CHECK(hook_length_count(1) == "1");
  CHECK(hook_length_count(2) == "2");
  CHECK(hook_length_count(3) == "16");
  CHECK(hook_length_count(4) == "768");
  CHECK(hook_length_count(5) == "292864");
  CHECK(hook_length_count(6) == "1100742656");
  CHECK(hook_length_count(8) == "29258366996258488320");
}

TEST_CASE("enumeration agrees with the hook length formula and is sorted") {
  for (int n = 1; n <= 4; ++n) {
    const auto words = enumerate_reduced_words(n);
    CHECK(std::to_string(words.size()) == hook_length_count(n));
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
    for (const auto& w : words) {
      CHECK(w.n == n);
      CHECK(reduced_for_w0(w.letters, n));
    }
  }
  CHECK(code_of([] { enumerate_reduced_words(6); }) == "ResourceCap");
}

TEST_CASE("validation errors") {
  CHECK(validate({1, 2, 1}).n == 2);
  CHECK(code_of([] { validate({1, 3, 1}, 2); }) == "BadLetter");
  CHECK(code_of([] { validate({1, 2}, 2); }) == "WrongLength");
  CHECK(code_of([] { validate({1, 1, 2}, 2); }) == "NotReduced");
  CHECK(code_of([] { validate({1, 2, 1, 2}); }) == "WrongLength");
  CHECK(parse_word("1, 3,2,1,3 ,2").letters == Word{1, 3, 2, 1, 3, 2});
}

TEST_CASE("moves") {
  const ReducedWord w = parse_word("1,3,2,1,3,2");
  auto two = two_move_neighbors(w);
  std::sort(two.begin(), two.end());
  REQUIRE(two.size() == 2);
  CHECK(two[0].str() == "1,3,2,3,1,2");
  CHECK(two[1].str() == "3,1,2,1,3,2");
  CHECK(three_move_neighbors(w).empty());

  const auto three = three_move_neighbors(parse_word("1,2,1"));
  REQUIRE(three.size() == 1);
  CHECK(three[0].str() == "2,1,2");

  // Every neighbour of every word is again a reduced word.
  for (const auto& u : enumerate_reduced_words(3)) {
    for (const auto& x : two_move_neighbors(u)) CHECK(reduced_for_w0(x.letters, 3));
    for (const auto& x : three_move_neighbors(u)) CHECK(reduced_for_w0(x.letters, 3));
  }
}

TEST_CASE("commutation classes") {
  CHECK(commutation_classes(2).size() == 2);
  CHECK(commutation_classes(3).size() == 8);
  const auto classes = commutation_classes(4);
  CHECK(classes.size() == 62);
  std::size_t total = 0;
  for (const auto& c : classes) {
    total += c.members.size();
    CHECK(c.representative == c.members.front());
    // The representative is the greedy normal form of every member, and
    // the class is closed under 2-moves.
    std::set<ReducedWord> members(c.members.begin(), c.members.end());
    for (const auto& m : c.members) {
      CHECK(commutation_normal_form(m) == c.representative);
      for (const auto& x : two_move_neighbors(m)) CHECK(members.count(x) == 1);
    }
  }
  CHECK(total == 768);
  CHECK(same_commutation_class(parse_word("1,3,2,1,3,2"), parse_word("3,1,2,3,1,2")));
  CHECK_FALSE(same_commutation_class(parse_word("1,2,1,3,2,1"), parse_word("1,3,2,1,3,2")));
}

TEST_CASE("letter involution") {
  CHECK(apply_involution(parse_word("1,2,1")).str() == "2,1,2");
  CHECK(apply_involution(parse_word("1,3,2,1,3,2")).str() == "3,1,2,3,1,2");
  for (const auto& w : enumerate_reduced_words(3)) {
    const ReducedWord x = apply_involution(w);
    CHECK(reduced_for_w0(x.letters, 3));
    CHECK(apply_involution(x) == w);
  }
}
