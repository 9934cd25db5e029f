#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "strpoly/moves_index.hpp"
#include "strpoly/wiring.hpp"

using namespace strpoly;

namespace {

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

std::vector<Delta> all_deltas(int n) {
  std::vector<Delta> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Delta d(n);
    for (int i = 0; i < n; ++i) d[i] = (mask >> (n - 1 - i)) & 1 ? Bullet::A : Bullet::D;
    out.push_back(d);
  }
  return out;
}

// All index vectors with 0 <= I_i <= i(i-1)/2.
std::vector<IndexVector> all_indices(int n) {
  std::vector<IndexVector> out{{}};
  for (int i = 1; i <= n; ++i) {
    std::vector<IndexVector> next;
    for (const auto& I : out)
      for (int x = 0; x <= i * (i - 1) / 2; ++x) {
        IndexVector J = I;
        J.push_back(x);
        next.push_back(J);
      }
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("delta strings") {
  CHECK(delta_to_string(parse_delta("DAAADD")) == "DAAADD");
  CHECK(delta_to_string(swap_bullets(parse_delta("DAD"))) == "ADA");
  CHECK(code_of([] { parse_delta("DXD"); }) != "");
}

TEST_CASE("extensions") {
  CHECK(extend(parse_word("1,2,1,3,2,1"), Bullet::D, 3).str() == "1,2,1,4,3,2,1,4,3,2");
  CHECK(extend(parse_word("1,2,1"), Bullet::D, 0).str() == "1,2,1,3,2,1");
  CHECK(extend(parse_word("1"), Bullet::A, 0).str() == "2,1,2");
  CHECK(code_of([] { extend(parse_word("1,2,1"), Bullet::D, 4); }) == "BadPosition");
  CHECK(code_of([] { extend(parse_word("1,2,1"), Bullet::D, -1); }) == "BadPosition");
}

TEST_CASE("contractions") {
  CHECK(contract(parse_word("2,1,3,2,1,3"), Bullet::A).str() == "1,2,1");
  CHECK(contract(parse_word("1,2,1"), Bullet::D).str() == "1");
  for (int s = 0; s <= 3; ++s) CHECK(contract(extend(parse_word("1,2,1"), Bullet::D, s), Bullet::D).str() == "1,2,1");
  for (int n = 1; n <= 3; ++n)
    for (const auto& w : enumerate_reduced_words(n))
      for (Bullet b : {Bullet::A, Bullet::D})
        for (int s = 0; s <= w.length(); ++s) {
          const ReducedWord e = extend(w, b, s);
          CHECK(e.n == n + 1);
          CHECK(validate(e.letters, n + 1) == e);
          CHECK(contract(e, b) == w);
        }
  for (const auto& w : enumerate_reduced_words(4))
    for (Bullet b : {Bullet::A, Bullet::D}) {
      const ReducedWord c = contract(w, b);
      CHECK(validate(c.letters, 3) == c);
    }
}

TEST_CASE("indices") {
  CHECK(ind(parse_word("2,1,3,2,1,3"), Bullet::A) == 1);
  CHECK(ind(parse_word("1,2,1,3,2,1"), Bullet::D) == 0);
  CHECK(ind(parse_word("4,3,4,2,3,4,1,2,3,4,5,4,6,5,4,3,2,1,4,3,2"), Bullet::A) == 9);
  CHECK(delta_index(parse_word("1,2,1,4,3,2,1,4,3,2"), parse_delta("DDDD")) == IndexVector{0, 0, 0, 3});
  CHECK(delta_index(parse_word("1,3,2,1,3,2"), parse_delta("DDD")) == IndexVector{0, 0, 2});
  CHECK(delta_index(build_word(parse_delta("DAD"), {0, 0, 1}), parse_delta("DAD")) == IndexVector{0, 0, 1});
}

TEST_CASE("words i_delta(I)") {
  CHECK(build_word(parse_delta("DDD"), {0, 0, 2}).str() == "1,3,2,1,3,2");
  CHECK(build_word(parse_delta("DDD"), {0, 0, 0}).str() == "1,2,1,3,2,1");
  CHECK(build_word(parse_delta("DAAADD"), {0, 0, 0, 0, 0, 3}).str() == "4,3,4,2,3,4,1,2,3,4,5,4,6,5,4,3,2,1,4,3,2");
  CHECK(code_of([] { build_word(parse_delta("DDD"), {0, 2, 0}); }) == "BadBounds");
  CHECK(code_of([] { build_word(parse_delta("DDD"), {0, 0, 4}); }) == "BadBounds");
}

TEST_CASE("index round trip, rank at most 4") {
  for (int n = 1; n <= 4; ++n)
    for (const Delta& d : all_deltas(n))
      for (const IndexVector& I : all_indices(n)) CHECK(delta_index(build_word(d, I), d) == I);
}

TEST_CASE("small indices") {
  for (const auto& w : enumerate_reduced_words(3)) CHECK(has_small_indices(w).small);
  CHECK_FALSE(has_small_indices(parse_word("1,2,3,2,1,2,4,3,2,1")).small);
  const SmallIndices s = has_small_indices(parse_word("1,2,1,3,4,3,2,3,1,2"));
  REQUIRE(s.small);
  REQUIRE(s.witness);
  CHECK(delta_to_string(s.witness->delta) == "DDDD");
  CHECK(s.witness->k == 2);
  CHECK(kappa(parse_delta("DDDD")) == 2);
  CHECK(kappa(parse_delta("DDAD")) == 3);
  CHECK(kappa(parse_delta("D")) == 0);
}

TEST_CASE("path-count formula") {
  CHECK(gp_count_formula(parse_delta("DDD"), 2, 3) == 7);
  CHECK(gp_count_formula(parse_delta("DADD"), 0, 4) == 10);
  CHECK(gp_count_formula(parse_delta("DDDAD"), 2, 5) == 16);
  CHECK(code_of([] { gp_count_formula(parse_delta("DDA"), 1, 3); }) == "BadCase");
  for (int n = 2; n <= 5; ++n)
    for (const Delta& d : all_deltas(n)) {
      if (d.back() != Bullet::D) continue;
      for (int k = 0; k <= n - 1; ++k) {
        IndexVector I(n, 0);
        I.back() = k;
        const ReducedWord w = build_word(d, I);
        CHECK(static_cast<int>(enumerate_rigorous_paths(w).size()) == gp_count_formula(d, k, n));
      }
    }
}

TEST_CASE("small-index words match the formula on their witness") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : enumerate_reduced_words(n)) {
      const SmallIndices s = has_small_indices(w);
      if (!s.small) continue;
      Delta d = s.witness->delta;
      if (d.back() == Bullet::A) d = swap_bullets(d);
      CHECK(static_cast<int>(enumerate_rigorous_paths(w).size()) == gp_count_formula(d, s.witness->k, n));
    }
}

TEST_CASE("AD and DA words are equivalent") {
  for (int n = 2; n <= 4; ++n)
    for (const Delta& prefix : all_deltas(n - 2)) {
      for (int k = 0; k <= n - 1; ++k) {
        Delta ad = prefix, da = prefix;
        ad.push_back(Bullet::A);
        ad.push_back(Bullet::D);
        da.push_back(Bullet::D);
        da.push_back(Bullet::A);
        IndexVector I(n, 0), J(n, 0);
        I.back() = k;
        J.back() = n - k - 1;
        CHECK(same_commutation_class(build_word(ad, I), build_word(da, J)));
      }
    }
}
