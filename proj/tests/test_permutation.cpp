#include <set>

#include "catch2/catch_amalgamated.hpp"

#include "psgroup/permutation.hpp"

using namespace psgroup;

TEST_CASE("composition applies the right factor first") {
  auto const a = Permutation({2, 3, 1});
  auto const b = Permutation::transposition(3, 1, 2);
  auto const ab = a * b;
  for (int x = 1; x <= 3; ++x) {
    CHECK(ab(x) == a(b(x)));
  }
  CHECK((a * a.inverse()).is_identity());
}

TEST_CASE("validation") {
  CHECK_THROWS(Permutation({1, 1, 2}));
  CHECK_THROWS(Permutation({1, 4, 2}));
  CHECK_THROWS_AS(pair_offset(3, {2, 2}), RangeError);
  CHECK_THROWS_AS(pair_offset(3, {1, 4}), RangeError);
  CHECK_THROWS_AS(make_pair_index(3, 3), RangeError);
  CHECK(make_pair_index(3, 1) == PairIndex{1, 3});
}

TEST_CASE("order, inversions and cycle notation") {
  CHECK(Permutation::identity(4).order() == 1);
  CHECK(Permutation({2, 3, 1, 5, 4}).order() == 6);
  CHECK(Permutation({3, 2, 1}).inversions() == 3);
  CHECK(Permutation({3, 2, 1}).to_string() == "(1 3)");
  CHECK(Permutation::identity(3).to_string() == "id");
  CHECK(Permutation::simple(4, 2) == Permutation({1, 3, 2, 4}));
}

TEST_CASE("all_permutations is lexicographic and complete") {
  auto const perms = all_permutations(4);
  REQUIRE(perms.size() == 24);
  CHECK(perms.front().is_identity());
  CHECK(std::is_sorted(perms.begin(), perms.end()));
  CHECK(std::set<Permutation>(perms.begin(), perms.end()).size() == 24);
}

TEST_CASE("pair offsets enumerate pairs lexicographically") {
  for (int n = 2; n <= 9; ++n) {
    auto const pairs = all_pairs(n);
    REQUIRE(pairs.size() == pair_count(n));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      REQUIRE(pair_offset(n, pairs[k]) == k);
      if (k > 0) {
        REQUIRE(pairs[k - 1] < pairs[k]);
      }
    }
  }
  CHECK(to_string(PairIndex{2, 5}) == "2,5");
}

TEST_CASE("pair action sorts images") {
  auto const s = Permutation({3, 2, 1});
  CHECK(apply(s, {1, 2}) == PairIndex{2, 3});
  CHECK(apply(s, {1, 3}) == PairIndex{1, 3});
  auto const act = pair_action(s);
  CHECK(act == std::vector<std::size_t>{2, 1, 0});
}
