#include "catch2/catch_amalgamated.hpp"

#include "psgroup/category.hpp"

using namespace psgroup;

namespace {

  std::vector<Letter> positive(std::initializer_list<int> indices) {
    std::vector<Letter> out;
    for (int k : indices) {
      out.push_back({k, 1});
    }
    return out;
  }

}  // namespace

TEST_CASE("braiding examples") {
  CHECK(braiding(0, 5, 5).letters.empty());
  CHECK(braiding(5, 0, 5).letters.empty());
  CHECK(braiding(1, 1, 2).letters == positive({1}));
  CHECK(braiding(2, 1, 3).letters == positive({1, 2}));
  CHECK(braiding(1, 2, 3).letters == positive({2, 1}));
  CHECK(braiding(2, 2, 4).letters == positive({2, 1, 3, 2}));
  CHECK_THROWS_AS(braiding(2, 2, 3), RangeError);
}

TEST_CASE("braidings permute blocks") {
  // c_{n,m} sends the first n strands past the last m
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      if (n + m < 2) {
        continue;
      }
      auto const p = eval(braiding(n, m, n + m)).perm();
      for (int x = 1; x <= n; ++x) {
        REQUIRE(p(x) == x + m);
      }
      for (int x = n + 1; x <= n + m; ++x) {
        REQUIRE(p(x) == x - n);
      }
    }
  }
}

TEST_CASE("double braiding examples") {
  CHECK(double_braiding(1, 1, 2).letters == positive({1, 1}));
  for (int n = 0; n <= 4; ++n) {
    CHECK(double_braiding(0, n, n).letters.empty());
  }
}

TEST_CASE("double braidings are pure") {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      REQUIRE(eval(double_braiding(m, n, m + n)).perm().is_identity());
    }
  }
}

TEST_CASE("tensoring and composition") {
  auto const c = braiding(1, 1, 2);
  CHECK(tensor_left(1, c).letters == positive({2}));
  CHECK(tensor_left(1, c).total == 3);
  CHECK(tensor_right(c, 2).total == 4);
  CHECK(compose(c, identity_word(2)) == c);
  CHECK_THROWS_AS(compose(c, identity_word(3)), DimensionMismatch);
  CHECK(eval(compose(c, inverse(c))).is_identity());
  // g o f applies f first, matching the group product
  auto const f = TensorWord{3, positive({1})};
  auto const g = TensorWord{3, positive({2})};
  CHECK(eval(compose(g, f)) == eval(g) * eval(f));
}

TEST_CASE("check_pseudosymmetry examples") {
  CHECK(check_pseudosymmetry(1, 1, 1));
  CHECK(check_pseudosymmetry(3, 2, 0));
  CHECK(check_pseudosymmetry(2, 2, 2));
}

TEST_CASE("check_pseudosymmetry sweep") {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      for (int p = 0; p <= 3; ++p) {
        INFO(m << ' ' << n << ' ' << p);
        REQUIRE(check_pseudosymmetry(m, n, p));
      }
    }
  }
}

TEST_CASE("pseudosymmetric relation for small objects") {
  for (int x = 0; x <= 2; ++x) {
    for (int y = 0; y <= 2; ++y) {
      for (int z = 0; z <= 2; ++z) {
        INFO(x << ' ' << y << ' ' << z);
        REQUIRE(check_pseudosymmetric_relation(x, y, z));
      }
    }
  }
  // on single strands it is the relation s1 S2 s1 = s2 S1 s2
  auto const [lhs, rhs] = pseudosymmetric_relation_sides(1, 1, 1);
  CHECK(format(to_braid_word(lhs)) == "s1 S2 s1");
  CHECK(format(to_braid_word(rhs)) == "s2 S1 s2");
}
