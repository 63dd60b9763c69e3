#include <random>

#include "catch2/catch_amalgamated.hpp"

#include "psgroup/braid.hpp"

using namespace psgroup;

namespace {

  BraidWord word(int n, std::vector<Letter> letters) {
    return BraidWord(n, std::move(letters));
  }

  BraidWord random_word(int n, std::size_t len, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> idx(1, n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<Letter>                out;
    for (std::size_t i = 0; i < len; ++i) {
      out.push_back({idx(rng), coin(rng) ? 1 : -1});
    }
    return BraidWord(n, std::move(out));
  }

  bool has_cancelling_pair(BraidWord const& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i + 1] == w[i].inverse()) {
        return true;
      }
    }
    return false;
  }

  // Cancels a randomly chosen adjacent pair until none remain.
  BraidWord random_order_reduce(BraidWord const& w, std::mt19937_64& rng) {
    std::vector<Letter> v(w.letters().begin(), w.letters().end());
    for (;;) {
      std::vector<std::size_t> spots;
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i + 1] == v[i].inverse()) {
          spots.push_back(i);
        }
      }
      if (spots.empty()) {
        return BraidWord(w.n(), std::move(v));
      }
      std::uniform_int_distribution<std::size_t> pick(0, spots.size() - 1);
      auto const                                 at = spots[pick(rng)];
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(at),
              v.begin() + static_cast<std::ptrdiff_t>(at) + 2);
    }
  }

}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse("s1 S2 s1", 3) == word(3, {{1, 1}, {2, -1}, {1, 1}}));
  CHECK(parse("s1^3", 3) == word(3, {{1, 1}, {1, 1}, {1, 1}}));
  CHECK(parse("a1,3", 3) == word(3, {{2, 1}, {1, 1}, {1, 1}, {2, -1}}));
}

TEST_CASE("parse exponents and whitespace") {
  CHECK(parse("", 4).empty());
  CHECK(parse("   ", 4).empty());
  CHECK(parse("s1^-2", 3) == word(3, {{1, -1}, {1, -1}}));
  CHECK(parse("S2^-1", 3) == word(3, {{2, 1}}));
  CHECK(parse("s1s2", 3) == word(3, {{1, 1}, {2, 1}}));
  CHECK(parse(" a1,2  s2 ", 3) == word(3, {{1, 1}, {1, 1}, {2, 1}}));
  CHECK(parse("a2,4", 4) == a_word(4, 2, 4));
}

TEST_CASE("parse errors carry a position") {
  auto position_of = [](std::string const& text) -> std::size_t {
    try {
      (void) parse(text, 4);
    } catch (ParseError const& e) {
      return e.position();
    }
    FAIL("no ParseError for '" << text << "'");
    return 0;
  };
  CHECK(position_of("x1") == 0);
  CHECK(position_of("s1 s") == 4);
  CHECK(position_of("s1^0") == 3);
  CHECK(position_of("s1^") == 3);
  CHECK(position_of("a1 3") == 2);
  CHECK(position_of("s1 ,") == 3);
}

TEST_CASE("range errors name the token") {
  auto message_of = [](std::string const& text, int n) -> std::string {
    try {
      (void) parse(text, n);
    } catch (RangeError const& e) {
      return e.what();
    }
    FAIL("no RangeError for '" << text << "'");
    return {};
  };
  CHECK_THAT(message_of("s1 s3", 3), Catch::Matchers::ContainsSubstring("'s3'"));
  CHECK_THAT(message_of("S0", 3), Catch::Matchers::ContainsSubstring("'S0'"));
  CHECK_THAT(message_of("s5^2", 4), Catch::Matchers::ContainsSubstring("'s5^2'"));
  CHECK_THAT(message_of("a3,2", 4), Catch::Matchers::ContainsSubstring("'a3,2'"));
  CHECK_THAT(message_of("a1,5", 4), Catch::Matchers::ContainsSubstring("'a1,5'"));
  CHECK_THROWS_AS(parse("s1", 1), RangeError);
}

TEST_CASE("word construction checks indices") {
  CHECK_THROWS_AS(BraidWord(3, {{3, 1}}), RangeError);
  CHECK_THROWS_AS(BraidWord(1), RangeError);
  CHECK_THROWS_AS(parse("s1", 3) * parse("s1", 4), DimensionMismatch);
}

TEST_CASE("a and b words") {
  CHECK(a_word(3, 1, 2) == word(3, {{1, 1}, {1, 1}}));
  CHECK(format(a_word(4, 1, 4)) == "s3 s2 s1 s1 S2 S3");
  CHECK(format(b_word(4, 1, 4)) == "S3 S2 s1 s1 s2 s3");
}

TEST_CASE("free_reduce examples") {
  CHECK(free_reduce(word(3, {{1, 1}, {1, -1}})).empty());
  CHECK(free_reduce(word(3, {{1, 1}, {2, 1}, {2, -1}, {1, 1}}))
        == word(3, {{1, 1}, {1, 1}}));
  CHECK(free_reduce(word(3, {{1, 1}, {2, 1}, {1, 1}}))
        == word(3, {{1, 1}, {2, 1}, {1, 1}}));
}

TEST_CASE("shift examples") {
  CHECK(shift(word(2, {{1, 1}}), 1, 3) == word(3, {{2, 1}}));
  CHECK(shift(BraidWord(2), 5, 9) == BraidWord(9));
  CHECK_THROWS_AS(shift(word(3, {{2, 1}}), 1, 3), RangeError);
}

TEST_CASE("inverse and power") {
  auto const w = parse("s1 S2 s3", 4);
  CHECK(format(w.inverse()) == "S3 s2 S1");
  CHECK(free_reduce(w * w.inverse()).empty());
  CHECK(format(power(parse("s1 s2", 3), 2)) == "s1 s2 s1 s2");
  CHECK(format(power(parse("s1 s2", 3), -1)) == "S2 S1");
  CHECK(power(parse("s1", 3), 0).empty());
}

TEST_CASE("format/parse round trip on random words") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int const  n = 2 + trial % 6;
    auto const w = random_word(n, trial % 25, rng);
    REQUIRE(parse(format(w), n) == w);
  }
}

TEST_CASE("free_reduce is confluent") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    // small alphabet so that cancellations are frequent
    auto const w       = random_word(3, 30, rng);
    auto const reduced = free_reduce(w);
    REQUIRE_FALSE(has_cancelling_pair(reduced));
    REQUIRE(random_order_reduce(w, rng) == reduced);
    REQUIRE(free_reduce(reduced) == reduced);
  }
}
