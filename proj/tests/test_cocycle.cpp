#include "catch2/catch_amalgamated.hpp"

#include "psgroup/cocycle.hpp"
#include "psgroup/verify.hpp"

using namespace psgroup;

namespace {

  Permutation perm_of(std::string const& w) {
    return eval(parse(w, 3)).perm();
  }

  PureVector A(std::vector<std::int64_t> m) {
    return PureVector(3, std::move(m));
  }

  // Every word is replaced by the inverse of the lift of the inverse
  // permutation, so most lifts use negative letters.
  Section negative_section(int n) {
    std::map<Permutation, BraidWord> words;
    for (auto const& s : all_permutations(n)) {
      words.emplace(s, lift_word(s.inverse()).inverse());
    }
    return Section(n, std::move(words));
  }

}  // namespace

TEST_CASE("cocycle examples") {
  auto const f = Section::reference3();
  for (auto const& s : all_permutations(3)) {
    CHECK(cocycle(f, Permutation::identity(3), s).is_zero());
  }
  CHECK(cocycle(f, perm_of("s2"), perm_of("s2")) == A({0, 0, 1}));
  auto const w0 = perm_of("s2 s1 s2");
  CHECK(cocycle(f, w0, w0) == A({1, 1, 1}));
  CHECK(cocycle(f, perm_of("s1 s2"), perm_of("s2 s1")) == A({1, 1, 0}));
}

TEST_CASE("full table reproduces the published n = 3 table") {
  auto const  tbl  = full_table(Section::reference3());
  auto const& rows = Section::reference3_words();
  auto const& ref  = reference3_table();
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 6; ++c) {
      auto const& cell = ref[r][c];
      INFO("row " << rows[r].first << " column " << rows[c].first);
      CHECK(tbl.at(perm_of(rows[r].second), perm_of(rows[c].second))
            == A({cell[0], cell[1], cell[2]}));
    }
  }
  CHECK(full_table(Section::standard(3)) == tbl);
}

TEST_CASE("n = 2 table") {
  auto const tbl = full_table(Section::standard(2));
  auto const id  = Permutation::identity(2);
  auto const s   = Permutation({2, 1});
  CHECK(tbl.at(id, id).is_zero());
  CHECK(tbl.at(id, s).is_zero());
  CHECK(tbl.at(s, id).is_zero());
  CHECK(tbl.at(s, s) == PureVector(2, {1}));
}

TEST_CASE("cocycle condition") {
  auto tbl = full_table(Section::reference3());
  CHECK(verify_cocycle_condition(tbl));
  CHECK(verify_cocycle_condition(full_table(Section::standard(4))));
  CHECK(verify_cocycle_condition(full_table(negative_section(4))));

  auto const s1 = perm_of("s1");
  auto const s2 = perm_of("s2");
  tbl.set(s1, s2, tbl.at(s1, s2) + PureVector::basis(3, {1, 2}));
  CHECK_FALSE(verify_cocycle_condition(tbl));
}

TEST_CASE("sampled check finds nothing on a true cocycle") {
  auto const tbl = full_table(Section::standard(5));
  CHECK(verify_cocycle_condition_sampled(tbl, 2000, 5));
}

TEST_CASE("changing the section changes the table by a coboundary") {
  for (int n = 3; n <= 4; ++n) {
    auto const f  = Section::standard(n);
    auto const g  = negative_section(n);
    auto const uf = full_table(f);
    auto const ug = full_table(g);
    CHECK(uf != ug);
    CHECK(tables_differ_by_coboundary(f, uf, g, ug));
  }
}

TEST_CASE("section validation") {
  std::map<Permutation, BraidWord> words;
  for (auto const& s : all_permutations(3)) {
    words.emplace(s, lift_word(s));
  }
  auto bad = words;
  bad.at(perm_of("s1")) = parse("s2", 3);
  CHECK_THROWS_AS(Section(3, bad), std::invalid_argument);
  auto unnormalized = words;
  unnormalized.at(Permutation::identity(3)) = parse("s1 S1", 3);
  CHECK_THROWS_AS(Section(3, unnormalized), std::invalid_argument);
  words.erase(perm_of("s2"));
  CHECK_THROWS_AS(Section(3, words), std::invalid_argument);
}

TEST_CASE("text rendering uses the published order for n = 3") {
  CHECK(render_table_text(full_table(Section::reference3()))
        == "       | 1 | s2      | s1      | s1s2              | s2s1              | s2s1s2\n"
           "1      | 0 | 0       | 0       | 0                 | 0                 | 0\n"
           "s2     | 0 | A_{2,3} | 0       | 0                 | A_{2,3}           | A_{2,3}\n"
           "s1     | 0 | 0       | A_{1,2} | A_{1,2}           | 0                 | A_{1,2}\n"
           "s1s2   | 0 | A_{1,3} | 0       | A_{1,2}           | A_{1,2} + A_{1,3} | A_{1,2} + A_{1,3}\n"
           "s2s1   | 0 | 0       | A_{1,3} | A_{1,3} + A_{2,3} | A_{2,3}           | A_{1,3} + A_{2,3}\n"
           "s2s1s2 | 0 | A_{1,2} | A_{2,3} | A_{1,3} + A_{2,3} | A_{1,2} + A_{1,3} | A_{1,2} + A_{1,3} + A_{2,3}\n");
}

TEST_CASE("text rendering for other n labels by cycles") {
  auto const text = render_table_text(full_table(Section::standard(2)));
  CHECK(text == "      | id | (1 2)\nid    | 0  | 0\n(1 2) | 0  | A_{1,2}\n");
}
