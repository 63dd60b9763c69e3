#ifndef PSGROUP_COCYCLE_HPP
#define PSGROUP_COCYCLE_HPP

// The 2-cocycle u(x, y) = f(x) f(y) f(xy)^-1 of the extension
// 1 -> P_n -> PS_n -> S_n -> 1 for a set-theoretic section f, written
// additively in the A_{i,j} basis of the abelian kernel.

#include <cstddef>
#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "braid.hpp"
#include "errors.hpp"
#include "permutation.hpp"
#include "psn.hpp"

namespace psgroup {

  ////////////////////////////////////////////////////////////////////////
  // Section
  ////////////////////////////////////////////////////////////////////////

  // A table of braid words, one per permutation, each lifting its key. The
  // identity must map to the empty word.
  class Section {
   public:
    Section(int n, std::map<Permutation, BraidWord> words) : _n(n) {
      auto const perms = all_permutations(n);
      if (words.size() != perms.size()) {
        throw std::invalid_argument("Section: expected "
                                    + std::to_string(perms.size())
                                    + " words, got "
                                    + std::to_string(words.size()));
      }
      for (auto const& sigma : perms) {
        auto it = words.find(sigma);
        if (it == words.end()) {
          throw std::invalid_argument("Section: no word for "
                                      + sigma.to_string());
        }
        if (it->second.n() != n) {
          throw DimensionMismatch("Section: word for " + sigma.to_string()
                                  + " has the wrong strand count");
        }
        auto elt = eval(it->second);
        if (elt.perm() != sigma) {
          throw std::invalid_argument("Section: word '" + format(it->second)
                                      + "' does not lift "
                                      + sigma.to_string());
        }
        if (sigma.is_identity() && !it->second.empty()) {
          throw std::invalid_argument(
              "Section: the identity must lift to the empty word");
        }
        _elements.emplace(sigma, std::move(elt));
      }
      _words = std::move(words);
    }

    // Lifts every permutation by lift_word.
    static Section standard(int n) {
      std::map<Permutation, BraidWord> words;
      for (auto const& sigma : all_permutations(n)) {
        words.emplace(sigma, lift_word(sigma));
      }
      return Section(n, std::move(words));
    }

    // The n = 3 section f(1) = 1, f(s2) = s2, f(s1) = s1, f(s1s2) = s1 s2,
    // f(s2s1) = s2 s1, f(s2s1s2) = s2 s1 s2.
    static Section reference3() {
      std::map<Permutation, BraidWord> words;
      for (auto const& row : reference3_words()) {
        auto w = parse(row.second, 3);
        words.emplace(eval(w).perm(), std::move(w));
      }
      return Section(3, std::move(words));
    }

    // Labels and words of reference3(), in the row order used by the
    // published n = 3 table.
    static std::vector<std::pair<std::string, std::string>> const&
    reference3_words() {
      static std::vector<std::pair<std::string, std::string>> const rows
          = {{"1", ""},
             {"s2", "s2"},
             {"s1", "s1"},
             {"s1s2", "s1 s2"},
             {"s2s1", "s2 s1"},
             {"s2s1s2", "s2 s1 s2"}};
      return rows;
    }

    [[nodiscard]] int n() const noexcept {
      return _n;
    }

    [[nodiscard]] BraidWord const& word(Permutation const& sigma) const {
      return _words.at(sigma);
    }

    [[nodiscard]] PSElement const& element(Permutation const& sigma) const {
      return _elements.at(sigma);
    }

    [[nodiscard]] std::map<Permutation, BraidWord> const& words() const {
      return _words;
    }

   private:
    int                              _n;
    std::map<Permutation, BraidWord> _words;
    std::map<Permutation, PSElement> _elements;
  };

  ////////////////////////////////////////////////////////////////////////
  // CocycleTable
  ////////////////////////////////////////////////////////////////////////

  // u(sigma, tau) for all sigma, tau in S_n. Permutations are indexed in
  // the lexicographic order of all_permutations(n).
  class CocycleTable {
   public:
    explicit CocycleTable(int n)
        : _n(n),
          _perms(all_permutations(n)),
          _values(_perms.size() * _perms.size(), PureVector(n)) {
      for (std::size_t i = 0; i < _perms.size(); ++i) {
        _index.emplace(_perms[i], i);
      }
    }

    [[nodiscard]] int n() const noexcept {
      return _n;
    }

    [[nodiscard]] std::vector<Permutation> const& permutations() const {
      return _perms;
    }

    [[nodiscard]] std::size_t index(Permutation const& sigma) const {
      return _index.at(sigma);
    }

    PureVector const& at(Permutation const& sigma,
                         Permutation const& tau) const {
      return _values[index(sigma) * _perms.size() + index(tau)];
    }

    PureVector const& at(std::size_t i, std::size_t j) const {
      return _values[i * _perms.size() + j];
    }

    void set(Permutation const& sigma,
             Permutation const& tau,
             PureVector         value) {
      _values[index(sigma) * _perms.size() + index(tau)] = std::move(value);
    }

    friend bool operator==(CocycleTable const& a, CocycleTable const& b) {
      return a._n == b._n && a._values == b._values;
    }

   private:
    int                                _n;
    std::vector<Permutation>           _perms;
    std::map<Permutation, std::size_t> _index;
    std::vector<PureVector>            _values;
  };

  // split(f(sigma) f(tau) f(sigma tau)^-1).m
  inline PureVector cocycle(Section const&     sec,
                            Permutation const& sigma,
                            Permutation const& tau) {
    auto const x = sec.element(sigma) * sec.element(tau)
                   * sec.element(sigma * tau).inverse();
    if (!x.perm().is_identity()) {
      throw InternalError("cocycle: f(x) f(y) f(xy)^-1 is not pure");
    }
    return split(x).second;
  }

  inline CocycleTable full_table(Section const& sec) {
    CocycleTable tbl(sec.n());
    for (auto const& sigma : tbl.permutations()) {
      for (auto const& tau : tbl.permutations()) {
        tbl.set(sigma, tau, cocycle(sec, sigma, tau));
      }
    }
    return tbl;
  }

  // Checks u(a, b) + u(ab, c) = a . u(b, c) + u(a, bc) on one triple.
  inline bool cocycle_condition_holds(CocycleTable const& tbl,
                                      Permutation const&  a,
                                      Permutation const&  b,
                                      Permutation const&  c) {
    return tbl.at(a, b) + tbl.at(a * b, c)
           == act(a, tbl.at(b, c)) + tbl.at(a, b * c);
  }

  // Exhaustive over all |S_n|^3 triples.
  inline bool verify_cocycle_condition(CocycleTable const& tbl) {
    auto const& perms = tbl.permutations();
    for (auto const& a : perms) {
      for (auto const& b : perms) {
        for (auto const& c : perms) {
          if (!cocycle_condition_holds(tbl, a, b, c)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Random sample of triples, for n where |S_n|^3 is too large.
  inline bool verify_cocycle_condition_sampled(CocycleTable const& tbl,
                                               std::size_t         samples,
                                               std::uint64_t       seed) {
    auto const&                                perms = tbl.permutations();
    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      if (!cocycle_condition_holds(
              tbl, perms[pick(rng)], perms[pick(rng)], perms[pick(rng)])) {
        return false;
      }
    }
    return true;
  }

  // For sections f and g with c(x) = split(f(x) g(x)^-1).m, checks
  // u_f(x, y) - u_g(x, y) = c(x) + x . c(y) - c(xy) for all x, y.
  inline bool tables_differ_by_coboundary(Section const&      f,
                                          CocycleTable const& uf,
                                          Section const&      g,
                                          CocycleTable const& ug) {
    if (f.n() != g.n()) {
      throw DimensionMismatch("sections over different strand counts");
    }
    std::map<Permutation, PureVector> c;
    for (auto const& sigma : uf.permutations()) {
      c.emplace(sigma,
                split(f.element(sigma) * g.element(sigma).inverse()).second);
    }
    for (auto const& x : uf.permutations()) {
      for (auto const& y : uf.permutations()) {
        auto const lhs = uf.at(x, y) - ug.at(x, y);
        auto const rhs = c.at(x) + act(x, c.at(y)) - c.at(x * y);
        if (lhs != rhs) {
          return false;
        }
      }
    }
    return true;
  }

  // Aligned text rendering. For n = 3 rows and columns follow the order
  // 1, s2, s1, s1s2, s2s1, s2s1s2 of the published table; otherwise the
  // lexicographic order of image arrays, labelled by cycle notation.
  inline std::string render_table_text(CocycleTable const& tbl) {
    std::vector<std::pair<std::string, Permutation>> labels;
    if (tbl.n() == 3) {
      for (auto const& [name, word] : Section::reference3_words()) {
        labels.emplace_back(name, eval(parse(word, 3)).perm());
      }
    } else {
      for (auto const& p : tbl.permutations()) {
        labels.emplace_back(p.to_string(), p);
      }
    }

    std::vector<std::vector<std::string>> cells;
    std::vector<std::string>              header{""};
    for (auto const& [name, p] : labels) {
      header.push_back(name);
    }
    cells.push_back(std::move(header));
    for (auto const& [rname, rp] : labels) {
      std::vector<std::string> row{rname};
      for (auto const& [cname, cp] : labels) {
        row.push_back(tbl.at(rp, cp).to_string());
      }
      cells.push_back(std::move(row));
    }

    std::vector<std::size_t> width(cells.front().size(), 0);
    for (auto const& row : cells) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        width[c] = std::max(width[c], row[c].size());
      }
    }
    std::ostringstream out;
    for (auto const& row : cells) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c > 0) {
          line += " | ";
        }
        line += row[c] + std::string(width[c] - row[c].size(), ' ');
      }
      while (!line.empty() && line.back() == ' ') {
        line.pop_back();
      }
      out << line << '\n';
    }
    return out.str();
  }

}  // namespace psgroup

#endif  // PSGROUP_COCYCLE_HPP
