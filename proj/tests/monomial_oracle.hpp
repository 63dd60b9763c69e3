#ifndef PSGROUP_TESTS_MONOMIAL_ORACLE_HPP
#define PSGROUP_TESTS_MONOMIAL_ORACLE_HPP

// Test-only brute force: dense integer matrices over Z[t, t^-1] built
// directly from the q = 1 formulas for sigma_k, multiplied entry by entry.
// Shares nothing with PSElement arithmetic beyond the pair enumeration.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "psgroup/braid.hpp"
#include "psgroup/permutation.hpp"
#include "psgroup/psn.hpp"

namespace oracle {

  // entry[r][c] is a Laurent polynomial in t: exponent -> coefficient.
  using Poly   = std::map<std::int64_t, std::int64_t>;
  using Matrix = std::vector<std::vector<Poly>>;

  inline Matrix identity(int n) {
    auto   d = psgroup::pair_count(n);
    Matrix m(d, std::vector<Poly>(d));
    for (std::size_t i = 0; i < d; ++i) {
      m[i][i][0] = 1;
    }
    return m;
  }

  // sigma_k at q = 1, column by column:
  //   x_{k,k+1} -> t x_{k,k+1};   x_{i,k} -> x_{i,k+1};   x_{i,k+1} -> x_{i,k};
  //   x_{k,j} -> x_{k+1,j};       x_{k+1,j} -> x_{k,j};   otherwise fixed.
  inline Matrix generator(int n, int k, int sign) {
    auto   d = psgroup::pair_count(n);
    Matrix m(d, std::vector<Poly>(d));
    auto   at = [n](int i, int j) { return psgroup::pair_offset(n, {i, j}); };
    for (auto const& [i, j] : psgroup::all_pairs(n)) {
      auto const c = at(i, j);
      if (i == k && j == k + 1) {
        m[c][c][sign] = 1;
      } else if (j == k) {
        m[at(i, k + 1)][c][0] = 1;
      } else if (j == k + 1) {
        m[at(i, k)][c][0] = 1;
      } else if (i == k) {
        m[at(k + 1, j)][c][0] = 1;
      } else if (i == k + 1) {
        m[at(k, j)][c][0] = 1;
      } else {
        m[c][c][0] = 1;
      }
    }
    return m;
  }

  inline Matrix multiply(Matrix const& a, Matrix const& b) {
    auto const d = a.size();
    Matrix     out(d, std::vector<Poly>(d));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        Poly acc;
        for (std::size_t k = 0; k < d; ++k) {
          for (auto const& [ea, ca] : a[r][k]) {
            for (auto const& [eb, cb] : b[k][c]) {
              acc[ea + eb] += ca * cb;
            }
          }
        }
        std::erase_if(acc, [](auto const& kv) { return kv.second == 0; });
        out[r][c] = std::move(acc);
      }
    }
    return out;
  }

  inline Matrix eval(psgroup::BraidWord const& w) {
    Matrix m = identity(w.n());
    for (auto const& l : w.letters()) {
      m = multiply(m, generator(w.n(), l.index, l.sign));
    }
    return m;
  }

  // The monomial matrix of a normal form: column p has t^{exps[p]} in row
  // perm(p).
  inline Matrix from_element(psgroup::PSElement const& b) {
    int const n = b.n();
    auto      d = psgroup::pair_count(n);
    Matrix    m(d, std::vector<Poly>(d));
    for (auto const& p : psgroup::all_pairs(n)) {
      auto const c = psgroup::pair_offset(n, p);
      m[psgroup::pair_offset(n, psgroup::apply(b.perm(), p))][c]
       [b.exps()[c]]
          = 1;
    }
    return m;
  }

}  // namespace oracle

#endif  // PSGROUP_TESTS_MONOMIAL_ORACLE_HPP
