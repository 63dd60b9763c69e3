#ifndef PSGROUP_LK_HPP
#define PSGROUP_LK_HPP

// The Lawrence-Krammer representation of B_n over Z[q^+-1, t^+-1].
//
// V is free on x_{i,j}, 1 <= i < j <= n, ordered lexicographically. A
// matrix M represents the map whose column c holds the coordinates of the
// image of basis vector c, and a word evaluates to the left-to-right product
// of its generator matrices. At q = 1 every word goes to a monomial matrix,
// which is how this module cross-checks the normal forms of psn.hpp.

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "braid.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "permutation.hpp"
#include "psn.hpp"

namespace psgroup {

  class LKMatrix {
   public:
    // The zero matrix.
    explicit LKMatrix(int n) : _n(n), _dim(pair_count(n)) {
      if (n < 2) {
        throw RangeError("LKMatrix: strand count must be >= 2");
      }
      _entries.resize(_dim * _dim);
    }

    static LKMatrix identity(int n) {
      LKMatrix m(n);
      for (std::size_t i = 0; i < m._dim; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    [[nodiscard]] int n() const noexcept {
      return _n;
    }

    [[nodiscard]] std::size_t dim() const noexcept {
      return _dim;
    }

    LaurentPoly2& operator()(std::size_t row, std::size_t col) {
      return _entries[row * _dim + col];
    }

    LaurentPoly2 const& operator()(std::size_t row, std::size_t col) const {
      return _entries[row * _dim + col];
    }

    friend LKMatrix operator*(LKMatrix const& a, LKMatrix const& b) {
      if (a._n != b._n) {
        throw DimensionMismatch("LKMatrix: multiplying matrices for "
                                + std::to_string(a._n) + " and "
                                + std::to_string(b._n) + " strands");
      }
      std::size_t const d = a._dim;
      LKMatrix          out(a._n);
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t j = 0; j < d; ++j) {
          auto const& bkj = b(k, j);
          if (bkj.is_zero()) {
            continue;
          }
          for (std::size_t i = 0; i < d; ++i) {
            auto const& aik = a(i, k);
            if (!aik.is_zero()) {
              out(i, j) += aik * bkj;
            }
          }
        }
      }
      return out;
    }

    friend bool operator==(LKMatrix const&, LKMatrix const&) = default;

    [[nodiscard]] bool is_identity() const {
      return *this == identity(_n);
    }

   private:
    int                       _n;
    std::size_t               _dim;
    std::vector<LaurentPoly2> _entries;
  };

  namespace detail {

    // Image of sigma_k under the generic representation.
    inline LKMatrix lk_positive_generator(int n, int k) {
      using P         = LaurentPoly2;
      P const q       = P::q();
      P const t       = P::t();
      P const one     = 1;
      LKMatrix m(n);
      auto     at = [n](int i, int j) { return pair_offset(n, {i, j}); };

      for (auto const& [i, j] : all_pairs(n)) {
        auto const col = at(i, j);
        if (i == k && j == k + 1) {
          m(col, col) = t * q * q;
        } else if (j == k && i < k) {
          m(at(i, k), col)     = one - q;
          m(at(i, k + 1), col) = q;
        } else if (j == k + 1 && i < k) {
          m(at(i, k), col)     = one;
          m(at(k, k + 1), col) = t * P::q(k - i + 1) * (q - one);
        } else if (i == k && k + 1 < j) {
          m(at(k, k + 1), col) = t * q * (q - one);
          m(at(k + 1, j), col) = q;
        } else if (i == k + 1 && k + 1 < j) {
          m(at(k, j), col)     = one;
          m(at(k + 1, j), col) = one - q;
        } else if (i < k && k + 1 < j) {
          m(col, col)          = one;
          m(at(k, k + 1), col) = t * P::q(k - i) * (q - one) * (q - one);
        } else {
          // i < j < k or k + 1 < i < j
          m(col, col) = one;
        }
      }
      return m;
    }

    // Gauss-Jordan elimination over the Laurent ring using only unit
    // pivots, so that every division is exact.
    inline LKMatrix lk_invert(LKMatrix a) {
      std::size_t const d   = a.dim();
      LKMatrix          inv = LKMatrix::identity(a.n());
      auto swap_rows = [d](LKMatrix& m, std::size_t r1, std::size_t r2) {
        for (std::size_t c = 0; c < d; ++c) {
          std::swap(m(r1, c), m(r2, c));
        }
      };
      for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = d;
        for (std::size_t r = col; r < d; ++r) {
          if (a(r, col).is_unit()) {
            pivot = r;
            break;
          }
        }
        if (pivot == d) {
          throw InternalError("lk_invert: no unit pivot in column "
                              + std::to_string(col));
        }
        swap_rows(a, col, pivot);
        swap_rows(inv, col, pivot);
        auto const scale = a(col, col).unit_inverse();
        for (std::size_t c = 0; c < d; ++c) {
          a(col, c)   = a(col, c) * scale;
          inv(col, c) = inv(col, c) * scale;
        }
        for (std::size_t r = 0; r < d; ++r) {
          if (r == col || a(r, col).is_zero()) {
            continue;
          }
          auto const factor = a(r, col);
          for (std::size_t c = 0; c < d; ++c) {
            if (!a(col, c).is_zero()) {
              a(r, c) -= factor * a(col, c);
            }
            if (!inv(col, c).is_zero()) {
              inv(r, c) -= factor * inv(col, c);
            }
          }
        }
      }
      return inv;
    }

    struct LKGeneratorPair {
      LKMatrix positive;
      LKMatrix negative;
    };

    inline LKGeneratorPair const& lk_generator_cache(int n, int k) {
      static std::mutex                                    mtx;
      static std::map<std::pair<int, int>, LKGeneratorPair> cache;
      std::lock_guard<std::mutex>                          lock(mtx);
      auto it = cache.find({n, k});
      if (it == cache.end()) {
        auto pos = lk_positive_generator(n, k);
        auto neg = lk_invert(pos);
        if (!(pos * neg).is_identity() || !(neg * pos).is_identity()) {
          throw InternalError("lk_generator: inverse check failed for n="
                              + std::to_string(n) + " k="
                              + std::to_string(k));
        }
        it = cache
                 .emplace(std::pair{n, k},
                          LKGeneratorPair{std::move(pos), std::move(neg)})
                 .first;
      }
      // std::map nodes are stable, so the reference outlives the lock.
      return it->second;
    }

  }  // namespace detail

  // Matrix of sigma_k^sign. The inverse is obtained by exact elimination
  // and checked against the positive matrix on first use.
  inline LKMatrix const& lk_generator(int n, int k, int sign) {
    if (n < 2 || k < 1 || k > n - 1) {
      throw RangeError("lk_generator: sigma_" + std::to_string(k)
                       + " out of range for n=" + std::to_string(n));
    }
    if (sign != 1 && sign != -1) {
      throw RangeError("lk_generator: sign must be +1 or -1");
    }
    auto const& entry = detail::lk_generator_cache(n, k);
    return sign > 0 ? entry.positive : entry.negative;
  }

  inline LKMatrix lk_eval(BraidWord const& w) {
    LKMatrix out = LKMatrix::identity(w.n());
    for (auto const& l : w.letters()) {
      out = out * lk_generator(w.n(), l.index, l.sign);
    }
    return out;
  }

  inline LKMatrix specialize_q1(LKMatrix const& m) {
    LKMatrix out(m.n());
    for (std::size_t r = 0; r < m.dim(); ++r) {
      for (std::size_t c = 0; c < m.dim(); ++c) {
        out(r, c) = m(r, c).eval_q1();
      }
    }
    return out;
  }

  // True iff every row and column has exactly one nonzero entry and each
  // nonzero entry is a power of t with coefficient 1.
  inline bool is_monomial(LKMatrix const& m) {
    std::size_t const d = m.dim();
    std::vector<int>  row_hits(d, 0);
    for (std::size_t c = 0; c < d; ++c) {
      int col_hits = 0;
      for (std::size_t r = 0; r < d; ++r) {
        auto const& e = m(r, c);
        if (e.is_zero()) {
          continue;
        }
        if (!e.is_monomial() || e.depends_on_q()
            || e.terms().begin()->second != 1) {
          return false;
        }
        ++col_hits;
        ++row_hits[r];
      }
      if (col_hits != 1) {
        return false;
      }
    }
    for (auto h : row_hits) {
      if (h != 1) {
        return false;
      }
    }
    return true;
  }

  // Reads a q = 1 monomial matrix back as a PSElement. Throws
  // std::invalid_argument if the matrix is not monomial or its pattern of
  // nonzero entries is not induced by a permutation of the strands.
  inline PSElement to_ps(LKMatrix const& m) {
    if (!is_monomial(m)) {
      throw std::invalid_argument("to_ps: matrix is not monomial in t");
    }
    int const                             n     = m.n();
    auto const                            pairs = all_pairs(n);
    std::size_t const                     d     = m.dim();
    std::vector<std::size_t>              target(d);
    std::vector<PSElement::exponent_type> exps(d);
    for (std::size_t c = 0; c < d; ++c) {
      for (std::size_t r = 0; r < d; ++r) {
        if (!m(r, c).is_zero()) {
          target[c] = r;
          exps[c]   = m(r, c).terms().begin()->first.second;
        }
      }
    }

    std::vector<int> image(n);
    if (n == 2) {
      // One pair only; the strand permutation is recorded by the parity of
      // the t-exponent (sigma_1 -> t).
      image = exps[0] % 2 == 0 ? std::vector<int>{1, 2}
                               : std::vector<int>{2, 1};
    } else {
      // sigma(x) is the common point of sigma({x, y}) and sigma({x, z}).
      for (int x = 1; x <= n; ++x) {
        int const  y  = x == 1 ? 2 : 1;
        int const  z  = (x <= 2) ? 3 : 2;
        auto const py = pairs[target[pair_offset(n, make_pair_index(x, y))]];
        auto const pz = pairs[target[pair_offset(n, make_pair_index(x, z))]];
        int        common = 0;
        int        hits   = 0;
        for (int a : {py.i, py.j}) {
          if (a == pz.i || a == pz.j) {
            common = a;
            ++hits;
          }
        }
        if (hits != 1) {
          throw std::invalid_argument(
              "to_ps: pair permutation is not induced by a point "
              "permutation");
        }
        image[x - 1] = common;
      }
    }

    std::vector<bool> seen(n + 1, false);
    for (int v : image) {
      if (seen[v]) {
        throw std::invalid_argument(
            "to_ps: pair permutation is not induced by a point permutation");
      }
      seen[v] = true;
    }
    Permutation perm(std::move(image));
    if (pair_action(perm) != target) {
      throw std::invalid_argument(
          "to_ps: pair permutation is not induced by a point permutation");
    }
    return PSElement(std::move(perm), std::move(exps));
  }

}  // namespace psgroup

#endif  // PSGROUP_LK_HPP
