#ifndef PSGROUP_CATEGORY_HPP
#define PSGROUP_CATEGORY_HPP

// Braidings of the strict monoidal category whose objects are natural
// numbers and whose endomorphisms of k are PS_k. Tensoring is index
// shifting. Composition g o f is the word of g followed by the word of f:
// eval() multiplies left to right and the rightmost factor acts first,
// exactly as in PSElement::operator*.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "braid.hpp"
#include "errors.hpp"
#include "psn.hpp"

namespace psgroup {

  // A word over `total` strands. Unlike BraidWord, total may be 0 or 1 (the
  // unit object and a single strand), in which case the word is empty.
  struct TensorWord {
    int                 total = 0;
    std::vector<Letter> letters;

    friend bool operator==(TensorWord const&, TensorWord const&) = default;
  };

  inline TensorWord identity_word(int total) {
    if (total < 0) {
      throw RangeError("identity_word: negative object size");
    }
    return {total, {}};
  }

  // g o f, i.e. f acts first.
  inline TensorWord compose(TensorWord const& g, TensorWord const& f) {
    if (g.total != f.total) {
      throw DimensionMismatch("compose: morphisms of "
                              + std::to_string(g.total) + " and "
                              + std::to_string(f.total) + " strands");
    }
    TensorWord out{g.total, g.letters};
    out.letters.insert(out.letters.end(), f.letters.begin(), f.letters.end());
    return out;
  }

  inline TensorWord inverse(TensorWord const& w) {
    TensorWord out{w.total, {}};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      out.letters.push_back(it->inverse());
    }
    return out;
  }

  // id_k (x) w
  inline TensorWord tensor_left(int k, TensorWord const& w) {
    if (k < 0) {
      throw RangeError("tensor_left: negative object size");
    }
    TensorWord out{w.total + k, {}};
    for (auto const& l : w.letters) {
      out.letters.push_back({l.index + k, l.sign});
    }
    return out;
  }

  // w (x) id_p
  inline TensorWord tensor_right(TensorWord const& w, int p) {
    if (p < 0) {
      throw RangeError("tensor_right: negative object size");
    }
    return {w.total + p, w.letters};
  }

  // c_{n,m} : n (x) m -> m (x) n, as the word
  // (s_m ... s_1)(s_{m+1} ... s_2) ... (s_{m+n-1} ... s_n),
  // padded to `total` strands. Empty if n = 0 or m = 0.
  inline TensorWord braiding(int n, int m, int total) {
    if (n < 0 || m < 0 || n + m > total) {
      throw RangeError("braiding: need n, m >= 0 and n + m <= total, got n="
                       + std::to_string(n) + " m=" + std::to_string(m)
                       + " total=" + std::to_string(total));
    }
    TensorWord out{total, {}};
    for (int r = 0; r < n; ++r) {
      for (int k = m + r; k >= 1 + r; --k) {
        out.letters.push_back({k, 1});
      }
    }
    return out;
  }

  // t_{m,n} = c_{n,m} o c_{m,n}
  inline TensorWord double_braiding(int m, int n, int total) {
    return compose(braiding(n, m, total), braiding(m, n, total));
  }

  // Evaluates in PS_k for k = max(total, 2); PS_0 and PS_1 are trivial and
  // embed in PS_2.
  inline PSElement eval(TensorWord const& w) {
    return eval(BraidWord(std::max(w.total, 2), w.letters));
  }

  inline BraidWord to_braid_word(TensorWord const& w) {
    return BraidWord(std::max(w.total, 2), w.letters);
  }

  // (t_{m,n} (x) id_p) o (id_m (x) t_{n,p})
  //   = (id_m (x) t_{n,p}) o (t_{m,n} (x) id_p)  in PS_{m+n+p}.
  inline bool check_pseudosymmetry(int m, int n, int p) {
    if (m < 0 || n < 0 || p < 0) {
      throw RangeError("check_pseudosymmetry: negative object size");
    }
    auto const left  = double_braiding(m, n, m + n + p);
    auto const right = tensor_left(m, double_braiding(n, p, n + p));
    return eval(compose(left, right)) == eval(compose(right, left));
  }

  // Both sides of the pseudosymmetric braid relation for objects of sizes
  // x, y, z:
  //   (c_{Y,Z} (x) id_X) o (id_Y (x) c_{Z,X}^-1) o (c_{X,Y} (x) id_Z)
  //   (id_Z (x) c_{X,Y}) o (c_{Z,X}^-1 (x) id_Y) o (id_X (x) c_{Y,Z})
  inline std::pair<TensorWord, TensorWord>
  pseudosymmetric_relation_sides(int x, int y, int z) {
    if (x < 0 || y < 0 || z < 0) {
      throw RangeError("pseudosymmetric_relation_sides: negative size");
    }
    auto c = [](int a, int b) { return braiding(a, b, a + b); };
    auto const lhs
        = compose(tensor_right(c(y, z), x),
                  compose(tensor_left(y, inverse(c(z, x))),
                          tensor_right(c(x, y), z)));
    auto const rhs
        = compose(tensor_left(z, c(x, y)),
                  compose(tensor_right(inverse(c(z, x)), y),
                          tensor_left(x, c(y, z))));
    return {lhs, rhs};
  }

  inline bool check_pseudosymmetric_relation(int x, int y, int z) {
    auto const [lhs, rhs] = pseudosymmetric_relation_sides(x, y, z);
    return eval(lhs) == eval(rhs);
  }

}  // namespace psgroup

#endif  // PSGROUP_CATEGORY_HPP
