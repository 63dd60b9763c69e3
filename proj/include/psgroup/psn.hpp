#ifndef PSGROUP_PSN_HPP
#define PSGROUP_PSN_HPP

// Exact arithmetic in the pseudosymmetric group PS_n, the quotient of the
// braid group B_n by sigma_i sigma_{i+1}^-1 sigma_i = sigma_{i+1}
// sigma_i^-1 sigma_{i+1}.
//
// Elements are kept in normal form as their image under the
// Lawrence-Krammer representation specialised at q = 1. That image is a
// monomial matrix: the basis vector x_{i,j} is sent to t^e x_{sigma(i),
// sigma(j)}, so an element is the pair (sigma, e) with sigma in S_n and e
// an integer vector indexed by unordered pairs. The specialised
// representation is faithful on PS_n, which makes the pair a complete
// invariant and reduces the word problem to comparing two vectors.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braid.hpp"
#include "errors.hpp"
#include "permutation.hpp"

namespace psgroup {

  ////////////////////////////////////////////////////////////////////////
  // PureVector
  ////////////////////////////////////////////////////////////////////////

  // An element of the kernel of PS_n -> S_n written additively in the basis
  // A_{i,j}: the entry at pair_offset(n, {i, j}) is the exponent of A_{i,j}.
  class PureVector {
   public:
    using value_type = std::int64_t;

    explicit PureVector(int n)
        : _n(n), _m(pair_count(n), 0) {
      check_n(n);
    }

    PureVector(int n, std::vector<value_type> m) : _n(n), _m(std::move(m)) {
      check_n(n);
      if (_m.size() != pair_count(n)) {
        throw DimensionMismatch("PureVector: expected "
                                + std::to_string(pair_count(n))
                                + " coordinates, got "
                                + std::to_string(_m.size()));
      }
    }

    // The coordinate vector of the generator A_{i,j}.
    static PureVector basis(int n, PairIndex p) {
      PureVector v(n);
      v[p] = 1;
      return v;
    }

    [[nodiscard]] int n() const noexcept {
      return _n;
    }

    [[nodiscard]] std::vector<value_type> const& coordinates() const noexcept {
      return _m;
    }

    value_type& operator[](PairIndex p) {
      return _m[pair_offset(_n, p)];
    }

    value_type operator[](PairIndex p) const {
      return _m[pair_offset(_n, p)];
    }

    [[nodiscard]] bool is_zero() const noexcept {
      for (auto x : _m) {
        if (x != 0) {
          return false;
        }
      }
      return true;
    }

    PureVector& operator+=(PureVector const& other) {
      check_same(other);
      for (std::size_t i = 0; i < _m.size(); ++i) {
        _m[i] += other._m[i];
      }
      return *this;
    }

    PureVector& operator-=(PureVector const& other) {
      check_same(other);
      for (std::size_t i = 0; i < _m.size(); ++i) {
        _m[i] -= other._m[i];
      }
      return *this;
    }

    friend PureVector operator+(PureVector a, PureVector const& b) {
      a += b;
      return a;
    }

    friend PureVector operator-(PureVector a, PureVector const& b) {
      a -= b;
      return a;
    }

    friend PureVector operator-(PureVector a) {
      for (auto& x : a._m) {
        x = -x;
      }
      return a;
    }

    friend bool operator==(PureVector const&, PureVector const&) = default;

    // Additive notation, e.g. "A_{1,2} + 2*A_{1,3} - A_{2,3}", or "0".
    [[nodiscard]] std::string to_string() const {
      std::string out;
      auto const  pairs = all_pairs(_n);
      for (std::size_t k = 0; k < _m.size(); ++k) {
        auto const c = _m[k];
        if (c == 0) {
          continue;
        }
        if (out.empty()) {
          out += c < 0 ? "-" : "";
        } else {
          out += c < 0 ? " - " : " + ";
        }
        auto const mag = c < 0 ? -c : c;
        if (mag != 1) {
          out += std::to_string(mag) + "*";
        }
        out += "A_{" + psgroup::to_string(pairs[k]) + "}";
      }
      return out.empty() ? "0" : out;
    }

   private:
    static void check_n(int n) {
      if (n < 2) {
        throw RangeError("PureVector: strand count must be >= 2");
      }
    }

    void check_same(PureVector const& other) const {
      if (_n != other._n) {
        throw DimensionMismatch("PureVector: mismatched strand counts");
      }
    }

    int                     _n;
    std::vector<value_type> _m;
  };

  ////////////////////////////////////////////////////////////////////////
  // PSElement
  ////////////////////////////////////////////////////////////////////////

  // Normal form of an element of PS_n: x_p -> t^{exps[p]} x_{perm(p)}.
  class PSElement {
   public:
    using exponent_type = std::int64_t;

    PSElement(Permutation perm, std::vector<exponent_type> exps)
        : _perm(std::move(perm)), _exps(std::move(exps)) {
      if (_perm.n() < 2) {
        throw RangeError("PSElement: strand count must be >= 2");
      }
      if (_exps.size() != pair_count(_perm.n())) {
        throw DimensionMismatch("PSElement: expected "
                                + std::to_string(pair_count(_perm.n()))
                                + " exponents, got "
                                + std::to_string(_exps.size()));
      }
    }

    static PSElement identity(int n) {
      return PSElement(Permutation::identity(n),
                       std::vector<exponent_type>(pair_count(n), 0));
    }

    [[nodiscard]] int n() const noexcept {
      return _perm.n();
    }

    [[nodiscard]] Permutation const& perm() const noexcept {
      return _perm;
    }

    [[nodiscard]] std::vector<exponent_type> const& exps() const noexcept {
      return _exps;
    }

    exponent_type exp(PairIndex p) const {
      return _exps[pair_offset(n(), p)];
    }

    [[nodiscard]] bool is_identity() const noexcept {
      if (!_perm.is_identity()) {
        return false;
      }
      for (auto e : _exps) {
        if (e != 0) {
          return false;
        }
      }
      return true;
    }

    // Composition of monomial matrices, b applied first.
    friend PSElement operator*(PSElement const& a, PSElement const& b) {
      if (a.n() != b.n()) {
        throw DimensionMismatch("PSElement: multiplying elements of PS_"
                                + std::to_string(a.n()) + " and PS_"
                                + std::to_string(b.n()));
      }
      auto const                 moved = pair_action(b._perm);
      std::vector<exponent_type> exps(b._exps);
      for (std::size_t p = 0; p < exps.size(); ++p) {
        exps[p] += a._exps[moved[p]];
      }
      return PSElement(a._perm * b._perm, std::move(exps));
    }

    [[nodiscard]] PSElement inverse() const {
      // (sigma, e)^-1 = (sigma^-1, e') with e'[sigma(p)] = -e[p].
      auto const                 moved = pair_action(_perm);
      std::vector<exponent_type> exps(_exps.size());
      for (std::size_t p = 0; p < exps.size(); ++p) {
        exps[moved[p]] = -_exps[p];
      }
      return PSElement(_perm.inverse(), std::move(exps));
    }

    friend bool operator==(PSElement const&, PSElement const&) = default;

   private:
    Permutation                _perm;
    std::vector<exponent_type> _exps;
  };

  ////////////////////////////////////////////////////////////////////////
  // Group operations
  ////////////////////////////////////////////////////////////////////////

  // Image of sigma_k^sign: the transposition (k k+1) with exponent +-1 on
  // the pair {k, k+1}.
  inline PSElement generator(int n, int k, int sign) {
    if (n < 2 || k < 1 || k > n - 1) {
      throw RangeError("generator: sigma_" + std::to_string(k)
                       + " out of range for n=" + std::to_string(n));
    }
    if (sign != 1 && sign != -1) {
      throw RangeError("generator: sign must be +1 or -1");
    }
    std::vector<PSElement::exponent_type> exps(pair_count(n), 0);
    exps[pair_offset(n, {k, k + 1})] = sign;
    return PSElement(Permutation::simple(n, k), std::move(exps));
  }

  inline PSElement mul(PSElement const& a, PSElement const& b) {
    return a * b;
  }

  inline PSElement inverse(PSElement const& a) {
    return a.inverse();
  }

  // Structural equality of normal forms; throws on mismatched n.
  inline bool equal(PSElement const& a, PSElement const& b) {
    if (a.n() != b.n()) {
      throw DimensionMismatch("equal: comparing elements of PS_"
                              + std::to_string(a.n()) + " and PS_"
                              + std::to_string(b.n()));
    }
    return a == b;
  }

  // Left-to-right product of the generator images of w.
  inline PSElement eval(BraidWord const& w) {
    int const n = w.n();
    // Multiplying on the right by a generator only touches two
    // coordinates, so this avoids the O(n^2) general product.
    std::vector<int>                      image(n);
    std::vector<PSElement::exponent_type> exps(pair_count(n), 0);
    for (int i = 0; i < n; ++i) {
      image[i] = i + 1;
    }
    // acc * g_k: perm' = perm o s_k,
    // exps'[p] = g.exps[p] + acc.exps[s_k(p)].
    auto const pairs = all_pairs(n);
    for (auto const& l : w.letters()) {
      int const  k  = l.index;
      auto const sk = [k](int x) {
        return x == k ? k + 1 : (x == k + 1 ? k : x);
      };
      std::vector<PSElement::exponent_type> next(exps.size());
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto const& pr = pairs[p];
        next[p] = exps[pair_offset(n, make_pair_index(sk(pr.i), sk(pr.j)))];
      }
      next[pair_offset(n, {k, k + 1})] += l.sign;
      exps = std::move(next);
      std::swap(image[k - 1], image[k]);
    }
    return PSElement(Permutation(std::move(image)), std::move(exps));
  }

  // b^k for k >= 0 by repeated squaring.
  inline PSElement power(PSElement const& b, std::uint64_t k) {
    PSElement result = PSElement::identity(b.n());
    PSElement base   = b;
    while (k > 0) {
      if (k & 1U) {
        result = result * base;
      }
      base = base * base;
      k >>= 1U;
    }
    return result;
  }

  inline PSElement a_gen(int n, int i, int j) {
    return eval(a_word(n, i, j));
  }

  inline PSElement b_gen(int n, int i, int j) {
    return eval(b_word(n, i, j));
  }

  // prod A_{i,j}^{m_{ij}}; the A_{i,j} commute, so the order is irrelevant.
  inline PSElement embed(PureVector const& m) {
    std::vector<PSElement::exponent_type> exps(m.coordinates());
    for (auto& e : exps) {
      e *= 2;
    }
    return PSElement(Permutation::identity(m.n()), std::move(exps));
  }

  // The positive reduced word chosen to lift sigma. Reading right to left,
  // block k (k = 1, ..., n-1) is s_k s_{k+1} ... s_{k+c_k-1} where c_k
  // moves the point that lands on k into place; the word is
  // block_{n-1} ... block_1. For n = 3 this gives 1, s1, s2, s1 s2, s2 s1
  // and s2 s1 s2.
  inline BraidWord lift_word(Permutation const& sigma) {
    int const                        n   = sigma.n();
    Permutation                      cur = sigma;
    std::vector<std::vector<Letter>> blocks;
    for (int k = 1; k <= n - 1; ++k) {
      int const         c = cur.inverse()(k) - k;
      std::vector<Letter> block;
      Permutation       w = Permutation::identity(n);
      for (int r = 0; r < c; ++r) {
        block.push_back({k + r, 1});
        w = w * Permutation::simple(n, k + r);
      }
      cur = cur * w.inverse();
      blocks.push_back(std::move(block));
    }
    if (!cur.is_identity()) {
      throw InternalError("lift_word: reduction did not terminate at id");
    }
    std::vector<Letter> letters;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
      letters.insert(letters.end(), it->begin(), it->end());
    }
    return BraidWord(n, std::move(letters));
  }

  inline PSElement lift(Permutation const& sigma) {
    return eval(lift_word(sigma));
  }

  // Unique (sigma, m) with b = embed(m) * lift(sigma). Throws InternalError
  // if the residue is not pure with even exponents, which cannot happen for
  // a correct normal form.
  inline std::pair<Permutation, PureVector> split(PSElement const& b) {
    auto const w = b * lift(b.perm()).inverse();
    if (!w.perm().is_identity()) {
      throw InternalError("split: residue has non-trivial permutation "
                          + w.perm().to_string());
    }
    std::vector<PureVector::value_type> m(w.exps().size());
    for (std::size_t p = 0; p < m.size(); ++p) {
      if (w.exps()[p] % 2 != 0) {
        throw InternalError("split: odd exponent in pure residue");
      }
      m[p] = w.exps()[p] / 2;
    }
    return {b.perm(), PureVector(b.n(), std::move(m))};
  }

  // sigma . A_{i,j} = A_{sigma(i), sigma(j)} with A_{r,s} := A_{s,r} for s < r.
  inline PureVector act(Permutation const& sigma, PureVector const& m) {
    if (sigma.n() != m.n()) {
      throw DimensionMismatch("act: permutation and vector degrees differ");
    }
    auto const                          moved = pair_action(sigma);
    std::vector<PureVector::value_type> out(m.coordinates().size());
    for (std::size_t p = 0; p < out.size(); ++p) {
      out[moved[p]] = m.coordinates()[p];
    }
    return PureVector(m.n(), std::move(out));
  }

  // std::nullopt means infinite order. Only divisors of the order of the
  // permutation part need testing because the pure kernel is torsion free.
  inline std::optional<std::uint64_t> order(PSElement const& b) {
    std::uint64_t const k = b.perm().order();
    if (!power(b, k).is_identity()) {
      return std::nullopt;
    }
    for (std::uint64_t d = 1; d <= k; ++d) {
      if (k % d == 0 && power(b, d).is_identity()) {
        return d;
      }
    }
    return k;
  }

  // For x = embed(m) * sigma_1, the A_{1,2}-coordinate of x^2. It equals
  // 2 m_{12} + 1, which is odd, so x^2 != 1 for every lift x of s_1.
  inline PureVector::value_type nonsplit_witness_exponent(PureVector const& m) {
    auto const x      = embed(m) * generator(m.n(), 1, 1);
    auto const [s, v] = split(x * x);
    if (!s.is_identity()) {
      throw InternalError("nonsplit_witness_exponent: x^2 is not pure");
    }
    return v[{1, 2}];
  }

}  // namespace psgroup

#endif  // PSGROUP_PSN_HPP
