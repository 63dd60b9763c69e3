#ifndef PSGROUP_PERMUTATION_HPP
#define PSGROUP_PERMUTATION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace psgroup {

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  // A permutation of {1, ..., n}, stored as its image array. Composition is
  // right-to-left: (a * b)(x) = a(b(x)).
  class Permutation {
   public:
    explicit Permutation(std::vector<int> image) : _image(std::move(image)) {
      std::vector<bool> seen(_image.size() + 1, false);
      for (int x : _image) {
        if (x < 1 || x > static_cast<int>(_image.size()) || seen[x]) {
          throw RangeError("Permutation: image is not a bijection of 1.."
                           + std::to_string(_image.size()));
        }
        seen[x] = true;
      }
    }

    static Permutation identity(int n) {
      std::vector<int> image(n);
      std::iota(image.begin(), image.end(), 1);
      return Permutation(std::move(image));
    }

    static Permutation transposition(int n, int a, int b) {
      auto p = identity(n);
      if (a < 1 || a > n || b < 1 || b > n) {
        throw RangeError("Permutation: transposition point out of range");
      }
      std::swap(p._image[a - 1], p._image[b - 1]);
      return p;
    }

    // The Coxeter generator s_k = (k k+1).
    static Permutation simple(int n, int k) {
      if (k < 1 || k > n - 1) {
        throw RangeError("Permutation: s_" + std::to_string(k)
                         + " out of range for n=" + std::to_string(n));
      }
      return transposition(n, k, k + 1);
    }

    [[nodiscard]] int n() const noexcept {
      return static_cast<int>(_image.size());
    }

    // sigma(x) for x in 1..n.
    int operator()(int x) const {
      return _image[x - 1];
    }

    [[nodiscard]] std::span<int const> image() const noexcept {
      return _image;
    }

    [[nodiscard]] bool is_identity() const noexcept {
      for (std::size_t i = 0; i < _image.size(); ++i) {
        if (_image[i] != static_cast<int>(i) + 1) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] Permutation inverse() const {
      std::vector<int> inv(_image.size());
      for (std::size_t i = 0; i < _image.size(); ++i) {
        inv[_image[i] - 1] = static_cast<int>(i) + 1;
      }
      return Permutation(std::move(inv));
    }

    friend Permutation operator*(Permutation const& a, Permutation const& b) {
      if (a.n() != b.n()) {
        throw DimensionMismatch("Permutation: composing degree "
                                + std::to_string(a.n()) + " with degree "
                                + std::to_string(b.n()));
      }
      std::vector<int> out(a._image.size());
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a._image[b._image[i] - 1];
      }
      return Permutation(std::move(out));
    }

    // lcm of the cycle lengths.
    [[nodiscard]] std::uint64_t order() const {
      std::uint64_t     result = 1;
      std::vector<bool> seen(_image.size(), false);
      for (std::size_t i = 0; i < _image.size(); ++i) {
        if (seen[i]) {
          continue;
        }
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = _image[j] - 1) {
          seen[j] = true;
          ++len;
        }
        result = std::lcm(result, len);
      }
      return result;
    }

    // Number of pairs x < y with sigma(x) > sigma(y), the Coxeter length.
    [[nodiscard]] std::size_t inversions() const noexcept {
      std::size_t count = 0;
      for (std::size_t x = 0; x < _image.size(); ++x) {
        for (std::size_t y = x + 1; y < _image.size(); ++y) {
          count += _image[x] > _image[y] ? 1 : 0;
        }
      }
      return count;
    }

    // Disjoint cycle notation with fixed points omitted, "id" if trivial.
    [[nodiscard]] std::string to_string() const {
      std::string       out;
      std::vector<bool> seen(_image.size(), false);
      for (std::size_t i = 0; i < _image.size(); ++i) {
        if (seen[i] || _image[i] == static_cast<int>(i) + 1) {
          continue;
        }
        out += '(';
        for (std::size_t j = i; !seen[j]; j = _image[j] - 1) {
          seen[j] = true;
          if (out.back() != '(') {
            out += ' ';
          }
          out += std::to_string(j + 1);
        }
        out += ')';
      }
      return out.empty() ? "id" : out;
    }

    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    std::vector<int> _image;
  };

  // All n! permutations in lexicographic order of their image arrays.
  inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 1);
    std::vector<Permutation> out;
    do {
      out.emplace_back(image);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Unordered pairs {i, j}, 1 <= i < j <= n
  ////////////////////////////////////////////////////////////////////////

  struct PairIndex {
    int i = 1;
    int j = 2;

    friend auto operator<=>(PairIndex const&, PairIndex const&) = default;
  };

  // n(n-1)/2
  constexpr std::size_t pair_count(int n) noexcept {
    return n < 2 ? 0
                 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1)
                       / 2;
  }

  // Position of {i, j} in the lexicographic enumeration of pairs.
  inline std::size_t pair_offset(int n, PairIndex p) {
    if (!(1 <= p.i && p.i < p.j && p.j <= n)) {
      throw RangeError("pair {" + std::to_string(p.i) + "," + std::to_string(p.j)
                       + "} invalid for n=" + std::to_string(n));
    }
    auto const i = static_cast<std::size_t>(p.i - 1);
    return i * static_cast<std::size_t>(n) - i * (i + 1) / 2
           + static_cast<std::size_t>(p.j - p.i - 1);
  }

  inline std::vector<PairIndex> all_pairs(int n) {
    std::vector<PairIndex> out;
    out.reserve(pair_count(n));
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        out.push_back({i, j});
      }
    }
    return out;
  }

  // The pair {i, j} in sorted order, for i != j.
  inline PairIndex make_pair_index(int i, int j) {
    if (i == j) {
      throw RangeError("pair with equal points " + std::to_string(i));
    }
    return i < j ? PairIndex{i, j} : PairIndex{j, i};
  }

  // sigma({i, j}) = {sigma(i), sigma(j)}, re-sorted.
  inline PairIndex apply(Permutation const& sigma, PairIndex p) {
    return make_pair_index(sigma(p.i), sigma(p.j));
  }

  // The induced permutation of pair offsets: out[offset(p)] =
  // offset(sigma(p)).
  inline std::vector<std::size_t> pair_action(Permutation const& sigma) {
    int const                n = sigma.n();
    std::vector<std::size_t> out;
    out.reserve(pair_count(n));
    for (auto const& p : all_pairs(n)) {
      out.push_back(pair_offset(n, apply(sigma, p)));
    }
    return out;
  }

  inline std::string to_string(PairIndex p) {
    return std::to_string(p.i) + "," + std::to_string(p.j);
  }

}  // namespace psgroup

#endif  // PSGROUP_PERMUTATION_HPP
