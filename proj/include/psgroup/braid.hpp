#ifndef PSGROUP_BRAID_HPP
#define PSGROUP_BRAID_HPP

#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace psgroup {

  // sigma_index^sign with sign in {+1, -1}.
  struct Letter {
    int index = 1;
    int sign  = 1;

    [[nodiscard]] Letter inverse() const noexcept {
      return {index, -sign};
    }

    friend auto operator<=>(Letter const&, Letter const&) = default;
  };

  // A word in the Artin generators over a fixed strand count n >= 2. Words
  // are syntax only: two words may denote the same group element without
  // being equal as words.
  class BraidWord {
   public:
    explicit BraidWord(int n, std::vector<Letter> letters = {})
        : _n(n), _letters(std::move(letters)) {
      if (n < 2) {
        throw RangeError("BraidWord: strand count must be >= 2, got "
                         + std::to_string(n));
      }
      for (auto const& l : _letters) {
        validate(l);
      }
    }

    [[nodiscard]] int n() const noexcept {
      return _n;
    }

    [[nodiscard]] std::span<Letter const> letters() const noexcept {
      return _letters;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }

    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }

    Letter const& operator[](std::size_t i) const {
      return _letters[i];
    }

    void push_back(Letter l) {
      validate(l);
      _letters.push_back(l);
    }

    // Reverse the word and invert every letter.
    [[nodiscard]] BraidWord inverse() const {
      std::vector<Letter> out;
      out.reserve(_letters.size());
      for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
        out.push_back(it->inverse());
      }
      return BraidWord(_n, std::move(out));
    }

    // Concatenation; both words must live over the same strand count.
    friend BraidWord operator*(BraidWord const& a, BraidWord const& b) {
      if (a._n != b._n) {
        throw DimensionMismatch("BraidWord: cannot concatenate words over "
                                + std::to_string(a._n) + " and "
                                + std::to_string(b._n) + " strands");
      }
      std::vector<Letter> out(a._letters);
      out.insert(out.end(), b._letters.begin(), b._letters.end());
      return BraidWord(a._n, std::move(out));
    }

    friend bool operator==(BraidWord const&, BraidWord const&) = default;

   private:
    void validate(Letter const& l) const {
      if (l.index < 1 || l.index > _n - 1) {
        throw RangeError("BraidWord: generator index "
                         + std::to_string(l.index) + " out of range 1.."
                         + std::to_string(_n - 1));
      }
      if (l.sign != 1 && l.sign != -1) {
        throw RangeError("BraidWord: letter sign must be +1 or -1");
      }
    }

    int                 _n;
    std::vector<Letter> _letters;
  };

  // w^k, with negative k meaning (w^-1)^|k|.
  inline BraidWord power(BraidWord const& w, int k) {
    BraidWord const base = k < 0 ? w.inverse() : w;
    BraidWord       out(w.n());
    for (int r = 0; r < (k < 0 ? -k : k); ++r) {
      out = out * base;
    }
    return out;
  }

  // The pure braid a_ij = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1.
  inline BraidWord a_word(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= n)) {
      throw RangeError("a_word: need 1 <= i < j <= n, got i="
                       + std::to_string(i) + " j=" + std::to_string(j)
                       + " n=" + std::to_string(n));
    }
    std::vector<Letter> out;
    for (int k = j - 1; k > i; --k) {
      out.push_back({k, 1});
    }
    out.push_back({i, 1});
    out.push_back({i, 1});
    for (int k = i + 1; k <= j - 1; ++k) {
      out.push_back({k, -1});
    }
    return BraidWord(n, std::move(out));
  }

  // The pure braid b_ij = s_{j-1}^-1 ... s_{i+1}^-1 s_i^2 s_{i+1} ... s_{j-1}.
  inline BraidWord b_word(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= n)) {
      throw RangeError("b_word: need 1 <= i < j <= n, got i="
                       + std::to_string(i) + " j=" + std::to_string(j)
                       + " n=" + std::to_string(n));
    }
    std::vector<Letter> out;
    for (int k = j - 1; k > i; --k) {
      out.push_back({k, -1});
    }
    out.push_back({i, 1});
    out.push_back({i, 1});
    for (int k = i + 1; k <= j - 1; ++k) {
      out.push_back({k, 1});
    }
    return BraidWord(n, std::move(out));
  }

  namespace detail {

    class WordParser {
     public:
      WordParser(std::string_view text, int n) : _text(text), _n(n) {}

      BraidWord parse() {
        if (_n < 2) {
          throw RangeError("parse: strand count must be >= 2, got "
                           + std::to_string(_n));
        }
        BraidWord out(_n);
        skip_ws();
        while (_pos < _text.size()) {
          parse_term(out);
          skip_ws();
        }
        return out;
      }

     private:
      void skip_ws() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      [[nodiscard]] bool at_digit() const {
        return _pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]));
      }

      std::int64_t parse_uint() {
        if (!at_digit()) {
          throw ParseError("expected a digit", _pos);
        }
        std::int64_t value = 0;
        while (at_digit()) {
          value = value * 10 + (_text[_pos] - '0');
          if (value > std::numeric_limits<int>::max()) {
            throw ParseError("integer too large", _pos);
          }
          ++_pos;
        }
        return value;
      }

      void expect(char c) {
        if (_pos >= _text.size() || _text[_pos] != c) {
          throw ParseError(std::string("expected '") + c + "'", _pos);
        }
        ++_pos;
      }

      void parse_term(BraidWord& out) {
        std::size_t const start = _pos;
        char const        c     = _text[_pos];
        if (c == 's' || c == 'S') {
          ++_pos;
          auto const index = parse_uint();
          int        sign  = c == 's' ? 1 : -1;
          int        exp   = 1;
          if (_pos < _text.size() && _text[_pos] == '^') {
            ++_pos;
            bool negative = false;
            if (_pos < _text.size() && _text[_pos] == '-') {
              negative = true;
              ++_pos;
            }
            std::size_t const exp_pos = _pos;
            auto const        e       = parse_uint();
            if (e == 0) {
              throw ParseError("exponent must be nonzero", exp_pos);
            }
            exp = static_cast<int>(negative ? -e : e);
          }
          check_index(index, _n - 1, start);
          if (exp < 0) {
            sign = -sign;
            exp  = -exp;
          }
          for (int r = 0; r < exp; ++r) {
            out.push_back({static_cast<int>(index), sign});
          }
        } else if (c == 'a') {
          ++_pos;
          auto const i = parse_uint();
          expect(',');
          auto const j = parse_uint();
          if (!(1 <= i && i < j && j <= _n)) {
            throw RangeError("pure generator '" + token(start)
                             + "' needs 1 <= i < j <= "
                             + std::to_string(_n));
          }
          out = out
                * a_word(_n, static_cast<int>(i), static_cast<int>(j));
        } else {
          throw ParseError(std::string("unexpected character '") + c + "'",
                           _pos);
        }
      }

      void check_index(std::int64_t index,
                       int          max_index,
                       std::size_t  start) const {
        if (index < 1 || index > max_index) {
          throw RangeError("generator '" + token(start)
                           + "' out of range for n=" + std::to_string(_n));
        }
      }

      [[nodiscard]] std::string token(std::size_t start) const {
        return std::string(_text.substr(start, _pos - start));
      }

      std::string_view _text;
      int              _n;
      std::size_t      _pos = 0;
    };

  }  // namespace detail

  // Parses the braid-word grammar
  //
  //   word := ws* (term ws*)*
  //   term := gen ('^' sint)? | pure
  //   gen  := ('s' | 'S') uint          -- 'S' is the inverse letter
  //   pure := 'a' uint ',' uint         -- expands to a_word(n, i, j)
  //   sint := '-'? uint                 -- nonzero
  //
  // Throws ParseError on malformed input and RangeError on indices outside
  // the strand count.
  inline BraidWord parse(std::string_view text, int n) {
    return detail::WordParser(text, n).parse();
  }

  // Lower-case s for positive letters, S for inverse letters, single spaces.
  inline std::string format(BraidWord const& w) {
    std::string out;
    for (auto const& l : w.letters()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += l.sign > 0 ? 's' : 'S';
      out += std::to_string(l.index);
    }
    return out;
  }

  // Cancels adjacent x x^-1 pairs until none remain. Word-level convenience
  // only, never a test of equality in the group.
  inline BraidWord free_reduce(BraidWord const& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (auto const& l : w.letters()) {
      if (!stack.empty() && stack.back() == l.inverse()) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
    return BraidWord(w.n(), std::move(stack));
  }

  // Adds k to every generator index and moves the word to m strands, i.e.
  // id_k (x) w (x) id_{m - k - w.n()} when read as a tensor product.
  inline BraidWord shift(BraidWord const& w, int k, int m) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto const& l : w.letters()) {
      int const index = l.index + k;
      if (index < 1 || index > m - 1) {
        throw RangeError("shift: index " + std::to_string(l.index) + "+"
                         + std::to_string(k) + " does not fit "
                         + std::to_string(m) + " strands");
      }
      out.push_back({index, l.sign});
    }
    return BraidWord(m, std::move(out));
  }

}  // namespace psgroup

#endif  // PSGROUP_BRAID_HPP
