#ifndef PSGROUP_LAURENT_HPP
#define PSGROUP_LAURENT_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "errors.hpp"

namespace psgroup {

  ////////////////////////////////////////////////////////////////////////
  // LaurentPoly2
  ////////////////////////////////////////////////////////////////////////

  // An element of Z[q, q^-1, t, t^-1] stored sparsely as a map from the
  // exponent pair (q-exponent, t-exponent) to a nonzero GMP integer.
  //
  // Every constructor and arithmetic operation leaves the value in
  // canonical form, i.e. no stored coefficient is zero, so that equality of
  // values is equality of term maps.
  class LaurentPoly2 {
   public:
    using exponent_type    = std::int64_t;
    using exponents_type   = std::pair<exponent_type, exponent_type>;
    using coefficient_type = mpz_class;
    using term_map         = std::map<exponents_type, coefficient_type>;

    LaurentPoly2() = default;

    // The constant polynomial c.
    LaurentPoly2(long c) {  // NOLINT(runtime/explicit)
      if (c != 0) {
        _terms.emplace(exponents_type{0, 0}, coefficient_type(c));
      }
    }

    explicit LaurentPoly2(coefficient_type const& c) {
      if (c != 0) {
        _terms.emplace(exponents_type{0, 0}, c);
      }
    }

    // Builds from an arbitrary term map, dropping zero coefficients.
    explicit LaurentPoly2(term_map terms) : _terms(std::move(terms)) {
      normalize();
    }

    static LaurentPoly2 monomial(coefficient_type const& c,
                                 exponent_type       q_exp,
                                 exponent_type       t_exp) {
      LaurentPoly2 result;
      if (c != 0) {
        result._terms.emplace(exponents_type{q_exp, t_exp}, c);
      }
      return result;
    }

    static LaurentPoly2 q(exponent_type e = 1) {
      return monomial(1, e, 0);
    }

    static LaurentPoly2 t(exponent_type e = 1) {
      return monomial(1, 0, e);
    }

    [[nodiscard]] term_map const& terms() const noexcept {
      return _terms;
    }

    [[nodiscard]] bool is_zero() const noexcept {
      return _terms.empty();
    }

    [[nodiscard]] bool is_one() const {
      return _terms.size() == 1 && _terms.begin()->first == exponents_type{0, 0}
             && _terms.begin()->second == 1;
    }

    [[nodiscard]] bool is_monomial() const noexcept {
      return _terms.size() == 1;
    }

    // Units of the Laurent ring are exactly the monomials with coefficient
    // +1 or -1.
    [[nodiscard]] bool is_unit() const {
      return is_monomial() && abs(_terms.begin()->second) == 1;
    }

    [[nodiscard]] bool depends_on_q() const noexcept {
      for (auto const& [e, c] : _terms) {
        if (e.first != 0) {
          return true;
        }
      }
      return false;
    }

    // Requires is_unit().
    [[nodiscard]] LaurentPoly2 unit_inverse() const {
      if (!is_unit()) {
        throw std::domain_error("LaurentPoly2: " + to_string()
                                + " is not a unit");
      }
      auto const& [e, c] = *_terms.begin();
      return monomial(c, -e.first, -e.second);
    }

    // Substitutes q := 1. The result has only q-exponent 0 terms, i.e. it is
    // a Laurent polynomial in t alone.
    [[nodiscard]] LaurentPoly2 eval_q1() const {
      term_map collected;
      for (auto const& [e, c] : _terms) {
        collected[{0, e.second}] += c;
      }
      return LaurentPoly2(std::move(collected));
    }

    LaurentPoly2& operator+=(LaurentPoly2 const& other) {
      for (auto const& [e, c] : other._terms) {
        accumulate(e, c);
      }
      return *this;
    }

    LaurentPoly2& operator-=(LaurentPoly2 const& other) {
      for (auto const& [e, c] : other._terms) {
        accumulate(e, -c);
      }
      return *this;
    }

    LaurentPoly2& operator*=(LaurentPoly2 const& other) {
      *this = *this * other;
      return *this;
    }

    friend LaurentPoly2 operator+(LaurentPoly2 a, LaurentPoly2 const& b) {
      a += b;
      return a;
    }

    friend LaurentPoly2 operator-(LaurentPoly2 a, LaurentPoly2 const& b) {
      a -= b;
      return a;
    }

    friend LaurentPoly2 operator-(LaurentPoly2 a) {
      for (auto& [e, c] : a._terms) {
        c = -c;
      }
      return a;
    }

    friend LaurentPoly2 operator*(LaurentPoly2 const& a,
                                  LaurentPoly2 const& b) {
      LaurentPoly2 result;
      if (a.is_zero() || b.is_zero()) {
        return result;
      }
      for (auto const& [ea, ca] : a._terms) {
        for (auto const& [eb, cb] : b._terms) {
          result.accumulate({ea.first + eb.first, ea.second + eb.second},
                            ca * cb);
        }
      }
      return result;
    }

    friend bool operator==(LaurentPoly2 const& a, LaurentPoly2 const& b) {
      return a._terms == b._terms;
    }

    // Renders e.g. "3*q^-1*t^2 + 1", terms in increasing lexicographic order
    // of (q-exponent, t-exponent); "0" for the zero polynomial.
    [[nodiscard]] std::string to_string() const {
      if (_terms.empty()) {
        return "0";
      }
      std::string out;
      bool        first = true;
      for (auto const& [e, c] : _terms) {
        bool const negative = c < 0;
        if (first) {
          if (negative) {
            out += '-';
          }
        } else {
          out += negative ? " - " : " + ";
        }
        first = false;

        mpz_class const magnitude = abs(c);
        std::string     factors;
        append_factor(factors, 'q', e.first);
        append_factor(factors, 't', e.second);
        if (factors.empty()) {
          out += magnitude.get_str();
        } else if (magnitude == 1) {
          out += factors;
        } else {
          out += magnitude.get_str() + "*" + factors;
        }
      }
      return out;
    }

    friend std::ostream& operator<<(std::ostream& os, LaurentPoly2 const& p) {
      return os << p.to_string();
    }

   private:
    void accumulate(exponents_type const& e, coefficient_type const& c) {
      if (c == 0) {
        return;
      }
      auto [it, inserted] = _terms.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) {
          _terms.erase(it);
        }
      }
    }

    void normalize() {
      std::erase_if(_terms, [](auto const& kv) { return kv.second == 0; });
    }

    static void append_factor(std::string&  out,
                              char          variable,
                              exponent_type e) {
      if (e == 0) {
        return;
      }
      if (!out.empty()) {
        out += '*';
      }
      out += variable;
      if (e != 1) {
        out += '^' + std::to_string(e);
      }
    }

    term_map _terms;
  };

  // Free-function spellings of the ring operations.
  inline LaurentPoly2 add(LaurentPoly2 const& a, LaurentPoly2 const& b) {
    return a + b;
  }

  inline LaurentPoly2 mul(LaurentPoly2 const& a, LaurentPoly2 const& b) {
    return a * b;
  }

  inline LaurentPoly2 eval_q1(LaurentPoly2 const& a) {
    return a.eval_q1();
  }

}  // namespace psgroup

#endif  // PSGROUP_LAURENT_HPP
