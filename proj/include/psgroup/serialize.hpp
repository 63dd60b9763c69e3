#ifndef PSGROUP_SERIALIZE_HPP
#define PSGROUP_SERIALIZE_HPP

// JSON renderings. Keys are emitted in a fixed order so that output is
// byte-for-byte reproducible:
//
//   PSElement   {"n":3,"perm":[2,1,3],"exp":{"1,2":1,"1,3":0,"2,3":0}}
//   PureVector  {"n":3,"m":{"1,2":1,"1,3":0,"2,3":0}}
//   LKMatrix    [["q^2*t","-q*t + q^2*t","0"],...]

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cocycle.hpp"
#include "lk.hpp"
#include "permutation.hpp"
#include "psn.hpp"

namespace psgroup {

  using json = nlohmann::ordered_json;

  inline json perm_to_json(Permutation const& p) {
    return json(std::vector<int>(p.image().begin(), p.image().end()));
  }

  template <typename Vector>
  json pairs_to_json(int n, Vector const& values) {
    json       out   = json::object();
    auto const pairs = all_pairs(n);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      out[to_string(pairs[k])] = values[k];
    }
    return out;
  }

  inline json to_json(PSElement const& b) {
    json out;
    out["n"]    = b.n();
    out["perm"] = perm_to_json(b.perm());
    out["exp"]  = pairs_to_json(b.n(), b.exps());
    return out;
  }

  inline json to_json(PureVector const& m) {
    json out;
    out["n"] = m.n();
    out["m"] = pairs_to_json(m.n(), m.coordinates());
    return out;
  }

  // split() result: {"n":..,"perm":[..],"m":{..}}
  inline json to_json(std::pair<Permutation, PureVector> const& s) {
    json out;
    out["n"]    = s.second.n();
    out["perm"] = perm_to_json(s.first);
    out["m"]    = pairs_to_json(s.second.n(), s.second.coordinates());
    return out;
  }

  inline json to_json(LKMatrix const& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.dim(); ++c) {
        row.push_back(m(r, c).to_string());
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  // {"n":..,"permutations":[[..],..],"u":[[{"1,2":..},..],..]} with u[i][j]
  // = u(permutations[i], permutations[j]).
  inline json to_json(CocycleTable const& tbl) {
    json out;
    out["n"]     = tbl.n();
    json perms   = json::array();
    for (auto const& p : tbl.permutations()) {
      perms.push_back(perm_to_json(p));
    }
    out["permutations"] = std::move(perms);
    json rows           = json::array();
    std::size_t const N = tbl.permutations().size();
    for (std::size_t i = 0; i < N; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < N; ++j) {
        row.push_back(pairs_to_json(tbl.n(), tbl.at(i, j).coordinates()));
      }
      rows.push_back(std::move(row));
    }
    out["u"] = std::move(rows);
    return out;
  }

  namespace detail {

    inline std::vector<std::int64_t> pairs_from_json(int n, json const& obj) {
      if (!obj.is_object() || obj.size() != pair_count(n)) {
        throw std::invalid_argument("expected an object with "
                                    + std::to_string(pair_count(n))
                                    + " pair keys");
      }
      std::vector<std::int64_t> out;
      for (auto const& p : all_pairs(n)) {
        out.push_back(obj.at(to_string(p)).get<std::int64_t>());
      }
      return out;
    }

  }  // namespace detail

  // Inverse of to_json(PSElement); throws on schema violations.
  inline PSElement ps_element_from_json(json const& j) {
    int const n = j.at("n").get<int>();
    Permutation perm(j.at("perm").get<std::vector<int>>());
    if (perm.n() != n) {
      throw std::invalid_argument("perm length does not match n");
    }
    return PSElement(std::move(perm), detail::pairs_from_json(n, j.at("exp")));
  }

  inline PureVector pure_vector_from_json(json const& j) {
    int const n = j.at("n").get<int>();
    return PureVector(n, detail::pairs_from_json(n, j.at("m")));
  }

}  // namespace psgroup

#endif  // PSGROUP_SERIALIZE_HPP
