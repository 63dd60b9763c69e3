#ifndef PSGROUP_CLI_HPP
#define PSGROUP_CLI_HPP

// Command-line front end. run() is separate from main() so the test suite
// can drive it with captured streams.
//
// Exit codes: 0 success ("equal" for eq, all checks passed for verify),
// 1 domain error or negative answer ("distinct", failed check), 2 usage
// error, including a malformed braid word.

#include <cstdint>
#include <exception>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "braid.hpp"
#include "cocycle.hpp"
#include "errors.hpp"
#include "lk.hpp"
#include "psn.hpp"
#include "serialize.hpp"
#include "verify.hpp"

namespace psgroup::cli {

  constexpr int max_strands         = 64;
  constexpr int max_cocycle_strands = 5;

  namespace detail {

    inline std::string exps_text(int n, std::vector<std::int64_t> const& v) {
      std::string out;
      auto const  pairs = all_pairs(n);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        out += (k == 0 ? "" : " ") + to_string(pairs[k]) + ":"
               + std::to_string(v[k]);
      }
      return out;
    }

    inline std::string image_text(Permutation const& p) {
      std::string out = "[";
      for (int x = 1; x <= p.n(); ++x) {
        out += (x == 1 ? "" : ",") + std::to_string(p(x));
      }
      return out + "]";
    }

    struct Options {
      int         n      = 0;
      std::string format;
      std::string word;
      std::string word2;
      std::string section = "default";
      bool        q1      = false;
      std::string suite   = "all";
      VerifyOptions verify;
      // --format default per subcommand
      std::vector<std::pair<CLI::App*, std::string>> format_defaults;
    };

    inline CLI::Option* add_n(CLI::App* sub, Options& o) {
      return sub->add_option("-n", o.n, "strand count")
          ->required()
          ->check(CLI::Range(2, max_strands));
    }

    // The default is applied after parsing: CLI11 writes default_val()
    // into the bound variable immediately, and all subcommands share one.
    inline CLI::Option* add_format(CLI::App* sub, Options& o,
                                   std::string const& fallback) {
      o.format_defaults.emplace_back(sub, fallback);
      return sub->add_option("--format", o.format,
                             "output format (default " + fallback + ")")
          ->check(CLI::IsMember({"text", "json"}));
    }

    inline int nf(Options const& o, std::ostream& out) {
      auto const b = eval(parse(o.word, o.n));
      if (o.format == "json") {
        out << to_json(b).dump() << '\n';
      } else {
        out << "perm: " << image_text(b.perm()) << ' ' << b.perm().to_string()
            << '\n'
            << "exp: " << exps_text(b.n(), b.exps()) << '\n';
      }
      return 0;
    }

    inline int eq(Options const& o, std::ostream& out) {
      bool const same = equal(eval(parse(o.word, o.n)), eval(parse(o.word2, o.n)));
      if (o.format == "json") {
        json j;
        j["equal"] = same;
        out << j.dump() << '\n';
      } else {
        out << (same ? "equal" : "distinct") << '\n';
      }
      return same ? 0 : 1;
    }

    inline int order_cmd(Options const& o, std::ostream& out) {
      auto const ord = order(eval(parse(o.word, o.n)));
      if (o.format == "json") {
        json j;
        if (ord) {
          j["order"] = *ord;
        } else {
          j["order"] = "infinite";
        }
        out << j.dump() << '\n';
      } else {
        out << (ord ? std::to_string(*ord) : std::string("infinite")) << '\n';
      }
      return 0;
    }

    inline int split_cmd(Options const& o, std::ostream& out) {
      auto const s = split(eval(parse(o.word, o.n)));
      if (o.format == "json") {
        out << to_json(s).dump() << '\n';
      } else {
        out << "perm: " << image_text(s.first) << ' ' << s.first.to_string()
            << '\n'
            << "m: " << s.second.to_string() << '\n';
      }
      return 0;
    }

    inline int cocycle_table(Options const& o, std::ostream& out) {
      if (o.n > max_cocycle_strands) {
        throw RangeError("cocycle-table: n must be <= "
                         + std::to_string(max_cocycle_strands));
      }
      if (o.section == "paper" && o.n != 3) {
        throw RangeError("cocycle-table: the reference section exists only "
                         "for n = 3");
      }
      auto const sec
          = o.section == "paper" ? Section::reference3() : Section::standard(o.n);
      auto const tbl = full_table(sec);
      if (o.format == "json") {
        out << to_json(tbl).dump() << '\n';
      } else {
        out << render_table_text(tbl);
      }
      return 0;
    }

    inline int lk(Options const& o, std::ostream& out) {
      auto m = lk_eval(parse(o.word, o.n));
      if (o.q1) {
        m = specialize_q1(m);
      }
      if (o.format == "json") {
        out << to_json(m).dump() << '\n';
      } else {
        for (std::size_t r = 0; r < m.dim(); ++r) {
          for (std::size_t c = 0; c < m.dim(); ++c) {
            out << (c == 0 ? "" : " | ") << m(r, c);
          }
          out << '\n';
        }
      }
      return 0;
    }

    inline int verify(Options const& o, std::ostream& out) {
      auto const results = verify_suite(o.suite, o.n, o.verify);
      std::size_t passed = 0;
      for (auto const& r : results) {
        passed += r.passed ? 1 : 0;
      }
      if (o.format == "json") {
        json arr = json::array();
        for (auto const& r : results) {
          json j;
          j["suite"]  = r.suite;
          j["name"]   = r.name;
          j["passed"] = r.passed;
          j["detail"] = r.detail;
          arr.push_back(std::move(j));
        }
        out << arr.dump() << '\n';
      } else {
        for (auto const& r : results) {
          out << (r.passed ? "PASS " : "FAIL ") << '[' << r.suite << "] "
              << r.name;
          if (!r.passed) {
            out << ": " << r.detail;
          }
          out << '\n';
        }
        out << passed << '/' << results.size() << " checks passed\n";
      }
      return passed == results.size() ? 0 : 1;
    }

  }  // namespace detail

  inline int run(int argc, char const* const* argv, std::ostream& out,
                 std::ostream& err) {
    CLI::App app{"Exact computations in the pseudosymmetric groups PS_n",
                 "psgroup"};
    app.require_subcommand(1);
    detail::Options o;

    auto* nf = app.add_subcommand("nf", "normal form of a braid word");
    detail::add_n(nf, o);
    nf->add_option("WORD", o.word, "braid word")->required();
    detail::add_format(nf, o, "json");

    auto* eq = app.add_subcommand("eq", "decide equality of two words");
    detail::add_n(eq, o);
    eq->add_option("WORD1", o.word, "first braid word")->required();
    eq->add_option("WORD2", o.word2, "second braid word")->required();
    detail::add_format(eq, o, "text");

    auto* ord = app.add_subcommand("order", "order of an element");
    detail::add_n(ord, o);
    ord->add_option("WORD", o.word, "braid word")->required();
    detail::add_format(ord, o, "text");

    auto* sp = app.add_subcommand(
        "split", "permutation and A-basis coordinates of the pure part");
    detail::add_n(sp, o);
    sp->add_option("WORD", o.word, "braid word")->required();
    detail::add_format(sp, o, "json");

    auto* ct = app.add_subcommand("cocycle-table",
                                  "2-cocycle of the extension for a section");
    detail::add_n(ct, o);
    ct->add_option("--section", o.section, "section")
        ->default_val("default")
        ->check(CLI::IsMember({"paper", "default"}));
    detail::add_format(ct, o, "text");

    auto* lk = app.add_subcommand("lk", "Lawrence-Krammer matrix of a word");
    detail::add_n(lk, o);
    lk->add_option("WORD", o.word, "braid word")->required();
    lk->add_flag("--q1", o.q1, "specialize at q = 1");
    detail::add_format(lk, o, "json");

    auto* vf = app.add_subcommand("verify", "run invariant sweeps");
    detail::add_n(vf, o);
    vf->add_option("--suite", o.suite, "suite to run")
        ->default_val("all")
        ->check(CLI::IsMember({"relations", "action", "cocycle", "category",
                               "oracle", "all"}));
    vf->add_option("--samples", o.verify.samples, "samples per random check")
        ->default_val(o.verify.samples);
    vf->add_option("--seed", o.verify.seed, "random seed")
        ->default_val(o.verify.seed);
    vf->add_option("--exhaustive-max", o.verify.exhaustive_max,
                   "largest n for exhaustive sweeps over S_n")
        ->default_val(o.verify.exhaustive_max)
        ->check(CLI::Range(2, 6));
    detail::add_format(vf, o, "text");

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }

    for (auto const& [sub, fallback] : o.format_defaults) {
      if (sub->parsed() && o.format.empty()) {
        o.format = fallback;
      }
    }

    try {
      if (nf->parsed()) {
        return detail::nf(o, out);
      }
      if (eq->parsed()) {
        return detail::eq(o, out);
      }
      if (ord->parsed()) {
        return detail::order_cmd(o, out);
      }
      if (sp->parsed()) {
        return detail::split_cmd(o, out);
      }
      if (ct->parsed()) {
        return detail::cocycle_table(o, out);
      }
      if (lk->parsed()) {
        return detail::lk(o, out);
      }
      if (vf->parsed()) {
        return detail::verify(o, out);
      }
    } catch (ParseError const& e) {
      err << "error: " << e.what() << " at offset " << e.position() << '\n';
      return 2;
    } catch (InternalError const& e) {
      err << "internal error: " << e.what() << '\n';
      return 1;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
    return 2;
  }

  // Convenience overload for tests.
  inline int run(std::vector<std::string> const& args, std::ostream& out,
                 std::ostream& err) {
    std::vector<char const*> argv{"psgroup"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
  }

}  // namespace psgroup::cli

#endif  // PSGROUP_CLI_HPP
