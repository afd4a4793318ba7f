#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "geolang/classify.hpp"
#include "geolang/coset.hpp"
#include "geolang/errors.hpp"
#include "geolang/fingerprint.hpp"
#include "geolang/geodesics.hpp"
#include "geolang/groupfile.hpp"
#include "geolang/parallel.hpp"
#include "geolang/report.hpp"

namespace geolang::cli {

  namespace {

    struct Options {
      std::string group;
      std::string genset;
      std::string presentation;
      std::string word;
      std::string target;
      std::optional<std::size_t> radius;
      std::optional<std::size_t> maxlen;
      std::optional<std::size_t> cap;
      bool exact = false;
    };

    std::string join(std::vector<std::size_t> const& xs) {
      std::string out;
      for (auto x : xs) {
        out += (out.empty() ? "" : " ") + std::to_string(x);
      }
      return out;
    }

    struct Loaded {
      LoadedGroup group;
      GenSet gs;
    };

    Loaded load(Options const& o) {
      auto g = load_group(o.group);
      auto gs = load_genset(g, o.genset.empty() ? o.group : o.genset);
      return {g, std::move(gs)};
    }

    // Exactly one of --exact / --maxlen.
    std::optional<std::size_t> mode(Options const& o) {
      if (o.exact == o.maxlen.has_value()) {
        throw InputError("give exactly one of --exact and --maxlen");
      }
      return o.maxlen;
    }

    int cmd_ball(Options const& o, std::ostream& out) {
      auto [g, gs] = load(o);
      if (!o.radius && !gs.engine().finite()) {
        throw InputError("--radius is required for infinite groups");
      }
      auto m = ball(gs, o.radius);
      out << "spheres: " << join(m.sphere_sizes()) << "\n";
      out << format_ball(m);
      return 0;
    }

    int cmd_geo_enumerate(Options const& o, std::ostream& out) {
      auto [g, gs] = load(o);
      auto geo = geodesic_language(gs, mode(o));
      out << "strata: " << join(geo.language.stratum_sizes()) << "\n";
      out << "complete: " << (geo.language.complete() ? "yes" : "no") << "\n";
      if (geo.diameter) {
        out << "diameter: " << *geo.diameter << "\n";
      }
      out << format_language(geo.language);
      return 0;
    }

    int cmd_geo_check(Options const& o, std::ostream& out) {
      auto [g, gs] = load(o);
      Word w = gs.parse(o.word);
      auto m = ball(gs, w.size());
      auto d = m.distance(gs.evaluate(w));
      out << "word: " << gs.format(w) << "\n";
      out << "geodesic: " << (d == w.size() ? "true" : "false") << "\n";
      out << "distance: " << *d << "\n";
      return 0;
    }

    int cmd_pe_check(Options const& o, std::ostream& out, std::ostream& err) {
      auto [g, gs] = load(o);
      auto maxlen = mode(o);
      auto geo = geodesic_language(gs, maxlen);
      auto v = maxlen ? pe_check_bounded(geo) : pe_check(geo);
      out << format_verdict(v);
      if (v.kind == PEVerdict::Kind::inconclusive) {
        err << "warning: no violation up to length " << v.bound
            << "; the language may still fail to be piecewise excluding\n";
      }
      return 0;
    }

    int cmd_pe_forbidden(Options const& o, std::ostream& out) {
      auto [g, gs] = load(o);
      if (!o.exact) {
        throw InputError("pe forbidden needs --exact");
      }
      auto v = pe_check(geodesic_language(gs, std::nullopt));
      if (v.kind != PEVerdict::Kind::pe) {
        out << format_verdict(v);
        throw Refuted("geodesic language is not piecewise excluding");
      }
      for (auto const& w : v.forbidden) {
        out << format_word(w, v.alphabet) << "\n";
      }
      return 0;
    }

    int cmd_coset(Options const& o, std::ostream& out) {
      auto pf = load_presentation(o.presentation);
      std::size_t cap = o.cap.value_or(pf.cap);
      auto result = coset_enumerate(pf.presentation, cap);
      if (auto const* c = std::get_if<CapExceeded>(&result)) {
        out << "cap exceeded: " << c->cap << " cosets defined, " << c->live
            << " live\n";
        throw ResourceCap("coset enumeration did not close within "
                          + std::to_string(cap) + " cosets");
      }
      auto const& t = std::get<FiniteGroupTable>(result);
      out << "order: " << t.order() << "\n";
      out << "fingerprint: " << to_string(fingerprint(t)) << "\n";
      return 0;
    }

    int cmd_fingerprint(Options const& o, std::ostream& out) {
      auto g = load_group(o.group);
      if (!g.table) {
        if (!g.engine->finite()) {
          throw InputError("fingerprint needs a finite group");
        }
        g.table = std::make_shared<FiniteGroupTable const>(
            table_from_engine(*g.engine));
      }
      out << to_string(fingerprint(*g.table)) << "\n";
      return 0;
    }

    int cmd_repro(Options const& o, std::ostream& out) {
      if (o.target == "all") {
        auto full = repro_all();
        out << full.report.render();
        return full.criteria_ok ? 0 : 1;
      }
      auto r = repro(o.target, o.maxlen.value_or(6));
      out << r.render();
      return r.ok() ? 0 : 1;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"Geodesic languages of finitely generated groups", "geolang"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned threads = 1;
    std::string out_path;
    app.add_option("--threads", threads, "worker threads")
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--out", out_path, "write output to this file");
    app.set_version_flag("--version", version_header());

    Options o;
    auto group_opts = [&](CLI::App* c, bool genset) {
      c->add_option("--group", o.group, "group file")->required();
      if (genset) {
        c->add_option("--genset", o.genset,
                      "genset file (default: the group file)");
      }
    };
    auto* ball_cmd = app.add_subcommand("ball", "word-metric ball");
    group_opts(ball_cmd, true);
    ball_cmd->add_option("--radius", o.radius);

    auto* geo = app.add_subcommand("geo", "geodesic words");
    geo->require_subcommand(1);
    auto* geo_enum = geo->add_subcommand("enumerate", "list geodesics");
    group_opts(geo_enum, true);
    geo_enum->add_option("--maxlen", o.maxlen);
    geo_enum->add_flag("--exact", o.exact);
    auto* geo_check = geo->add_subcommand("check", "is a word geodesic");
    group_opts(geo_check, true);
    geo_check->add_option("--word", o.word)->required();

    auto* pe = app.add_subcommand("pe", "piecewise-excluding decision");
    pe->require_subcommand(1);
    auto* pe_check_cmd = pe->add_subcommand("check", "decide or refute PE");
    group_opts(pe_check_cmd, true);
    pe_check_cmd->add_option("--maxlen", o.maxlen);
    pe_check_cmd->add_flag("--exact", o.exact);
    auto* pe_forb = pe->add_subcommand("forbidden", "minimal forbidden set");
    group_opts(pe_forb, true);
    pe_forb->add_flag("--exact", o.exact);

    auto* coset = app.add_subcommand("coset", "Todd-Coxeter enumeration");
    coset->add_option("--presentation", o.presentation)->required();
    coset->add_option("--cap", o.cap);

    auto* fp = app.add_subcommand("fingerprint", "finite group invariants");
    group_opts(fp, false);

    auto* rep = app.add_subcommand("repro", "reproduce a result");
    rep->add_option("target", o.target)
        ->required()
        ->check(CLI::IsMember({"q8", "d8", "table1", "qxq", "extension", "znc2",
                               "quotients", "lift", "cannon", "properties",
                               "all"}));
    rep->add_option("--maxlen", o.maxlen, "cannon: enumeration length");

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }
    set_thread_count(threads);

    std::ostringstream buf;
    int code = 0;
    try {
      if (*ball_cmd) {
        code = cmd_ball(o, buf);
      } else if (*geo_enum) {
        code = cmd_geo_enumerate(o, buf);
      } else if (*geo_check) {
        code = cmd_geo_check(o, buf);
      } else if (*pe_check_cmd) {
        code = cmd_pe_check(o, buf, err);
      } else if (*pe_forb) {
        code = cmd_pe_forbidden(o, buf);
      } else if (*coset) {
        code = cmd_coset(o, buf);
      } else if (*fp) {
        code = cmd_fingerprint(o, buf);
      } else if (*rep) {
        code = cmd_repro(o, buf);
      }
    } catch (Refuted const& e) {
      err << "refuted: " << e.what() << "\n";
      code = 1;
    } catch (ResourceCap const& e) {
      err << "resource cap: " << e.what() << "\n";
      code = 3;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      code = 2;
    }
    if (out_path.empty()) {
      out << buf.str();
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!(f << buf.str())) {
        err << "error: cannot write " << out_path << "\n";
        return 2;
      }
    }
    return code;
  }

}  // namespace geolang::cli
