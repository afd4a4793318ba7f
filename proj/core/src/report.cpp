#include "geolang/report.hpp"

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "geolang/catalog.hpp"
#include "geolang/classify.hpp"
#include "geolang/errors.hpp"
#include "geolang/oracle.hpp"
#include "geolang/parallel.hpp"
#include "geolang/witnesses.hpp"

namespace geolang {

  std::string version_header() {
    return "geolang 0.1.0";
  }

  void Report::add(Status s, std::string const& text) {
    char const* tag = s == Status::pass      ? "PASS    "
                      : s == Status::partial ? "PARTIAL "
                                             : "FAIL    ";
    body_ += tag + text + "\n";
    (s == Status::pass ? pass_ : s == Status::partial ? partial_ : fail_)++;
  }

  void Report::note(std::string const& text) {
    body_ += "        " + text + "\n";
  }

  void Report::section(std::string const& title) {
    if (!body_.empty()) {
      body_ += "\n";
    }
    body_ += "## " + title + "\n";
  }

  void Report::append(Report const& other) {
    if (!body_.empty() && !other.body_.empty()) {
      body_ += "\n";
    }
    body_ += other.body_;
    pass_ += other.pass_;
    partial_ += other.partial_;
    fail_ += other.fail_;
  }

  std::string Report::summary() const {
    return "total=" + std::to_string(total()) + " pass="
           + std::to_string(pass_) + " partial=" + std::to_string(partial_)
           + " fail=" + std::to_string(fail_);
  }

  std::string Report::render() const {
    return version_header() + "\n\n" + body_ + "\n" + summary() + "\n";
  }

  namespace {

    Status ok(bool b) {
      return b ? Status::pass : Status::fail;
    }

    std::string join(std::vector<std::size_t> const& xs) {
      std::string out;
      for (auto x : xs) {
        out += (out.empty() ? "" : " ") + std::to_string(x);
      }
      return out;
    }

    std::string yes(bool b) {
      return b ? "yes" : "no";
    }

    GenSet genset_of(EnginePtr e,
                     std::vector<std::pair<std::string, std::string>> pairs) {
      return validate_genset(e, gen_specs(*e, pairs));
    }

    std::string words_text(WordSet const& ws, Alphabet const& a) {
      std::string out;
      for (auto const& w : ws) {
        out += (out.empty() ? "" : ", ") + format_word(w, a);
      }
      return "{" + out + "}";
    }

    // The element named by its table name or the engine's normal form.
    std::string element_text(GroupEngine const& e, Key const& k) {
      if (auto const* t = dynamic_cast<TableEngine const*>(&e)) {
        return t->table().name_text(t->element_of(k));
      }
      try {
        return format_word(e.normal_form(k), e.builtin_letters());
      } catch (Unsupported const&) {
        return k;
      }
    }

    std::vector<Element> identity_perm(std::size_t n) {
      std::vector<Element> p(n);
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = static_cast<Element>(i);
      }
      return p;
    }

    std::shared_ptr<ExtensionEngine const> extension(
        TablePtr h, std::size_t rank) {
      std::vector<std::vector<Element>> actions(rank,
                                                identity_perm(h->order()));
      return std::make_shared<ExtensionEngine const>(h, rank, actions);
    }

    std::shared_ptr<ZnC2Engine const> znc2(std::size_t n, Phi phi) {
      return std::make_shared<ZnC2Engine const>(n, phi);
    }

    GenSet qxq_genset() {
      auto t = std::make_shared<FiniteGroupTable const>(
          direct_product(*q8_table(), *q8_table()));
      return genset_of(table_engine(t, "Q8 x Q8"), {{"i1", "i_1"},
                                                     {"j1k2", "j_1 i_2 j_2"},
                                                     {"i2", "i_2"},
                                                     {"k2", "i_2 j_2"}});
    }

    // Independent confirmation that `w` has length-3 distance: every word of
    // length <= 3 is evaluated from scratch.
    bool naive_distance_3(GenSet const& gs, Word const& w) {
      auto d = naive_distances(gs, 3);
      auto it = d.find(gs.evaluate(w));
      return w.size() == 3 && it != d.end() && it->second == 3;
    }

    void family_line(Report& r, FamilyWitness const& f) {
      auto const& gs = *f.genset;
      std::string names;
      for (auto const& l : gs.alphabet().letters()) {
        if (l.name.ends_with("^-1")) {
          continue;
        }
        names += (names.empty() ? "" : ", ") + l.name;
      }
      bool good = f.certificate.kind == PEVerdict::Kind::not_pe
                  && recheck(gs, f.certificate)
                  && naive_distance_3(gs, f.witness);
      std::string d = f.distance ? std::to_string(*f.distance) : "> 3";
      r.add(ok(good), f.name + " over {" + names + "}: " + gs.format(f.witness)
                          + " = "
                          + element_text(gs.engine(), gs.evaluate(f.witness))
                          + " at distance " + d);
      if (!f.note.empty()) {
        r.note("parameters outside the derivation: " + f.note);
      }
    }

    // Closure of a subset of a table under multiplication.
    std::size_t closure_size(FiniteGroupTable const& t,
                             std::vector<Element> const& gens) {
      std::set<Element> s{t.identity()};
      std::vector<Element> todo{t.identity()};
      while (!todo.empty()) {
        Element x = todo.back();
        todo.pop_back();
        for (auto g : gens) {
          Element y = t.mul(x, g);
          if (s.insert(y).second) {
            todo.push_back(y);
          }
        }
      }
      return s.size();
    }

    struct Sample {
      std::string name;
      GenSet gs;
    };

    std::vector<Sample> sample_gensets() {
      std::vector<Sample> out;
      auto add = [&](std::string name, EnginePtr e,
                     std::vector<std::pair<std::string, std::string>> p) {
        out.push_back({std::move(name), genset_of(e, std::move(p))});
      };
      auto q8 = table_engine(q8_table(), "Q8");
      add("Q8 {i, j}", q8, {{"i", "i"}, {"j", "j"}});
      add("Q8 {m, i, j, k}", q8,
          {{"m", "i i"}, {"i", "i"}, {"j", "j"}, {"k", "i j"}});
      auto d8 = table_engine(d8_table(), "D8");
      add("D8 {a, b, t}", d8, {{"a", "a"}, {"b", "b"}, {"t", "t"}});
      add("D8 {a, b}", d8, {{"a", "a"}, {"b", "b"}});
      add("S3 {a, b}", table_engine(s3_table(), "S3"), {{"a", "a"}, {"b", "b"}});
      add("A4 {a, b}", table_engine(a4_table(), "A4"), {{"a", "a"}, {"b", "b"}});
      add("SL2(3) {a, b}", table_engine(sl2_3_presented(), "SL2(3)"),
          {{"a", "a"}, {"b", "b"}});
      add("Z/9 x| Z/3 {x, y}", table_engine(z9_z3_table(), "Z/9 x| Z/3"),
          {{"x", "x"}, {"y", "y"}});
      add("Z/5 x| Z/4 {ax, xa}", semidirect(5, 3, 4, "a", "x"),
          {{"ax", "a x"}, {"xa", "x a"}});
      add("Z/7 x| Z/3 {at, t}", semidirect(7, 2, 3), {{"at", "a t"}, {"t", "t"}});
      out.push_back({"Q8 x Q8 {i1, j1k2, i2, k2}", qxq_genset()});
      auto bs = std::make_shared<BS12Engine const>();
      add("BS(1,2) {a, t}", bs, {{"a", "a"}, {"t", "t"}});
      add("BS(1,2) {at, ta}", bs, {{"at", "a t"}, {"ta", "t a"}});
      add("Z/5 x| Z {x, y}", semidirect(5, 3, std::nullopt, "a", "x"),
          {{"x", "x"}, {"y", "x x x a"}});
      add("Z/3 x| Z {a, t}", semidirect(3, 2, std::nullopt),
          {{"a", "a"}, {"t", "t"}});
      add("Z x| Z/2 {x, y}", znc2(1, Phi::invert(1)), {{"x", "x1"}, {"y", "y"}});
      auto swap = znc2(2, Phi::swap(1, 2));
      add("Z^2 x| Z/2 {a, b, t}", swap, {{"a", "x1"}, {"b", "x2"}, {"t", "y"}});
      add("Z^2 x| Z/2 {a, c, d, t}", swap,
          {{"a", "x1"}, {"c", "x1 x1"}, {"d", "x1 x2"}, {"t", "y"}});
      add("Z/2 x Z {g, t}", extension(cyclic_table(2), 1),
          {{"g", "g"}, {"t", "t"}});
      add("Z^2 {t1, t2}", extension(trivial_table(), 2),
          {{"t1", "t1"}, {"t2", "t2"}});
      return out;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////

  Report repro_q8() {
    Report r;
    r.section("Q8: inverse-closed subsets of Q8 \\ {1}");
    auto survey = q8_survey();
    auto t = q8_table();
    // Atoms {-1}, {i,-i}, {j,-j}, {k,-k} as element indices.
    std::vector<std::vector<Element>> atoms{{1}, {2, 3}, {4, 5}, {6, 7}};
    std::size_t oracle = 0;
    for (unsigned mask = 1; mask < 16; ++mask) {
      std::vector<Element> gens;
      for (unsigned b = 0; b < 4; ++b) {
        if (mask & (1u << b)) {
          gens.insert(gens.end(), atoms[b].begin(), atoms[b].end());
        }
      }
      oracle += closure_size(*t, gens) == t->order();
    }
    for (auto const& e : survey.subsets) {
      if (!e.generating) {
        r.note(e.atoms + ": not generating");
        continue;
      }
      auto const& v = *e.verdict;
      bool good = v.kind == PEVerdict::Kind::pe && e.has_inverse_pairs;
      r.add(ok(good), e.atoms + ": " + kind_name(v.kind) + ", strata "
                          + join(e.strata) + ", |F| = "
                          + std::to_string(v.forbidden.size())
                          + ", a a^-1 in F for every letter: "
                          + yes(e.has_inverse_pairs));
    }
    r.add(ok(survey.subsets.size() == 16 && survey.generating() == 8
             && oracle == 8 && survey.pe() == 8),
          std::to_string(survey.generating()) + " generating sets, "
              + std::to_string(survey.pe()) + " PE (closure oracle: "
              + std::to_string(oracle) + " generating)");
    return r;
  }

  Report repro_d8() {
    Report r;
    r.section("D8");
    auto d8 = table_engine(d8_table(), "D8");
    auto gs = genset_of(d8, {{"a", "a"}, {"b", "b"}, {"t", "t"}});
    auto const& A = gs.alphabet();
    auto geo = geodesic_language(gs, std::nullopt);
    std::size_t dup_free = 0;
    bool match = geo.language.maxlen() <= 2;
    for (auto const& w : geo.language.words()) {
      bool distinct = w.size() < 2 || w[0] != w[1];
      match = match && distinct;
      dup_free += distinct;
    }
    match = match && dup_free == 10;
    r.add(ok(match), "{a, b, t}: Geo has " + std::to_string(geo.language.size())
                         + " words, strata " + join(geo.language.stratum_sizes())
                         + ", all duplicate-free of length <= 2");
    auto v = pe_check(geo);
    WordSet expected, stated;
    for (LetterId x = 0; x < A.size(); ++x) {
      expected.insert(Word{x, x});
      stated.insert(Word{x, x});
      for (LetterId y = 0; y < A.size(); ++y) {
        for (LetterId z = 0; z < A.size(); ++z) {
          stated.insert(Word{x, y, z});
          if (x != y && y != z && x != z) {
            expected.insert(Word{x, y, z});
          }
        }
      }
    }
    r.add(ok(v.kind == PEVerdict::Kind::pe && v.forbidden == expected
             && recheck(geo, v)),
          std::string("{a, b, t}: ") + kind_name(v.kind) + ", minimal F = "
              + words_text(v.forbidden, A));
    auto lhs = avoid_language(v.forbidden, A, 4);
    auto rhs = avoid_language(stated, A, 4);
    r.add(ok(lhs.same_members_up_to(rhs, 4)),
          "minimal F and {xx} + {all length-3 words} avoid the same words up "
          "to length 4");
    auto gs2 = genset_of(d8, {{"a", "a"}, {"b", "b"}});
    auto v2 = pe_check(geodesic_language(gs2, std::nullopt));
    r.add(ok(v2.kind == PEVerdict::Kind::not_pe
             && gs2.format(v2.witness) == "a b a" && recheck(gs2, v2)),
          std::string("{a, b}: ") + kind_name(v2.kind) + ", witness "
              + gs2.format(v2.witness) + ", violation "
              + gs2.format(v2.violation));
    return r;
  }

  Report repro_table1() {
    Report r;
    r.section("Table 1: <a, b | a b a^-1 = v, b a b^-1 = u>");
    r.note("the 7 x 7 frontier of choices for u and v is taken as given");
    r.note("infinite claims: coset cap 20000 exceeded, a surjection onto the");
    r.note("claimed group, and equal ball sizes up to radius 5 (PARTIAL)");
    auto cells = table1_report();
    std::set<std::size_t> orders;
    for (auto const& c : cells) {
      std::string head = "u = " + table1_rows()[c.row] + ", v = "
                         + table1_cols()[c.col] + ": " + c.claim;
      if (c.order) {
        orders.insert(*c.order);
        head += ", order " + std::to_string(*c.order);
        if (c.fingerprint) {
          head += ", " + to_string(*c.fingerprint);
        }
      } else {
        head += ", cap exceeded";
        if (!c.images.empty()) {
          head += ", " + c.images + ", balls " + join(c.coset_balls);
        }
      }
      if (!c.detail.empty()) {
        head += " (" + c.detail + ")";
      }
      r.add(c.status, head);
    }
    std::set<std::size_t> want{1, 2, 3, 5, 6, 8, 12, 24, 27};
    std::string seen;
    for (auto o : orders) {
      seen += (seen.empty() ? "" : " ") + std::to_string(o);
    }
    r.add(ok(orders == want), "finite orders: " + seen);
    r.add(ok(transposition_symmetric(cells)),
          "mirror cells agree under a <-> b");
    return r;
  }

  Report repro_qxq() {
    Report r;
    r.section("Q8 x Q8");
    auto gs = qxq_genset();
    family_line(r, conjugation_witness("Q8 x Q8", gs, "i1 j1k2 i1^-1"));
    auto v = not_pe_from_conjugation(gs, *gs.alphabet().find("i1"),
                                     *gs.alphabet().find("j1k2"));
    r.add(ok(v.kind == PEVerdict::Kind::not_pe && recheck(gs, v)),
          "not PE: witness " + gs.format(v.witness) + ", violation "
              + gs.format(v.violation));
    return r;
  }

  Report repro_quotients() {
    Report r;
    r.section("witness geodesics in quotient families");
    auto bs = std::make_shared<BS12Engine const>();
    family_line(r, conjugation_witness("BS(1,2)",
                                       genset_of(bs, {{"a", "a"}, {"t", "t"}}),
                                       "t^-1 a t"));
    family_line(r, quotient_family_witness(Family::z5_z));
    family_line(r, quotient_family_witness(Family::z9_z3));
    for (std::uint64_t m : {1, 2, 3}) {
      family_line(r, quotient_family_witness(Family::z5_case_e, 0, m));
    }
    for (std::uint64_t n : {3, 5, 7, 9}) {
      family_line(r, quotient_family_witness(Family::bsquot_z, n));
    }
    family_line(r, quotient_family_witness(Family::bsquot_finite, 15, 4));
    family_line(r, quotient_family_witness(Family::bsquot_finite, 31, 5));
    family_line(r, quotient_family_witness(Family::z7_z3));
    family_line(r, quotient_family_witness(Family::s3_inv));
    family_line(r, conjugation_witness(
                       "A4", genset_of(table_engine(a4_table(), "A4"),
                                       {{"a", "a"}, {"b", "b"}}),
                       "b a b^-1"));
    family_line(r, conjugation_witness(
                       "SL2(Z/3)",
                       genset_of(table_engine(sl2_3_presented(), "SL2(Z/3)"),
                                 {{"a", "a"}, {"b", "b"}}),
                       "b a b^-1"));
    return r;
  }

  Report repro_extension() {
    Report r;
    r.section("finite-by-free-abelian: H x| Z^r over Hbar and the t letters");
    struct Config {
      std::string name;
      TablePtr h;
      std::size_t rank;
      std::vector<std::vector<Element>> actions;
    };
    auto q8 = q8_table();
    auto conj = [&](Element g) {
      std::vector<Element> p(q8->order());
      for (Element x = 0; x < q8->order(); ++x) {
        p[x] = q8->mul(q8->mul(g, x), q8->inv(g));
      }
      return p;
    };
    auto z2 = cyclic_table(2), s3 = s3_table(), z3 = cyclic_table(3);
    std::vector<Config> configs{
        {"Z/2 x Z", z2, 1, {identity_perm(2)}},
        {"S3 x Z", s3, 1, {identity_perm(6)}},
        {"Z/3 x| Z (inversion)", z3, 1, {{0, 2, 1}}},
        {"Q8 x| Z^2 (conjugation by i, j)",
         q8,
         2,
         {conj(q8->letter_elements()[0]), conj(q8->letter_elements()[2])}}};
    std::vector<ExtensionCheck> checks(configs.size());
    std::vector<char> oracle(configs.size());
    parallel_tasks(configs.size(), [&](std::size_t i) {
      auto const& c = configs[i];
      checks[i] = extension_genset(c.h, c.rank, c.actions, 6);
      auto const& gs = *checks[i].genset;
      auto naive = naive_geodesics(gs, 6);
      auto avoid = avoid_language(checks[i].claimed, gs.alphabet(), 6);
      oracle[i] = naive.same_members_up_to(avoid, 6);
    });
    for (std::size_t i = 0; i < configs.size(); ++i) {
      auto const& c = checks[i];
      auto const& A = c.genset->alphabet();
      std::string f = c.claimed.size() <= 8 ? words_text(c.claimed, A)
                                            : std::to_string(c.claimed.size())
                                                  + " words";
      r.add(ok(c.agrees && oracle[i]),
            configs[i].name + ": F = " + f + ", strata " + join(c.strata)
                + ", Geo = avoid(F) to length 6: " + yes(c.agrees)
                + ", naive oracle: " + yes(oracle[i]));
    }
    r.note("Z/3 x| Z also has a generating set with a non-PE geodesic "
           "language:");
    family_line(r, quotient_family_witness(Family::bsquot_z, 3));
    return r;
  }

  Report repro_znc2(std::size_t random_per_config) {
    Report r;
    r.section("Z^n x| Z/2: witness selection");
    struct Worked {
      std::shared_ptr<ZnC2Engine const> engine;
      std::vector<std::pair<std::string, std::string>> specs;
      std::string subcase;
      std::string witness;
    };
    std::vector<Worked> worked{
        {znc2(1, Phi::invert(1)), {{"x", "x1"}, {"y", "y"}}, "1A", "x y x^-1"},
        {znc2(2, Phi::swap(1, 2)),
         {{"x1", "x1"}, {"x2", "x2"}, {"y", "y"}},
         "2A",
         "x1 y x1^-1"},
        {znc2(1, Phi::invert(1)), {{"xy", "x1 y"}, {"y", "y"}}, "1B",
         "xy y xy"}};
    for (auto const& w : worked) {
      auto gs = genset_of(w.engine, w.specs);
      std::string names;
      for (auto const& s : w.specs) {
        names += (names.empty() ? "" : ", ") + s.first;
      }
      std::string head = w.engine->describe() + " over {" + names + "}: ";
      try {
        auto z = znc2_witness(gs);
        auto const& c = z.certificate;
        bool good = z.subcase == w.subcase
                    && gs.format(c.witness) == gs.format(gs.parse(w.witness))
                    && naive_distance_3(gs, c.witness);
        r.add(ok(good), head + "subcase " + z.subcase + ", witness "
                            + gs.format(c.witness) + " = "
                            + element_text(*w.engine, gs.evaluate(c.witness)));
      } catch (SelectionFailed const& e) {
        r.add(Status::fail, head + e.what());
      }
    }
    std::vector<std::pair<std::size_t, Phi>> configs{
        {1, Phi::invert(1)}, {2, Phi::invert(1)}, {2, Phi::swap(1, 2)},
        {3, Phi::invert(1)}, {3, Phi::swap(1, 2)}};
    for (std::size_t ci = 0; ci < configs.size(); ++ci) {
      auto engine = znc2(configs[ci].first, configs[ci].second);
      struct Slot {
        std::string subcase;
        bool confirmed = false;
        std::string error;
      };
      std::vector<Slot> slots(random_per_config);
      parallel_tasks(random_per_config, [&](std::size_t i) {
        std::mt19937_64 rng(1000 * (ci + 1) + i);
        auto gs = random_znc2_genset(engine, rng);
        try {
          auto z = znc2_witness(gs);
          slots[i].subcase = z.subcase;
          slots[i].confirmed = naive_distance_3(gs, z.certificate.witness);
          if (!slots[i].confirmed) {
            slots[i].error = "oracle rejects " + gs.format(z.certificate.witness);
          }
        } catch (SelectionFailed const& e) {
          slots[i].error = e.what();
        }
      });
      std::map<std::string, std::size_t> subcases;
      std::size_t confirmed = 0;
      std::string first_error;
      for (auto const& s : slots) {
        if (!s.subcase.empty()) {
          ++subcases[s.subcase];
        }
        confirmed += s.confirmed;
        if (first_error.empty() && !s.error.empty()) {
          first_error = s.error;
        }
      }
      std::string counts;
      for (auto const& [k, v] : subcases) {
        counts += " " + k + "=" + std::to_string(v);
      }
      r.add(ok(confirmed == random_per_config && random_per_config > 0),
            engine->describe() + ": " + std::to_string(random_per_config)
                + " random gensets, subcases" + counts + ", oracle confirmed "
                + std::to_string(confirmed)
                + (first_error.empty() ? "" : " (" + first_error + ")"));
    }
    return r;
  }

  Report repro_lift() {
    Report r;
    r.section("lifting witnesses through quotients");
    auto line = [&](std::string const& name, QuotientSpec const& q,
                    std::string const& witness) {
      try {
        auto l = lift_witness(q, witness);
        bool good = recheck(q.source, l.certificate);
        r.add(ok(good), name + ": " + l.target_genset->format(l.target_witness)
                            + " lifts to " + q.source.format(l.lifted));
      } catch (Error const& e) {
        r.add(Status::fail, name + ": " + e.what());
      }
    };
    auto images = [](GenSet const& src, GroupEngine const& target,
                     std::map<std::string, std::string> const& by_name) {
      std::vector<Word> out;
      for (auto const& l : src.alphabet().letters()) {
        out.push_back(parse_word(by_name.at(l.name), target.builtin_letters()));
      }
      return out;
    };

    {
      auto src = genset_of(extension(s3_table(), 1),
                           {{"a", "a"}, {"b", "b"}, {"t", "t"}});
      auto target = table_engine(s3_table(), "S3");
      auto im = images(src, *target,
                       {{"a", "a"}, {"b", "b"}, {"t", ""}, {"t^-1", ""}});
      line("S3 x Z -> S3", QuotientSpec{src, target, im}, "a b a^-1");
    }
    {
      auto bs = std::make_shared<BS12Engine const>();
      auto target = semidirect(3, 2, std::nullopt);
      auto std_target = builtin_genset(target);
      auto w = std_target.parse("t^-1 a t");
      r.add(ok(!is_geodesic(std_target, w)),
            "Z/3 x| Z over {a, t}: t^-1 a t = "
                + element_text(*target, std_target.evaluate(w))
                + " is not geodesic, so BS(1,2) -> Z/3 x| Z is lifted over "
                  "{at, ta}");
      auto src = genset_of(bs, {{"at", "a t"}, {"ta", "t a"}});
      auto im = images(src, *target,
                       {{"at", "a t"},
                        {"at^-1", "t^-1 a^-1"},
                        {"ta", "t a"},
                        {"ta^-1", "a^-1 t^-1"}});
      line("BS(1,2) -> Z/3 x| Z", QuotientSpec{src, target, im},
           "at ta at^-1");
    }
    {
      auto base = znc2(2, Phi::swap(1, 2));
      auto prod = std::make_shared<ProductEngine const>(
          base, table_engine(cyclic_table(2), "Z/2"));
      auto src = genset_of(prod, {{"u", "x1_1 g_2"},
                                  {"v", "x2_1"},
                                  {"w", "y_1 g_2"},
                                  {"z", "g_2"}});
      auto im = images(src, *base,
                       {{"u", "x1"},
                        {"u^-1", "x1^-1"},
                        {"v", "x2"},
                        {"v^-1", "x2^-1"},
                        {"w", "y"},
                        {"z", ""}});
      QuotientSpec q{src, base, im};
      std::vector<LetterId> section;
      auto tg = image_genset(q, section);
      auto z = znc2_witness(tg);
      line("(Z^2 x| Z/2) x Z/2 -> Z^2 x| Z/2", q,
           tg.format(z.certificate.witness));
    }
    return r;
  }

  Report repro_cannon(std::size_t maxlen) {
    Report r;
    r.section("Z^2 x| Z/2 (swap) over {a, b, t} and {a, c, d, t}");
    r.note("geodesics enumerated to length " + std::to_string(maxlen)
           + "; regularity of these languages is not decided here");
    auto engine = znc2(2, Phi::swap(1, 2));
    std::vector<std::pair<std::string,
                          std::vector<std::pair<std::string, std::string>>>>
        sets{{"{a, b, t}", {{"a", "x1"}, {"b", "x2"}, {"t", "y"}}},
             {"{a, c, d, t}",
              {{"a", "x1"}, {"c", "x1 x1"}, {"d", "x1 x2"}, {"t", "y"}}}};
    for (auto const& [name, specs] : sets) {
      auto gs = genset_of(engine, specs);
      auto geo = geodesic_language(gs, maxlen);
      auto bounded = pe_check_bounded(geo);
      std::string head = name + ": strata " + join(geo.language.stratum_sizes())
                         + ", bounded check " + kind_name(bounded.kind);
      try {
        auto z = znc2_witness(gs);
        auto const& c = z.certificate;
        bool good = recheck(gs, c)
                    && (maxlen < 3 || geo.language.contains(c.witness));
        r.add(ok(good), head + ", subcase " + z.subcase + ", witness "
                            + gs.format(c.witness) + ", violation "
                            + gs.format(c.violation));
      } catch (SelectionFailed const& e) {
        r.add(Status::fail, head + ", " + e.what());
      }
    }
    return r;
  }

  Report repro_properties() {
    Report r;
    r.section("properties");

    // Subsequence order on all words of length <= 3 over {a, b}^{+-1}.
    {
      auto A = alphabet_with_inverses({"a", "b"});
      std::vector<Word> words{{}};
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].size() < 3) {
          for (LetterId x = 0; x < A.size(); ++x) {
            Word w = words[i];
            w.push_back(x);
            words.push_back(w);
          }
        }
      }
      std::size_t n = words.size();
      std::vector<char> rel(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          rel[i * n + j] = is_subsequence(words[i], words[j]);
        }
      }
      bool good = true;
      for (std::size_t i = 0; i < n; ++i) {
        good = good && rel[i * n + i] && rel[i];
        for (std::size_t j = 0; j < n; ++j) {
          if (rel[i * n + j]) {
            good = good && words[i].size() <= words[j].size();
            good = good && (i == j || !rel[j * n + i]);
            for (std::size_t k = 0; k < n && good; ++k) {
              good = !rel[j * n + k] || rel[i * n + k];
            }
          }
        }
      }
      // u is a subsequence of w iff w reaches u by single deletions.
      std::map<Word, std::set<Word>> below;
      for (auto const& w : words) {
        std::set<Word> s{w};
        for (auto const& d : deletion_neighbors(w)) {
          auto const& sub = below.at(d);
          s.insert(sub.begin(), sub.end());
        }
        below[w] = std::move(s);
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          good = good && (rel[i * n + j] != 0) == (below[words[j]].count(words[i]) != 0);
        }
      }
      r.add(ok(good), "subsequence order is a partial order matching "
                      "deletion chains on " + std::to_string(n) + " words");
    }

    auto samples = sample_gensets();
    struct Slot {
      std::vector<std::string> lines;
      std::vector<Status> status;
    };
    std::vector<Slot> slots(samples.size());
    parallel_tasks(samples.size(), [&](std::size_t i) {
      auto const& gs = samples[i].gs;
      auto& s = slots[i];
      auto push = [&](bool b, std::string text) {
        s.status.push_back(ok(b));
        s.lines.push_back(samples[i].name + ": " + text);
      };
      auto const& A = gs.alphabet();
      bool finite = gs.engine().finite();
      auto geo = finite ? geodesic_language(gs, std::nullopt)
                        : geodesic_language(gs, 5);
      auto const& L = geo.language;

      bool closed = true;
      try {
        require_factor_closed(L);
      } catch (NotFactorClosed const&) {
        closed = false;
      }
      for (auto const& w : L.words()) {
        closed = closed && L.contains(invert_word(w, A));
      }
      push(closed, "Geo to length " + std::to_string(L.maxlen())
                       + " is factor- and inverse-closed");

      std::size_t len = A.size() <= 8 ? 5 : 4;
      auto naive = naive_distances(gs, len);
      auto bfs = ball(gs, len);
      bool same = naive.size() == bfs.dist.size();
      for (auto const& [k, d] : naive) {
        same = same && bfs.distance(k) == d;
      }
      auto naive_geo = naive_geodesics(gs, len);
      same = same && naive_geo.same_members_up_to(L, std::min(len, L.maxlen()));
      push(same, "ball and naive oracle agree to length " + std::to_string(len));

      if (finite) {
        auto v = pe_check(geo);
        if (v.kind == PEVerdict::Kind::pe) {
          push(recheck(geo, v) && contains_inverse_pairs(v.forbidden, A),
               "PE, Geo = avoid(minimal F), a a^-1 in F for every letter");
        }
        auto bounded = pe_check_bounded(geodesic_language(gs, *geo.diameter + 1));
        bool agree = v.kind == PEVerdict::Kind::pe
                         ? bounded.kind == PEVerdict::Kind::inconclusive
                         : bounded.kind == PEVerdict::Kind::not_pe
                               && bounded.witness == v.witness
                               && bounded.violation == v.violation;
        push(agree, std::string("exact and bounded checks agree (")
                        + kind_name(v.kind) + ")");
      }
    });
    for (auto const& s : slots) {
      for (std::size_t j = 0; j < s.lines.size(); ++j) {
        r.add(s.status[j], s.lines[j]);
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////

  std::vector<Criterion> acceptance_criteria() {
    return {
        {1, "Q8 survey", [] { return repro_q8(); }},
        {2, "D8", [] { return repro_d8(); }},
        {3, "Table 1", [] { return repro_table1(); }},
        {4, "witness geodesics at distance 3",
         [] {
           Report r = repro_quotients();
           r.append(repro_qxq());
           return r;
         }},
        {5, "Z^n x| Z/2 witness selection", [] { return repro_znc2(); }},
        {6, "extension construction", [] { return repro_extension(); }},
        {7, "property suites", [] { return repro_properties(); }},
        {8, "Cannon example data", [] { return repro_cannon(); }},
    };
  }

  FullRepro repro_all() {
    FullRepro out;
    std::vector<std::string> lines;
    bool all = true;
    for (auto const& c : acceptance_criteria()) {
      Report part = c.run();
      bool good = part.ok();
      all = all && good;
      lines.push_back("criterion " + std::to_string(c.id) + " "
                      + (good ? "PASS" : "FAIL") + " " + c.title);
      out.report.append(part);
    }
    out.report.append(repro_lift());
    Report tail;
    tail.section("acceptance criteria");
    for (auto const& l : lines) {
      tail.note(l);
    }
    out.report.append(tail);
    out.criteria_ok = all;
    return out;
  }

  Report repro(std::string const& target, std::size_t cannon_maxlen) {
    if (target == "q8") return repro_q8();
    if (target == "d8") return repro_d8();
    if (target == "table1") return repro_table1();
    if (target == "qxq") return repro_qxq();
    if (target == "extension") return repro_extension();
    if (target == "znc2") return repro_znc2();
    if (target == "quotients") return repro_quotients();
    if (target == "lift") return repro_lift();
    if (target == "cannon") return repro_cannon(cannon_maxlen);
    if (target == "properties") return repro_properties();
    throw InputError("unknown repro target: " + target);
  }

}  // namespace geolang
