#include "geolang/witnesses.hpp"

#include <set>
#include <unordered_map>
#include <unordered_set>

#include "geolang/catalog.hpp"
#include "geolang/errors.hpp"

namespace geolang {

  ////////////////////////////////////////////////////////////////////////
  // Q8

  std::size_t Survey::generating() const {
    std::size_t n = 0;
    for (auto const& s : subsets) {
      n += s.generating;
    }
    return n;
  }

  std::size_t Survey::pe() const {
    std::size_t n = 0;
    for (auto const& s : subsets) {
      n += s.verdict && s.verdict->kind == PEVerdict::Kind::pe;
    }
    return n;
  }

  bool contains_inverse_pairs(WordSet const& f, Alphabet const& alphabet) {
    for (LetterId a = 0; a < alphabet.size(); ++a) {
      if (!f.contains(Word{a, alphabet.inverse(a)})) {
        return false;
      }
    }
    return true;
  }

  Survey q8_survey() {
    auto engine = table_engine(q8_table(), "Q8");
    struct Atom {
      char const* label;
      char const* name;
      char const* image;
    };
    static constexpr Atom atoms[] = {{"{-1}", "m", "i i"},
                                     {"{i,-i}", "i", "i"},
                                     {"{j,-j}", "j", "j"},
                                     {"{k,-k}", "k", "i j"}};
    Survey survey;
    for (unsigned mask = 0; mask < 16; ++mask) {
      SurveyEntry e;
      std::vector<std::pair<std::string, std::string>> pairs;
      for (unsigned b = 0; b < 4; ++b) {
        if (mask & (1u << b)) {
          e.atoms += e.atoms.empty() ? "" : " ";
          e.atoms += atoms[b].label;
          pairs.emplace_back(atoms[b].name, atoms[b].image);
        }
      }
      if (e.atoms.empty()) {
        e.atoms = "{}";
      }
      if (!pairs.empty()) {
        try {
          e.genset = validate_genset(engine, gen_specs(*engine, pairs));
          e.generating = true;
        } catch (NotGenerating const&) {
        }
      }
      if (e.generating) {
        auto g = geodesic_language(*e.genset, std::nullopt);
        e.strata = g.language.stratum_sizes();
        e.verdict = pe_check(g);
        e.has_inverse_pairs =
            e.verdict->kind == PEVerdict::Kind::pe
            && contains_inverse_pairs(e.verdict->forbidden,
                                      e.genset->alphabet());
      }
      survey.subsets.push_back(std::move(e));
    }
    return survey;
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite-by-free-abelian

  ExtensionCheck extension_genset(TablePtr h, std::size_t rank,
                                  std::vector<std::vector<Element>> actions,
                                  std::size_t bound) {
    ExtensionCheck c;
    c.engine = std::make_shared<ExtensionEngine const>(h, rank,
                                                       std::move(actions));
    c.bound = bound;
    std::vector<GenSpec> specs;
    for (Element x = 0; x < h->order(); ++x) {
      if (x != h->identity()) {
        specs.push_back({"h" + std::to_string(x), h->name(x)});
      }
    }
    auto base_letters = static_cast<LetterId>(h->alphabet().size());
    for (std::size_t k = 0; k < rank; ++k) {
      specs.push_back({c.engine->direction_name(k),
                       Word{base_letters + static_cast<LetterId>(2 * k)}});
    }
    c.genset = validate_genset(c.engine, specs);
    auto const& A = c.genset->alphabet();
    std::vector<LetterId> hbar, free;
    for (LetterId a = 0; a < A.size(); ++a) {
      (A[a].name[0] == 'h' ? hbar : free).push_back(a);
    }
    for (auto x : hbar) {
      for (auto y : hbar) {
        c.claimed.insert(Word{x, y});
      }
    }
    for (auto t : free) {
      c.claimed.insert(Word{t, A.inverse(t)});
    }
    auto geo = geodesic_language(*c.genset, bound);
    c.strata = geo.language.stratum_sizes();
    auto avoid = avoid_language(c.claimed, A, bound);
    c.agrees = geo.language.same_members_up_to(avoid, bound);
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // Z^n x| Z/2

  namespace {

    // First letter (declared order) among those satisfying `keep` with the
    // largest (or smallest) score.
    template <class Keep, class Score>
    std::optional<LetterId> extremal(std::size_t letters, Keep keep,
                                     Score score, bool largest) {
      std::optional<LetterId> best;
      BigInt best_score;
      for (LetterId a = 0; a < letters; ++a) {
        if (!keep(a)) {
          continue;
        }
        BigInt s = score(a);
        if (!best || (largest ? s > best_score : s < best_score)) {
          best = a;
          best_score = s;
        }
      }
      return best;
    }

    BigInt abs(BigInt const& x) {
      return x < 0 ? BigInt(-x) : x;
    }

    int sign(BigInt const& x) {
      return x < 0 ? -1 : (x > 0 ? 1 : 0);
    }

  }  // namespace

  ZnC2Witness znc2_witness(GenSet const& gs) {
    auto const* E = dynamic_cast<ZnC2Engine const*>(&gs.engine());
    if (!E) {
      throw InputError("znc2_witness needs a Z^n x| Z/2 engine");
    }
    auto const& A = gs.alphabet();
    std::vector<ZnC2Engine::Elem> el;
    for (LetterId a = 0; a < A.size(); ++a) {
      el.push_back(E->decode(gs.key(a)));
    }
    auto fail = [&](std::string const& why) {
      return SelectionFailed("selection failed: " + why);
    };
    Phi phi = E->phi();
    std::size_t const n = A.size();
    auto translation = [&](LetterId a) { return !el[a].eps; };
    auto reflection = [&](LetterId a) { return el[a].eps; };
    ZnC2Witness r;
    std::optional<LetterId> a, b;
    if (phi.kind == Phi::Kind::invert) {
      std::size_t i = phi.i - 1;
      auto coord = [&](LetterId x) { return el[x].m[i]; };
      bool subcase_a = false;
      for (LetterId x = 0; x < n; ++x) {
        subcase_a = subcase_a || (translation(x) && el[x].m[i] != 0);
      }
      if (subcase_a) {
        r.subcase = "1A";
        a = extremal(n, translation, coord, true);
        b = extremal(n, reflection, coord, true);
      } else {
        r.subcase = "1B";
        a = extremal(n, reflection, coord, true);
        b = extremal(n, reflection, coord, false);
      }
    } else {
      std::size_t i = phi.i - 1, j = phi.j - 1;
      auto diff = [&](LetterId x) { return BigInt(el[x].m[i] - el[x].m[j]); };
      auto size = [&](LetterId x) { return abs(diff(x)); };
      bool subcase_a = false;
      for (LetterId x = 0; x < n; ++x) {
        subcase_a = subcase_a || (translation(x) && diff(x) != 0);
      }
      if (subcase_a) {
        r.subcase = "2A";
        auto c = extremal(n, translation, size, true);
        b = extremal(n, reflection, size, true);
        if (c && b) {
          bool agree = sign(diff(*c)) == sign(diff(*b)) || diff(*b) == 0;
          a = agree ? *c : A.inverse(*c);
        }
      } else {
        r.subcase = "2B";
        a = extremal(n, reflection, size, true);
        b = extremal(n, reflection, size, false);
      }
    }
    if (!a || !b) {
      throw fail("subcase " + r.subcase + " found no candidate letters");
    }
    r.a = *a;
    r.b = *b;
    Word w{r.a, r.b, A.inverse(r.a)};
    Key g = gs.evaluate(w);
    Key const id = gs.engine().identity_key();
    if (g == id) {
      throw fail(gs.format(w) + " is trivial");
    }
    for (LetterId x = 0; x < n; ++x) {
      if (gs.key(x) == g) {
        throw fail(gs.format(w) + " equals a letter");
      }
      for (LetterId y = 0; y < n; ++y) {
        if (gs.act(gs.key(x), y) == g) {
          throw fail(gs.format(w) + " equals a product of two letters");
        }
      }
    }
    r.certificate = PEVerdict::not_pe(A, w, Word{r.a, A.inverse(r.a)});
    return r;
  }

  namespace {

    // BFS up to `radius` that stops once every target is reached.
    bool reaches(GenSet const& gs, std::vector<Key> targets,
                 std::size_t radius) {
      std::set<Key> want(targets.begin(), targets.end());
      std::unordered_map<Key, bool> seen;
      std::vector<Key> frontier{gs.engine().identity_key()};
      seen.emplace(frontier[0], true);
      want.erase(frontier[0]);
      for (std::size_t r = 0; r < radius && !want.empty(); ++r) {
        std::vector<Key> next;
        for (auto const& g : frontier) {
          for (LetterId a = 0; a < gs.alphabet().size(); ++a) {
            Key h = gs.act(g, a);
            if (seen.emplace(h, true).second) {
              want.erase(h);
              next.push_back(std::move(h));
            }
          }
        }
        frontier = std::move(next);
      }
      return want.empty();
    }

    // Exact generation test. With r0 = (c, 1) a reflection letter, the
    // translation subgroup of <A> is the lattice spanned by t and phi(t)
    // for translations t, and m - c and c + phi(m) for reflections (m, 1).
    bool generates(ZnC2Engine const& e, GenSet const& gs) {
      std::vector<ZnC2Engine::Elem> el;
      std::optional<std::size_t> r0;
      for (LetterId a = 0; a < gs.alphabet().size(); ++a) {
        el.push_back(e.decode(gs.key(a)));
        if (el.back().eps && !r0) {
          r0 = a;
        }
      }
      if (!r0) {
        return false;
      }
      std::size_t const n = e.rank();
      auto const& c = el[*r0].m;
      std::vector<std::vector<BigInt>> rows;
      for (auto const& x : el) {
        auto v = x.m;
        e.apply_phi(v);
        if (x.eps) {
          auto d = x.m;
          for (std::size_t k = 0; k < n; ++k) {
            d[k] -= c[k];
            v[k] += c[k];
          }
          rows.push_back(std::move(d));
        } else {
          rows.push_back(x.m);
        }
        rows.push_back(std::move(v));
      }
      // Column-by-column gcd elimination; the lattice is Z^n iff every
      // pivot is +-1.
      std::size_t top = 0;
      for (std::size_t col = 0; col < n; ++col) {
        while (true) {
          std::optional<std::size_t> best;
          for (std::size_t i = top; i < rows.size(); ++i) {
            if (rows[i][col] != 0
                && (!best || abs(rows[i][col]) < abs(rows[*best][col]))) {
              best = i;
            }
          }
          if (!best) {
            return false;
          }
          std::swap(rows[top], rows[*best]);
          bool done = true;
          for (std::size_t i = top + 1; i < rows.size(); ++i) {
            BigInt q = rows[i][col] / rows[top][col];
            for (std::size_t k = col; k < n; ++k) {
              rows[i][k] -= q * rows[top][k];
            }
            done = done && rows[i][col] == 0;
          }
          if (done) {
            break;
          }
        }
        if (abs(rows[top][col]) != 1) {
          return false;
        }
        ++top;
      }
      return true;
    }

    // reaches() specialised to Z^n x| Z/2 with small coordinates packed into
    // one integer: 8 bits per coordinate plus the reflection bit.
    bool reaches_packed(ZnC2Engine const& e, GenSet const& gs,
                        std::size_t radius) {
      std::size_t const n = e.rank();
      using Pt = std::vector<std::int64_t>;
      auto pack = [&](Pt const& m, bool eps) {
        std::uint64_t k = eps;
        for (auto x : m) {
          k = (k << 8) | static_cast<std::uint64_t>(x + 128);
        }
        return k;
      };
      auto phi = e.phi();
      auto apply = [&](Pt& m) {
        if (phi.kind == Phi::Kind::invert) {
          m[phi.i - 1] = -m[phi.i - 1];
        } else {
          std::swap(m[phi.i - 1], m[phi.j - 1]);
        }
      };
      std::vector<std::pair<Pt, bool>> letters;
      for (LetterId a = 0; a < gs.alphabet().size(); ++a) {
        auto el = e.decode(gs.key(a));
        Pt m;
        for (auto const& x : el.m) {
          m.push_back(static_cast<std::int64_t>(x));
        }
        letters.emplace_back(std::move(m), el.eps);
      }
      std::set<std::uint64_t> want;
      for (std::size_t k = 0; k < n; ++k) {
        Pt m(n, 0);
        m[k] = 1;
        want.insert(pack(m, false));
        m[k] = -1;
        want.insert(pack(m, false));
      }
      want.insert(pack(Pt(n, 0), true));
      std::unordered_set<std::uint64_t> seen{pack(Pt(n, 0), false)};
      std::vector<std::pair<Pt, bool>> frontier{{Pt(n, 0), false}};
      for (std::size_t r = 0; r < radius && !want.empty(); ++r) {
        std::vector<std::pair<Pt, bool>> next;
        for (auto const& [m, eps] : frontier) {
          for (auto const& [lm, leps] : letters) {
            Pt h = lm;
            if (eps) {
              apply(h);
            }
            for (std::size_t k = 0; k < n; ++k) {
              h[k] += m[k];
            }
            auto key = pack(h, eps != leps);
            if (seen.insert(key).second) {
              want.erase(key);
              next.emplace_back(std::move(h), eps != leps);
            }
          }
        }
        frontier = std::move(next);
      }
      return want.empty();
    }

  }  // namespace

  GenSet random_znc2_genset(std::shared_ptr<ZnC2Engine const> const& engine,
                            std::mt19937_64& rng) {
    std::uniform_int_distribution<int> size(2, 5), coord(-3, 3), bit(0, 1);
    std::size_t const n = engine->rank();
    std::vector<Key> standard;
    for (LetterId a = 0; a < engine->builtin_letters().size(); ++a) {
      standard.push_back(engine->letter_key(a));
    }
    while (true) {
      int k = size(rng);
      std::vector<GenSpec> specs;
      bool reflection = false;
      for (int g = 0; g < k; ++g) {
        ZnC2Engine::Elem e{std::vector<BigInt>(n), bit(rng) == 1};
        for (auto& x : e.m) {
          x = coord(rng);
        }
        reflection = reflection || e.eps;
        specs.push_back({"u" + std::to_string(g + 1),
                         engine->normal_form(engine->encode(e))});
      }
      if (!reflection) {
        continue;
      }
      try {
        auto gs = validate_genset(engine, specs);
        bool small = engine->rank() <= 7;
        if (generates(*engine, gs)
            && (small ? reaches_packed(*engine, gs, 6)
                      : reaches(gs, standard, 6))) {
          return gs;
        }
      } catch (IdentityLetter const&) {
      } catch (DuplicateElement const&) {
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Quotient families

  std::optional<std::size_t> witness_distance(GenSet const& gs, Word const& w,
                                              std::size_t radius) {
    return ball(gs, radius).distance(gs.evaluate(w));
  }

  FamilyWitness conjugation_witness(std::string name, GenSet gs,
                                    std::string const& witness) {
    FamilyWitness f;
    f.name = std::move(name);
    f.witness = gs.parse(witness);
    f.distance = witness_distance(gs, f.witness);
    auto const& A = gs.alphabet();
    auto const& w = f.witness;
    bool shape = w.size() == 3 && w[2] == A.inverse(w[0]);
    if (shape && f.distance == 3) {
      f.certificate = PEVerdict::not_pe(A, w, Word{w[0], w[2]});
    } else {
      f.certificate = PEVerdict::inconclusive(A, 3);
    }
    f.genset = std::move(gs);
    return f;
  }

  namespace {
    GenSet genset_of(EnginePtr e,
                     std::vector<std::pair<std::string, std::string>> pairs) {
      return validate_genset(e, gen_specs(*e, pairs));
    }

    bool odd_at_least_3(std::uint64_t n) {
      return n >= 3 && n % 2 == 1;
    }
  }  // namespace

  FamilyWitness quotient_family_witness(Family f, std::uint64_t n,
                                        std::uint64_t m) {
    switch (f) {
      case Family::z5_case_e: {
        if (m < 1) {
          throw BadParams("Z/5 x| Z/4m needs m >= 1");
        }
        auto e = semidirect(5, 3, 4 * m, "a", "x");
        return conjugation_witness(
            "Z/5 x| Z/" + std::to_string(4 * m),
            genset_of(e, {{"ax", "a x"}, {"xa", "x a"}}), "ax xa ax^-1");
      }
      case Family::bsquot_z: {
        if (!odd_at_least_3(n)) {
          throw BadParams("Z/n x| Z needs odd n >= 3");
        }
        auto e = semidirect(n, 2, std::nullopt);
        return conjugation_witness(
            "Z/" + std::to_string(n) + " x| Z",
            genset_of(e, {{"at", "a t"}, {"ta", "t a"}}), "at ta at^-1");
      }
      case Family::bsquot_finite: {
        if (!odd_at_least_3(n) || m <= 3) {
          throw BadParams("Z/n x| Z/m needs odd n >= 3 and m > 3");
        }
        auto e = semidirect(n, 2, m);
        auto w = conjugation_witness(
            "Z/" + std::to_string(n) + " x| Z/" + std::to_string(m),
            genset_of(e, {{"at", "a t"}, {"ta", "t a"}}), "at ta at^-1");
        if (m < 64 && n != (std::uint64_t{1} << m) - 1) {
          w.note = "n != 2^m - 1";
        }
        return w;
      }
      case Family::z7_z3: {
        auto e = semidirect(7, 2, 3);
        return conjugation_witness("Z/7 x| Z/3",
                                   genset_of(e, {{"at", "a t"}, {"t", "t"}}),
                                   "at t at^-1");
      }
      case Family::z9_z3: {
        auto e = table_engine(z9_z3_table(), "Z/9 x| Z/3");
        return conjugation_witness("Z/9 x| Z/3",
                                   genset_of(e, {{"x", "x"}, {"y", "y"}}),
                                   "x y x^-1");
      }
      case Family::s3_inv: {
        auto e = table_engine(s3_table(), "S3");
        return conjugation_witness("S3", genset_of(e, {{"a", "a"}, {"b", "b"}}),
                                   "a b a^-1");
      }
      case Family::z5_z: {
        auto e = semidirect(5, 3, std::nullopt, "a", "x");
        return conjugation_witness(
            "Z/5 x| Z", genset_of(e, {{"x", "x"}, {"y", "x x x a"}}),
            "y x y^-1");
      }
    }
    throw BadParams("unknown family");
  }

  ////////////////////////////////////////////////////////////////////////
  // Lifting

  bool homomorphism_on_ball(QuotientSpec const& q, std::size_t radius) {
    auto const& src = q.source;
    auto const& T = *q.target;
    std::vector<Key> image;
    for (auto const& w : q.images) {
      image.push_back(evaluate(T, w));
    }
    std::unordered_map<Key, Key> pi{
        {src.engine().identity_key(), T.identity_key()}};
    std::vector<Key> frontier{src.engine().identity_key()};
    for (std::size_t r = 0; r < radius; ++r) {
      std::vector<Key> next;
      for (auto const& g : frontier) {
        Key const pg = pi.at(g);
        for (LetterId a = 0; a < src.alphabet().size(); ++a) {
          Key h = src.act(g, a);
          Key ph = T.multiply(pg, image[a]);
          auto [it, fresh] = pi.emplace(h, ph);
          if (fresh) {
            next.push_back(std::move(h));
          } else if (it->second != ph) {
            return false;
          }
        }
      }
      frontier = std::move(next);
    }
    return true;
  }

  GenSet image_genset(QuotientSpec const& q, std::vector<LetterId>& section) {
    auto const& src = q.source;
    auto const& T = *q.target;
    if (q.images.size() != src.alphabet().size()) {
      throw InputError("need one image per source letter");
    }
    Key const id = T.identity_key();
    std::vector<Key> keys;
    std::vector<Word> images;
    std::vector<std::string> names;
    section.clear();
    for (LetterId a = 0; a < src.alphabet().size(); ++a) {
      Key k = evaluate(T, q.images[a]);
      if (T.inverse(k) != evaluate(T, q.images[src.alphabet().inverse(a)])) {
        throw InputError("images are not inverse-consistent");
      }
      if (k == id || std::find(keys.begin(), keys.end(), k) != keys.end()) {
        continue;
      }
      keys.push_back(k);
      images.push_back(q.images[a]);
      names.push_back(src.alphabet()[a].name);
      section.push_back(a);
    }
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      auto inv = std::find(keys.begin(), keys.end(), T.inverse(keys[i]));
      letters.push_back({names[i], names[inv - keys.begin()]});
    }
    return GenSet(q.target, Alphabet(std::move(letters)), std::move(images),
                  std::move(keys));
  }

  Lift lift_witness(QuotientSpec const& q, std::string const& target_witness) {
    if (!homomorphism_on_ball(q)) {
      throw InputError("letter images do not define a homomorphism");
    }
    Lift l;
    std::vector<LetterId> section;
    l.target_genset = image_genset(q, section);
    auto const& tg = *l.target_genset;
    l.target_witness = tg.parse(target_witness);
    auto const& w = l.target_witness;
    if (w.size() < 2 || w.back() != tg.alphabet().inverse(w.front())) {
      throw InputError("target witness must have the form a w a^-1");
    }
    if (!is_geodesic(tg, w)) {
      throw InputError("target witness " + target_witness
                       + " is not geodesic");
    }
    auto const& S = q.source.alphabet();
    l.lifted.push_back(section[w.front()]);
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
      l.lifted.push_back(section[w[i]]);
    }
    l.lifted.push_back(S.inverse(section[w.front()]));
    if (!is_geodesic(q.source, l.lifted)) {
      throw LiftNotGeodesic("lifted word " + q.source.format(l.lifted)
                            + " is not geodesic");
    }
    l.certificate = PEVerdict::not_pe(
        S, l.lifted, Word{l.lifted.front(), l.lifted.back()});
    return l;
  }

}  // namespace geolang
