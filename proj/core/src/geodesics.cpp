#include "geolang/geodesics.hpp"

#include <algorithm>
#include <map>

#include "geolang/errors.hpp"
#include "geolang/parallel.hpp"

namespace geolang {

  std::vector<GenSpec> gen_specs(
      GroupEngine const& engine,
      std::vector<std::pair<std::string, std::string>> const& pairs) {
    std::vector<GenSpec> specs;
    for (auto const& [name, text] : pairs) {
      specs.push_back({name, parse_word(text, engine.builtin_letters())});
    }
    return specs;
  }

  GenSet::GenSet(EnginePtr engine, Alphabet alphabet, std::vector<Word> images,
                 std::vector<Key> keys)
      : engine_(std::move(engine)),
        alphabet_(std::move(alphabet)),
        images_(std::move(images)),
        keys_(std::move(keys)) {}

  Key GenSet::evaluate(Word const& w) const {
    Key g = engine_->identity_key();
    for (auto a : w) {
      g = act(g, a);
    }
    return g;
  }

  Key GenSet::evaluate(std::string_view text) const {
    return evaluate(parse(text));
  }

  GenSet validate_genset(EnginePtr engine, std::vector<GenSpec> const& specs) {
    if (specs.empty()) {
      throw InputError("empty generating set");
    }
    auto const& E = *engine;
    Key const id = E.identity_key();
    std::vector<Key> keys;
    std::map<Key, std::size_t> index;
    std::map<std::string, std::size_t> by_name;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      auto const& s = specs[i];
      if (s.name.empty() || s.name == "1"
          || s.name.find_first_of(" \t=") != std::string::npos) {
        throw InputError("bad letter name: '" + s.name + "'");
      }
      if (!by_name.emplace(s.name, i).second) {
        throw InputError("letter declared twice: " + s.name);
      }
      Key k = evaluate(E, s.image);
      if (k == id) {
        throw IdentityLetter(s.name);
      }
      auto [it, fresh] = index.emplace(k, i);
      if (!fresh) {
        throw DuplicateElement("letters " + specs[it->second].name + " and "
                               + s.name + " represent the same element");
      }
      keys.push_back(std::move(k));
    }

    std::vector<Letter> letters;
    std::vector<Word> images;
    std::vector<Key> letter_keys;
    std::string const suffix = "^-1";
    for (std::size_t i = 0; i < specs.size(); ++i) {
      auto const& s = specs[i];
      Key inv = E.inverse(keys[i]);
      auto partner = index.find(inv);
      if (s.name.size() > suffix.size() && s.name.ends_with(suffix)) {
        auto base = by_name.find(s.name.substr(0, s.name.size() - suffix.size()));
        if (base != by_name.end()
            && (partner == index.end() || partner->second != base->second)) {
          throw InverseMismatch(s.name + " is not the inverse of "
                                + base->first);
        }
      }
      images.push_back(s.image);
      letter_keys.push_back(keys[i]);
      if (partner != index.end()) {
        letters.push_back({s.name, specs[partner->second].name});
        continue;
      }
      letters.push_back({s.name, s.name + suffix});
      letters.push_back({s.name + suffix, s.name});
      images.push_back(invert_word(s.image, E.builtin_letters()));
      letter_keys.push_back(inv);
    }
    GenSet gs(engine, Alphabet(std::move(letters)), std::move(images),
              std::move(letter_keys));
    if (auto order = E.order()) {
      auto m = ball(gs, std::nullopt, *order + 1);
      if (m.dist.size() != *order) {
        throw NotGenerating("generating set reaches "
                            + std::to_string(m.dist.size()) + " of "
                            + std::to_string(*order) + " elements");
      }
    }
    return gs;
  }

  GenSet builtin_genset(EnginePtr engine) {
    auto const& A = engine->builtin_letters();
    std::vector<Word> images;
    std::vector<Key> keys;
    for (LetterId a = 0; a < A.size(); ++a) {
      images.push_back({a});
      keys.push_back(engine->letter_key(a));
    }
    return GenSet(engine, A, std::move(images), std::move(keys));
  }

  std::optional<std::size_t> DistanceMap::distance(Key const& k) const {
    auto it = dist.find(k);
    if (it == dist.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::vector<std::size_t> DistanceMap::sphere_sizes() const {
    std::vector<std::size_t> s;
    for (auto const& sp : spheres) {
      s.push_back(sp.size());
    }
    return s;
  }

  DistanceMap ball(GenSet const& gs, std::optional<std::size_t> radius,
                   std::size_t cap) {
    DistanceMap m;
    Key id = gs.engine().identity_key();
    m.dist.emplace(id, 0);
    m.spheres.push_back({id});
    std::size_t const letters = gs.alphabet().size();
    for (std::size_t r = 1; !radius || r <= *radius; ++r) {
      auto const& frontier = m.spheres.back();
      std::vector<std::vector<Key>> nbrs(frontier.size());
      parallel_for(frontier.size(), [&](std::size_t i) {
        nbrs[i].reserve(letters);
        for (LetterId a = 0; a < letters; ++a) {
          nbrs[i].push_back(gs.act(frontier[i], a));
        }
      });
      std::vector<Key> next;
      for (auto& ns : nbrs) {
        for (auto& k : ns) {
          if (m.dist.emplace(k, r).second) {
            next.push_back(std::move(k));
            if (m.dist.size() > cap) {
              throw ResourceCap("ball exceeded " + std::to_string(cap)
                                + " elements at radius "
                                + std::to_string(r));
            }
          }
        }
      }
      if (next.empty() && !radius) {
        break;
      }
      std::sort(next.begin(), next.end());
      m.spheres.push_back(std::move(next));
    }
    m.radius = m.spheres.size() - 1;
    return m;
  }

  bool is_geodesic(GenSet const& gs, Word const& w, std::size_t cap) {
    if (w.empty()) {
      return true;
    }
    auto m = ball(gs, w.size() - 1, cap);
    return !m.dist.contains(gs.evaluate(w));
  }

  GeodesicLanguage geodesic_language(GenSet const& gs, DistanceMap const& m,
                                     std::size_t maxlen, bool complete) {
    if (maxlen > m.radius) {
      throw std::invalid_argument("ball radius below maxlen");
    }
    std::size_t const letters = gs.alphabet().size();
    std::size_t const word_cap = 10 * default_ball_cap;
    std::vector<std::vector<Word>> strata{{Word{}}};
    std::vector<Key> keys{gs.engine().identity_key()};
    std::size_t total = 1;
    for (std::size_t l = 0; l < maxlen; ++l) {
      auto const& cur = strata.back();
      std::vector<std::vector<std::pair<LetterId, Key>>> ext(cur.size());
      parallel_for(cur.size(), [&](std::size_t i) {
        for (LetterId a = 0; a < letters; ++a) {
          Key k = gs.act(keys[i], a);
          auto d = m.distance(k);
          if (d && *d == l + 1) {
            ext[i].emplace_back(a, std::move(k));
          }
        }
      });
      std::vector<Word> next;
      std::vector<Key> next_keys;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        for (auto& [a, k] : ext[i]) {
          Word w = cur[i];
          w.push_back(a);
          next.push_back(std::move(w));
          next_keys.push_back(std::move(k));
        }
      }
      total += next.size();
      if (total > word_cap) {
        throw ResourceCap("geodesic enumeration exceeded "
                          + std::to_string(word_cap) + " words");
      }
      strata.push_back(std::move(next));
      keys = std::move(next_keys);
    }
    bool done = complete || strata.back().empty();
    return {Language(gs.alphabet(), std::move(strata), done), std::nullopt};
  }

  GeodesicLanguage geodesic_language(GenSet const& gs,
                                     std::optional<std::size_t> maxlen,
                                     std::size_t cap) {
    if (maxlen) {
      return geodesic_language(gs, ball(gs, *maxlen, cap), *maxlen, false);
    }
    if (!gs.engine().finite()) {
      throw Unsupported("exact geodesic languages need a finite group");
    }
    auto m = ball(gs, std::nullopt, cap);
    auto g = geodesic_language(gs, m, m.radius, true);
    g.diameter = m.radius;
    return g;
  }

  std::string format_ball(DistanceMap const& m) {
    std::string out;
    for (std::size_t r = 0; r < m.spheres.size(); ++r) {
      for (auto const& k : m.spheres[r]) {
        out += std::to_string(r) + "\t" + k + "\n";
      }
    }
    return out;
  }

}  // namespace geolang
