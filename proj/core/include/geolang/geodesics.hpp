#pragma once

// Symmetric generating sets, word-metric balls and geodesic languages.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "geolang/engine.hpp"
#include "geolang/words.hpp"

namespace geolang {

  // A named generator given by a word over the engine's builtin letters.
  struct GenSpec {
    std::string name;
    Word image;
  };

  // Parses "name = word" style pairs against the engine's builtin letters.
  std::vector<GenSpec> gen_specs(
      GroupEngine const& engine,
      std::vector<std::pair<std::string, std::string>> const& pairs);

  class GenSet {
   public:
    GenSet(EnginePtr engine, Alphabet alphabet, std::vector<Word> images,
           std::vector<Key> keys);

    GroupEngine const& engine() const noexcept { return *engine_; }
    EnginePtr engine_ptr() const noexcept { return engine_; }
    Alphabet const& alphabet() const noexcept { return alphabet_; }
    // Image of each letter as a word over the builtin letters.
    Word const& image(LetterId a) const { return images_.at(a); }
    Key const& key(LetterId a) const { return keys_.at(a); }
    Key act(Key const& g, LetterId a) const {
      return engine_->multiply(g, keys_[a]);
    }
    Key evaluate(Word const& w) const;
    Key evaluate(std::string_view text) const;
    Word parse(std::string_view text) const {
      return parse_word(text, alphabet_);
    }
    std::string format(Word const& w) const {
      return format_word(w, alphabet_);
    }

   private:
    EnginePtr engine_;
    Alphabet alphabet_;
    std::vector<Word> images_;
    std::vector<Key> keys_;
  };

  // Closes the declared generators under inversion and checks the genset
  // invariants. A declared letter whose element is an involution becomes
  // self-inverse; one whose inverse element is also declared is paired with
  // it (a declared "x^-1" must be the inverse of x); otherwise "name^-1" is
  // inserted right after it. Throws IdentityLetter, DuplicateElement,
  // InverseMismatch, and NotGenerating (finite engines only).
  GenSet validate_genset(EnginePtr engine, std::vector<GenSpec> const& specs);

  // The engine's builtin letters as a genset.
  GenSet builtin_genset(EnginePtr engine);

  inline constexpr std::size_t default_ball_cap = 1'000'000;

  struct DistanceMap {
    std::size_t radius = 0;
    std::unordered_map<Key, std::size_t> dist;
    // spheres[r]: keys at distance exactly r, sorted.
    std::vector<std::vector<Key>> spheres;

    std::optional<std::size_t> distance(Key const& k) const;
    std::vector<std::size_t> sphere_sizes() const;
  };

  // Breadth-first search from the identity. With no radius the search runs
  // until a sphere is empty; the returned radius is then the diameter.
  // Throws ResourceCap once more than `cap` elements are stored.
  DistanceMap ball(GenSet const& gs, std::optional<std::size_t> radius,
                   std::size_t cap = default_ball_cap);

  bool is_geodesic(GenSet const& gs, Word const& w,
                   std::size_t cap = default_ball_cap);

  struct GeodesicLanguage {
    Language language;
    std::optional<std::size_t> diameter;  // finite engines, exact mode
  };

  // Geodesics up to maxlen, or all of them (finite engines only) when maxlen
  // is empty.
  GeodesicLanguage geodesic_language(GenSet const& gs,
                                     std::optional<std::size_t> maxlen,
                                     std::size_t cap = default_ball_cap);

  // Same, reusing an existing ball of radius >= maxlen.
  GeodesicLanguage geodesic_language(GenSet const& gs, DistanceMap const& ball,
                                     std::size_t maxlen, bool complete);

  // "distance<TAB>key" lines, by distance then key.
  std::string format_ball(DistanceMap const& m);

}  // namespace geolang
