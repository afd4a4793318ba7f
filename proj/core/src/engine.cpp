#include "geolang/engine.hpp"

#include "geolang/errors.hpp"

namespace geolang {

  Word GroupEngine::normal_form(Key const&) const {
    throw Unsupported(describe() + " has no normal form");
  }

  void GroupEngine::set_letters(Alphabet letters, std::vector<Key> keys) {
    if (letters.size() != keys.size()) {
      throw std::logic_error("letter/key count mismatch");
    }
    letters_ = std::move(letters);
    letter_keys_ = std::move(keys);
  }

  Key evaluate(GroupEngine const& engine, Word const& w) {
    Key g = engine.identity_key();
    for (auto a : w) {
      if (a >= engine.builtin_letters().size()) {
        throw UnknownLetter("#" + std::to_string(a));
      }
      g = engine.act(g, a);
    }
    return g;
  }

  Key evaluate(GroupEngine const& engine, std::string_view word_text) {
    return evaluate(engine, parse_word(word_text, engine.builtin_letters()));
  }

}  // namespace geolang
