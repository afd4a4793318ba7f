#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "geolang/words.hpp"

namespace geolang {

  // Canonical text encoding of a group element; equal keys iff equal elements.
  using Key = std::string;

  // Exact group arithmetic over canonical keys. Every engine has a builtin
  // alphabet of native generating letters; generating sets used elsewhere are
  // words over these letters.
  class GroupEngine {
   public:
    virtual ~GroupEngine() = default;

    virtual std::string describe() const = 0;
    virtual Key identity_key() const = 0;
    virtual Key multiply(Key const& g, Key const& h) const = 0;
    virtual Key inverse(Key const& g) const = 0;
    // Number of elements, for finite engines.
    virtual std::optional<std::uint64_t> order() const {
      return std::nullopt;
    }
    // Normal-form word over the builtin letters; engines without a normal
    // form throw Unsupported.
    virtual Word normal_form(Key const& g) const;

    Alphabet const& builtin_letters() const noexcept { return letters_; }
    Key const& letter_key(LetterId a) const { return letter_keys_.at(a); }
    Key act(Key const& g, LetterId a) const {
      return multiply(g, letter_key(a));
    }
    bool finite() const { return order().has_value(); }

   protected:
    GroupEngine() = default;
    void set_letters(Alphabet letters, std::vector<Key> keys);

   private:
    Alphabet letters_;
    std::vector<Key> letter_keys_;
  };

  using EnginePtr = std::shared_ptr<GroupEngine const>;

  // Left-to-right fold of act from the identity.
  Key evaluate(GroupEngine const& engine, Word const& w);
  Key evaluate(GroupEngine const& engine, std::string_view word_text);

}  // namespace geolang
