#pragma once

#include <string>
#include <vector>

#include "geolang/engine.hpp"
#include "geolang/words.hpp"

namespace geolang {

  // Finitely presented group. The alphabet lists each generator followed by
  // its formal inverse "x^-1".
  struct Presentation {
    std::vector<std::string> generators;
    Alphabet alphabet;
    std::vector<Word> relators;

    Presentation() = default;
    Presentation(std::vector<std::string> gens,
                 std::vector<std::string> const& relator_texts);

    std::size_t generator_count() const noexcept { return generators.size(); }
  };

  // True iff every relator maps to the identity when each generator is sent to
  // the matching image word over the target's builtin letters.
  bool check_homomorphism(Presentation const& p,
                          GroupEngine const& target,
                          std::vector<Word> const& images);

  // Image keys of the presentation's letters (generators and inverses).
  std::vector<Key> image_keys(Presentation const& p,
                              GroupEngine const& target,
                              std::vector<Word> const& images);

}  // namespace geolang
