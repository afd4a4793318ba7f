#include "geolang/presentation.hpp"

#include "geolang/errors.hpp"

namespace geolang {

  Presentation::Presentation(std::vector<std::string> gens,
                             std::vector<std::string> const& relator_texts)
      : generators(std::move(gens)),
        alphabet(alphabet_with_inverses(generators)) {
    for (auto const& r : relator_texts) {
      Word w = parse_word(r, alphabet);
      if (w.empty()) {
        throw InputError("empty relator");
      }
      relators.push_back(std::move(w));
    }
  }

  std::vector<Key> image_keys(Presentation const& p,
                              GroupEngine const& target,
                              std::vector<Word> const& images) {
    if (images.size() != p.generator_count()) {
      throw InputError("need one image per generator");
    }
    std::vector<Key> keys;
    for (auto const& w : images) {
      Key k = evaluate(target, w);
      keys.push_back(k);
      keys.push_back(target.inverse(k));
    }
    return keys;
  }

  bool check_homomorphism(Presentation const& p,
                          GroupEngine const& target,
                          std::vector<Word> const& images) {
    auto keys = image_keys(p, target, images);
    Key const id = target.identity_key();
    for (auto const& r : p.relators) {
      Key g = id;
      for (auto x : r) {
        g = target.multiply(g, keys[x]);
      }
      if (g != id) {
        return false;
      }
    }
    return true;
  }

}  // namespace geolang
