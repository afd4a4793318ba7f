#include "geolang/oracle.hpp"

#include <algorithm>

namespace geolang {

  namespace {
    // Depth-first over all words up to maxlen; f(word, element).
    template <class F>
    void for_each_word(GenSet const& gs, std::size_t maxlen, Word& w,
                       Key const& g, F& f) {
      f(w, g);
      if (w.size() == maxlen) {
        return;
      }
      for (LetterId a = 0; a < gs.alphabet().size(); ++a) {
        w.push_back(a);
        for_each_word(gs, maxlen, w, gs.act(g, a), f);
        w.pop_back();
      }
    }

    template <class F>
    void for_each_word(GenSet const& gs, std::size_t maxlen, F f) {
      Word w;
      for_each_word(gs, maxlen, w, gs.engine().identity_key(), f);
    }
  }  // namespace

  std::map<Key, std::size_t> naive_distances(GenSet const& gs,
                                             std::size_t maxlen) {
    std::map<Key, std::size_t> d;
    for_each_word(gs, maxlen, [&](Word const& w, Key const& g) {
      auto [it, fresh] = d.emplace(g, w.size());
      if (!fresh) {
        it->second = std::min(it->second, w.size());
      }
    });
    return d;
  }

  Language naive_geodesics(GenSet const& gs, std::size_t maxlen) {
    auto d = naive_distances(gs, maxlen);
    std::vector<std::vector<Word>> strata(maxlen + 1);
    for_each_word(gs, maxlen, [&](Word const& w, Key const& g) {
      if (d.at(g) == w.size()) {
        strata[w.size()].push_back(w);
      }
    });
    for (auto& s : strata) {
      std::sort(s.begin(), s.end());
    }
    return Language(gs.alphabet(), std::move(strata), false);
  }

}  // namespace geolang
