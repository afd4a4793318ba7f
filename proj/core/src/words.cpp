#include "geolang/words.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "geolang/errors.hpp"

namespace geolang {

  namespace {
    constexpr std::string_view inverse_suffix = "^-1";

    bool sorted_contains(std::vector<Word> const& v, Word const& w) {
      return std::binary_search(v.begin(), v.end(), w);
    }
  }  // namespace

  Alphabet::Alphabet(std::vector<Letter> letters)
      : letters_(std::move(letters)), inverse_(letters_.size()) {
    std::unordered_map<std::string, LetterId> index;
    for (LetterId i = 0; i < letters_.size(); ++i) {
      if (letters_[i].name.empty()) {
        throw InputError("empty letter name");
      }
      if (!index.emplace(letters_[i].name, i).second) {
        throw InputError("duplicate letter name: " + letters_[i].name);
      }
    }
    for (LetterId i = 0; i < letters_.size(); ++i) {
      auto it = index.find(letters_[i].inverse_name);
      if (it == index.end()) {
        throw InputError("letter " + letters_[i].name
                         + " has undeclared inverse "
                         + letters_[i].inverse_name);
      }
      inverse_[i] = it->second;
    }
    for (LetterId i = 0; i < letters_.size(); ++i) {
      if (inverse_[inverse_[i]] != i) {
        throw InputError("inverse pairing of " + letters_[i].name
                         + " is not an involution");
      }
    }
  }

  std::optional<LetterId> Alphabet::find(std::string_view name) const {
    for (LetterId i = 0; i < letters_.size(); ++i) {
      if (letters_[i].name == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  Alphabet alphabet_with_inverses(std::vector<std::string> const& names) {
    std::vector<Letter> letters;
    for (auto const& n : names) {
      std::string inv = n + std::string(inverse_suffix);
      letters.push_back({n, inv});
      letters.push_back({inv, n});
    }
    return Alphabet(std::move(letters));
  }

  bool shortlex_less(Word const& u, Word const& w) {
    if (u.size() != w.size()) {
      return u.size() < w.size();
    }
    return u < w;
  }

  Word parse_word(std::string_view text, Alphabet const& alphabet) {
    Word result;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
      if (token == "1" && !alphabet.find("1")) {
        continue;  // explicit empty word
      }
      if (auto id = alphabet.find(token)) {
        result.push_back(*id);
        continue;
      }
      if (token.size() > inverse_suffix.size()
          && token.ends_with(inverse_suffix)) {
        auto base = std::string_view(token).substr(
            0, token.size() - inverse_suffix.size());
        if (auto id = alphabet.find(base)) {
          result.push_back(alphabet.inverse(*id));
          continue;
        }
      }
      throw UnknownLetter(token);
    }
    return result;
  }

  std::string format_word(Word const& w, Alphabet const& alphabet) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += alphabet[w[i]].name;
    }
    return out;
  }

  Word invert_word(Word const& w, Alphabet const& alphabet) {
    Word result(w.rbegin(), w.rend());
    for (auto& x : result) {
      x = alphabet.inverse(x);
    }
    return result;
  }

  bool is_subsequence(Word const& u, Word const& w) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < w.size() && i < u.size(); ++j) {
      if (u[i] == w[j]) {
        ++i;
      }
    }
    return i == u.size();
  }

  bool is_factor(Word const& u, Word const& w) {
    return std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end();
  }

  std::vector<Word> deletion_neighbors(Word const& w) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      // Deleting any letter of a run gives the same word; keep the first.
      if (i > 0 && w[i] == w[i - 1]) {
        continue;
      }
      Word u;
      u.reserve(w.size() - 1);
      u.insert(u.end(), w.begin(), w.begin() + i);
      u.insert(u.end(), w.begin() + i + 1, w.end());
      out.push_back(std::move(u));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Language
  ////////////////////////////////////////////////////////////////////////

  Language::Language(Alphabet alphabet, std::size_t maxlen, bool complete)
      : alphabet_(std::move(alphabet)),
        strata_(maxlen + 1),
        complete_(complete) {}

  Language::Language(Alphabet alphabet,
                     std::vector<std::vector<Word>> strata,
                     bool complete)
      : alphabet_(std::move(alphabet)),
        strata_(std::move(strata)),
        complete_(complete) {
    if (strata_.empty()) {
      strata_.resize(1);
    }
    for (std::size_t len = 0; len < strata_.size(); ++len) {
      auto& s = strata_[len];
      for (auto const& w : s) {
        if (w.size() != len) {
          throw InputError("word stored in the wrong stratum");
        }
        for (auto x : w) {
          if (x >= alphabet_.size()) {
            throw InputError("word uses a letter outside the alphabet");
          }
        }
      }
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
  }

  bool Language::contains(Word const& w) const {
    if (w.size() > maxlen()) {
      if (complete_) {
        return false;
      }
      throw std::out_of_range("membership beyond the enumeration bound");
    }
    return sorted_contains(strata_[w.size()], w);
  }

  std::size_t Language::size() const {
    std::size_t n = 0;
    for (auto const& s : strata_) {
      n += s.size();
    }
    return n;
  }

  std::vector<Word> Language::words() const {
    std::vector<Word> out;
    for (auto const& s : strata_) {
      out.insert(out.end(), s.begin(), s.end());
    }
    return out;
  }

  std::vector<std::size_t> Language::stratum_sizes() const {
    std::vector<std::size_t> out;
    for (auto const& s : strata_) {
      out.push_back(s.size());
    }
    return out;
  }

  void Language::insert(Word const& w) {
    auto& s = strata_.at(w.size());
    auto it = std::lower_bound(s.begin(), s.end(), w);
    if (it == s.end() || *it != w) {
      s.insert(it, w);
    }
  }

  bool Language::same_members_up_to(Language const& other,
                                    std::size_t len) const {
    if (!(alphabet_ == other.alphabet_)) {
      return false;
    }
    for (std::size_t l = 0; l <= len; ++l) {
      auto const* a = l <= maxlen() ? &strata_[l] : nullptr;
      auto const* b = l <= other.maxlen() ? &other.strata_[l] : nullptr;
      if (a == nullptr && !complete_) {
        throw std::out_of_range("comparison beyond the enumeration bound");
      }
      if (b == nullptr && !other.complete_) {
        throw std::out_of_range("comparison beyond the enumeration bound");
      }
      std::size_t na = a ? a->size() : 0;
      std::size_t nb = b ? b->size() : 0;
      if (na != nb || (na != 0 && *a != *b)) {
        return false;
      }
    }
    return true;
  }

  std::string format_language(Language const& lang) {
    std::string out;
    for (auto const& w : lang.words()) {
      out += format_word(w, lang.alphabet());
      out += '\n';
    }
    return out;
  }

  void require_deletion_closed(Language const& lang) {
    for (auto const& w : lang.words()) {
      for (auto const& u : deletion_neighbors(w)) {
        if (!lang.contains(u)) {
          throw NotDownwardClosed(format_word(w, lang.alphabet()),
                                  format_word(u, lang.alphabet()));
        }
      }
    }
  }

  void require_factor_closed(Language const& lang) {
    for (auto const& w : lang.words()) {
      if (w.empty()) {
        continue;
      }
      Word tail(w.begin() + 1, w.end());
      Word head(w.begin(), w.end() - 1);
      for (auto const* u : {&head, &tail}) {
        if (!lang.contains(*u)) {
          throw NotFactorClosed(format_word(w, lang.alphabet()),
                                format_word(*u, lang.alphabet()));
        }
      }
    }
  }

  WordSet minimal_forbidden_subsequences(Language const& lang) {
    if (!lang.complete()) {
      throw InputError(
          "minimal forbidden subsequences need a complete language");
    }
    if (!lang.contains(Word{})) {
      throw InputError("language does not contain the empty word");
    }
    require_deletion_closed(lang);
    WordSet forbidden;
    auto const& alphabet = lang.alphabet();
    // A minimal forbidden word minus its last letter is a member, so every
    // candidate is a member extended by one letter.
    for (std::size_t len = 0; len <= lang.maxlen(); ++len) {
      for (auto const& u : lang.stratum(len)) {
        for (LetterId x = 0; x < alphabet.size(); ++x) {
          Word w = u;
          w.push_back(x);
          if (lang.contains(w)) {
            continue;
          }
          auto nbrs = deletion_neighbors(w);
          if (std::all_of(nbrs.begin(), nbrs.end(), [&](Word const& v) {
                return lang.contains(v);
              })) {
            forbidden.insert(std::move(w));
          }
        }
      }
    }
    return forbidden;
  }

  Language avoid_language(WordSet const& forbidden,
                          Alphabet const& alphabet,
                          std::size_t maxlen) {
    std::vector<std::vector<Word>> strata(maxlen + 1);
    auto avoids = [&](Word const& w) {
      return std::none_of(forbidden.begin(), forbidden.end(),
                          [&](Word const& f) { return is_subsequence(f, w); });
    };
    if (avoids(Word{})) {
      strata[0].push_back(Word{});
    }
    // Avoidance is closed under deletion, in particular under taking
    // prefixes, so extending the previous stratum is exhaustive.
    for (std::size_t len = 1; len <= maxlen; ++len) {
      for (auto const& u : strata[len - 1]) {
        for (LetterId x = 0; x < alphabet.size(); ++x) {
          Word w = u;
          w.push_back(x);
          if (avoids(w)) {
            strata[len].push_back(std::move(w));
          }
        }
      }
    }
    bool complete = strata[maxlen].empty();
    return Language(alphabet, std::move(strata), complete);
  }

  WordSet minimal_forbidden_factors(Language const& lang) {
    require_factor_closed(lang);
    WordSet forbidden;
    auto const& alphabet = lang.alphabet();
    if (!lang.contains(Word{})) {
      throw InputError("language does not contain the empty word");
    }
    std::size_t top = lang.complete() ? lang.maxlen() : lang.maxlen() - 1;
    if (lang.maxlen() == 0 && !lang.complete()) {
      return forbidden;
    }
    for (std::size_t len = 0; len <= top; ++len) {
      for (auto const& u : lang.stratum(len)) {
        for (LetterId x = 0; x < alphabet.size(); ++x) {
          Word w = u;
          w.push_back(x);
          if (lang.contains(w)) {
            continue;
          }
          Word tail(w.begin() + 1, w.end());
          if (lang.contains(tail)) {
            forbidden.insert(std::move(w));
          }
        }
      }
    }
    return forbidden;
  }

  bool is_antichain(WordSet const& words) {
    for (auto const& u : words) {
      for (auto const& w : words) {
        if (u != w && is_subsequence(u, w)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace geolang
