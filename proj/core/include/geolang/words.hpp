#pragma once

// Free-monoid words over inverse-closed alphabets, the subsequence (Higman)
// and factor orders, and minimal forbidden-subword computations.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace geolang {

  using LetterId = std::uint32_t;

  struct Letter {
    std::string name;
    std::string inverse_name;

    bool operator==(Letter const&) const = default;
  };

  // An ordered, inverse-closed set of letters. The declared order is the
  // order used for shortlex comparison of words.
  class Alphabet {
   public:
    Alphabet() = default;
    // Throws InputError if names repeat or the inverse pairing is not an
    // involution on the given letters.
    explicit Alphabet(std::vector<Letter> letters);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter const& operator[](LetterId id) const { return letters_[id]; }
    LetterId inverse(LetterId id) const { return inverse_[id]; }
    bool self_inverse(LetterId id) const { return inverse_[id] == id; }
    std::optional<LetterId> find(std::string_view name) const;
    std::vector<Letter> const& letters() const noexcept { return letters_; }

    bool operator==(Alphabet const& other) const {
      return letters_ == other.letters_;
    }

   private:
    std::vector<Letter> letters_;
    std::vector<LetterId> inverse_;
  };

  // Builds an alphabet from generator names: each name x is followed by a
  // formal inverse named "x^-1".
  Alphabet alphabet_with_inverses(std::vector<std::string> const& names);

  using Word = std::vector<LetterId>;

  // Shortlex order: shorter first, then lexicographic in declared letter order.
  bool shortlex_less(Word const& u, Word const& w);

  struct ShortlexLess {
    bool operator()(Word const& u, Word const& w) const {
      return shortlex_less(u, w);
    }
  };

  using WordSet = std::set<Word, ShortlexLess>;

  // Whitespace separated letter names; "x^-1" names the inverse of x.
  Word parse_word(std::string_view text, Alphabet const& alphabet);
  // Inverse of parse_word; the empty word renders as "1".
  std::string format_word(Word const& w, Alphabet const& alphabet);

  Word invert_word(Word const& w, Alphabet const& alphabet);

  // Greedy left-to-right matching.
  bool is_subsequence(Word const& u, Word const& w);
  bool is_factor(Word const& u, Word const& w);

  // All words obtained by deleting exactly one letter, deduplicated and in
  // shortlex order.
  std::vector<Word> deletion_neighbors(Word const& w);

  // A finite slice of a language: strata[l] holds the members of length l in
  // lexicographic order. `complete` asserts there are no members longer than
  // maxlen().
  class Language {
   public:
    Language(Alphabet alphabet, std::size_t maxlen, bool complete);
    Language(Alphabet alphabet, std::vector<std::vector<Word>> strata,
             bool complete);

    Alphabet const& alphabet() const noexcept { return alphabet_; }
    std::size_t maxlen() const noexcept { return strata_.size() - 1; }
    bool complete() const noexcept { return complete_; }
    std::vector<std::vector<Word>> const& strata() const noexcept {
      return strata_;
    }
    std::vector<Word> const& stratum(std::size_t len) const {
      return strata_.at(len);
    }

    // Exact below maxlen. Beyond maxlen: false for complete languages,
    // std::out_of_range otherwise.
    bool contains(Word const& w) const;
    std::size_t size() const;
    // Members in shortlex order.
    std::vector<Word> words() const;
    std::vector<std::size_t> stratum_sizes() const;

    // Inserts keeping the stratum sorted. The word length must be <= maxlen.
    void insert(Word const& w);

    // Same alphabet and the same members up to min(maxlen, other.maxlen).
    bool same_members_up_to(Language const& other, std::size_t len) const;

   private:
    Alphabet alphabet_;
    std::vector<std::vector<Word>> strata_;
    bool complete_;
  };

  // One word per line, shortlex, the empty word as "1".
  std::string format_language(Language const& lang);

  // Every member's single-deletion neighbors are members; throws
  // NotDownwardClosed naming the shortlex-first offending pair otherwise.
  void require_deletion_closed(Language const& lang);
  void require_factor_closed(Language const& lang);

  // Words of length <= maxlen+1 outside L all of whose single deletions are in
  // L. Requires L complete and deletion-closed.
  WordSet minimal_forbidden_subsequences(Language const& lang);

  // All words of length <= maxlen containing no member of `forbidden` as a
  // subsequence. Complete iff the stratum at maxlen is empty.
  Language avoid_language(WordSet const& forbidden, Alphabet const& alphabet,
                          std::size_t maxlen);

  // Words outside L whose maximal proper factors are in L, up to maxlen+1
  // for complete languages and up to maxlen for truncated ones.
  WordSet minimal_forbidden_factors(Language const& lang);

  bool is_antichain(WordSet const& words);

}  // namespace geolang
