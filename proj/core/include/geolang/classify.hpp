#pragma once

// The piecewise-excluding decision for geodesic languages.

#include <string>

#include "geolang/geodesics.hpp"
#include "geolang/words.hpp"

namespace geolang {

  struct PEVerdict {
    enum class Kind { pe, not_pe, inconclusive };

    Kind kind = Kind::inconclusive;
    Alphabet alphabet;
    WordSet forbidden;  // pe
    Word witness;       // not_pe: a geodesic
    Word violation;     // not_pe: a non-geodesic subsequence of the witness
    std::size_t bound = 0;  // inconclusive

    static PEVerdict pe(Alphabet a, WordSet f);
    static PEVerdict not_pe(Alphabet a, Word w, Word u);
    static PEVerdict inconclusive(Alphabet a, std::size_t bound);
  };

  char const* kind_name(PEVerdict::Kind k);

  // Exact decision for a complete language: PE with the minimal forbidden
  // antichain when deletion-closed, otherwise the shortlex-first violation
  // (shortlex on the witness, then on the deleted word).
  PEVerdict pe_check(GeodesicLanguage const& g);

  // Refutation search on a truncated language. Never returns PE.
  PEVerdict pe_check_bounded(GeodesicLanguage const& g);

  // Tries the witness a b a^-1 (with violation a a^-1).
  PEVerdict not_pe_from_conjugation(GenSet const& gs, LetterId a, LetterId b);

  // Independent re-check of a certificate with fresh balls: the witness is
  // geodesic, the violation is not, and it is a subsequence of the witness.
  // For PE verdicts, checks that the forbidden set reproduces `g`.
  bool recheck(GenSet const& gs, PEVerdict const& v);
  bool recheck(GeodesicLanguage const& g, PEVerdict const& v);

  // "verdict: ..." followed by forbidden / witness / violation / bound lines.
  std::string format_verdict(PEVerdict const& v);

}  // namespace geolang
