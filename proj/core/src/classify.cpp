#include "geolang/classify.hpp"

#include <stdexcept>

namespace geolang {

  PEVerdict PEVerdict::pe(Alphabet a, WordSet f) {
    PEVerdict v;
    v.kind = Kind::pe;
    v.alphabet = std::move(a);
    v.forbidden = std::move(f);
    return v;
  }

  PEVerdict PEVerdict::not_pe(Alphabet a, Word w, Word u) {
    PEVerdict v;
    v.kind = Kind::not_pe;
    v.alphabet = std::move(a);
    v.witness = std::move(w);
    v.violation = std::move(u);
    return v;
  }

  PEVerdict PEVerdict::inconclusive(Alphabet a, std::size_t bound) {
    PEVerdict v;
    v.alphabet = std::move(a);
    v.bound = bound;
    return v;
  }

  char const* kind_name(PEVerdict::Kind k) {
    switch (k) {
      case PEVerdict::Kind::pe:
        return "PE";
      case PEVerdict::Kind::not_pe:
        return "NotPE";
      default:
        return "Inconclusive";
    }
  }

  namespace {
    // Shortlex-first (w, u) with w in L and u a single deletion of w not in L.
    std::optional<std::pair<Word, Word>> first_violation(Language const& L) {
      for (auto const& stratum : L.strata()) {
        for (auto const& w : stratum) {
          for (auto const& u : deletion_neighbors(w)) {
            if (!L.contains(u)) {
              return std::make_pair(w, u);
            }
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  PEVerdict pe_check(GeodesicLanguage const& g) {
    auto const& L = g.language;
    if (!L.complete()) {
      throw std::invalid_argument("pe_check needs a complete language");
    }
    if (auto v = first_violation(L)) {
      return PEVerdict::not_pe(L.alphabet(), v->first, v->second);
    }
    return PEVerdict::pe(L.alphabet(), minimal_forbidden_subsequences(L));
  }

  PEVerdict pe_check_bounded(GeodesicLanguage const& g) {
    auto const& L = g.language;
    if (auto v = first_violation(L)) {
      return PEVerdict::not_pe(L.alphabet(), v->first, v->second);
    }
    return PEVerdict::inconclusive(L.alphabet(), L.maxlen());
  }

  PEVerdict not_pe_from_conjugation(GenSet const& gs, LetterId a, LetterId b) {
    auto const& A = gs.alphabet();
    Word w{a, b, A.inverse(a)};
    if (is_geodesic(gs, w)) {
      return PEVerdict::not_pe(A, w, Word{a, A.inverse(a)});
    }
    return PEVerdict::inconclusive(A, 3);
  }

  bool recheck(GenSet const& gs, PEVerdict const& v) {
    if (v.kind != PEVerdict::Kind::not_pe) {
      return false;
    }
    return is_subsequence(v.violation, v.witness) && is_geodesic(gs, v.witness)
           && !is_geodesic(gs, v.violation);
  }

  bool recheck(GeodesicLanguage const& g, PEVerdict const& v) {
    auto const& L = g.language;
    switch (v.kind) {
      case PEVerdict::Kind::pe: {
        auto back = avoid_language(v.forbidden, L.alphabet(), L.maxlen() + 1);
        return L.complete() && back.complete()
               && back.same_members_up_to(L, L.maxlen() + 1);
      }
      case PEVerdict::Kind::not_pe:
        return v.violation.size() < v.witness.size()
               && is_subsequence(v.violation, v.witness)
               && L.contains(v.witness) && !L.contains(v.violation);
      default:
        return true;
    }
  }

  std::string format_verdict(PEVerdict const& v) {
    std::string out = "verdict: ";
    out += kind_name(v.kind);
    out += "\n";
    switch (v.kind) {
      case PEVerdict::Kind::pe:
        out += "forbidden: " + std::to_string(v.forbidden.size()) + "\n";
        for (auto const& w : v.forbidden) {
          out += "  " + format_word(w, v.alphabet) + "\n";
        }
        break;
      case PEVerdict::Kind::not_pe:
        out += "witness: " + format_word(v.witness, v.alphabet) + "\n";
        out += "violation: " + format_word(v.violation, v.alphabet) + "\n";
        break;
      default:
        out += "bound: " + std::to_string(v.bound) + "\n";
    }
    return out;
  }

}  // namespace geolang
