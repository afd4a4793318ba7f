#pragma once

// Constructive checks of the geodesic-language results: generating-set
// surveys, the finite-by-abelian construction, witness selection in
// Z^n x| Z/2, quotient families, and lifting witnesses through quotients.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "geolang/classify.hpp"
#include "geolang/engines.hpp"
#include "geolang/geodesics.hpp"
#include "geolang/table.hpp"

namespace geolang {

  ////////////////////////////////////////////////////////////////////////
  // Q8

  struct SurveyEntry {
    std::string atoms;  // e.g. "{-1} {i} {j}"
    bool generating = false;
    std::optional<GenSet> genset;
    std::optional<PEVerdict> verdict;
    std::vector<std::size_t> strata;
    bool has_inverse_pairs = false;  // F contains a a^-1 for every letter
  };

  struct Survey {
    std::vector<SurveyEntry> subsets;  // all 16 inverse-closed subsets
    std::size_t generating() const;
    std::size_t pe() const;
  };

  // Every inverse-closed subset of Q8 \ {1} built from the atoms {-1},
  // {i,-i}, {j,-j}, {k,-k}.
  Survey q8_survey();

  // True iff `f` contains a a^-1 for every letter a of `alphabet`.
  bool contains_inverse_pairs(WordSet const& f, Alphabet const& alphabet);

  ////////////////////////////////////////////////////////////////////////
  // Finite-by-free-abelian

  struct ExtensionCheck {
    std::shared_ptr<ExtensionEngine const> engine;
    std::optional<GenSet> genset;
    WordSet claimed;
    std::size_t bound = 0;
    bool agrees = false;
    std::vector<std::size_t> strata;
  };

  // Genset: every non-identity element of H (letters h<index>) followed by
  // the free letters; checks Geo against the claimed forbidden set up to
  // `bound`.
  ExtensionCheck extension_genset(TablePtr h, std::size_t rank,
                                  std::vector<std::vector<Element>> actions,
                                  std::size_t bound = 6);

  ////////////////////////////////////////////////////////////////////////
  // Z^n x| Z/2

  struct ZnC2Witness {
    std::string subcase;  // "1A", "1B", "2A", "2B"
    LetterId a = 0;
    LetterId b = 0;
    PEVerdict certificate;
  };

  // Selects a and b by the extremal rules for the subcase and checks that
  // a b a^-1 differs from every product of at most two letters. Throws
  // SelectionFailed otherwise. The genset's engine must be a ZnC2Engine.
  ZnC2Witness znc2_witness(GenSet const& gs);

  // A random valid symmetric genset: 2..5 declared letters with coordinates
  // in [-3, 3], kept only if the standard generators lie in its ball of
  // radius 6.
  GenSet random_znc2_genset(std::shared_ptr<ZnC2Engine const> const& engine,
                            std::mt19937_64& rng);

  ////////////////////////////////////////////////////////////////////////
  // Quotient families

  enum class Family {
    z5_case_e,      // Z/5 x| Z/4m, s = 3, {ax, xa}
    bsquot_z,       // Z/n x| Z, s = 2, {at, ta}
    bsquot_finite,  // Z/n x| Z/m, s = 2, {at, ta}
    z7_z3,          // Z/7 x| Z/3, s = 2, {at, t}
    z9_z3,          // Z/9 x| Z/3, s = 4, {x, y}
    s3_inv,         // S3, two involutions
    z5_z,           // Z/5 x| Z, s = 3, {x, y = x^3 a}
  };

  struct FamilyWitness {
    std::string name;
    std::optional<GenSet> genset;
    Word witness;
    std::optional<std::size_t> distance;  // fresh ball of radius 3
    PEVerdict certificate;
    std::string note;  // parameters outside the derivation, if any
  };

  // Throws BadParams for parameters the construction does not cover.
  FamilyWitness quotient_family_witness(Family f, std::uint64_t n = 0,
                                        std::uint64_t m = 0);

  // Distance of the witness word's element, from a ball of radius
  // `radius` (nullopt when farther).
  std::optional<std::size_t> witness_distance(GenSet const& gs, Word const& w,
                                              std::size_t radius = 3);

  // Certificate for a b a^-1 given as a word, or Inconclusive when it is not
  // at distance 3.
  FamilyWitness conjugation_witness(std::string name, GenSet gs,
                                    std::string const& witness);

  ////////////////////////////////////////////////////////////////////////
  // Lifting through quotients

  struct QuotientSpec {
    GenSet source;
    EnginePtr target;
    std::vector<Word> images;  // per source letter, over target builtins
  };

  // pi(g a) = pi(g) pi(a) along every edge of the source ball of radius 4.
  bool homomorphism_on_ball(QuotientSpec const& q, std::size_t radius = 4);

  struct Lift {
    std::optional<GenSet> target_genset;
    Word target_witness;
    Word lifted;
    PEVerdict certificate;
  };

  // The target genset has one letter per distinct non-identity image (named
  // after the first source letter with that image, which is also its lift).
  GenSet image_genset(QuotientSpec const& q, std::vector<LetterId>& section);

  // Lifts a target witness a w a^-1 letter by letter, ending with the formal
  // inverse of the first lifted letter. Throws InputError unless the target
  // witness is geodesic and LiftNotGeodesic if the lift is not.
  Lift lift_witness(QuotientSpec const& q, std::string const& target_witness);

}  // namespace geolang
