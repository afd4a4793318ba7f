#pragma once

// Concrete groups used throughout: small tables built directly or by coset
// enumeration of their standard presentations.

#include <string>
#include <vector>

#include "geolang/engines.hpp"
#include "geolang/table.hpp"

namespace geolang {

  inline constexpr std::size_t default_coset_cap = 20000;

  // Table of <gens | relators>; throws ResourceCap if the enumeration does
  // not close within `cap` cosets.
  TablePtr presentation_table(std::vector<std::string> const& gens,
                              std::vector<std::string> const& relators,
                              std::size_t cap = default_coset_cap);

  TablePtr trivial_table();
  TablePtr cyclic_table(std::size_t n, std::string const& gen = "g");
  // Elements 1, -1, i, -i, j, -j, k, -k in that order; generators i and j.
  TablePtr q8_table();
  // Permutations of {0,1,2}; generators a = (0 1), b = (1 2).
  TablePtr s3_table();
  // 2x2 matrices of determinant 1 over F_3.
  TablePtr sl2_3_matrix_table();

  // <i,j,k | ijk^-1, jki^-1, kij^-1, i^4>
  TablePtr q8_presented();
  // <a,b,t | a^2, b^2, (ab)^4, ababt>
  TablePtr d8_table();
  // <a,b | a^3, b^2, (ab)^3>
  TablePtr a4_table();
  // <a,b | a^6, b^4, ab^-1ab^-1ab, a^3 b^2>; without the last relator the
  // abelianization is Z/6 and the enumeration does not close.
  TablePtr sl2_3_presented();
  // <a,b | a^2, b^2, (ab)^3>
  TablePtr s3_presented();

  // Z/n x| Z/m (or Z when m is empty) tabulated when finite.
  EnginePtr semidirect(std::uint64_t n, std::uint64_t s,
                       std::optional<std::uint64_t> m,
                       std::string const& normal = "a",
                       std::string const& acting = "t");

  // Z/9 x| Z/3 with y x y^-1 = x^4.
  TablePtr z9_z3_table();

  EnginePtr table_engine(TablePtr t, std::string const& label);

}  // namespace geolang
