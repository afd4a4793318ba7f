#pragma once

// Isomorphism invariants of finite groups, used to identify enumerated groups.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "geolang/table.hpp"

namespace geolang {

  struct Fingerprint {
    std::size_t order = 0;
    bool abelian = false;
    std::map<std::size_t, std::size_t> order_histogram;  // element order -> count
    std::size_t center_order = 0;
    // Invariant factors of G/[G,G], descending, each > 1; empty if perfect.
    std::vector<std::uint64_t> abelianization;
    std::size_t derived_order = 0;

    std::size_t exponent() const;
    bool operator==(Fingerprint const&) const = default;
  };

  Fingerprint fingerprint(FiniteGroupTable const& t);

  // "order=8 abelian=no orders={1:1,2:1,4:6} center=2 ab=(2,2) derived=2"
  std::string to_string(Fingerprint const& f);

  // Invariant factors of a finite abelian group given by its table.
  std::vector<std::uint64_t> abelian_invariants(FiniteGroupTable const& t);

}  // namespace geolang
