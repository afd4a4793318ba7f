#pragma once

// Brute-force reference computations: every word up to a length bound is
// evaluated from scratch, with no sharing between words.

#include <map>

#include "geolang/geodesics.hpp"

namespace geolang {

  // Minimum length of a word of length <= maxlen representing each element
  // reached.
  std::map<Key, std::size_t> naive_distances(GenSet const& gs,
                                             std::size_t maxlen);

  // Words of length <= maxlen no longer than any other word (of length
  // <= maxlen) for the same element, i.e. the geodesics up to maxlen.
  Language naive_geodesics(GenSet const& gs, std::size_t maxlen);

}  // namespace geolang
