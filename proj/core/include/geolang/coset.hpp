#pragma once

// Todd-Coxeter coset enumeration over the trivial subgroup (HLT strategy:
// relator scanning with coincidence processing and a hard cap on the number
// of cosets ever defined).

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "geolang/presentation.hpp"
#include "geolang/table.hpp"

namespace geolang {

  struct CapExceeded {
    std::size_t cap;
    std::size_t live;  // live cosets when the cap was hit
  };

  class ToddCoxeter {
   public:
    ToddCoxeter(Presentation p, std::size_t max_cosets);

    // Runs until the table closes or the cap is hit; returns completeness.
    bool run();
    bool complete() const noexcept { return complete_; }
    std::size_t defined_cosets() const noexcept { return parent_.size(); }
    std::size_t live_cosets() const;

    // Regular-representation table with elements numbered in BFS order over
    // the coset graph. Requires complete().
    FiniteGroupTable table() const;

    // Sphere sizes of the (possibly partial) coset graph around the identity
    // coset. Every word of length <= radius must trace through defined
    // entries, otherwise nullopt. Distinct cosets may still be equal in the
    // group, so these bound the true sphere data from above.
    std::optional<std::vector<std::size_t>> sphere_sizes(
        std::size_t radius) const;

    Presentation const& presentation() const noexcept { return p_; }

   private:
    static constexpr std::int32_t undefined = -1;
    struct CapHit {};

    std::int32_t& entry(std::size_t c, std::size_t x) {
      return table_[c * cols_ + x];
    }
    std::int32_t entry(std::size_t c, std::size_t x) const {
      return table_[c * cols_ + x];
    }
    bool live(std::size_t c) const { return parent_[c] == c; }
    std::size_t rep(std::size_t c) const;
    std::size_t inv(std::size_t x) const { return p_.alphabet.inverse(x); }

    void define(std::size_t c, std::size_t x);
    void scan_and_fill(std::size_t c, Word const& w);
    void coincidence(std::size_t a, std::size_t b);
    void merge(std::size_t a, std::size_t b, std::vector<std::size_t>& q);
    bool pass();
    bool relators_close() const;

    Presentation p_;
    std::size_t cap_;
    std::size_t cols_;
    std::vector<std::int32_t> table_;
    mutable std::vector<std::size_t> parent_;
    bool complete_ = false;
    bool changed_ = false;
  };

  using CosetResult = std::variant<FiniteGroupTable, CapExceeded>;

  // Deterministic given the declared generator order.
  CosetResult coset_enumerate(Presentation const& p, std::size_t max_cosets);

}  // namespace geolang
