#pragma once

// Finite groups as explicit multiplication tables.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "geolang/engine.hpp"

namespace geolang {

  using Element = std::uint32_t;

  struct TableGenerator {
    std::string name;
    Element element;
  };

  class FiniteGroupTable {
   public:
    // `mult` is row-major, order x order. Validates closure, identity,
    // inverses and associativity (exhaustive up to order 64, 20000 seeded
    // random triples above). Element names are the shortlex-least words over
    // the generators (and their inverses) found by breadth-first search; the
    // generators must generate.
    FiniteGroupTable(std::size_t order,
                     std::vector<Element> mult,
                     std::vector<TableGenerator> generators);

    std::size_t order() const noexcept { return order_; }
    Element mul(Element a, Element b) const { return mult_[a * order_ + b]; }
    Element inv(Element a) const { return inv_[a]; }
    Element identity() const noexcept { return id_; }
    Element power(Element a, std::int64_t e) const;
    std::size_t element_order(Element a) const;
    bool abelian() const;

    std::vector<TableGenerator> const& generators() const noexcept {
      return generators_;
    }
    // Generators followed by formal inverses; involutions are self-inverse.
    Alphabet const& alphabet() const noexcept { return alphabet_; }
    std::vector<Element> const& letter_elements() const noexcept {
      return letter_elements_;
    }
    Word const& name(Element a) const { return names_.at(a); }
    std::string name_text(Element a) const;

    // "order N" followed by N rows of N indices.
    void write(std::ostream& out) const;
    static std::vector<Element> read_mult(std::istream& in,
                                          std::size_t& order);

   private:
    std::size_t order_;
    std::vector<Element> mult_;
    std::vector<Element> inv_;
    Element id_;
    std::vector<TableGenerator> generators_;
    Alphabet alphabet_;
    std::vector<Element> letter_elements_;
    std::vector<Word> names_;
  };

  using TablePtr = std::shared_ptr<FiniteGroupTable const>;

  class TableEngine final : public GroupEngine {
   public:
    explicit TableEngine(TablePtr table, std::string label = "table");

    std::string describe() const override;
    Key identity_key() const override;
    Key multiply(Key const& g, Key const& h) const override;
    Key inverse(Key const& g) const override;
    std::optional<std::uint64_t> order() const override {
      return table_->order();
    }

    FiniteGroupTable const& table() const noexcept { return *table_; }
    TablePtr table_ptr() const noexcept { return table_; }
    static Key key_of(Element a) { return std::to_string(a); }
    Element element_of(Key const& k) const;

   private:
    TablePtr table_;
    std::string label_;
  };

  // Componentwise product; generators of the factors are renamed x_1 / x_2.
  FiniteGroupTable direct_product(FiniteGroupTable const& t1,
                                  FiniteGroupTable const& t2);

  // Multiplication table of the elements of a finite engine reachable from the
  // identity (all of them for a generating builtin alphabet).
  FiniteGroupTable table_from_engine(GroupEngine const& engine);

}  // namespace geolang
