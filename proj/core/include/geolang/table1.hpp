#pragma once

// The 7 x 7 table of two-relator groups <a,b | aba^-1 = v, bab^-1 = u>.

#include <optional>
#include <string>
#include <vector>

#include "geolang/fingerprint.hpp"

namespace geolang {

  enum class Status { pass, partial, fail };
  char const* status_name(Status s);

  struct Table1Cell {
    std::size_t row = 0;  // index into table1_rows (bab^-1)
    std::size_t col = 0;  // index into table1_cols (aba^-1)
    std::string claim;
    bool claim_infinite = false;
    std::optional<std::size_t> order;  // nullopt: coset cap exceeded
    std::optional<Fingerprint> fingerprint;
    std::string images;  // infinite claims: "a -> w, b -> w"
    std::vector<std::size_t> coset_balls;   // ball sizes in the coset graph
    std::vector<std::size_t> target_balls;  // ball sizes in the claimed group
    Status status = Status::fail;
    std::string detail;
  };

  std::vector<std::string> const& table1_rows();
  std::vector<std::string> const& table1_cols();
  // Claimed group per cell, row-major.
  std::string const& table1_claim(std::size_t row, std::size_t col);

  Table1Cell table1_cell(std::size_t row, std::size_t col,
                         std::size_t cap = 20000, std::size_t radius = 5);

  // All 49 cells in row-major order.
  std::vector<Table1Cell> table1_report(std::size_t cap = 20000);

  // Mirror cells (r, c) and (c, r) have the same outcome.
  bool transposition_symmetric(std::vector<Table1Cell> const& cells);

  // Throws MismatchedCell for the first failed cell.
  void require_table1(std::vector<Table1Cell> const& cells);

}  // namespace geolang
