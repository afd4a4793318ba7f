#pragma once

// Plain-text reproduction reports with PASS / PARTIAL / FAIL lines and a
// closing "total=... pass=... partial=... fail=..." summary.

#include <functional>
#include <string>
#include <vector>

#include "geolang/table1.hpp"

namespace geolang {

  std::string version_header();

  class Report {
   public:
    void add(Status s, std::string const& text);
    void note(std::string const& text);
    void section(std::string const& title);
    void append(Report const& other);

    std::size_t pass() const noexcept { return pass_; }
    std::size_t partial() const noexcept { return partial_; }
    std::size_t fail() const noexcept { return fail_; }
    std::size_t total() const noexcept { return pass_ + partial_ + fail_; }
    bool ok() const noexcept { return fail_ == 0 && total() > 0; }

    std::string const& body() const noexcept { return body_; }
    std::string summary() const;
    // Version header, body and summary.
    std::string render() const;

   private:
    std::string body_;
    std::size_t pass_ = 0;
    std::size_t partial_ = 0;
    std::size_t fail_ = 0;
  };

  Report repro_q8();
  Report repro_d8();
  Report repro_table1();
  Report repro_qxq();
  Report repro_quotients();
  Report repro_extension();
  Report repro_znc2(std::size_t random_per_config = 100);
  Report repro_lift();
  Report repro_cannon(std::size_t maxlen = 6);
  Report repro_properties();

  struct Criterion {
    int id;
    std::string title;
    std::function<Report()> run;
  };

  // The eight acceptance criteria in order.
  std::vector<Criterion> acceptance_criteria();

  // Every section plus one line per acceptance criterion.
  struct FullRepro {
    Report report;
    bool criteria_ok = false;
  };
  FullRepro repro_all();

  // Names accepted by repro(): q8 d8 table1 qxq extension znc2 quotients
  // lift cannon properties. Throws InputError for anything else.
  Report repro(std::string const& target, std::size_t cannon_maxlen = 6);

}  // namespace geolang
