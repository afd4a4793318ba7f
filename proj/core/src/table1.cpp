#include "geolang/table1.hpp"

#include <functional>
#include <map>

#include "geolang/catalog.hpp"
#include "geolang/coset.hpp"
#include "geolang/errors.hpp"
#include "geolang/geodesics.hpp"
#include "geolang/parallel.hpp"

namespace geolang {

  char const* status_name(Status s) {
    switch (s) {
      case Status::pass:
        return "PASS";
      case Status::partial:
        return "PARTIAL";
      default:
        return "FAIL";
    }
  }

  std::vector<std::string> const& table1_rows() {
    static std::vector<std::string> const rows{
        "a^-1", "b^-1 a", "b^-1 a^-1", "a b", "a a", "a^-1 b", "a^-1 a^-1"};
    return rows;
  }

  std::vector<std::string> const& table1_cols() {
    static std::vector<std::string> const cols{
        "b^-1", "a^-1 b", "a^-1 b^-1", "b a", "b b", "b^-1 a", "b^-1 b^-1"};
    return cols;
  }

  namespace {

    std::string const Z3Z = "Z/3 x| Z";
    std::string const Z5Z = "Z/5 x| Z";
    std::string const Z6Z2 = "Z/6 x Z/2";
    std::string const SL2 = "SL2(Z/3)";

    // Lower triangle, row by row.
    std::vector<std::vector<std::string>> const& lower() {
      static std::vector<std::vector<std::string>> const t{
          {"Q8"},
          {Z3Z, "1"},
          {Z6Z2, "1", SL2},
          {Z3Z, "1", "1", "1"},
          {"Z/2", "BS(1,2)", "S3", Z3Z, "1"},
          {Z6Z2, "1", "Z/5", "1", "S3", SL2},
          {"Z/6", "Z", "Z/6", Z5Z, "Z/3", "Z/6", "Z/9 x| Z/3"},
      };
      return t;
    }

    bool infinite_claim(std::string const& name) {
      return name == "Z" || name == Z3Z || name == Z5Z || name == "BS(1,2)";
    }

    TablePtr claimed_table(std::string const& name) {
      if (name == "1") {
        return trivial_table();
      }
      if (name == "Z/2" || name == "Z/3" || name == "Z/5" || name == "Z/6") {
        return cyclic_table(std::stoul(name.substr(2)));
      }
      if (name == Z6Z2) {
        return std::make_shared<FiniteGroupTable const>(
            direct_product(*cyclic_table(6), *cyclic_table(2)));
      }
      if (name == "Q8") {
        return q8_table();
      }
      if (name == SL2) {
        return sl2_3_matrix_table();
      }
      if (name == "S3") {
        return s3_table();
      }
      if (name == "Z/9 x| Z/3") {
        return z9_z3_table();
      }
      throw std::logic_error("no table for " + name);
    }

    EnginePtr claimed_engine(std::string const& name) {
      if (name == "Z") {
        return std::make_shared<ExtensionEngine const>(
            trivial_table(), 1, std::vector<std::vector<Element>>{});
      }
      if (name == Z3Z) {
        return semidirect(3, 2, std::nullopt);
      }
      if (name == Z5Z) {
        return semidirect(5, 2, std::nullopt);
      }
      return std::make_shared<BS12Engine const>();
    }

    std::vector<std::size_t> cumulative(std::vector<std::size_t> spheres) {
      for (std::size_t i = 1; i < spheres.size(); ++i) {
        spheres[i] += spheres[i - 1];
      }
      return spheres;
    }

    // Images of a and b over the target's builtin letters, shortest first,
    // such that the relators hold and the images generate (every builtin
    // letter within distance 4).
    std::optional<std::pair<Word, Word>> find_images(Presentation const& p,
                                                     EnginePtr const& target) {
      auto const& B = target->builtin_letters();
      std::vector<Word> words{Word{}};
      for (std::size_t len = 1, start = 0; len <= 3; ++len) {
        std::size_t end = words.size();
        for (std::size_t i = start; i < end; ++i) {
          for (LetterId x = 0; x < B.size(); ++x) {
            Word w = words[i];
            w.push_back(x);
            words.push_back(std::move(w));
          }
        }
        start = end;
      }
      for (auto const& wa : words) {
        for (auto const& wb : words) {
          if (!check_homomorphism(p, *target, {wa, wb})) {
            continue;
          }
          GenSet gs(target, p.alphabet, {wa, invert_word(wa, B), wb,
                                         invert_word(wb, B)},
                    image_keys(p, *target, {wa, wb}));
          auto m = ball(gs, 4);
          bool onto = true;
          for (LetterId x = 0; x < B.size() && onto; ++x) {
            onto = m.dist.contains(target->letter_key(x));
          }
          if (onto) {
            return std::make_pair(wa, wb);
          }
        }
      }
      return std::nullopt;
    }

    std::string inverse_text(std::string const& w) {
      auto A = alphabet_with_inverses({"a", "b"});
      return format_word(invert_word(parse_word(w, A), A), A);
    }

    std::string join(std::vector<std::size_t> const& v) {
      std::string s;
      for (auto x : v) {
        s += (s.empty() ? "" : " ") + std::to_string(x);
      }
      return s;
    }

  }  // namespace

  std::string const& table1_claim(std::size_t row, std::size_t col) {
    return row >= col ? lower()[row][col] : lower()[col][row];
  }

  Table1Cell table1_cell(std::size_t row, std::size_t col, std::size_t cap,
                         std::size_t radius) {
    Table1Cell c;
    c.row = row;
    c.col = col;
    c.claim = table1_claim(row, col);
    c.claim_infinite = infinite_claim(c.claim);
    Presentation p({"a", "b"},
                   {"a b a^-1 " + inverse_text(table1_cols()[col]),
                    "b a b^-1 " + inverse_text(table1_rows()[row])});
    ToddCoxeter tc(p, cap);
    if (tc.run()) {
      auto t = tc.table();
      c.order = t.order();
      c.fingerprint = fingerprint(t);
      if (c.claim_infinite) {
        c.detail = "finite group of order " + std::to_string(t.order())
                   + " but claimed infinite";
        return c;
      }
      auto want = fingerprint(*claimed_table(c.claim));
      if (*c.fingerprint == want) {
        c.status = Status::pass;
      } else {
        c.detail = "fingerprint differs from " + c.claim + ": "
                   + to_string(want);
        auto dic = semidirect(3, 2, 4);
        auto const& t12 = dynamic_cast<TableEngine const&>(*dic).table();
        if (*c.fingerprint == fingerprint(t12)) {
          c.detail += "; it matches Z/3 x| Z/4";
        }
      }
      return c;
    }
    if (!c.claim_infinite) {
      c.detail = "coset cap exceeded but claimed finite";
      return c;
    }
    auto target = claimed_engine(c.claim);
    auto images = find_images(p, target);
    if (!images) {
      c.detail = "no surjection onto " + c.claim + " found";
      return c;
    }
    auto const& B = target->builtin_letters();
    c.images = "a -> " + format_word(images->first, B) + ", b -> "
               + format_word(images->second, B);
    GenSet gs(target, p.alphabet,
              {images->first, invert_word(images->first, B), images->second,
               invert_word(images->second, B)},
              image_keys(p, *target, {images->first, images->second}));
    c.target_balls = cumulative(ball(gs, radius).sphere_sizes());
    auto spheres = tc.sphere_sizes(radius);
    if (!spheres) {
      c.detail = "coset graph incomplete within radius "
                 + std::to_string(radius);
      return c;
    }
    c.coset_balls = cumulative(*spheres);
    if (c.coset_balls == c.target_balls) {
      c.status = Status::partial;
    } else {
      c.detail = "ball sizes differ: coset graph " + join(c.coset_balls)
                 + ", claimed group " + join(c.target_balls);
    }
    return c;
  }

  std::vector<Table1Cell> table1_report(std::size_t cap) {
    std::vector<Table1Cell> cells(49);
    parallel_tasks(49, [&](std::size_t i) {
      cells[i] = table1_cell(i / 7, i % 7, cap);
    });
    return cells;
  }

  bool transposition_symmetric(std::vector<Table1Cell> const& cells) {
    for (auto const& c : cells) {
      auto const& m = cells[c.col * 7 + c.row];
      if (c.order != m.order || c.fingerprint != m.fingerprint
          || c.coset_balls != m.coset_balls) {
        return false;
      }
    }
    return true;
  }

  void require_table1(std::vector<Table1Cell> const& cells) {
    for (auto const& c : cells) {
      if (c.status == Status::fail) {
        throw MismatchedCell("cell (" + table1_rows()[c.row] + ", "
                             + table1_cols()[c.col] + "): " + c.detail);
      }
    }
  }

}  // namespace geolang
