#include "geolang/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "geolang/coset.hpp"
#include "geolang/errors.hpp"

namespace geolang {

  TablePtr presentation_table(std::vector<std::string> const& gens,
                              std::vector<std::string> const& relators,
                              std::size_t cap) {
    auto r = coset_enumerate(Presentation(gens, relators), cap);
    if (auto* t = std::get_if<FiniteGroupTable>(&r)) {
      return std::make_shared<FiniteGroupTable const>(std::move(*t));
    }
    throw ResourceCap("coset enumeration exceeded " + std::to_string(cap)
                      + " cosets");
  }

  TablePtr trivial_table() {
    return std::make_shared<FiniteGroupTable const>(
        1, std::vector<Element>{0}, std::vector<TableGenerator>{});
  }

  TablePtr cyclic_table(std::size_t n, std::string const& gen) {
    std::vector<Element> mult(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mult[i * n + j] = static_cast<Element>((i + j) % n);
      }
    }
    std::vector<TableGenerator> gens;
    if (n > 1) {
      gens.push_back({gen, 1});
    }
    return std::make_shared<FiniteGroupTable const>(n, std::move(mult),
                                                    std::move(gens));
  }

  TablePtr q8_table() {
    // unit index: 0 = 1, 1 = i, 2 = j, 3 = k; a product is a unit and a sign
    static constexpr std::array<std::array<unsigned, 4>, 4> unit{{
        {{0, 1, 2, 3}},
        {{1, 0, 3, 2}},
        {{2, 3, 0, 1}},
        {{3, 2, 1, 0}},
    }};
    static constexpr std::array<std::array<bool, 4>, 4> negative{{
        {{false, false, false, false}},
        {{false, true, false, true}},
        {{false, true, true, false}},
        {{false, false, true, true}},
    }};
    std::vector<Element> mult(64);
    for (Element x = 0; x < 8; ++x) {
      for (Element y = 0; y < 8; ++y) {
        unsigned ux = x / 2, uy = y / 2;
        bool neg = (x % 2) ^ (y % 2) ^ negative[ux][uy];
        mult[x * 8 + y] = static_cast<Element>(2 * unit[ux][uy] + neg);
      }
    }
    return std::make_shared<FiniteGroupTable const>(
        8, std::move(mult), std::vector<TableGenerator>{{"i", 2}, {"j", 4}});
  }

  TablePtr s3_table() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](std::array<int, 3> const& q) {
      return static_cast<Element>(std::find(perms.begin(), perms.end(), q)
                                  - perms.begin());
    };
    std::vector<Element> mult(36);
    for (std::size_t x = 0; x < 6; ++x) {
      for (std::size_t y = 0; y < 6; ++y) {
        // (xy)(k) = x(y(k)): apply y first
        std::array<int, 3> q;
        for (int k = 0; k < 3; ++k) {
          q[k] = perms[x][perms[y][k]];
        }
        mult[x * 6 + y] = index(q);
      }
    }
    return std::make_shared<FiniteGroupTable const>(
        6, std::move(mult),
        std::vector<TableGenerator>{{"a", index({1, 0, 2})},
                                    {"b", index({0, 2, 1})}});
  }

  TablePtr sl2_3_matrix_table() {
    using M = std::array<int, 4>;  // row-major
    std::vector<M> ms;
    for (int v = 0; v < 81; ++v) {
      M m{v % 3, v / 3 % 3, v / 9 % 3, v / 27};
      if ((m[0] * m[3] - m[1] * m[2] + 9) % 3 == 1) {
        ms.push_back(m);
      }
    }
    std::map<M, Element> index;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      index[ms[i]] = static_cast<Element>(i);
    }
    std::size_t n = ms.size();
    std::vector<Element> mult(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto const &a = ms[x], &b = ms[y];
        M c{(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3,
            (a[2] * b[0] + a[3] * b[2]) % 3, (a[2] * b[1] + a[3] * b[3]) % 3};
        mult[x * n + y] = index.at(c);
      }
    }
    return std::make_shared<FiniteGroupTable const>(
        n, std::move(mult),
        std::vector<TableGenerator>{{"a", index.at({2, 2, 0, 2})},
                                    {"b", index.at({0, 2, 1, 0})}});
  }

  TablePtr q8_presented() {
    return presentation_table({"i", "j", "k"},
                              {"i j k^-1", "j k i^-1", "k i j^-1", "i i i i"});
  }

  TablePtr d8_table() {
    return presentation_table({"a", "b", "t"},
                              {"a a", "b b", "a b a b a b a b", "a b a b t"});
  }

  TablePtr a4_table() {
    return presentation_table({"a", "b"}, {"a a a", "b b", "a b a b a b"});
  }

  TablePtr sl2_3_presented() {
    return presentation_table(
        {"a", "b"},
        {"a a a a a a", "b b b b", "a b^-1 a b^-1 a b", "a a a b b"});
  }

  TablePtr s3_presented() {
    return presentation_table({"a", "b"}, {"a a", "b b", "a b a b a b"});
  }

  EnginePtr semidirect(std::uint64_t n, std::uint64_t s,
                       std::optional<std::uint64_t> m,
                       std::string const& normal, std::string const& acting) {
    auto e = std::make_shared<ZmSemidirectEngine const>(n, s, m, normal, acting);
    if (!m) {
      return e;
    }
    return table_engine(
        std::make_shared<FiniteGroupTable const>(table_from_engine(*e)),
        e->describe());
  }

  TablePtr z9_z3_table() {
    ZmSemidirectEngine e(9, 4, 3, "x", "y");
    return std::make_shared<FiniteGroupTable const>(table_from_engine(e));
  }

  EnginePtr table_engine(TablePtr t, std::string const& label) {
    return std::make_shared<TableEngine const>(std::move(t), label);
  }

}  // namespace geolang
