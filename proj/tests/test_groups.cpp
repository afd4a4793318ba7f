#include <doctest.h>

#include <random>
#include <sstream>

#include "geolang/catalog.hpp"
#include "geolang/coset.hpp"
#include "geolang/engines.hpp"
#include "geolang/errors.hpp"
#include "geolang/fingerprint.hpp"
#include "geolang/groupfile.hpp"
#include "geolang/table.hpp"

using namespace geolang;

namespace {

  Key random_element(GroupEngine const& e, std::mt19937_64& rng,
                     std::size_t len) {
    auto const& B = e.builtin_letters();
    std::uniform_int_distribution<LetterId> letter(0, B.size() - 1);
    Key g = e.identity_key();
    for (std::size_t i = 0; i < len; ++i) {
      g = e.act(g, letter(rng));
    }
    return g;
  }

  void check_group_axioms(GroupEngine const& e, bool has_normal_form = true) {
    std::mt19937_64 rng(3);
    Key id = e.identity_key();
    for (int i = 0; i < 200; ++i) {
      Key g = random_element(e, rng, 8);
      Key h = random_element(e, rng, 8);
      Key k = random_element(e, rng, 8);
      CHECK(e.multiply(e.multiply(g, h), k) == e.multiply(g, e.multiply(h, k)));
      CHECK(e.multiply(g, id) == g);
      CHECK(e.multiply(id, g) == g);
      CHECK(e.multiply(g, e.inverse(g)) == id);
      if (has_normal_form) {
        CHECK(evaluate(e, e.normal_form(g)) == g);
      }
    }
  }

  std::vector<Element> cyclic_mult(std::size_t n) {
    std::vector<Element> m(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        m[a * n + b] = static_cast<Element>((a + b) % n);
      }
    }
    return m;
  }

}  // namespace

TEST_CASE("table validation") {
  CHECK_NOTHROW(FiniteGroupTable(4, cyclic_mult(4), {{"g", 1}}));
  auto bad = cyclic_mult(4);
  bad[5] = 3;
  CHECK_THROWS_AS(FiniteGroupTable(4, bad, {{"g", 1}}), InputError);
  CHECK_THROWS_AS(FiniteGroupTable(4, cyclic_mult(4), {{"g", 2}}),
                  InputError);
}

TEST_CASE("table round trip through text") {
  auto t = q8_table();
  std::stringstream s;
  t->write(s);
  std::size_t order = 0;
  auto mult = FiniteGroupTable::read_mult(s, order);
  CHECK(order == 8);
  FiniteGroupTable back(order, mult, t->generators());
  CHECK(fingerprint(back) == fingerprint(*t));
}

TEST_CASE("catalog tables") {
  CHECK(q8_table()->order() == 8);
  CHECK(fingerprint(*q8_table()) == fingerprint(*q8_presented()));
  CHECK(fingerprint(*sl2_3_matrix_table())
        == fingerprint(*sl2_3_presented()));
  CHECK(fingerprint(*s3_table()) == fingerprint(*s3_presented()));
  CHECK(d8_table()->order() == 8);
  CHECK_FALSE(fingerprint(*d8_table()) == fingerprint(*q8_table()));
  CHECK(a4_table()->order() == 12);
  auto z = fingerprint(*z9_z3_table());
  CHECK(z.order == 27);
  CHECK(z.exponent() == 9);
  CHECK_FALSE(z.abelian);
  auto sl = fingerprint(*sl2_3_matrix_table());
  CHECK(sl.order == 24);
  CHECK(sl.center_order == 2);
  CHECK(sl.abelianization == std::vector<std::uint64_t>{3});
  CHECK(to_string(fingerprint(*q8_table()))
        == "order=8 abelian=no orders={1:1,2:1,4:6} center=2 ab=(2,2) "
           "derived=2");
}

TEST_CASE("abelian invariants") {
  auto t = direct_product(*cyclic_table(6), *cyclic_table(2));
  CHECK(abelian_invariants(t) == std::vector<std::uint64_t>{6, 2});
  auto u = direct_product(*cyclic_table(4), *cyclic_table(9));
  CHECK(abelian_invariants(u) == std::vector<std::uint64_t>{36});
  CHECK(abelian_invariants(*trivial_table()).empty());
}

TEST_CASE("dicyclic group of order 12") {
  auto dic = semidirect(3, 2, 4);
  auto const& t = dynamic_cast<TableEngine const&>(*dic).table();
  auto f = fingerprint(t);
  CHECK(f.order == 12);
  CHECK(f.abelianization == std::vector<std::uint64_t>{4});
  CHECK(f.order_histogram == std::map<std::size_t, std::size_t>{
                                 {1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}});
}

TEST_CASE("coset enumeration") {
  Presentation q8({"i", "j"}, {"i i i i", "i i j^-1 j^-1", "j i j^-1 i"});
  auto r = coset_enumerate(q8, 1000);
  REQUIRE(std::holds_alternative<FiniteGroupTable>(r));
  CHECK(fingerprint(std::get<FiniteGroupTable>(r))
        == fingerprint(*q8_table()));

  Presentation bs({"a", "t"}, {"t a t^-1 a^-1 a^-1"});
  auto capped = coset_enumerate(bs, 500);
  REQUIRE(std::holds_alternative<CapExceeded>(capped));
  CHECK(std::get<CapExceeded>(capped).cap == 500);

  Presentation trivial({"a", "b"}, {"a", "b"});
  auto one = coset_enumerate(trivial, 10);
  CHECK(std::get<FiniteGroupTable>(one).order() == 1);
}

TEST_CASE("partial coset graph spheres") {
  Presentation bs({"a", "t"}, {"t a t^-1 a^-1 a^-1"});
  ToddCoxeter tc(bs, 5000);
  CHECK_FALSE(tc.run());
  auto s = tc.sphere_sizes(2);
  REQUIRE(s);
  CHECK((*s)[0] == 1);
  CHECK((*s)[1] == 4);
}

TEST_CASE("table engine") {
  auto e = table_engine(q8_table(), "Q8");
  check_group_axioms(*e, false);
  CHECK_THROWS_AS((void)e->normal_form(e->identity_key()), Unsupported);
  CHECK(e->order() == 8);
}

TEST_CASE("BS(1,2) engine") {
  auto e = std::make_shared<BS12Engine const>();
  check_group_axioms(*e);
  CHECK(evaluate(*e, "t a t^-1") == evaluate(*e, "a a"));
  CHECK_FALSE(evaluate(*e, "t^-1 a t") == evaluate(*e, "a"));
  CHECK(e->normal_form(evaluate(*e, "t^-1 a a t")) == parse_word("a", e->builtin_letters()));
  CHECK_FALSE(e->finite());
}

TEST_CASE("Z^n x| Z/2 engine") {
  auto inv = std::make_shared<ZnC2Engine const>(2, Phi::invert(1));
  auto sw = std::make_shared<ZnC2Engine const>(3, Phi::swap(1, 3));
  check_group_axioms(*inv);
  check_group_axioms(*sw);
  CHECK(evaluate(*inv, "y x1 y") == evaluate(*inv, "x1^-1"));
  CHECK(evaluate(*inv, "y x2 y") == evaluate(*inv, "x2"));
  CHECK(evaluate(*sw, "y x1 y") == evaluate(*sw, "x3"));
  CHECK(evaluate(*sw, "y y") == sw->identity_key());
  auto big = inv->identity_key();
  for (int i = 0; i < 70; ++i) {
    big = inv->multiply(big, big == inv->identity_key()
                                 ? inv->letter_key(0)
                                 : big);
  }
  CHECK_FALSE(big == inv->identity_key());
  CHECK(inv->multiply(big, inv->inverse(big)) == inv->identity_key());
}

TEST_CASE("Z/n x| Z engines") {
  auto z3z = semidirect(3, 2, std::nullopt);
  check_group_axioms(*z3z);
  CHECK(evaluate(*z3z, "t a t^-1") == evaluate(*z3z, "a a"));
  CHECK_FALSE(z3z->finite());
  ZmSemidirectEngine z9(9, 4, 3, "x", "y");
  check_group_axioms(z9);
  CHECK(z9.order() == 27);
  CHECK(fingerprint(table_from_engine(z9)) == fingerprint(*z9_z3_table()));
  CHECK_THROWS_AS(ZmSemidirectEngine(4, 2, std::nullopt), BadParams);
  CHECK_THROWS_AS(ZmSemidirectEngine(7, 2, 2), BadParams);
}

TEST_CASE("product engine") {
  auto p = std::make_shared<ProductEngine const>(
      table_engine(q8_table(), "Q8"), std::make_shared<BS12Engine const>());
  check_group_axioms(*p, false);
  auto [l, r] = ProductEngine::split(p->letter_key(0));
  CHECK(ProductEngine::join(l, r) == p->letter_key(0));
  CHECK_FALSE(p->finite());
  auto q = std::make_shared<ProductEngine const>(
      table_engine(q8_table(), "Q8"), table_engine(s3_table(), "S3"));
  CHECK(q->order() == 48);
}

TEST_CASE("extension engine") {
  auto s3 = s3_table();
  std::vector<Element> id(s3->order());
  for (Element i = 0; i < id.size(); ++i) {
    id[i] = i;
  }
  ExtensionEngine trivial_action(s3, 2, {id, id});
  check_group_axioms(trivial_action);
  CHECK(evaluate(trivial_action, "t1 a t1^-1") == evaluate(trivial_action, "a"));

  auto z3 = cyclic_table(3);
  ExtensionEngine inversion(z3, 1, {{0, 2, 1}});
  check_group_axioms(inversion);
  CHECK(evaluate(inversion, "t g t^-1") == evaluate(inversion, "g^-1"));

  std::vector<Element> not_hom{0, 1, 1};
  CHECK_THROWS_AS(ExtensionEngine(z3, 1, {not_hom}), InputError);
  CHECK_THROWS_AS(ExtensionEngine(z3, 2, {{0, 2, 1}}), InputError);
}

TEST_CASE("cycle notation") {
  CHECK(parse_cycles("(1 2)", 3) == std::vector<Element>{0, 2, 1});
  CHECK(parse_cycles("", 2) == std::vector<Element>{0, 1});
  CHECK_THROWS_AS(parse_cycles("(1 1)", 3), InputError);
  CHECK_THROWS_AS(parse_cycles("(1 5)", 3), InputError);
}

TEST_CASE("group files") {
  std::string dir = GEOLANG_DATA_DIR;
  auto q8 = load_group(dir + "/q8.ini");
  REQUIRE(q8.table);
  CHECK(q8.table->order() == 8);
  CHECK(load_group(dir + "/d8.ini").table->order() == 8);
  CHECK(load_group(dir + "/z9_z3.ini").engine->order() == 27);
  CHECK_FALSE(load_group(dir + "/bs12.ini").engine->finite());
  CHECK_FALSE(load_group(dir + "/s3_x_z.ini").engine->finite());
  CHECK(load_group(dir + "/z2.ini").engine->order() == 2);
  CHECK(load_presentation(dir + "/cell_q8.ini").cap == 20000);

  auto parse = [](std::string const& text) {
    std::istringstream in(text);
    return load_group(parse_ini(in, "test"), ".");
  };
  CHECK_THROWS_AS(parse("[group]\nkind = nonsense\n"), InputError);
  CHECK_THROWS_AS(parse("[group]\nkind = zn_c2\nn = 2\n"), InputError);
  CHECK_THROWS_AS(parse("kind = bs12\n"), InputError);
  CHECK_THROWS_AS(parse("[group\nkind = bs12\n"), InputError);
  CHECK_THROWS_AS(load_group(dir + "/missing.ini"), InputError);
  CHECK_NOTHROW(parse("[group]\nkind = bs12\n"));
}
