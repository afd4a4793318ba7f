#include <doctest.h>

#include "geolang/catalog.hpp"
#include "geolang/classify.hpp"
#include "geolang/engines.hpp"
#include "geolang/errors.hpp"
#include "geolang/geodesics.hpp"

using namespace geolang;

namespace {

  GenSet make(EnginePtr e,
              std::vector<std::pair<std::string, std::string>> const& pairs) {
    return validate_genset(e, gen_specs(*e, pairs));
  }

  PEVerdict exact(GenSet const& gs) {
    return pe_check(geodesic_language(gs, std::nullopt));
  }

  std::vector<std::string> words(PEVerdict const& v) {
    std::vector<std::string> out;
    for (auto const& w : v.forbidden) {
      out.push_back(format_word(w, v.alphabet));
    }
    return out;
  }

}  // namespace

TEST_CASE("Q8 with i and j is PE") {
  auto gs = make(table_engine(q8_table(), "Q8"), {{"i", "i"}, {"j", "j"}});
  auto geo = geodesic_language(gs, std::nullopt);
  auto v = pe_check(geo);
  REQUIRE(v.kind == PEVerdict::Kind::pe);
  CHECK(recheck(geo, v));
  for (std::string w : {"i i^-1", "j j^-1", "i i i", "j j j"}) {
    CHECK(v.forbidden.contains(gs.parse(w)));
  }
}

TEST_CASE("D8 with a dihedral pair of involutions is not PE") {
  auto gs = make(table_engine(d8_table(), "D8"), {{"a", "a"}, {"b", "b"}});
  auto v = exact(gs);
  REQUIRE(v.kind == PEVerdict::Kind::not_pe);
  CHECK(recheck(gs, v));
  CHECK(gs.format(v.witness) == "a b a");
  CHECK(gs.format(v.violation) == "a a");
  CHECK(format_verdict(v)
        == "verdict: NotPE\nwitness: a b a\nviolation: a a\n");
}

TEST_CASE("S3 with two involutions is not PE") {
  auto v = exact(make(table_engine(s3_table(), "S3"), {{"a", "a"}, {"b", "b"}}));
  CHECK(v.kind == PEVerdict::Kind::not_pe);
}

TEST_CASE("D8 with all non-identity elements is PE") {
  auto d8 = d8_table();
  std::vector<std::pair<std::string, std::string>> pairs;
  for (Element g = 0; g < d8->order(); ++g) {
    if (g != d8->identity()) {
      pairs.push_back({"g" + std::to_string(g), d8->name_text(g)});
    }
  }
  auto gs = make(table_engine(d8, "D8"), pairs);
  auto geo = geodesic_language(gs, std::nullopt);
  auto v = pe_check(geo);
  REQUIRE(v.kind == PEVerdict::Kind::pe);
  CHECK(recheck(geo, v));
  for (auto const& w : v.forbidden) {
    CHECK(w.size() == 2);
  }
}

TEST_CASE("bounded refutation in BS(1,2)") {
  auto gs = builtin_genset(std::make_shared<BS12Engine const>());
  auto geo = geodesic_language(gs, 4);
  auto v = pe_check_bounded(geo);
  REQUIRE(v.kind == PEVerdict::Kind::not_pe);
  CHECK(recheck(gs, v));
  CHECK(v.witness.size() == 3);
  CHECK_THROWS_AS(pe_check(geo), std::invalid_argument);
}

TEST_CASE("bounded search in Z^2 stays inconclusive") {
  auto gs = builtin_genset(std::make_shared<ExtensionEngine const>(
      trivial_table(), 2, std::vector<std::vector<Element>>{}));
  auto v = pe_check_bounded(geodesic_language(gs, 5));
  CHECK(v.kind == PEVerdict::Kind::inconclusive);
  CHECK(v.bound == 5);
  CHECK(format_verdict(v) == "verdict: Inconclusive\nbound: 5\n");
}

TEST_CASE("conjugation witnesses") {
  auto q = make(table_engine(q8_table(), "Q8"), {{"i", "i"}, {"j", "j"}});
  auto vq = not_pe_from_conjugation(q, 0, q.parse("j")[0]);
  CHECK(vq.kind == PEVerdict::Kind::inconclusive);

  auto z = make(std::make_shared<ZnC2Engine const>(1, Phi::invert(1)),
                {{"x", "x1"}, {"y", "y"}});
  auto vz = not_pe_from_conjugation(z, z.parse("x")[0], z.parse("y")[0]);
  REQUIRE(vz.kind == PEVerdict::Kind::not_pe);
  CHECK(recheck(z, vz));
  CHECK(z.format(vz.witness) == "x y x^-1");
  CHECK(z.format(vz.violation) == "x x^-1");
}

TEST_CASE("recheck rejects forged certificates") {
  auto gs = make(table_engine(d8_table(), "D8"), {{"a", "a"}, {"b", "b"}});
  auto forged = PEVerdict::not_pe(gs.alphabet(), gs.parse("a b a b a"),
                                  gs.parse("a a"));
  CHECK_FALSE(recheck(gs, forged));
  auto wrong_sub = PEVerdict::not_pe(gs.alphabet(), gs.parse("a b a"),
                                     gs.parse("b b"));
  CHECK_FALSE(recheck(gs, wrong_sub));
  auto geo = geodesic_language(gs, std::nullopt);
  CHECK_FALSE(recheck(geo, PEVerdict::pe(gs.alphabet(), {})));
  CHECK_FALSE(recheck(geo, forged));
}

TEST_CASE("Q8 x Q8 is not PE") {
  auto e = table_engine(std::make_shared<FiniteGroupTable const>(
                            direct_product(*q8_table(), *q8_table())),
                        "Q8 x Q8");
  auto gs = make(e, {{"p", "i_1"},
                     {"q", "j_1 i_2 j_2"},
                     {"r", "i_2"},
                     {"s", "i_2 j_2"}});
  auto v = exact(gs);
  REQUIRE(v.kind == PEVerdict::Kind::not_pe);
  CHECK(recheck(gs, v));
  CHECK(words(v).empty());
}
