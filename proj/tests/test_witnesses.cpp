#include <doctest.h>

#include <random>

#include "geolang/catalog.hpp"
#include "geolang/classify.hpp"
#include "geolang/engines.hpp"
#include "geolang/errors.hpp"
#include "geolang/geodesics.hpp"
#include "geolang/oracle.hpp"
#include "geolang/table1.hpp"
#include "geolang/witnesses.hpp"

using namespace geolang;

namespace {

  GenSet make(EnginePtr e,
              std::vector<std::pair<std::string, std::string>> const& pairs) {
    return validate_genset(e, gen_specs(*e, pairs));
  }

  // Distance of the witness by brute force, with no shared state.
  std::optional<std::size_t> naive_distance(GenSet const& gs, Word const& w) {
    auto d = naive_distances(gs, 3);
    auto it = d.find(gs.evaluate(w));
    if (it == d.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::vector<Element> identity(std::size_t n) {
    std::vector<Element> p(n);
    for (Element i = 0; i < n; ++i) {
      p[i] = i;
    }
    return p;
  }

  std::vector<Word> images(GenSet const& src, GroupEngine const& target,
                           std::map<std::string, std::string> const& by_name) {
    std::vector<Word> out;
    for (auto const& l : src.alphabet().letters()) {
      out.push_back(parse_word(by_name.at(l.name), target.builtin_letters()));
    }
    return out;
  }

}  // namespace

TEST_CASE("Q8 survey") {
  auto s = q8_survey();
  CHECK(s.subsets.size() == 16);
  CHECK(s.generating() == 8);
  CHECK(s.pe() == 8);
  for (auto const& e : s.subsets) {
    if (e.generating) {
      CHECK(e.has_inverse_pairs);
      CHECK(e.verdict->kind == PEVerdict::Kind::pe);
    }
  }
}

TEST_CASE("finite-by-free-abelian gensets") {
  auto z2 = extension_genset(cyclic_table(2), 1, {identity(2)}, 5);
  CHECK(z2.agrees);
  auto s3 = extension_genset(s3_table(), 1, {identity(6)}, 5);
  CHECK(s3.agrees);
  CHECK(s3.genset->alphabet().size() == 7);
  auto inv = extension_genset(cyclic_table(3), 1, {{0, 2, 1}}, 5);
  CHECK(inv.agrees);
  auto const& gs = *inv.genset;
  CHECK(naive_geodesics(gs, 5).same_members_up_to(
      avoid_language(inv.claimed, gs.alphabet(), 5), 5));
  CHECK(contains_inverse_pairs(inv.claimed, gs.alphabet()));
}

TEST_CASE("Z^n x| Z/2 worked examples") {
  auto z1 = std::make_shared<ZnC2Engine const>(1, Phi::invert(1));
  auto gs = make(z1, {{"x", "x1"}, {"y", "y"}});
  auto w = znc2_witness(gs);
  CHECK(w.subcase == "1A");
  CHECK(gs.format(w.certificate.witness) == "x y x^-1");
  CHECK(recheck(gs, w.certificate));

  auto reflections = make(z1, {{"xy", "x1 y"}, {"y", "y"}});
  auto r = znc2_witness(reflections);
  CHECK(r.subcase == "1B");
  CHECK(naive_distance(reflections, r.certificate.witness) == 3);

  auto z2 = std::make_shared<ZnC2Engine const>(2, Phi::swap(1, 2));
  auto sw = make(z2, {{"x1", "x1"}, {"x2", "x2"}, {"y", "y"}});
  CHECK(znc2_witness(sw).subcase == "2A");

  auto bs = builtin_genset(std::make_shared<BS12Engine const>());
  CHECK_THROWS_AS(znc2_witness(bs), InputError);
}

TEST_CASE("Z^n x| Z/2 random gensets") {
  std::vector<std::shared_ptr<ZnC2Engine const>> engines{
      std::make_shared<ZnC2Engine const>(1, Phi::invert(1)),
      std::make_shared<ZnC2Engine const>(2, Phi::invert(2)),
      std::make_shared<ZnC2Engine const>(2, Phi::swap(1, 2)),
      std::make_shared<ZnC2Engine const>(3, Phi::swap(2, 3))};
  for (auto const& e : engines) {
    for (unsigned seed = 0; seed < 15; ++seed) {
      std::mt19937_64 rng(seed);
      auto gs = random_znc2_genset(e, rng);
      std::mt19937_64 again(seed);
      CHECK(gs.alphabet() == random_znc2_genset(e, again).alphabet());
      auto m = ball(gs, 6);
      for (LetterId x = 0; x < e->builtin_letters().size(); ++x) {
        CHECK(m.dist.contains(e->letter_key(x)));
      }
      auto w = znc2_witness(gs);
      CHECK(naive_distance(gs, w.certificate.witness) == 3);
      CHECK(recheck(gs, w.certificate));
    }
  }
}

TEST_CASE("quotient families") {
  for (std::uint64_t m = 1; m <= 3; ++m) {
    auto f = quotient_family_witness(Family::z5_case_e, 0, m);
    CHECK(f.distance == 3);
    CHECK(f.certificate.kind == PEVerdict::Kind::not_pe);
  }
  for (std::uint64_t n : {3, 5, 7, 9}) {
    auto f = quotient_family_witness(Family::bsquot_z, n);
    CHECK(f.distance == 3);
    CHECK(recheck(*f.genset, f.certificate));
  }
  auto exact = quotient_family_witness(Family::bsquot_finite, 15, 4);
  CHECK(exact.distance == 3);
  CHECK(exact.note.empty());
  auto other = quotient_family_witness(Family::bsquot_finite, 5, 4);
  CHECK(other.note == "n != 2^m - 1");
  for (auto f : {Family::z7_z3, Family::z9_z3, Family::s3_inv,
                 Family::z5_z}) {
    auto w = quotient_family_witness(f);
    CHECK(w.certificate.kind == PEVerdict::Kind::not_pe);
    CHECK(naive_distance(*w.genset, w.witness) == 3);
  }
  CHECK_THROWS_AS(quotient_family_witness(Family::bsquot_z, 4), BadParams);
  CHECK_THROWS_AS(quotient_family_witness(Family::bsquot_finite, 7, 3),
                  BadParams);
  CHECK_THROWS_AS(quotient_family_witness(Family::z5_case_e, 0, 0),
                  BadParams);
}

TEST_CASE("conjugation witness that is too short") {
  auto e = table_engine(q8_table(), "Q8");
  auto f = conjugation_witness("Q8", make(e, {{"i", "i"}, {"j", "j"}}),
                               "i j i^-1");
  CHECK(f.certificate.kind == PEVerdict::Kind::inconclusive);
  CHECK(f.distance == 1);
}

TEST_CASE("lifting through a quotient") {
  auto ext = std::make_shared<ExtensionEngine const>(
      s3_table(), 1, std::vector<std::vector<Element>>{identity(6)});
  auto src = make(ext, {{"a", "a"}, {"b", "b"}, {"t", "t"}});
  auto target = table_engine(s3_table(), "S3");
  QuotientSpec q{src, target,
                 images(src, *target,
                        {{"a", "a"}, {"b", "b"}, {"t", ""}, {"t^-1", ""}})};
  CHECK(homomorphism_on_ball(q));
  std::vector<LetterId> section;
  auto tg = image_genset(q, section);
  CHECK(tg.alphabet().size() == 2);
  auto l = lift_witness(q, "a b a^-1");
  CHECK(src.format(l.lifted) == "a b a");
  CHECK(recheck(src, l.certificate));
  CHECK_THROWS_AS(lift_witness(q, "a a a^-1"), InputError);

  QuotientSpec bad{src, target,
                   images(src, *target,
                          {{"a", "a"}, {"b", "b"}, {"t", "a"}, {"t^-1", "a"}})};
  CHECK_FALSE(homomorphism_on_ball(bad));
}

TEST_CASE("lifting needs a geodesic target witness") {
  auto bs = make(std::make_shared<BS12Engine const>(), {{"a", "a"}, {"t", "t"}});
  auto target = semidirect(3, 2, std::nullopt);
  QuotientSpec q{bs, target,
                 images(bs, *target,
                        {{"a", "a"}, {"a^-1", "a^-1"}, {"t", "t"},
                         {"t^-1", "t^-1"}})};
  CHECK(homomorphism_on_ball(q));
  CHECK_THROWS_AS(lift_witness(q, "t^-1 a t"), InputError);
}

TEST_CASE("two-relator table cells") {
  auto q8 = table1_cell(0, 0);
  CHECK(q8.claim == "Q8");
  CHECK(q8.status == Status::pass);
  CHECK(q8.order == 8);

  auto z27 = table1_cell(6, 6);
  CHECK(z27.status == Status::pass);
  CHECK(z27.order == 27);

  auto bs = table1_cell(4, 1);
  CHECK(bs.claim == "BS(1,2)");
  CHECK_FALSE(bs.order);
  CHECK(bs.status == Status::partial);
  CHECK(bs.coset_balls == bs.target_balls);

  auto dic = table1_cell(2, 0);
  CHECK(dic.claim == "Z/6 x Z/2");
  CHECK(dic.order == 12);
  CHECK(dic.status == Status::fail);
  CHECK(dic.detail.find("Z/3 x| Z/4") != std::string::npos);
  CHECK(dic.fingerprint == table1_cell(0, 2).fingerprint);
}
