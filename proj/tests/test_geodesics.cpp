#include <doctest.h>

#include "geolang/catalog.hpp"
#include "geolang/engines.hpp"
#include "geolang/errors.hpp"
#include "geolang/geodesics.hpp"
#include "geolang/oracle.hpp"
#include "geolang/parallel.hpp"

using namespace geolang;

namespace {

  GenSet make(EnginePtr e,
              std::vector<std::pair<std::string, std::string>> const& pairs) {
    return validate_genset(e, gen_specs(*e, pairs));
  }

  EnginePtr q8() { return table_engine(q8_table(), "Q8"); }

  using Sizes = std::vector<std::size_t>;

  // Ball and geodesics against the brute-force oracle.
  void check_against_oracle(GenSet const& gs, std::size_t len) {
    auto m = ball(gs, len);
    auto naive = naive_distances(gs, len);
    CHECK(naive.size() == m.dist.size());
    for (auto const& [k, d] : naive) {
      CHECK(m.distance(k) == d);
    }
    auto geo = geodesic_language(gs, len);
    CHECK(geo.language.same_members_up_to(naive_geodesics(gs, len), len));
  }

}  // namespace

TEST_CASE("genset closure under inversion") {
  auto gs = make(q8(), {{"i", "i"}, {"j", "j"}});
  CHECK(gs.alphabet().size() == 4);
  CHECK(gs.format(gs.parse("i^-1 j")) == "i^-1 j");
  auto inv = make(table_engine(s3_table(), "S3"), {{"a", "a"}, {"b", "b"}});
  CHECK(inv.alphabet().size() == 2);
  CHECK(inv.alphabet().self_inverse(0));
  auto paired = make(q8(), {{"i", "i"}, {"I", "i^-1"}, {"j", "j"}});
  CHECK(paired.alphabet().size() == 4);
  CHECK(paired.alphabet().inverse(paired.parse("i")[0])
        == paired.parse("I")[0]);
}

TEST_CASE("genset validation errors") {
  CHECK_THROWS_AS(make(q8(), {{"e", "i i i i"}, {"i", "i"}, {"j", "j"}}),
                  IdentityLetter);
  CHECK_THROWS_AS(make(q8(), {{"i", "i"}, {"x", "i"}, {"j", "j"}}),
                  DuplicateElement);
  CHECK_THROWS_AS(make(q8(), {{"i", "i"}, {"i^-1", "i j"}, {"j", "j"}}),
                  InverseMismatch);
  CHECK_THROWS_AS(make(q8(), {{"i", "i"}}), NotGenerating);
  CHECK_THROWS_AS(make(q8(), {{"i", "i"}, {"i", "j"}}), InputError);
  CHECK_THROWS_AS(make(q8(), {{"i", "q"}}), UnknownLetter);
  CHECK_THROWS_AS(make(q8(), {}), InputError);
}

TEST_CASE("hand-computed spheres and geodesic counts") {
  auto q = make(q8(), {{"i", "i"}, {"j", "j"}});
  CHECK(ball(q, std::nullopt).sphere_sizes() == Sizes{1, 4, 3});
  auto qg = geodesic_language(q, std::nullopt);
  CHECK(qg.diameter == 2);
  CHECK(qg.language.stratum_sizes() == Sizes{1, 4, 12});

  auto d8 = make(table_engine(d8_table(), "D8"), {{"a", "a"}, {"b", "b"}});
  CHECK(ball(d8, std::nullopt).sphere_sizes() == Sizes{1, 2, 2, 2, 1});
  CHECK(geodesic_language(d8, std::nullopt).language.stratum_sizes()
        == Sizes{1, 2, 2, 2, 2});

  auto z2 = builtin_genset(std::make_shared<ExtensionEngine const>(
      trivial_table(), 2, std::vector<std::vector<Element>>{}));
  CHECK(ball(z2, 4).sphere_sizes() == Sizes{1, 4, 8, 12, 16});
  CHECK(geodesic_language(z2, 5).language.stratum_sizes()
        == Sizes{1, 4, 12, 28, 60, 124});

  auto bs = builtin_genset(std::make_shared<BS12Engine const>());
  CHECK(ball(bs, 1).sphere_sizes() == Sizes{1, 4});
}

TEST_CASE("ball and geodesics agree with the oracle") {
  check_against_oracle(make(q8(), {{"i", "i"}, {"j", "j"}, {"k", "i j"}}), 4);
  check_against_oracle(builtin_genset(std::make_shared<BS12Engine const>()),
                       6);
  check_against_oracle(
      make(std::make_shared<BS12Engine const>(), {{"u", "a t"}, {"v", "t a"}}),
      5);
  check_against_oracle(
      builtin_genset(std::make_shared<ZnC2Engine const>(2, Phi::invert(1))),
      5);
  check_against_oracle(
      make(semidirect(3, 2, std::nullopt), {{"a", "a"}, {"t", "t"}}), 6);
  check_against_oracle(
      make(table_engine(sl2_3_matrix_table(), "SL2"),
           {{"a", "a"}, {"b", "b"}}),
      5);
}

TEST_CASE("geodesic membership") {
  auto bs = builtin_genset(std::make_shared<BS12Engine const>());
  CHECK(is_geodesic(bs, bs.parse("t^-1 a t")));
  CHECK_FALSE(is_geodesic(bs, bs.parse("t a t^-1")));
  CHECK(is_geodesic(bs, {}));
  auto z3 = make(semidirect(3, 2, std::nullopt), {{"a", "a"}, {"t", "t"}});
  CHECK_FALSE(is_geodesic(z3, z3.parse("t^-1 a t")));
}

TEST_CASE("limits") {
  auto bs = builtin_genset(std::make_shared<BS12Engine const>());
  CHECK_THROWS_AS(ball(bs, 10, 50), ResourceCap);
  CHECK_THROWS_AS(geodesic_language(bs, std::nullopt), Unsupported);
  auto geo = geodesic_language(bs, 3);
  CHECK_FALSE(geo.language.complete());
  CHECK_FALSE(geo.diameter);
}

TEST_CASE("output does not depend on the thread count") {
  auto gs = make(table_engine(sl2_3_matrix_table(), "SL2"),
                 {{"a", "a"}, {"b", "b"}});
  auto bs = builtin_genset(std::make_shared<BS12Engine const>());
  set_thread_count(1);
  auto f1 = format_ball(ball(bs, 7));
  auto g1 = format_language(geodesic_language(gs, std::nullopt).language);
  set_thread_count(4);
  auto f4 = format_ball(ball(bs, 7));
  auto g4 = format_language(geodesic_language(gs, std::nullopt).language);
  set_thread_count(1);
  CHECK(f1 == f4);
  CHECK(g1 == g4);
}
