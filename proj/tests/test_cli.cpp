#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"

namespace {

  std::string const data = GEOLANG_DATA_DIR;
  std::string const goldens = GEOLANG_REPRO_DIR;

  struct Result {
    int code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int code = geolang::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string file(std::string const& name) { return data + "/" + name; }

  std::string slurp(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  bool has(std::string const& text, std::string const& part) {
    return text.find(part) != std::string::npos;
  }

}  // namespace

TEST_CASE("ball") {
  auto r = run({"ball", "--group", file("q8.ini")});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("spheres: 1 4 3\n"));
  auto bs = run({"ball", "--group", file("bs12.ini"), "--radius", "1"});
  CHECK(bs.code == 0);
  CHECK(bs.out.starts_with("spheres: 1 4\n"));
  CHECK(run({"ball", "--group", file("bs12.ini")}).code == 2);
}

TEST_CASE("geo enumerate and check") {
  auto r = run({"geo", "enumerate", "--group", file("q8.ini"), "--exact"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("strata: 1 4 12\ncomplete: yes\ndiameter: 2\n1\n"));
  auto t = run({"geo", "enumerate", "--group", file("bs12.ini"), "--maxlen",
                "2"});
  CHECK(t.code == 0);
  CHECK(has(t.out, "complete: no\n"));
  CHECK(run({"geo", "enumerate", "--group", file("q8.ini")}).code == 2);
  CHECK(run({"geo", "enumerate", "--group", file("bs12.ini"), "--exact"}).code
        == 2);

  auto c = run({"geo", "check", "--group", file("bs12.ini"), "--word",
                "t^-1 a t"});
  CHECK(c.code == 0);
  CHECK(c.out == "word: t^-1 a t\ngeodesic: true\ndistance: 3\n");
  auto n = run({"geo", "check", "--group", file("z3_z.ini"), "--word",
                "t^-1 a t"});
  CHECK(has(n.out, "geodesic: false\n"));
  CHECK(run({"geo", "check", "--group", file("q8.ini"), "--word", "q"}).code
        == 2);
}

TEST_CASE("pe check and forbidden") {
  auto d8 = run({"pe", "check", "--group", file("d8.ini"), "--exact"});
  CHECK(d8.code == 0);
  CHECK(d8.out.starts_with("verdict: PE\nforbidden: 9\n"));
  auto ab = run({"pe", "check", "--group", file("d8.ini"), "--genset",
                 file("d8_ab.ini"), "--exact"});
  CHECK(ab.code == 0);
  CHECK(ab.out == "verdict: NotPE\nwitness: a b a\nviolation: a a\n");
  auto forb = run({"pe", "forbidden", "--group", file("d8.ini"), "--genset",
                   file("d8_ab.ini"), "--exact"});
  CHECK(forb.code == 1);
  auto q8 = run({"pe", "forbidden", "--group", file("q8.ini"), "--exact"});
  CHECK(q8.code == 0);
  CHECK(has(q8.out, "i i^-1\n"));
  auto z2 = run({"pe", "check", "--group", file("z2c2_swap.ini"), "--maxlen",
                 "4"});
  CHECK(z2.code == 0);
  CHECK(z2.out.starts_with("verdict: NotPE\n"));
  auto inc = run({"pe", "check", "--group", file("s3_x_z.ini"), "--maxlen",
                  "3"});
  CHECK(inc.code == 0);
}

TEST_CASE("coset and fingerprint") {
  auto q = run({"coset", "--presentation", file("cell_q8.ini")});
  CHECK(q.code == 0);
  CHECK(q.out.starts_with("order: 8\n"));
  auto cap = run({"coset", "--presentation", file("cell_bs12.ini"), "--cap",
                  "2000"});
  CHECK(cap.code == 3);
  CHECK(cap.out.starts_with("cap exceeded: 2000 cosets defined"));
  auto f = run({"fingerprint", "--group", file("q8.ini")});
  CHECK(f.out
        == "order=8 abelian=no orders={1:1,2:1,4:6} center=2 ab=(2,2) "
           "derived=2\n");
  CHECK(run({"fingerprint", "--group", file("bs12.ini")}).code == 2);
}

TEST_CASE("input errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"ball", "--group", file("missing.ini")}).code == 2);
  CHECK(run({"repro", "nothing"}).code == 2);
  CHECK(run({"repro", "q8", "--threads", "0"}).code == 2);
}

TEST_CASE("--out writes the report to a file") {
  auto path = std::filesystem::temp_directory_path() / "geolang_cli_out.txt";
  auto r = run({"repro", "q8", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path.string()) == slurp(goldens + "/q8.txt"));
  std::filesystem::remove(path);
}

TEST_CASE("repro reports match the goldens") {
  for (std::string t : {"q8", "d8", "qxq", "extension", "znc2", "quotients",
                        "lift", "cannon"}) {
    auto r = run({"repro", t});
    CHECK_MESSAGE(r.code == 0, t);
    CHECK_MESSAGE(r.out == slurp(goldens + "/" + t + ".txt"), t);
  }
}

TEST_CASE("table1 report is independent of the thread count") {
  auto golden = slurp(goldens + "/table1.txt");
  auto one = run({"repro", "table1", "--threads", "1"});
  auto three = run({"repro", "table1", "--threads", "3"});
  CHECK(one.out == golden);
  CHECK(three.out == golden);
  CHECK(one.code == three.code);
  CHECK(has(golden, "\ntotal="));
}

TEST_CASE("repro all") {
  auto r = run({"repro", "all", "--threads", "2"});
  CHECK(r.out == slurp(goldens + "/all.txt"));
  CHECK((r.code == 0) == !has(r.out, " FAIL "));
}
