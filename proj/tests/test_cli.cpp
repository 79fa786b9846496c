#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "sympal/cli.hpp"
#include "sympal/io.hpp"

using namespace sympal;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(SYMPAL_FIXTURE_DIR) + "/" + name; }

fs::path scratch_dir(const std::string& tag) {
  auto dir = fs::temp_directory_path() / ("sympal_test_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string write(const fs::path& dir, const std::string& name, const std::string& text) {
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("fnv1a reference values") {
  CHECK(cli::fnv1a("") == 0xcbf29ce484222325ull);
  CHECK(cli::fnv1a("a") == 0xaf63dc4c8601ec8cull);
  CHECK(cli::fnv1a("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("field element and matrix documents") {
  auto f25 = field_make(5, 2);
  for (Field::Elem x = 0; x < 25; ++x) CHECK(io::element_from_json(f25, io::element_to_json(*f25, x)) == x);
  CHECK(io::element_to_json(*field_make(7, 1), 3) == io::Json::array({3}));
  CHECK_THROWS_AS(io::element_from_json(f25, io::Json::array({1})), Error);
  CHECK_THROWS_AS(io::element_from_json(f25, io::Json::array({1, 5})), Error);
  CHECK_THROWS_AS(io::element_from_json(f25, io::Json::array({1, -1})), Error);
  CHECK_THROWS_AS(io::matrix_from_json(f25, io::parse("[[[1,0]]]"), 2, 2), Error);
  CHECK_THROWS_AS(io::field_from_json(io::parse(R"({"ell": 6})")), Error);
}

TEST_CASE("group fixtures round-trip") {
  for (const auto& g : {fixtures::sp2(field_make(5, 1)), fixtures::sp2_full(field_make(5, 2)),
                        fixtures::induced_sp4(field_make(5, 1))}) {
    const auto doc = io::to_json(g);
    const auto back = io::group_from_json(io::parse(doc.dump()));
    CHECK(back.generators() == g.generators());
    CHECK(back.field() == g.field());
    CHECK(io::to_json(back) == doc);
  }
  auto f5 = field_make(5, 1);
  const MatrixGroup custom(SympSpace(f5, Matrix(f5, 2, 2, {0, 2, 3, 0})), {Matrix::identity(f5, 2)});
  CHECK(io::to_json(custom)["gram"].is_array());
  CHECK(io::group_from_json(io::to_json(custom)).space().gram() == custom.space().gram());

  // a singular generator is malformed input
  auto doc = io::to_json(fixtures::sp2(f5));
  doc["generators"][0] = io::parse("[[[0],[0]],[[0],[1]]]");
  try {
    io::group_from_json(doc);
    FAIL("expected Parse");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Parse);
  }
}

TEST_CASE("verdict documents round-trip and still verify") {
  auto f5 = field_make(5, 1);
  for (const auto& g : {fixtures::reducible_sp4(f5), fixtures::induced_sp4(f5), fixtures::sp2(f5)}) {
    const auto v = classify(g);
    const auto back = io::classification_from_json(f5, g.dim(), io::parse(io::to_json(v).dump()));
    CHECK(case_name(back) == case_name(v));
    CHECK_NOTHROW(verify_classification(g, back));
  }
  CHECK_THROWS_AS(io::classification_from_json(f5, 2, io::parse(R"({"case": "other"})")), Error);
}

TEST_CASE("classify command") {
  auto r = run({"classify", "--input", fixture("reducible_sp2_f5.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("case: reducible") != std::string::npos);

  r = run({"classify", "--input", fixture("sp2_f25.json"), "--json"});
  CHECK(r.code == 0);
  const auto doc = io::parse(r.out);
  CHECK(doc["case"] == "huge");
  CHECK(doc["subfield_degree"] == 2);
  CHECK(doc["transvection_subgroup_order"] == 15600);

  r = run({"classify", "--input", fixture("induced_sp4_f5.json"), "--json"});
  CHECK(r.code == 0);
  CHECK(io::parse(r.out)["h"] == 2);

  CHECK(run({"classify", "--input", fixture("sp2_f3.json")}).code == 2);
  CHECK(run({"classify", "--input", fixture("truncated_group.json")}).code == 1);
  CHECK(run({"classify", "--input", fixture("does_not_exist.json")}).code == 1);
  CHECK(run({"classify", "--input", fixture("sp2_f25.json"), "--cap", "100"}).code == 3);
  CHECK(run({"classify", "--input", fixture("sp2_f5.json"), "--cap", "0"}).code == 1);
  CHECK(run({"classify"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("classify output is deterministic") {
  const auto a = run({"classify", "--input", fixture("induced_sp4_f5.json"), "--json", "--seed", "3"});
  const auto b = run({"classify", "--input", fixture("induced_sp4_f5.json"), "--json", "--seed", "3"});
  CHECK(a.out == b.out);
}

TEST_CASE("enumeration cache directory") {
  const auto dir = scratch_dir("cache");
  ::setenv("SYMPAL_CACHE_DIR", dir.c_str(), 1);
  const auto first = run({"classify", "--input", fixture("sp2_f25.json"), "--json"});
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    ++files;
    CHECK(e.path().extension() == ".elems");
  }
  CHECK(files == 1);
  const auto second = run({"classify", "--input", fixture("sp2_f25.json"), "--json"});
  CHECK(second.code == 0);
  CHECK(second.out == first.out);
  // a damaged entry is a cache miss
  for (const auto& e : fs::directory_iterator(dir)) fs::resize_file(e.path(), 10);
  const auto third = run({"classify", "--input", fixture("sp2_f25.json"), "--json"});
  CHECK(third.out == first.out);
  ::unsetenv("SYMPAL_CACHE_DIR");
  fs::remove_all(dir);
}

TEST_CASE("np-group command") {
  auto r = run({"np-group", "--n", "2", "--q", "5", "--p", "3", "--ell", "7", "--json"});
  REQUIRE(r.code == 0);
  const auto doc = io::parse(r.out);
  const auto g = io::group_from_json(doc);
  CHECK(group_order(g) == 12);
  CHECK(doc["irreducibility"] == "irreducible");
  CHECK(doc["params"]["m"] == 1);
  const auto j = io::matrix_from_json(g.field(), doc["form"], 2, 2);
  CHECK_NOTHROW(SympSpace(g.field(), j));

  r = run({"np-group", "--n", "2", "--q", "5", "--p", "3", "--ell", "7", "--classify", "--json"});
  CHECK(r.code == 0);
  const auto c = io::parse(r.out)["classify"];
  CHECK(c["error"] == "NoTransvection");
  CHECK(c["expected"] == true);

  r = run({"np-group", "--n", "2", "--q", "5", "--p", "3", "--ell", "7", "--alpha", "3", "--json"});
  CHECK(r.code == 0);
  CHECK(io::parse(r.out)["alpha"] == io::Json::array({3}));

  CHECK(run({"np-group", "--n", "2", "--q", "5", "--p", "7", "--ell", "7"}).code == 2);
  CHECK(run({"np-group", "--n", "2", "--q", "5", "--p", "3", "--ell", "7", "--n1", "4", "--n2", "6"}).code == 2);
  r = run({"np-group", "--n", "2", "--q", "5", "--p", "3", "--ell", "7", "--n1", "4", "--n2", "9", "--json"});
  CHECK(io::parse(r.out)["metadata"]["N1"] == 4);
  CHECK(run({"np-group", "--n", "two"}).code == 1);
}

TEST_CASE("find-primes command") {
  auto r = run({"find-primes", "--n", "4", "--q-max", "50", "--json"});
  REQUIRE(r.code == 0);
  bool found = false;
  const auto doc = io::parse(r.out);
  for (const auto& x : doc["pairs"]) found |= x["q"] == 7 && x["p"] == 5;
  CHECK(found);
  r = run({"find-primes", "--n", "2", "--q-max", "50"});
  CHECK(r.out.find("5\t3\n") != std::string::npos);
  CHECK(run({"find-primes", "--n", "3", "--q-max", "50"}).code == 2);
  r = run({"find-primes", "--n", "2", "--q-max", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "q\tp\n");
}

TEST_CASE("regularity command") {
  CHECK(run({"regularity", "--input", fixture("profile_distinct.json")}).code == 0);
  auto r = run({"regularity", "--input", fixture("profile_collision.json"), "--json"});
  CHECK(r.code == 4);
  const auto doc = io::parse(r.out);
  CHECK(doc["collision"]["first"] == 0);
  CHECK(doc["collision"]["second"] == 1);
  CHECK(run({"regularity", "--input", fixture("profile_truncated.json")}).code == 1);
  CHECK(run({"regularity", "--input", fixture("profile_niveau4.json")}).code == 0);

  const auto dir = scratch_dir("regularity");
  CHECK(run({"regularity", "--input", write(dir, "dup.json", R"({"ell": 7, "n": 2, "parts": [{"niveau": 1, "weights": [1]}, {"niveau": 1, "weights": [1]}]})")})
            .code == 1);
  const auto edge = write(dir, "edge.json", R"({"ell": 7, "n": 2, "parts": [{"niveau": 1, "weights": [0]}, {"niveau": 1, "weights": [6]}]})");
  CHECK(run({"regularity", "--input", edge}).code == 4);  // 2 * 6 = 0 mod 6
  CHECK(run({"regularity", "--input", edge, "--twist", "1"}).code == 2);
  r = run({"regularity", "--input", fixture("profile_distinct.json"), "--twist", "-4", "--json"});
  CHECK(io::parse(r.out)["profile"]["parts"][0]["weights"] == io::Json::array({2, 3}));
  fs::remove_all(dir);
}

TEST_CASE("mackey command") {
  auto r = run({"mackey", "--input", fixture("mackey_c7c3.json"), "--json"});
  REQUIRE(r.code == 0);
  auto doc = io::parse(r.out);
  CHECK(doc["group_order"] == 21);
  CHECK(doc["proposition"]["counterexamples"] == 0);
  CHECK(doc["proposition"]["matches"].get<int>() > 0);
  CHECK(doc["restriction"]["trivial"] == 0);
  CHECK(doc["mackey"]["failures"] == 0);
  CHECK(doc["frobenius"]["failures"] == 0);

  r = run({"mackey", "--input", fixture("mackey_skip.json"), "--json"});
  CHECK(r.code == 0);
  doc = io::parse(r.out);
  CHECK(doc["proposition"]["skipped"] == 7);
  CHECK(doc["proposition"]["configurations"] == 0);

  CHECK(run({"mackey", "--input", fixture("mackey_s3_table.json")}).code == 0);
  CHECK(run({"mackey", "--input", fixture("mackey_frobenius_groups.json")}).code == 0);

  const auto dir = scratch_dir("mackey");
  CHECK(run({"mackey", "--input", write(dir, "a.json", R"({"group": {"fixture": "nope"}})")}).code == 1);
  CHECK(run({"mackey", "--input", write(dir, "b.json", R"({"group": {"table": [[0, 1], [1, 1]]}})")}).code == 1);
  CHECK(run({"mackey", "--input", write(dir, "c.json", R"({"group": {"fixture": "S3"}, "sweeps": ["x"]})")}).code == 1);
  CHECK(run({"mackey", "--input", write(dir, "d.json", R"({"group": {"fixture": "S3"}, "normal": {"elements": [0, 3]}})")})
            .code == 1);
  fs::remove_all(dir);
}
