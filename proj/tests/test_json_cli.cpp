#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nearfac/cli.hpp"
#include "nearfac/constructions.hpp"
#include "nearfac/corpus.hpp"
#include "nearfac/errors.hpp"
#include "nearfac/json_io.hpp"

using namespace nearfac;

namespace {

struct Outcome {
  int rc;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int rc = cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "nearfac_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  auto p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string write_nf(const std::string& name, const NearFactorization& nf) {
  return write_file(name, to_json(nf).dump());
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("NF records round-trip through JSON") {
  for (const auto& f : fixtures()) {
    CAPTURE(f.name);
    auto nf = load(f);
    auto j = to_json(nf);
    CHECK(nf_from_json(j) == nf);
    CHECK(nf_from_json(Json::parse(j.dump())) == nf);
    // element strings are accepted in place of codes
    Json text{{"group", j["group"]}, {"A", j["A_text"]}, {"B", j["B_text"]}};
    CHECK(nf_from_json(text) == nf);
  }
}

TEST_CASE("malformed NF records name the offending entry") {
  auto expect_error = [](const Json& j, const std::string& fragment) {
    try {
      nf_from_json(j);
      FAIL("accepted " << j.dump());
    } catch (const DomainError& e) {
      CHECK_MESSAGE(contains(e.what(), fragment), e.what());
    }
  };
  expect_error(Json{{"group", "D:8"}, {"A", {"e", "q"}}, {"B", {"b"}}}, "q");
  expect_error(Json{{"group", "D:8"}, {"A", {0, 99}}, {"B", {1}}}, "99");
  expect_error(Json{{"group", "D:8"}, {"A", {0}}}, "\"B\"");
  expect_error(Json{{"A", {0}}, {"B", {1}}}, "group");
  expect_error(Json::array(), "object");
  expect_error(Json{{"group", "D:8"}, {"A", 3}, {"B", {1}}}, "array");

  auto bad = write_file("bad.json", R"({"group": "D:8", "A": ["e", "b", "zz"], "B": ["e"]})");
  auto r = run_cli({"verify", "--in", bad});
  CHECK(r.rc == cli::kUsage);
  CHECK(contains(r.err, "zz"));
  auto torn = write_file("torn.json", R"({"group": "D:8", "A": [)");
  CHECK(run_cli({"verify", "--in", torn}).rc == cli::kUsage);
  CHECK(run_cli({"verify", "--in", (scratch_dir() / "missing.json").string()}).rc == cli::kUsage);
}

TEST_CASE("GSEDF records round-trip") {
  auto inst = nf_to_gsedf(load_fixture("z16"));
  auto back = gsedf_from_json(Json::parse(to_json(inst).dump()));
  CHECK(to_json(back) == to_json(inst));
  CHECK_THROWS_AS(gsedf_from_json(Json{{"group", "Z:16"}}), DomainError);
  CHECK_THROWS_AS(gsedf_from_json(Json::parse(R"({"group": "Z:16", "sets": [[0]], "lambdas": [-1]})")), DomainError);
  CHECK_THROWS_AS(gsedf_from_json(Json::parse(R"({"group": "Z:16", "sets": [[0]], "lambdas": ["x"]})")), DomainError);
}

TEST_CASE("cli verify") {
  auto ok = run_cli({"verify", "--in", write_nf("d8.json", load_fixture("d8"))});
  CHECK(ok.rc == cli::kOk);
  CHECK(contains(ok.out, "(3,5)-NF"));

  auto z10 = to_json(load_fixture("z10"));
  auto joined = [](const Json& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ",") + x.get<std::string>();
    return s;
  };
  auto inline_nf = run_cli({"verify", "--group", "Z:10", "--A", joined(z10["A_text"]), "--B", joined(z10["B_text"])});
  CHECK(inline_nf.rc == cli::kOk);

  auto bad = run_cli({"verify", "--group", "Z:16", "--A", "0,1,2", "--B", "0,2,4,6,8"});
  CHECK(bad.rc == cli::kFalse);
  CHECK(contains(bad.out, "not a near-factorization"));
  CHECK(contains(bad.out, "uncovered"));
  CHECK(contains(bad.out, "multiply covered"));

  auto json = run_cli({"--json", "verify", "--group", "Z:16", "--A", "0,1,2", "--B", "0,3,6,9,12"});
  CHECK(json.rc == cli::kFalse);
  auto g = make_group("Z:16");
  NearFactorization nf(g, std::vector<std::uint32_t>{0, 1, 2}, std::vector<std::uint32_t>{0, 3, 6, 9, 12});
  CHECK(Json::parse(json.out)["report"] == to_json(verify(nf), *g));
}

TEST_CASE("cli equiv") {
  auto dc = write_nf("decaen.json", load_fixture("d32-decaen"));
  auto bs = write_nf("bacso.json", load_fixture("d32-bacso"));
  auto r = run_cli({"equiv", "--in1", dc, "--in2", bs});
  CHECK(r.rc == cli::kOk);
  CHECK(contains(r.out, "equivalent, witness f_{21,0}, e"));

  auto lib = are_equivalent(load_fixture("d32-decaen"), load_fixture("d32-bacso"));
  REQUIRE(lib);
  auto j = Json::parse(run_cli({"--json", "equiv", "--in1", dc, "--in2", bs}).out);
  CHECK(j["equivalent"] == true);
  CHECK(j["witness"] == to_json(lib->map));

  auto d1 = write_nf("d41a.json", load_fixture("d41-first"));
  auto d2 = write_nf("d41b.json", load_fixture("d41-second"));
  auto no = run_cli({"--json", "equiv", "--in1", d1, "--in2", d2});
  CHECK(no.rc == cli::kFalse);
  CHECK(Json::parse(no.out) == Json{{"equivalent", false}});
}

TEST_CASE("cli construct and canon match the library") {
  auto r = run_cli({"construct", "decaen", "--n", "32", "--k", "7"});
  CHECK(r.rc == cli::kOk);
  CHECK(nf_from_json(Json::parse(r.out)) == decaen_nf(32, 7));
  CHECK(nf_from_json(Json::parse(run_cli({"construct", "bacso", "--r", "3"}).out)) == bacso_nf(3));
  std::vector<std::uint32_t> seq{3, 3, 3, 3};
  CHECK(nf_from_json(Json::parse(run_cli({"construct", "blowup", "--seq", "3,3,3,3"}).out)) == blowup_nf(seq));
  CHECK(nf_from_json(Json::parse(run_cli({"construct", "trivial", "--group", "D5xC5"}).out)) ==
        trivial_nf(make_group("D5xC5")));
  CHECK(run_cli({"construct", "decaen", "--n", "8", "--k", "4"}).rc == cli::kUsage);

  auto c = run_cli({"canon", "--in", write_nf("bs.json", load_fixture("d32-bacso"))});
  CHECK(c.rc == cli::kOk);
  auto lib = canonicalize(load_fixture("d32-bacso"));
  auto j = Json::parse(c.out);
  CHECK(nf_from_json(j["canonical"]) == load_fixture("d32-canonical"));
  CHECK(j["map"] == to_json(lib.map));
}

TEST_CASE("cli pecher") {
  auto out = (scratch_dir() / "d5.json").string();
  auto r = run_cli({"pecher", "--in", write_nf("z10.json", load_fixture("z10")), "--out", out});
  CHECK(r.rc == cli::kOk);
  CHECK(nf_from_json(read_json_file(out)) == load_fixture("d5"));
  auto back = run_cli({"pecher", "--dir", "inverse", "--in", out});
  CHECK(nf_from_json(Json::parse(back.out)) == load_fixture("z10"));

  auto even = run_cli({"pecher", "--in", write_nf("z16.json", load_fixture("z16"))});
  CHECK(even.rc == cli::kUsage);
  CHECK_FALSE(even.err.empty());
  CHECK(run_cli({"pecher", "--dir", "sideways", "--in", out}).rc == cli::kUsage);
}

TEST_CASE("cli enumerate") {
  auto r = run_cli({"--json", "enumerate", "--group", "D:8", "--k", "3", "--threads", "1"});
  CHECK(r.rc == cli::kOk);
  SearchSpec spec;
  spec.group = GroupId::dihedral(8);
  spec.k = 3;
  spec.l = 5;
  spec.threads = 1;
  auto lib = to_json(enumerate_nfs(spec));
  auto j = Json::parse(r.out);
  CHECK(j["classes"] == lib["classes"]);

  auto cut = run_cli({"enumerate", "--group", "Z:82", "--k", "9", "--restrict", "symmetric", "--max-nodes", "10"});
  CHECK(cut.rc == cli::kFalse);
  CHECK(contains(cut.out, "INCOMPLETE"));
  CHECK(run_cli({"enumerate", "--group", "D:8", "--k", "4"}).rc == cli::kUsage);
  CHECK(run_cli({"enumerate", "--group", "D:8"}).rc == cli::kUsage);

  auto sweep = run_cli({"--json", "enumerate", "--sweep", "6", "--sweep-min", "5"});
  CHECK(sweep.rc == cli::kOk);
  auto rows = Json::parse(sweep.out);
  REQUIRE(rows.is_array());
  CHECK(rows.size() == 3);  // D_5: k = 1, 3; D_6: k = 1
}

TEST_CASE("cli gsedf and graph") {
  auto nf_path = write_nf("z16g.json", load_fixture("z16"));
  auto from = run_cli({"gsedf", "from-nf", "--in", nf_path});
  CHECK(from.rc == cli::kOk);
  CHECK(Json::parse(from.out) == to_json(nf_to_gsedf(load_fixture("z16"))));
  auto inst = write_file("gsedf.json", from.out);
  auto v = run_cli({"gsedf", "verify", "--in", inst});
  CHECK(v.rc == cli::kOk);
  CHECK(contains(v.out, "GSEDF verified"));

  auto broken = Json::parse(from.out);
  broken["lambdas"][0] = 2;
  auto nv = run_cli({"--json", "gsedf", "verify", "--in", write_file("gsedf_bad.json", broken.dump())});
  CHECK(nv.rc == cli::kFalse);
  CHECK(Json::parse(nv.out)["ok"] == false);

  auto g = run_cli({"--json", "graph", "--report", "--in", write_nf("d8g.json", load_fixture("d8"))});
  CHECK(g.rc == cli::kOk);
  auto p = build_p_graph(load_fixture("d8"));
  auto j = Json::parse(g.out);
  CHECK(j["order"] == 16);
  CHECK(j["edge_count"] == p.edge_count());
  CHECK(j["report"] == to_json(critical_report(p)));
}

TEST_CASE("cli seed corpus and usage errors") {
  auto dir = scratch_dir() / "corpus";
  std::filesystem::remove_all(dir);
  auto r = run_cli({"--seed-corpus", dir.string()});
  CHECK(r.rc == cli::kOk);
  for (const auto& f : fixtures()) {
    auto path = dir / (f.name + ".json");
    REQUIRE(std::filesystem::exists(path));
    CHECK(nf_from_json(read_json_file(path.string())) == load(f));
  }
  auto all = Json::parse(run_cli({"--seed-corpus"}).out);
  CHECK(all.size() == fixtures().size());

  CHECK(run_cli({}).rc == cli::kUsage);
  CHECK(run_cli({"frobnicate"}).rc == cli::kUsage);
  CHECK(run_cli({"equiv", "--in1", "x.json"}).rc == cli::kUsage);
  CHECK(run_cli({"--help"}).rc == cli::kOk);
}
