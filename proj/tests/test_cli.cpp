#include "deltoid/invariants.hpp"
#include "io.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

using namespace deltoid;
using io::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
  json doc() const { return json::parse(out); }
};

Run run(const std::string &args) {
  std::string cmd = std::string(DELTOID_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE *p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
    r.out.append(buf.data(), got);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string fixture_path(const std::string &name) { return std::string(DELTOID_FIXTURES) + "/" + name + ".json"; }

std::string temp_doc(const std::string &name, const json &doc) {
  auto path = std::filesystem::temp_directory_path() / ("deltoid_test_" + name + ".json");
  std::ofstream(path) << doc.dump();
  return path.string();
}

DeltaMatroid DM(int n, std::vector<std::vector<int>> sets) {
  std::vector<AdmissibleSet> s;
  for (auto &e : sets)
    s.push_back(AdmissibleSet::from_signed(n, e));
  return DeltaMatroid::from_sets(n, s);
}

} // namespace

TEST_CASE("io: delta-matroid round trip, n <= 3") {
  for (int n = 0; n <= 3; ++n)
    for (auto &d : enumerate_deltamatroids(n)) {
      auto doc = io::from_delta(d);
      CHECK(doc["format"] == io::kFormat);
      CHECK(io::to_delta(json::parse(doc.dump())) == d);
    }
}

TEST_CASE("io: other documents round trip") {
  auto m = Matroid::uniform(2, 4);
  CHECK(io::to_matroid(io::from_matroid(m)) == m);
  Graph g{4, {{1, 2}, {2, 3}, {3, 4}}};
  auto g2 = io::to_graph(io::from_graph(g));
  CHECK(g2.n == g.n);
  CHECK(g2.edges == g.edges);
  auto l = adjacency_matrix_rep(g);
  auto md = io::to_matrix(io::from_matrix(l, FormType::D));
  CHECK(md.matrix.rref() == l.rref());
  CHECK(md.form == FormType::D);
  CHECK(io::to_delta(io::from_graph(g)) == adjacency_delta(g));
  CHECK(io::to_delta(io::from_matrix(l, FormType::D)) == adjacency_delta(g));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + trial % 3;
    auto p = BnPolytope::of(random_deltamatroid(n, rng())).dilate(1 + trial % 2);
    CHECK(io::to_polytope(io::from_polytope(p)) == p);
    auto dec = delta_decompose(p);
    auto back = io::to_decomposition(io::from_decomposition(dec));
    CHECK(realize(back) == p);
  }
  CHECK(io::number(Q(3, 4)) == "3/4");
  CHECK(io::number(Q(5)) == 5);
}

TEST_CASE("io: malformed documents") {
  CHECK_THROWS_AS(io::to_delta(json{{"format", 1}, {"type", "delta-matroid"}}), io::InputError);
  CHECK_THROWS_AS(io::to_delta(json::parse(R"({"format":1,"type":"delta-matroid","n":2,"feasible":[[3]]})")),
                  io::InputError);
  CHECK_THROWS_AS(io::to_graph(json::parse(R"({"format":1,"type":"graph","n":2,"edges":[[1,1]]})")),
                  std::exception);
  auto path = temp_doc("format2", json{{"format", 2}, {"type", "delta-matroid"}});
  CHECK_THROWS_AS(io::read_document(path), io::InputError);
  CHECK_THROWS_AS(io::read_document("/nonexistent/deltoid.json"), io::InputError);
}

TEST_CASE("fixture catalog") {
  auto names = io::fixture_names();
  CHECK(names.size() >= 15);
  CHECK(io::to_delta(io::fixture("duchamp")).feasible().size() == 9);
  CHECK(io::to_delta(io::fixture("circle")) == DM(2, {{1, 2}, {-1, -2}}));
  CHECK(io::fixture_file("u_circ 7 20") == "circ_7_20.json");
  CHECK_THROWS(io::fixture("no-such-fixture"));
  // The files shipped in fixtures/ are the catalog as generated.
  for (auto &name : names) {
    auto file = std::string(DELTOID_FIXTURES) + "/" + io::fixture_file(name);
    INFO(file);
    REQUIRE(std::filesystem::exists(file));
    CHECK(io::read_document(file) == io::fixture(name));
  }
}

TEST_CASE("cli: exit codes") {
  CHECK(run("validate " + fixture_path("duchamp")).status == 0);
  auto bad = temp_doc("bad", json::parse(R"({"format":1,"type":"delta-matroid","n":3,"feasible":[[1,2,3],[-1,-2,-3]]})"));
  auto r = run("validate " + bad);
  CHECK(r.status == 1);
  CHECK(r.doc()["valid"] == false);
  CHECK(r.doc()["violation"].contains("message"));
  CHECK(run("bogus").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("validate /nonexistent/deltoid.json").status == 2);
  auto v2 = temp_doc("v2", json{{"format", 2}});
  CHECK(run("upoly " + v2).status == 2);
}

TEST_CASE("cli: invariants") {
  auto u = run("upoly " + fixture_path("circle"));
  REQUIRE(u.status == 0);
  CHECK(u.doc()["type"] == "polynomial");
  CHECK(u.doc()["polynomial"]["text"] == "u^2 + 4*u + 2*v + 2");

  auto i = run("interlace " + fixture_path("circ_7_20"));
  REQUIRE(i.status == 0);
  auto c = i.doc()["coefficients"];
  REQUIRE(c.size() >= 4);
  CHECK(c[0] == 94184);
  CHECK(c[1] == 169766);
  CHECK(c[2] == 167960);
  CHECK(c[3] == 184756);
}

TEST_CASE("cli: polytopes") {
  auto v = run("volume " + fixture_path("cube_2"));
  REQUIRE(v.status == 0);
  CHECK(v.doc()["volume"] == 2);

  auto d = run("decompose " + fixture_path("cube_2"));
  REQUIRE(d.status == 0);
  CHECK(d.doc()["reconstructs"] == true);
  CHECK(realize(io::to_decomposition(d.doc())) == BnPolytope::cube(2));

  auto l = run("lattice-count " + fixture_path("cube_2"));
  REQUIRE(l.status == 0);
  CHECK(l.doc()["count"] == 4);
  CHECK(l.doc()["multiset_formula"] == 4);
  CHECK(l.doc()["formula_matches"] == true);

  auto s = run("schubert census 2");
  REQUIRE(s.status == 0);
  CHECK(s.doc()["counts"] == json::array({1, 6, 1}));
  CHECK(s.doc()["match"] == true);
}

TEST_CASE("cli: representations and envelopes") {
  auto g = run("from-graph " + fixture_path("path3"));
  REQUIRE(g.status == 0);
  CHECK(io::to_delta(g.doc()) == adjacency_delta(Graph{3, {{1, 2}, {2, 3}}}));

  auto e = run("envelope " + fixture_path("duchamp"));
  REQUIRE(e.status == 0);
  CHECK(e.doc()["found"] == false);
  auto c = run("envelope " + fixture_path("circle"));
  REQUIRE(c.status == 0);
  CHECK(c.doc()["found"] == true);
}

TEST_CASE("cli: log-concavity corollaries") {
  auto r = run("logconc " + fixture_path("circ_7_20") + " --suite corollaries");
  REQUIRE(r.status == 0);
  CHECK(r.doc()["interlace_log_concave"] == false);
  CHECK(r.doc()["interlace_transform"][0] == 0);
}
