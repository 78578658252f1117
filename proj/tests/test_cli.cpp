#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "kronlab/cli.hpp"
#include "kronlab/errors.hpp"
#include "kronlab/json_io.hpp"

using namespace kronlab;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(JsonIo, QuiverRoundTripIsOneBased) {
  const Quiver q = Quiver::kronecker(2);
  EXPECT_EQ(to_json(q).dump(), R"({"arrows":[[2,1],[2,1]],"vertices":2})");
  EXPECT_EQ(quiver_from_json(to_json(q)), q);
  EXPECT_EQ(quiver_from_json(to_json(Quiver::linear(3))), Quiver::linear(3));
}

TEST(JsonIo, RejectsSchemaViolations) {
  for (const char* text : {
           R"([])",
           R"({"vertices":2})",
           R"({"vertices":-1,"arrows":[]})",
           R"({"vertices":2,"arrows":[[1]]})",
           R"({"vertices":2,"arrows":[[0,1]]})",
           R"({"vertices":2,"arrows":[[1,2],[2,1]]})",
           R"({"vertices":2,"arrows":[],"extra":1})",
       })
    EXPECT_THROW(quiver_from_json(parse_json(text)), InputError) << text;
  EXPECT_THROW(parse_json("{"), InputError);
}

TEST(JsonIo, RepValidation) {
  const std::string q = R"("quiver":{"vertices":2,"arrows":[[2,1]]})";
  EXPECT_NO_THROW(rep_from_json(parse_json("{" + q + R"(,"dims":[2,1],"maps":[[["1/2","3"]]]})")));
  for (const std::string body : {
           R"("dims":[2],"maps":[[["1","0"]]])",
           R"("dims":[2,1],"maps":[])",
           R"("dims":[2,1],"maps":[[["1","0"],["1","0"]]])",
           R"("dims":[2,1],"maps":[[["1"]]])",
           R"("dims":[2,1],"maps":[[["1/0","0"]]])",
           R"("dims":[2,1],"maps":[[["x","0"]]])",
           R"("dims":[2,1],"maps":[[[1.5,"0"]]])",
           R"("dims":[-2,1],"maps":[[["1","0"]]])",
       })
    EXPECT_THROW(rep_from_json(parse_json("{" + q + "," + body + "}")), InputError) << body;
}

// Random representations on several quivers survive to_json / parse.
TEST(JsonIo, RepRoundTripProperty) {
  std::mt19937_64 rng(5);
  for (const Quiver& q : {Quiver::kronecker(3), Quiver::linear(3), Quiver::kronecker(2)}) {
    for (int t = 0; t < 20; ++t) {
      DimVector d(q.vertex_count());
      for (std::size_t v = 0; v < d.size(); ++v) d[v] = static_cast<std::int64_t>(rng() % 4);
      Rep x = Rep::random(q, d, 5, rng);
      std::vector<RatMatrix> maps = x.maps();
      for (auto& m : maps)
        if (m.rows() && m.cols()) {
          m(0, 0) = Rational(static_cast<long>(rng() % 7) - 3, 4);
          m(0, 0).canonicalize();
        }
      x = Rep(q, d, maps);
      EXPECT_EQ(rep_from_json(parse_json(to_json(x).dump())), x);
    }
  }
}

TEST(Cli, RigidMatchesPrintedSequences) {
  const CliRun r = run({"rigid", "--m", "3", "--bound", "40", "--seed", "0", "--format", "tsv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\t1\n1\t0\n1\t3\n21\t8\n3\t1\n3\t8\n8\t21\n8\t3\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, Sequences) {
  const CliRun r = run({"sequences", "--m", "6", "--count", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "I\t(0,1) (1,6) (6,35)\nP\t(1,0) (6,1) (35,6)\n");
  const CliRun j = run({"sequences", "--m", "2", "--count", "2", "--format", "json"});
  EXPECT_EQ(j.out, R"({"m":2,"preinjective":[[0,1],[1,2]],"preprojective":[[1,0],[2,1]]})"
                   "\n");
}

TEST(Cli, RootsFromQuiverFile) {
  const auto path = temp_file("a3.json", R"({"vertices":3,"arrows":[[1,2],[2,3]]})");
  const CliRun r = run({"roots", "--in", path, "--bound", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 6u);
  EXPECT_EQ(run({"roots", "--in", path, "--m", "3"}).code, 2);
  EXPECT_EQ(run({"roots"}).code, 2);
}

TEST(Cli, HomDumpRoundTrip) {
  const auto a = temp_file("i0.json", to_json(Rep::injective(Quiver::kronecker(3), 0)).dump());
  const auto b = temp_file("p1.json", to_json(Rep::projective(Quiver::kronecker(3), 1)).dump());
  const CliRun r = run({"hom", "--in", a, "--in", b, "--dump", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse_json(r.out);
  EXPECT_EQ(j["hom"], 0);
  EXPECT_EQ(j["ext"], 21);  // -<(1,3),(3,1)> = -(3 + 3 - 27)
  EXPECT_EQ(j["euler"], -21);
  EXPECT_EQ(rep_from_json(j["source"]), Rep::injective(Quiver::kronecker(3), 0));
  EXPECT_EQ(rep_from_json(j["target"]), Rep::projective(Quiver::kronecker(3), 1));
  // The emitted form is a fixed point.
  EXPECT_EQ(to_json(rep_from_json(j["source"])), j["source"]);
}

TEST(Cli, ExitTwoLeavesStdoutEmpty) {
  const auto bad = temp_file("bad.json", "{not json");
  const auto good = temp_file("good.json", to_json(Rep::simple(Quiver::kronecker(2), 0)).dump());
  const auto other = temp_file("other.json", to_json(Rep::simple(Quiver::kronecker(3), 0)).dump());
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"rigid", "--bound", "3"},
           {"rigid", "--m", "3", "--bound", "0"},
           {"rigid", "--m", "3", "--trials", "0"},
           {"rigid", "--m", "3", "--format", "xml"},
           {"hom", "--in", bad, "--in", good},
           {"hom", "--in", good},
           {"hom", "--in", good, "--in", other},
           {"hom", "--in", "/nonexistent/file.json", "--in", good},
           {"mutate", "--m", "3", "--start", "5", "--steps", "3"},
           {"cluster", "--m", "1"},
           {"sequences", "--m", "1000", "--count", "64"},
           {"verify"},
           {"verify", "--claim", "thm-9.9"},
       }) {
    const CliRun r = run(args);
    EXPECT_EQ(r.code, 2) << testing::PrintToString(args);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(lines(r.err), 1u) << r.err;
  }
}

TEST(Cli, HelpExitsZero) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("mutate"), std::string::npos);
}

TEST(Cli, MutateWalk) {
  const CliRun up = run({"mutate", "--m", "3", "--start", "0", "--steps", "2"});
  EXPECT_EQ(up.code, 0);
  EXPECT_EQ(up.out, "1\t{M0,M1}\tM0\t{M1,M2}\n2\t{M1,M2}\tM1\t{M2,M3}\n");
  const CliRun down = run({"mutate", "--m", "3", "--start", "0", "--steps", "-1"});
  EXPECT_EQ(down.out, "1\t{M0,M1}\tM1\t{M-1,M0}\n");
}

TEST(Cli, ClusterTableSortedAndComplete) {
  const CliRun r = run({"cluster", "--m", "3", "--window", "2", "--bound", "1", "--regular-bound", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  // M-2..M2 plus P0 = M0 and I0 = M-3 from the module bound.
  const std::size_t n = 6;
  EXPECT_EQ(lines(r.out), n * n + n);
  EXPECT_NE(r.out.find("hom\tM0\tM1\t3\n"), std::string::npos);
  EXPECT_NE(r.out.find("hom\tM1\tM0\t0\n"), std::string::npos);
  EXPECT_NE(r.out.find("rigid\tM0\t1\n"), std::string::npos);
  std::istringstream in(r.out);
  std::string prev, line;
  while (std::getline(in, line)) {
    EXPECT_LE(prev, line);
    prev = line;
  }
}

TEST(Cli, OutFile) {
  const std::string path = testing::TempDir() + "seq.tsv";
  const CliRun r = run({"sequences", "--m", "3", "--count", "2", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "I\t(0,1) (1,3)\nP\t(1,0) (3,1)\n");
}

TEST(Cli, VerifySingleClaimDeterministic) {
  const std::vector<std::string> args = {"verify", "--claim", "thm-1.3", "--seed", "4"};
  const CliRun a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  auto strip = [](nlohmann::json j) {
    for (auto& r : j) r.erase("ms");
    return j.dump();
  };
  EXPECT_EQ(strip(parse_json(a.out)), strip(parse_json(b.out)));
}
