#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cli/commands.hpp"
#include "qapblock/generators.hpp"

namespace qapblock::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("qapblock_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "qapblock");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return run_cli(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  Json out_json() const { return Json::parse(out_.str()); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

const char* kExample = R"({"A": {"kind": "dense", "rows": [[2, 1, 1], [1, 0, 0], [1, 0, 0]]},
                          "B": {"kind": "multicut", "sizes": [1, 2]}})";

TEST_F(CliTest, SolveRefusesNonMonotoneAntiMongeWithoutOracle) {
  const std::string path = file("ex.json", kExample);
  EXPECT_EQ(run({"solve", path}), kExitUnsupported);
  EXPECT_NE(err_.str().find("unsupported"), std::string::npos);
  EXPECT_EQ(run({"solve", "--oracle", path}), kExitOk);
  const Json j = out_json();
  EXPECT_EQ(j["solver"], "oracle");
  EXPECT_EQ(j["value"], "2");
  EXPECT_EQ(j["permutation"], Json::parse("[2, 1, 3]"));
}

TEST_F(CliTest, SolveProductBlock) {
  const std::string path = file("p.json", R"({"A": {"kind": "dense", "rows": [[1, 2, 2], [2, 4, 4], [2, 4, 4]]},
      "B": {"kind": "block", "pattern": [[0, 2], [2, 1]], "sizes": [1, 2]}})");
  ASSERT_EQ(run({"solve", path}), kExitOk) << err_.str();
  const Json j = out_json();
  EXPECT_EQ(j["solver"], "product-block");
  EXPECT_EQ(j["value"], "32");
  EXPECT_EQ(j["identity"], true);
  EXPECT_EQ(j["certification"], "theorem-optimal");
}

TEST_F(CliTest, SolveMonotoneAntiMongeAgainstMulticut) {
  const std::string path = file("m.json", R"({"A": {"kind": "dense", "rows": [[0, 0, 0], [0, 1, 1], [0, 1, 2]]},
      "B": {"kind": "multicut", "sizes": [2, 1]}})");
  ASSERT_EQ(run({"solve", path}), kExitOk) << err_.str();
  EXPECT_EQ(out_json()["solver"], "multicut-monotone-anti-monge");
  EXPECT_EQ(out_json()["value"], "0");
}

TEST_F(CliTest, UncertifiedPatternNeedsForce) {
  const std::string path = file("h.json", R"({"A": {"kind": "product", "alpha": [1, 2, 3, 4]},
      "B": {"kind": "block", "pattern": [[2, 0], [0, 2]], "sizes": [2, 2]}})");
  EXPECT_EQ(run({"solve", path}), kExitUnsupported);
  ASSERT_EQ(run({"solve", "--force", path}), kExitOk) << err_.str();
  EXPECT_EQ(out_json()["certification"], "separable-heuristic");
}

TEST_F(CliTest, OracleCap) {
  const std::string path = file("big.json", R"({"A": {"kind": "product", "alpha": [1, 2, 3, 4]},
      "B": {"kind": "multicut", "sizes": [2, 2]}})");
  EXPECT_EQ(run({"--max-n", "3", "solve", "--oracle", path}), kExitUnsupported);
  EXPECT_NE(err_.str().find("size limit"), std::string::npos);
}

TEST_F(CliTest, Recognize) {
  const std::string path = file("ex.json", kExample);
  ASSERT_EQ(run({"recognize", path}), kExitOk);
  const Json j = out_json();
  EXPECT_EQ(j["A"]["anti_monge"], true);
  EXPECT_EQ(j["A"]["monotone"], false);
  EXPECT_EQ(j["A"]["sum"], true);
  EXPECT_EQ(j["B"]["multicut"], true);
}

TEST_F(CliTest, BadInputs) {
  EXPECT_EQ(run({"solve", file("z.json", R"({"A": {"kind": "dense", "rows": [["1/0"]]}})")}), kExitBadInput);
  EXPECT_NE(err_.str().find("/A/rows/0/0"), std::string::npos);
  EXPECT_EQ(run({"solve", (dir_ / "missing.json").string()}), kExitBadInput);
  EXPECT_EQ(run({"frobnicate"}), kExitBadInput);
  EXPECT_EQ(run({}), kExitBadInput);
  EXPECT_EQ(run({"--help"}), kExitOk);
  EXPECT_EQ(run({"solve", file("nob.json", R"({"A": {"kind": "product", "alpha": [1]}})")}), kExitBadInput);
}

TEST_F(CliTest, Classify) {
  ASSERT_EQ(run({"classify", file("c.json", R"({"pattern": [[0, 2], [2, 1]]})")}), kExitOk);
  EXPECT_EQ(out_json()["verdict"], "PolynomialByCondition14");
  EXPECT_EQ(out_json()["two_by_two"], "polynomial");
  ASSERT_EQ(run({"classify", file("h.json", R"({"B": {"kind": "block", "pattern": [[2, 0], [0, 2]], "sizes": [1, 1]}})")}),
            kExitOk);
  const Json j = out_json();
  EXPECT_EQ(j["verdict"], "NPHardByCondition16");
  EXPECT_EQ(j["witness"]["r"], 1);
  EXPECT_EQ(j["witness"]["s"], 2);
}

TEST_F(CliTest, ReducePartitionThenSolve) {
  const std::string in = file("part.json", R"({"pattern": [[2, 0], [0, 2]], "values": ["1/2", "1/2", "1/2", "1/2"]})");
  const std::string red = (dir_ / "red.json").string();
  ASSERT_EQ(run({"-o", red, "reduce", "partition", in}), kExitOk) << err_.str();
  const InstanceFile inst = parse_instance(read_text(red));
  EXPECT_EQ(inst.metadata.threshold, Rational(1));
  EXPECT_EQ(inst.sidecar["K"], 6);
  EXPECT_EQ(inst.sidecar["n"], 22);
  EXPECT_EQ(inst.sidecar["block_sizes"], Json::parse("[11, 11]"));
}

TEST_F(CliTest, ReducePartitionRejectsEasyPattern) {
  const std::string in = file("part.json", R"({"pattern": [[0, 2], [2, 1]], "values": [1, 1]})");
  EXPECT_EQ(run({"reduce", "partition", in}), kExitUnsupported);
  EXPECT_EQ(run({"reduce", "partition", file("bad.json", R"({"pattern": [[2, 0], [0, 2]], "values": [1]})")}),
            kExitBadInput);
}

TEST_F(CliTest, ReduceBisectionThenOracle) {
  const std::string in = file("g.json", R"({"vertices": 4, "edges": [[1, 2], [2, 3], [3, 4], [4, 1]], "t": 2})");
  const std::string red = (dir_ / "red.json").string();
  ASSERT_EQ(run({"-o", red, "reduce", "bisection", in}), kExitOk) << err_.str();
  EXPECT_EQ(parse_instance(read_text(red)).metadata.threshold, Rational(84));
  EXPECT_EQ(run({"solve", red}), kExitUnsupported);
  ASSERT_EQ(run({"solve", "--oracle", red}), kExitOk) << err_.str();
  EXPECT_EQ(out_json()["value"], "84");
  EXPECT_EQ(run({"reduce", "bisection", file("z.json", R"({"vertices": 4, "edges": [[0, 1]], "t": 0})")}),
            kExitBadInput);
}

TEST_F(CliTest, GenIsDeterministic) {
  ASSERT_EQ(run({"--seed", "1", "gen", "multicut", "--n", "7", "--q", "3"}), kExitOk);
  const std::string first = out_.str();
  const InstanceFile f = parse_instance(first);
  ASSERT_TRUE(f.b.has_value());
  EXPECT_EQ(materialize(*f.b).size(), 7u);
  ASSERT_EQ(run({"--seed", "1", "gen", "multicut", "--n", "7", "--q", "3"}), kExitOk);
  EXPECT_EQ(out_.str(), first);
  for (const char* kind : {"anti-monge", "monotone-anti-monge", "product"}) {
    ASSERT_EQ(run({"gen", kind, "--n", "5"}), kExitOk) << kind;
    EXPECT_EQ(materialize(*parse_instance(out_.str()).a).size(), 5u);
  }
  ASSERT_EQ(run({"gen", "pattern", "--q", "3", "--family", "condition14"}), kExitOk);
  EXPECT_TRUE(parse_instance(out_.str()).pattern.has_value());
}

TEST_F(CliTest, VerifySubset) {
  EXPECT_EQ(run({"verify", "--criteria", "1", "3", "--scale", "0.2"}), kExitOk) << out_.str();
  EXPECT_NE(out_.str().find("summary: 2/2"), std::string::npos);
  EXPECT_EQ(run({"verify", "--criteria", "12"}), kExitBadInput);
}

TEST(SolveInstance, PermutedMulticutMapsBack) {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 3 + rng() % 4;
    const SymMatrix a = gen_monotone_anti_monge(n, 3, rng());
    std::vector<std::size_t> sizes = gen_multicut(n, 1 + rng() % 3, rng()).sizes();
    std::shuffle(sizes.begin(), sizes.end(), rng);
    const SymMatrix b = expand(MultiCutSpec(sizes));
    InstanceFile file;
    file.a = a;
    file.b = b;
    const SolveReport rep = solve_instance(file, {});
    EXPECT_NE(rep.solver, "oracle");
    EXPECT_EQ(evaluate(QapInstance(a, b), rep.permutation), rep.value);
    EXPECT_EQ(brute_force_optimum(QapInstance(a, b)).value, rep.value);
  }
}

TEST(SolveInstance, RecognizedProductWithFractionalScale) {
  const std::vector<Rational> alpha{Rational(1, 2), Rational(3, 2), 1, 2};
  const SymMatrix a = expand(ProductSpec(alpha));
  InstanceFile file;
  file.a = a;
  file.b = BlockSpec(SymMatrix({{0, 2}, {2, 1}}), {2, 2});
  const SolveReport rep = solve_instance(file, {});
  EXPECT_EQ(rep.solver, "product-block");
  const QapInstance qap(a, materialize(*file.b));
  EXPECT_EQ(evaluate(qap, rep.permutation), rep.value);
  EXPECT_EQ(brute_force_optimum(qap).value, rep.value);
}

}  // namespace
}  // namespace qapblock::cli
