// Copyright 2026 The skewcomm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include "skewcomm/errors.hpp"
#include "skewcomm/json_io.hpp"
#include "skewcomm/realizations.hpp"
#include "skewcomm_cli/cli.hpp"
#include "test_util.hpp"

namespace skewcomm {
namespace {

namespace fs = std::filesystem;
using testing::dist;
using testing::kI;

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
    Json json() const { return parse_json(out); }
};

CliRun run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    CliRun r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::path(SKEWCOMM_TEST_TMPDIR) /
               ::testing::UnitTest::GetInstance()->current_test_info()->name();
        fs::create_directories(dir_);
    }

    std::string write(const std::string &name, const Json &j) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << j.dump();
        return p.string();
    }

    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

TEST(ParseComplex, Formats) {
    EXPECT_EQ(cli::parse_complex("3,0"), Scalar(3.0));
    EXPECT_EQ(cli::parse_complex("0,1"), kI);
    EXPECT_EQ(cli::parse_complex("-2.5"), Scalar(-2.5));
    EXPECT_EQ(cli::parse_complex("1e-3,-2"), Scalar(1e-3, -2.0));
    EXPECT_THROW(cli::parse_complex("a,b"), Error);
    EXPECT_THROW(cli::parse_complex("1,"), Error);
    EXPECT_THROW(cli::parse_complex("1,2,3"), Error);
}

TEST_F(Cli, GenerateClockShiftToFile) {
    const CliRun r = run({"generate", "--kind", "clock-shift", "--n", "4", "--out", path("pair.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path("pair.json"));
    std::stringstream buf;
    buf << in.rdbuf();
    const OperatorPair p = pair_from_json(parse_json(buf.str()));
    EXPECT_EQ(p.A.rows(), 4);
    EXPECT_LT(std::abs(*p.declared_lambda - kI), 1e-15);
}

TEST_F(Cli, GeneratePauliToStdout) {
    const CliRun r = run({"generate", "--kind", "pauli-xy"});
    ASSERT_EQ(r.code, 0);
    const OperatorPair p = pair_from_json(r.json());
    EXPECT_EQ(p.A, sigma_x());
    EXPECT_EQ(p.B, sigma_y());
}

TEST_F(Cli, GenerateRejectsNonRootOfUnity) {
    const CliRun r = run({"generate", "--kind", "cyclic-shift-diag", "--n", "4", "--lambda", "3,0"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("λ^N ≠ 1"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST_F(Cli, GenerateInputErrors) {
    EXPECT_EQ(run({"generate", "--kind", "torus"}).code, 2);
    EXPECT_EQ(run({"generate"}).code, 2);
    EXPECT_EQ(run({"generate", "--kind", "jordan2", "--lambda", "x,1"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST_F(Cli, GenerateEveryParameter) {
    const CliRun nil = run({"generate", "--kind", "nilpotent-diag", "--betas", "1,0", "2,0", "0.5,1",
                         "--pivot", "2", "--lambda", "0,3", "--solve"});
    ASSERT_EQ(nil.code, 0) << nil.err;
    EXPECT_EQ(pair_from_json(nil.json()).A.rows(), 3);
    const CliRun uq = run({"generate", "--kind", "uq-sl2", "--n", "2", "--q", "2,0", "--eps", "-1",
                        "--generator", "F", "--normalization", "unit-lower"});
    ASSERT_EQ(uq.code, 0) << uq.err;
    EXPECT_LT(std::abs(*pair_from_json(uq.json()).declared_lambda - 0.25), 1e-15);
    const CliRun j3 = run({"generate", "--kind", "jordan3", "--x", "2,0", "--y", "0,1", "--z", "1,1",
                        "--lambda", "0.5,0.5"});
    EXPECT_EQ(j3.code, 0) << j3.err;
}

TEST_F(Cli, AnalyzePauliXY) {
    const std::string p = write("p.json", pair_to_json(pauli_pair(PauliKind::XY)));
    const CliRun r = run({"analyze", p});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = r.json();
    EXPECT_EQ(j.at("status"), "UNIQUE");
    EXPECT_LT(std::abs(scalar_from_json(j.at("lambda_hat")) + 1.0), 1e-15);
    EXPECT_TRUE(j.at("consistent").get<bool>());
}

TEST_F(Cli, AnalyzeNilpotentLambdaThree) {
    const CliRun g = run({"generate", "--kind", "nilpotent-diag", "--betas", "1,0", "3,0", "--pivot",
                       "1", "--lambda", "3,0", "--out", path("ex5.json")});
    ASSERT_EQ(g.code, 0) << g.err;
    const CliRun r = run({"analyze", path("ex5.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = r.json();
    EXPECT_EQ(j.at("status"), "UNIQUE");
    EXPECT_TRUE(j.at("ab_quasi_nilpotent").get<bool>());
}

TEST_F(Cli, AnalyzeGenericPairReportsNoFactor) {
    OperatorPair p{diagonal({1.0, 2.0}), testing::mat({{0.3, Scalar(1, 2)}, {Scalar(1, -2), -1}}),
                   std::nullopt, ""};
    const CliRun r = run({"analyze", write("g.json", pair_to_json(p))});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.json().at("status"), "NONE");
    EXPECT_NE(r.json().at("summary").get<std::string>().find("no factor"), std::string::npos);
}

TEST_F(Cli, AnalyzeInconsistentExitsOne) {
    const std::string p =
        write("loose.json", pair_to_json({diagonal({1.0, 2.0}), sigma_x(), std::nullopt, ""}));
    const CliRun r = run({"--tol", "0.07", "analyze", p});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(r.json().at("consistent").get<bool>());
    // Global flag after the subcommand works too.
    EXPECT_EQ(run({"analyze", p, "--tol", "0.07"}).code, 1);
}

TEST_F(Cli, AnalyzeInputErrors) {
    EXPECT_EQ(run({"analyze", path("missing.json")}).code, 2);
    const std::string bad = path("bad.json");
    std::ofstream(bad) << "{\"A\": 3}";
    EXPECT_EQ(run({"analyze", bad}).code, 2);
    std::ofstream(path("trunc.json")) << "{\"A\":";
    EXPECT_EQ(run({"analyze", path("trunc.json")}).code, 2);
    EXPECT_EQ(run({"--tol", "-1", "analyze", bad}).code, 2);
}

TEST_F(Cli, IntertwinePauliExample) {
    const std::string p = write("p.json", pair_to_json(pauli_pair(PauliKind::Intertwiner)));
    const CliRun r = run({"intertwine", p});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_LT(dist(matrix_from_json(r.json().at("U")), kI * sigma_z()), 1e-10);
}

TEST_F(Cli, IntertwineCommutingGivesIdentity) {
    const std::string p = write(
        "c.json", pair_to_json({diagonal({1.0, 3.0}), diagonal({2.0, 5.0}), std::nullopt, ""}));
    const CliRun r = run({"intertwine", p});
    ASSERT_EQ(r.code, 0);
    EXPECT_LT(dist(matrix_from_json(r.json().at("U")), identity(2)), 1e-12);
}

TEST_F(Cli, IntertwineConditionFailure) {
    const std::string p =
        write("f.json", pair_to_json({diagonal({1.0, 2.0}), sigma_x(), std::nullopt, ""}));
    const CliRun r = run({"intertwine", p});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("ConditionFailed"), std::string::npos);
    EXPECT_FALSE(r.json().at("condition").at("lhs_holds").get<bool>());
}

TEST_F(Cli, IntertwineNonHermitianIsInputError) {
    const std::string p = write(
        "n.json", pair_to_json({testing::mat({{0, 1}, {0, 0}}), sigma_x(), std::nullopt, ""}));
    EXPECT_EQ(run({"intertwine", p}).code, 2);
}

TEST_F(Cli, CommutantExamples) {
    const CliRun a = run({"commutant", write("d.json", matrix_to_json(diagonal({1.0, 2.0}))),
                       "--lambda", "2,0"});
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(a.json().at("basis").size(), 1u);
    const ComplexMatrix b = matrix_from_json(a.json().at("basis")[0]);
    EXPECT_NEAR(std::abs(b(1, 0)), 1.0, 1e-14);

    const CliRun id = run({"commutant", write("i.json", matrix_to_json(identity(3))), "--lambda", "1,0"});
    ASSERT_EQ(id.code, 0);
    EXPECT_EQ(id.json().at("basis").size(), 9u);

    const CliRun jordan = run(
        {"commutant", write("j.json", matrix_to_json(testing::mat({{1, 1}, {0, 1}}))), "--lambda", "1,0"});
    EXPECT_EQ(jordan.code, 2);
    EXPECT_NE(jordan.err.find("NotNormal"), std::string::npos);
}

TEST_F(Cli, CommutantAcceptsPairDocument) {
    const std::string p = write("p.json", pair_to_json(pauli_pair(PauliKind::XY)));
    const CliRun r = run({"commutant", p, "--lambda", "-1,0"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json().at("basis").size(), 2u);
}

TEST_F(Cli, StoneExamples) {
    const std::string m = write("m.json", matrix_to_json(diagonal({1.0, 2.0, 3.0})));
    const CliRun mid = run({"stone", m, "--a", "1.5", "--b", "2.5", "--epsilon", "1e-3"});
    ASSERT_EQ(mid.code, 0) << mid.err;
    EXPECT_LT(mid.json().at("exact_error").get<double>(), 5e-3);
    EXPECT_LT(dist(matrix_from_json(mid.json().at("projection")), diagonal({0.0, 1.0, 0.0})), 5e-3);

    const CliRun all = run({"stone", m, "--a", "0.5", "--b", "3.5"});
    ASSERT_EQ(all.code, 0);
    EXPECT_LT(dist(matrix_from_json(all.json().at("projection")), identity(3)), 5e-3);

    EXPECT_EQ(run({"stone", m, "--a", "1", "--b", "2.5"}).code, 2);
    EXPECT_EQ(run({"stone", m, "--a", "1.5", "--b", "2.5", "--rule", "simpson"}).code, 2);
    const CliRun gl = run({"stone", m, "--a", "1.5", "--b", "2.5", "--epsilon", "1e-2", "--nodes",
                        "400", "--rule", "gauss-legendre"});
    EXPECT_EQ(gl.code, 0) << gl.err;
}

TEST_F(Cli, SuiteIsDeterministic) {
    const CliRun a = run({"suite", "--seed", "42", "--trials", "1"});
    const CliRun b = run({"suite", "--seed", "42", "--trials", "1"});
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.json().at("config").at("seed"), 42);
    EXPECT_EQ(a.json().at("failed"), 0);
}

TEST_F(Cli, SuiteTinyToleranceReportsFailures) {
    const CliRun r = run({"suite", "--trials", "1", "--tol", "1e-18"});
    EXPECT_EQ(r.code, 1);
    EXPECT_GT(r.json().at("failed").get<int>(), 0);
    EXPECT_FALSE(r.json().at("failures").empty());
}

TEST_F(Cli, SuiteBadConfig) {
    EXPECT_EQ(run({"suite", "--trials", "0"}).code, 2);
}

TEST_F(Cli, RoundTripEveryKind) {
    const std::vector<std::vector<std::string>> kinds = {
        {"--kind", "clock-shift", "--n", "5"},
        {"--kind", "cyclic-shift-diag", "--n", "3", "--lambda", "-0.5,0.8660254037844386"},
        {"--kind", "nilpotent-diag", "--betas", "1,0", "2,0", "--pivot", "1", "--lambda", "2,0"},
        {"--kind", "jordan2", "--x", "1,0", "--y", "2,0", "--lambda", "5,0"},
        {"--kind", "jordan3", "--x", "4,0", "--lambda", "0.25,0"},
        {"--kind", "pauli-xy"},
        {"--kind", "pauli-intertwiner"},
        {"--kind", "uq-sl2", "--n", "3", "--q", "2,0"},
    };
    for (const auto &k : kinds) {
        std::vector<std::string> args{"generate"};
        args.insert(args.end(), k.begin(), k.end());
        args.insert(args.end(), {"--out", path("rt.json")});
        ASSERT_EQ(run(args).code, 0) << k[1];
        const CliRun a = run({"analyze", path("rt.json")});
        EXPECT_EQ(a.code, 0) << k[1];
        EXPECT_TRUE(a.json().at("consistent").get<bool>()) << k[1];
    }
}

TEST_F(Cli, HelpExitsZero) {
    const CliRun r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("suite"), std::string::npos);
}

}  // namespace
}  // namespace skewcomm
