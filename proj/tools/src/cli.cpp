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

#include "skewcomm_cli/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "skewcomm/commutation.hpp"
#include "skewcomm/errors.hpp"
#include "skewcomm/intertwiner.hpp"
#include "skewcomm/json_io.hpp"
#include "skewcomm/realizations.hpp"
#include "skewcomm/resolvent.hpp"
#include "skewcomm/suite.hpp"

namespace skewcomm::cli {

namespace {

struct Globals {
    double tol = kDefaultTol;
    std::uint64_t seed = 42;
    std::string out_path;
};

struct GenerateArgs {
    std::string kind;
    std::optional<int> n;
    std::string lambda;
    std::string x = "1,0";
    std::string y = "0,0";
    std::string z = "0,0";
    std::string q;
    int eps = 1;
    std::vector<std::string> betas;
    std::optional<int> pivot;
    bool solve = false;
    std::string generator = "E";
    std::string normalization = "bracket";
};

struct StoneArgs {
    std::string matrix_path;
    double a = 0.0;
    double b = 1.0;
    double epsilon = 1e-3;
    int nodes = 0;
    std::string rule = "trapezoid";
};

struct SuiteArgs {
    int trials = 100;
    int max_dim = 8;
};

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ConditionFailed:
            return kExitFailure;
        case ErrorKind::VerificationFailed:
        case ErrorKind::ConvergenceFailure:
            return kExitVerification;
        default:
            return kExitInputError;
    }
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::MalformedInput, "cannot read " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str());
}

// A bare matrix document, or a pair document whose "A" is used.
ComplexMatrix read_matrix(const std::string &path) {
    const Json j = read_json_file(path);
    if (j.is_object() && j.contains("A") && !j.contains("data")) {
        return matrix_from_json(j.at("A"));
    }
    return matrix_from_json(j);
}

void emit(const Json &report, const Globals &g, std::ostream &out) {
    const std::string text = report.dump(2) + "\n";
    if (g.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(g.out_path);
    if (!file) {
        throw Error(ErrorKind::MalformedInput, "cannot write " + g.out_path);
    }
    file << text;
}

int cmd_generate(const GenerateArgs &args, const Globals &g, std::ostream &out) {
    const auto kind = parse_realization_kind(args.kind);
    if (!kind) {
        throw Error(ErrorKind::InvalidParameter, "unknown kind '" + args.kind + "'");
    }
    RealizationSpec spec;
    spec.kind = *kind;
    RealizationParams &p = spec.params;
    p.n = args.n;
    if (!args.lambda.empty()) {
        p.lambda = parse_complex(args.lambda);
    }
    p.x = parse_complex(args.x);
    p.y = parse_complex(args.y);
    p.z = parse_complex(args.z);
    if (!args.q.empty()) {
        p.q = parse_complex(args.q);
    }
    p.eps = args.eps;
    for (const std::string &b : args.betas) {
        p.betas.push_back(parse_complex(b));
    }
    p.pivot = args.pivot;
    p.solve_pivot = args.solve;
    if (args.generator == "E" || args.generator == "e") {
        p.generator = UqGenerator::E;
    } else if (args.generator == "F" || args.generator == "f") {
        p.generator = UqGenerator::F;
    } else {
        throw Error(ErrorKind::InvalidParameter, "generator must be E or F");
    }
    if (args.normalization == "bracket") {
        p.normalization = UqNormalization::Bracket;
    } else if (args.normalization == "unit-lower") {
        p.normalization = UqNormalization::UnitLower;
    } else {
        throw Error(ErrorKind::InvalidParameter, "normalization must be bracket or unit-lower");
    }
    const OperatorPair pair = generate(spec, g.tol);
    Json doc = pair_to_json(pair);
    doc["realization"] = to_json(spec);
    emit(doc, g, out);
    return kExitOk;
}

int cmd_analyze(const std::string &path, const Globals &g, std::ostream &out) {
    const OperatorPair pair = pair_from_json(read_json_file(path));
    const ClassificationReport report = classify_pair(pair, g.tol);
    Json doc = to_json(report);
    doc["label"] = pair.label;
    doc["declared_lambda"] =
        pair.declared_lambda ? scalar_to_json(*pair.declared_lambda) : Json(nullptr);
    emit(doc, g, out);
    return report.consistent ? kExitOk : kExitFailure;
}

int cmd_intertwine(const std::string &path, const Globals &g, std::ostream &out,
                   std::ostream &err) {
    const OperatorPair pair = pair_from_json(read_json_file(path));
    try {
        const UnitaryIntertwiner ui = construct_intertwiner(pair, g.tol);
        emit(to_json(ui), g, out);
        return kExitOk;
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::ConditionFailed) {
            throw;
        }
        // Still report why: the residuals of both sides of the equivalence.
        err << "error: " << e.what() << "\n";
        emit(Json{{"condition", to_json(gudder_nagy_check(pair, g.tol))}}, g, out);
        return kExitFailure;
    }
}

int cmd_commutant(const std::string &path, const std::string &lambda_text, const Globals &g,
                  std::ostream &out) {
    const ComplexMatrix a = read_matrix(path);
    const Scalar lambda = parse_complex(lambda_text);
    Json basis = Json::array();
    for (const ComplexMatrix &b : solve_lambda_commutant(a, lambda, g.tol)) {
        basis.push_back(matrix_to_json(b));
    }
    emit(Json{{"lambda", scalar_to_json(lambda)}, {"dimension", basis.size()}, {"basis", basis}},
         g, out);
    return kExitOk;
}

int cmd_stone(const StoneArgs &args, const Globals &g, std::ostream &out) {
    const ComplexMatrix a = read_matrix(args.matrix_path);
    StoneQuadratureSpec spec;
    spec.interval = {args.a, args.b};
    spec.epsilon = args.epsilon;
    spec.nodes = args.nodes;
    if (args.rule == "trapezoid") {
        spec.rule = QuadratureRule::Trapezoid;
    } else if (args.rule == "gauss-legendre") {
        spec.rule = QuadratureRule::GaussLegendre;
    } else {
        throw Error(ErrorKind::InvalidParameter, "rule must be trapezoid or gauss-legendre");
    }
    emit(to_json(stone_projection(a, spec, g.tol)), g, out);
    return kExitOk;
}

int cmd_suite(const SuiteArgs &args, const Globals &g, std::ostream &out) {
    SuiteConfig cfg;
    cfg.seed = g.seed;
    cfg.trials = args.trials;
    cfg.tol = g.tol;
    cfg.max_dim = args.max_dim;
    const SuiteOutcome outcome = run_suite(cfg);
    Json doc = to_json(outcome);
    doc["config"] = to_json(cfg);
    emit(doc, g, out);
    return outcome.failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

Scalar parse_complex(const std::string &text) {
    auto number = [&](const std::string &s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != s.size() || !std::isfinite(v)) {
            throw Error(ErrorKind::MalformedInput,
                        "expected a complex number as re,im but got '" + text + "'");
        }
        return v;
    };
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        return {number(text), 0.0};
    }
    return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Numerical toolkit for lambda-commuting operator pairs", "skewcomm"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--tol", g.tol, "Relative tolerance")->capture_default_str();
    app.add_option("--seed", g.seed, "Base seed for randomized commands")->capture_default_str();
    app.add_option("--out", g.out_path, "Write the JSON report to this file");

    GenerateArgs gen;
    auto *generate_cmd = app.add_subcommand("generate", "Build a built-in realization pair");
    generate_cmd->fallthrough();
    generate_cmd->add_option("--kind", gen.kind, "Realization kind")->required();
    generate_cmd->add_option("--n", gen.n, "Dimension parameter");
    generate_cmd->add_option("--lambda", gen.lambda, "Factor as re,im");
    generate_cmd->add_option("--x", gen.x, "Jordan x as re,im");
    generate_cmd->add_option("--y", gen.y, "Jordan y as re,im");
    generate_cmd->add_option("--z", gen.z, "Jordan z as re,im");
    generate_cmd->add_option("--q", gen.q, "Quantum parameter as re,im");
    generate_cmd->add_option("--eps", gen.eps, "Weight sign for uq-sl2 (1 or -1)");
    generate_cmd->add_option("--betas", gen.betas, "Diagonal weights as re,im values");
    generate_cmd->add_option("--pivot", gen.pivot, "Nilpotent-diag pivot index");
    generate_cmd->add_flag("--solve", gen.solve, "Solve the pivot weight from lambda");
    generate_cmd->add_option("--generator", gen.generator, "uq-sl2 pair (K,E) or (K,F)");
    generate_cmd->add_option("--normalization", gen.normalization, "bracket or unit-lower");

    std::string pair_path;
    auto *analyze_cmd = app.add_subcommand("analyze", "Classify a pair");
    analyze_cmd->fallthrough();
    analyze_cmd->add_option("pair", pair_path, "Pair JSON file")->required();

    auto *intertwine_cmd = app.add_subcommand("intertwine", "Build U with AB = UBA");
    intertwine_cmd->fallthrough();
    intertwine_cmd->add_option("pair", pair_path, "Pair JSON file")->required();

    std::string matrix_path;
    std::string lambda_text;
    auto *commutant_cmd = app.add_subcommand("commutant", "Solve AB = lambda BA for B");
    commutant_cmd->fallthrough();
    commutant_cmd->add_option("matrix", matrix_path, "Matrix JSON file")->required();
    commutant_cmd->add_option("--lambda", lambda_text, "Factor as re,im")->required();

    StoneArgs stone;
    auto *stone_cmd = app.add_subcommand("stone", "Spectral projection by Stone's formula");
    stone_cmd->fallthrough();
    stone_cmd->add_option("matrix", stone.matrix_path, "Hermitian matrix JSON file")->required();
    stone_cmd->add_option("--a", stone.a, "Interval start")->required();
    stone_cmd->add_option("--b", stone.b, "Interval end")->required();
    stone_cmd->add_option("--epsilon", stone.epsilon, "Height above the real axis")
        ->capture_default_str();
    stone_cmd->add_option("--nodes", stone.nodes, "Quadrature nodes (0 picks spacing eps/5)")
        ->capture_default_str();
    stone_cmd->add_option("--rule", stone.rule, "trapezoid or gauss-legendre")
        ->capture_default_str();

    SuiteArgs suite;
    auto *suite_cmd = app.add_subcommand("suite", "Run the seeded property suite");
    suite_cmd->fallthrough();
    suite_cmd->add_option("--trials", suite.trials, "Trials per property")->capture_default_str();
    suite_cmd->add_option("--max-dim", suite.max_dim, "Largest random dimension")
        ->capture_default_str();

    std::vector<std::string> argv_store{"skewcomm"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (std::string &s : argv_store) {
        argv.push_back(s.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (!(g.tol > 0.0) || !std::isfinite(g.tol)) {
            throw Error(ErrorKind::InvalidParameter, "--tol must be positive");
        }
        if (generate_cmd->parsed()) {
            return cmd_generate(gen, g, out);
        }
        if (analyze_cmd->parsed()) {
            return cmd_analyze(pair_path, g, out);
        }
        if (intertwine_cmd->parsed()) {
            return cmd_intertwine(pair_path, g, out, err);
        }
        if (commutant_cmd->parsed()) {
            return cmd_commutant(matrix_path, lambda_text, g, out);
        }
        if (stone_cmd->parsed()) {
            return cmd_stone(stone, g, out);
        }
        return cmd_suite(suite, g, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitVerification;
    }
}

}  // namespace skewcomm::cli
