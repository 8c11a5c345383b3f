#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgraph/classes.hpp"
#include "qgraph/cochain.hpp"
#include "qgraph/cocycles.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/evaluate.hpp"
#include "qgraph/homology.hpp"
#include "qgraph/io.hpp"
#include "qgraph/lie.hpp"
#include "qgraph/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// builtin name first, then a JSON file path
qgraph::LieAlgebraData resolve_algebra(const std::string& spec) {
    try {
        return qgraph::builtin_algebra(spec);
    } catch (const std::invalid_argument&) {
    }
    return qgraph::algebra_from_json(slurp(spec));
}

qgraph::Subcomplex parse_subcomplex(const std::string& name) {
    if (name == "G1") return qgraph::Subcomplex::G1;
    if (name == "G2") return qgraph::Subcomplex::G2;
    if (name == "G3") return qgraph::Subcomplex::G3;
    if (name == "G4") return qgraph::Subcomplex::G4;
    throw std::invalid_argument("unknown subcomplex: " + name);
}

// B and C are indexed by vertex count; b_graph takes the leg count, which is
// one more than the vertex count for the comb tree.
qgraph::Cochain emit_cochain(const std::string& series, int n,
                             std::vector<int> perm) {
    using qgraph::Cochain;
    if (series == "pi") return qgraph::pi(n);
    if (series == "psi") return qgraph::psi(n);
    const int legs = series == "B" ? n + 1 : n;
    if (perm.empty())
        for (int v = 2; v <= legs; ++v) perm.push_back(v);
    Cochain out;
    if (series == "B")
        out.add_canonical(qgraph::b_graph(legs, perm), 1);
    else
        out.add_canonical(qgraph::c_graph(legs, perm), 1);
    return out;
}

int cmd_verify(const std::string& suite, int max_n,
               const std::string& algebra_spec) {
    qgraph::VerifyOptions options;
    if (max_n > 0) {
        if (suite == "dims") {
            options.dims_tree_max_n = max_n;
            options.dims_loop_max_n = std::max(2, max_n - 1);
        } else if (suite == "psi-pi") {
            options.psi_pi_max_n = max_n;
        } else if (suite == "d2zero") {
            options.d2_tree_max_n = max_n;
            options.d2_loop_max_n = std::max(1, max_n - 1);
        } else if (suite == "laplacian") {
            options.laplacian_max_vertices = max_n;
        }
    }
    qgraph::SuiteReport report;
    if (suite == "lie-example" && !algebra_spec.empty())
        report = qgraph::lie_example_suite(resolve_algebra(algebra_spec),
                                           "(" + algebra_spec + ")");
    else
        report = qgraph::run_suite(suite, options);
    std::cout << qgraph::report_to_json(report) << "\n";
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for the graph complexes of homological "
                 "vector fields"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int verify_max_n = 0;
    std::string verify_algebra;
    verify->add_option("suite", suite, "one of d2zero, laplacian, dims, psi-pi, lie-example")
        ->required()
        ->check(CLI::IsMember(qgraph::suite_names()));
    verify->add_option("--max-n", verify_max_n,
                       "override the suite's main sector bound");
    verify->add_option("--algebra", verify_algebra,
                       "builtin algebra name or JSON file (lie-example only)");

    auto* enumerate =
        app.add_subcommand("enumerate", "list a sector basis as JSON lines");
    std::string enum_sub = "G3";
    int enum_n = 0, enum_m = 0, enum_k = 0;
    bool enum_dot = false;
    enumerate->add_option("--subcomplex", enum_sub, "G1, G2, G3 or G4")
        ->required();
    enumerate->add_option("--in", enum_n, "number of in-legs")->required();
    enumerate->add_option("--out", enum_m, "number of out-legs")->required();
    enumerate
        ->add_option("--k", enum_k,
                     "degree: black count, or effective degree for G2")
        ->required();
    enumerate->add_flag("--dot", enum_dot, "emit DOT instead of JSON");

    auto* betti_cmd =
        app.add_subcommand("betti", "cohomology dimension of one sector");
    std::string betti_sub = "G3";
    int betti_n = 0, betti_m = 0, betti_k = 0;
    betti_cmd->add_option("--subcomplex", betti_sub, "G1, G2, G3 or G4")
        ->required();
    betti_cmd->add_option("--in", betti_n, "number of in-legs")->required();
    betti_cmd->add_option("--out", betti_m, "number of out-legs")->required();
    betti_cmd
        ->add_option("--k", betti_k,
                     "degree: black count, or effective degree for G2")
        ->required();

    auto* emit = app.add_subcommand("emit", "emit a cocycle family member");
    std::string emit_series;
    int emit_n = 0;
    std::vector<int> emit_perm;
    bool emit_dot = false;
    emit->add_option("--series", emit_series, "pi, psi, B or C")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>{"pi", "psi", "B", "C"}));
    emit->add_option("--n", emit_n,
                     "series index (vertex count for B and C)")
        ->required();
    emit->add_option("--perm", emit_perm,
                     "leg permutation of 2..n for B and C");
    emit->add_flag("--dot", emit_dot, "emit DOT instead of JSON");

    auto* evaluate =
        app.add_subcommand("evaluate", "evaluate a cochain in a Lie algebra");
    std::string eval_cochain, eval_algebra;
    bool whites_vanish = false;
    evaluate->add_option("--cochain", eval_cochain, "cochain JSON file")
        ->required();
    evaluate
        ->add_option("--algebra", eval_algebra,
                     "builtin algebra name or JSON file")
        ->required();
    evaluate->add_flag(
        "--whites-vanish", whites_vanish,
        "send graphs with white vertices to zero instead of rejecting them");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed())
            return cmd_verify(suite, verify_max_n, verify_algebra);
        if (enumerate->parsed()) {
            const auto basis = qgraph::sector_basis(
                parse_subcomplex(enum_sub), enum_n, enum_m, enum_k);
            for (const auto& cg : basis) {
                if (enum_dot)
                    std::cout << qgraph::graph_to_dot(cg.graph);
                else
                    std::cout << qgraph::graph_to_json(cg.graph) << "\n";
            }
            return 0;
        }
        if (betti_cmd->parsed()) {
            const auto breakdown = qgraph::betti_breakdown(
                parse_subcomplex(betti_sub), betti_n, betti_m, betti_k);
            std::cout << "{\"betti\": " << breakdown.betti
                      << ", \"dim_space\": " << breakdown.dim_space
                      << ", \"rank_in\": " << breakdown.rank_in
                      << ", \"rank_out\": " << breakdown.rank_out << "}\n";
            return 0;
        }
        if (emit->parsed()) {
            const qgraph::Cochain c =
                emit_cochain(emit_series, emit_n, emit_perm);
            if (emit_dot) {
                for (const auto& [key, term] : c.terms())
                    std::cout << qgraph::graph_to_dot(term.first);
            } else {
                std::cout << qgraph::cochain_to_json(c) << "\n";
            }
            return 0;
        }
        if (evaluate->parsed()) {
            const qgraph::Cochain c =
                qgraph::cochain_from_json(slurp(eval_cochain));
            const qgraph::LieAlgebraData L = resolve_algebra(eval_algebra);
            const qgraph::SuperTensor t = qgraph::evaluate_graph(
                c, L,
                whites_vanish ? qgraph::WhitePolicy::zero
                              : qgraph::WhitePolicy::reject);
            std::cout << qgraph::tensor_to_json(t) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
