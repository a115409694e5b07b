#include <iostream>

#include <CLI11.hpp>

#include <zsuper/errors.hpp>
#include <zsuper_cli/cli.hpp>

int main(int argc, char **argv)
{
    using namespace zsuper::cli;

    CLI::App app{"Exact computations on Z2^n-graded atlases"};
    app.require_subcommand(1);

    command cmd;
    std::string convention;
    auto add_verb = [&](const char *name, const char *help, verb v, std::size_t min_files, std::size_t max_files) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("inputs", cmd.inputs, "input files")->required()->expected(
            static_cast<int>(min_files), static_cast<int>(max_files));
        sub->add_option("--k", cmd.k, "truncation order k (work mod J^{k+1})");
        sub->add_option("--D", cmd.degree_bound, "degree bound for base coefficients of unknowns");
        sub->add_option("--convention", convention, "sign rule: zsp, parity or comm");
        sub->add_option("--out", cmd.out_path, "write the resulting document here");
        if (v == verb::split) {
            sub->add_flag("--reverse-charts", cmd.reverse_charts, "order unknowns by reversed chart order");
        }
        sub->callback([&cmd, v] { cmd.action = v; });
    };
    add_verb("check-cocycle", "verify inverse and cocycle conditions", verb::check_cocycle, 1, 1);
    add_verb("superize", "reinterpret commutative data under a sign rule", verb::superize, 1, 1);
    add_verb("tangent-lift", "lift an n = 1 atlas to its tangent n = 2 atlas", verb::tangent_lift, 1, 1);
    add_verb("linearize", "extract the graded vector bundle J/J^2", verb::linearize, 1, 1);
    add_verb("split", "splitting isomorphism of an atlas, or split atlas of a bundle", verb::split, 1, 1);
    add_verb("verify", "verify a splitting against an atlas", verb::verify, 2, 2);
    add_verb("eval", "canonical form of a document, or pullback of a series", verb::eval, 1, 2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_input_error;
    }
    if (!convention.empty()) {
        try {
            cmd.convention = zsuper::parse_sign_rule(convention);
        } catch (const zsuper::error &e) {
            std::cerr << "error: " << e.what() << "\n";
            return exit_input_error;
        }
    }

    const auto result = run(cmd);
    std::cout << result.text;
    std::cerr << result.diagnostics;
    return result.status;
}
