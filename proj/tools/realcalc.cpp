// realcalc: exact real calculator and law-suite runner.
//
// eval   -> decimal within 10^-digits of the exact value
// bounds -> rational bracket lower < value < upper of width < 2^-n
// check  -> seeded law suites, one "LAW <name> PASS|FAIL" line each
//
// Exit codes: 0 success / all laws pass, 1 some law failed, 2 bad usage
// or unparseable input.

#include <CLI11.hpp>

#include "reals/arith.hpp"
#include "reals/expr.hpp"
#include "reals/suites.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

unsigned ladder_for(const reals::Rational& slack) {
    unsigned k = 0;
    reals::Rational p(1);
    while (p > slack && k < 64) {
        p = p / 2;
        ++k;
    }
    return k;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact real calculator"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "also write the output to this file");

    std::string eval_text;
    unsigned digits = 6;
    CLI::App* eval_cmd =
        app.add_subcommand("eval", "print a decimal within 10^-digits of the value");
    eval_cmd->add_option("expression", eval_text, "expression to evaluate")->required();
    eval_cmd->add_option("--digits", digits, "correct fraction digits")
        ->check(CLI::Range(1u, 60u));

    std::string bounds_text;
    unsigned bounds_n = 20;
    CLI::App* bounds_cmd =
        app.add_subcommand("bounds", "print a rational bracket of width < 2^-n");
    bounds_cmd->add_option("expression", bounds_text, "expression to bracket")
        ->required();
    bounds_cmd->add_option("n", bounds_n, "precision exponent")
        ->required()
        ->check(CLI::Range(0u, 64u));

    std::string suite;
    std::uint64_t seed = 20260819;
    int budget = 64;
    int instances = 200;
    std::string slack_text = "1/1048576";
    CLI::App* check_cmd = app.add_subcommand("check", "run a law suite");
    check_cmd->add_option("suite", suite, "laws | limits | cuts | models | midpoint")
        ->required()
        ->check(CLI::IsMember({"laws", "limits", "cuts", "models", "midpoint"}));
    check_cmd->add_option("--seed", seed, "generator seed");
    check_cmd->add_option("--budget", budget, "probe budget per closeness query")
        ->check(CLI::Range(1, 4096));
    check_cmd->add_option("--instances", instances, "generated instances per law")
        ->check(CLI::Range(1, 1000000));
    check_cmd->add_option("--slack", slack_text, "rational comparison slack");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help is success, everything else is usage
    }

    std::ostringstream out;
    int code = 0;
    try {
        if (eval_cmd->parsed()) {
            reals::Real u = reals::evaluate(*reals::parse_expression(eval_text));
            out << reals::eval_decimal(u, digits) << '\n';
        } else if (bounds_cmd->parsed()) {
            reals::Real u = reals::evaluate(*reals::parse_expression(bounds_text));
            reals::Bounds b = reals::rational_bounds(u, bounds_n);
            out << b.lower.to_string() << ' ' << b.upper.to_string() << '\n';
        } else {
            reals::SuiteConfig cfg;
            cfg.seed = seed;
            cfg.instances = instances;
            cfg.budget = budget;
            cfg.slack = reals::Rational::from_string(slack_text);
            if (cfg.slack.is_negative())
                throw std::domain_error("--slack must be >= 0");
            cfg.ladder = ladder_for(cfg.slack);
            reals::CheckReport rep;
            if (suite == "laws")
                rep = reals::check_distance_laws(cfg);
            else if (suite == "limits")
                rep = reals::check_limits(cfg);
            else if (suite == "cuts")
                rep = reals::check_cut_agreement(cfg);
            else if (suite == "models")
                rep = reals::check_finite_model_suite(cfg);
            else
                rep = reals::check_midpoints(cfg);
            rep.print(out);
            code = rep.all_pass() ? 0 : 1;
        }
    } catch (const reals::ParseError& e) {
        std::cerr << "parse error at offset " << e.position << ": " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    }

    std::cout << out.str();
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot write " << out_path << '\n';
            return 2;
        }
        f << out.str();
    }
    return code;
}
