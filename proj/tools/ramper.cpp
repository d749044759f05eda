#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ramper/cli.hpp"

int main(int argc, char** argv) {
    namespace cli = ramper::cli;

    CLI::App app{"descent obstruction certificates for hyperelliptic curves over Q(sqrt p)"};
    app.require_subcommand(1);

    long p = 0;
    long g = 0;
    std::string report_path;
    std::string a_literal;
    cli::Config cfg;
    cfg.precision = cli::default_precision(std::cerr);

    auto add_output = [&cfg](CLI::App* sub) {
        sub->add_option("--out", cfg.out_path, "output file (default: stdout)");
    };
    auto add_precision = [&cfg](CLI::App* sub) {
        sub->add_option("--precision", cfg.precision,
                        "pi-adic working precision (default 50, env RAMPER_PRECISION)");
    };
    auto add_verbose = [&cfg](CLI::App* sub) {
        sub->add_flag("-v,--verbose", cfg.verbosity, "progress notes on stderr");
    };

    CLI::App* generate =
        app.add_subcommand("generate", "build examples and certify their obstructions");
    generate->add_option("--p", p, "prime congruent to 1 mod 4")->required();
    generate->add_option("--g", g, "genus, congruent to 1 mod 4")->required();
    generate->add_option("--count", cfg.count, "number of examples (Pell indices 0..count-1)");
    generate->add_option("--height-bound", cfg.height_bound,
                         "height cap for the witness search (default 20)");
    add_precision(generate);
    add_output(generate);
    add_verbose(generate);

    CLI::App* verify =
        app.add_subcommand("verify", "recompute a report file from scratch and compare");
    verify->add_option("file", report_path, "report file written by generate")->required();
    add_verbose(verify);

    CLI::App* pell = app.add_subcommand("pell", "solutions of x^2 - p y^2 = -1");
    pell->add_option("--p", p, "prime congruent to 1 mod 4")->required();
    pell->add_option("--count", cfg.count, "number of solutions (default 5)");
    add_output(pell);

    CLI::App* period =
        app.add_subcommand("period", "minimal ramified period of a given parameter a");
    period->add_option("--p", p, "prime congruent to 1 mod 4")->required();
    period->add_option("--g", g, "genus")->required();
    period->add_option("--a", a_literal, "parameter, e.g. \"36+16*sqrt5\"")->required();
    add_precision(period);
    add_output(period);
    add_verbose(period);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? cli::exit_ok : cli::exit_invalid_input;
    }

    if (generate->parsed()) return cli::cmd_generate(p, g, cfg, std::cout, std::cerr);
    if (verify->parsed()) return cli::cmd_verify(report_path, cfg, std::cout, std::cerr);
    if (pell->parsed()) return cli::cmd_pell(p, cfg, std::cout, std::cerr);
    if (period->parsed())
        return cli::cmd_period(p, g, a_literal, cfg, std::cout, std::cerr);
    return cli::exit_invalid_input;
}
