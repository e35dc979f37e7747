#include <CLI11.hpp>

#include <iostream>

#include "qloop/cli.hpp"
#include "qloop/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact standard-module computations for the quantum loop algebra of sl2"};
    app.require_subcommand(1);

    qloop::cli::RunConfig rc;
    std::string rootsSpec, qStr = "2", seedStr = "0", formatStr = "text";
    int truncation = -1;

    auto addCommon = [&](CLI::App* sub) {
        sub->add_option("--roots", rootsSpec, "Drinfel'd roots as a:mult,a:mult (rationals p/q allowed)")
            ->required();
        sub->add_option("--q", qStr, "deformation parameter (rational, not 0 or +-1)");
        sub->add_option("--window", rc.window, "mode window for relation and filtration checks");
        sub->add_option("--truncation", truncation, "u-series truncation order (default 2n+2)");
        sub->add_option("--alpha-seed", seedStr, "shift for the deformation slopes alpha_i = seed + i");
        sub->add_option("--max-degree", rc.maxDegree, "cap on deg P (exact arithmetic stays desk-scale)");
        sub->add_option("--format", formatStr, "output format: text | json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* relations = app.add_subcommand("relations", "verify the defining relations on mode matrices");
    CLI::App* qchar = app.add_subcommand("qchar", "print the q-character of the standard module");
    CLI::App* qtchar = app.add_subcommand("qtchar", "print the q,t-character of the standard module");
    CLI::App* jordan = app.add_subcommand("jordan", "print Jordan chains and grade dimensions per l-weight space");
    CLI::App* verify = app.add_subcommand("verify", "run the full verification pipeline");
    for (CLI::App* sub : {relations, qchar, qtchar, jordan, verify}) addCommon(sub);

    CLI11_PARSE(app, argc, argv);

    try {
        rc.roots = qloop::cli::parse_roots(rootsSpec);
        rc.q = qloop::Rational::parse(qStr);
        rc.alphaSeed = qloop::Rational::parse(seedStr);
        rc.truncation = truncation;
        rc.format = formatStr == "json" ? qloop::cli::Format::Json : qloop::cli::Format::Text;
    } catch (const qloop::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    if (relations->parsed()) return qloop::cli::cmd_relations(rc, std::cout);
    if (qchar->parsed()) return qloop::cli::cmd_qchar(rc, std::cout);
    if (qtchar->parsed()) return qloop::cli::cmd_qtchar(rc, std::cout);
    if (jordan->parsed()) return qloop::cli::cmd_jordan(rc, std::cout);
    if (verify->parsed()) return qloop::cli::cmd_verify(rc, std::cout);
    return 2;
}
