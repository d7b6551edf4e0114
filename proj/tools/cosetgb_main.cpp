#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cosetgb/cli.hpp"

namespace {

int emit(const cosetgb::RunResult& result, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << result.output;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return 1;
        }
        out << result.output;
    }
    return result.status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner-style coset structures of linear codes: canonical forms, "
                 "the multiplicative table, reduced bases, decoding and permutation "
                 "equivalence"};
    app.require_subcommand(1);

    cosetgb::RunConfig config;
    std::string out_path;
    std::string order_name = "drl";
    std::vector<int> variable_order;
    std::string sigma;

    app.add_option("-o,--out", out_path, "Write the JSON document to a file instead of stdout");

    auto add_order_flags = [&](CLI::App* cmd) {
        cmd->add_option("--order", order_name, "Admissible ordering: drl (default) or lex")
            ->check(CLI::IsMember({"drl", "lex"}));
        cmd->add_option("--varorder", variable_order,
                        "Variable order override: a permutation of 1..n*m, ascending");
        cmd->add_option("--max-cosets", config.coset_cap, "Cap on q^(n-k)");
    };

    CLI::App* matphi = app.add_subcommand(
        "matphi", "Canonical forms with the full multiplicative table");
    matphi->add_option("code", config.inputs, "Code-definition file")->required();
    add_order_flags(matphi);

    CLI::App* rbasis = app.add_subcommand("rbasis", "Canonical forms and the reduced basis");
    rbasis->add_option("code", config.inputs, "Code-definition file")->required();
    add_order_flags(rbasis);

    CLI::App* decode = app.add_subcommand("decode", "Decode received vectors");
    decode->add_option("code", config.inputs, "Code-definition file")->required();
    decode->add_option("--vector", config.vectors,
                       "Received vector literal (comma-separated residues; m > 1: "
                       "semicolon-separated coefficient groups); repeatable")
        ->required();
    decode->add_option("--method", config.decode_method, "auto | rbasis | matphi")
        ->check(CLI::IsMember({"auto", "rbasis", "matphi"}));
    add_order_flags(decode);

    CLI::App* decode_all = app.add_subcommand(
        "decode-all", "Decode the whole ambient space and summarize");
    decode_all->add_option("code", config.inputs, "Code-definition file")->required();
    decode_all->add_option("--max-vectors", config.enumeration_cap, "Cap on q^n");
    add_order_flags(decode_all);

    CLI::App* equiv = app.add_subcommand(
        "equiv", "Decide permutation equivalence or verify a given permutation");
    equiv->add_option("codes", config.inputs, "Two code-definition files")
        ->expected(2)
        ->required();
    equiv->add_option("--sigma", sigma, "Permutation in cycle or list notation to verify");
    equiv->add_option("--max-n", config.max_search_n, "Search cap on the code length");
    add_order_flags(equiv);

    CLI::App* stats = app.add_subcommand("stats", "Per-position head/tail counts at one level");
    stats->add_option("code", config.inputs, "Code-definition file")->required();
    stats->add_option("--level", config.stats_level, "|Ind(head)| level to analyze");
    add_order_flags(stats);

    CLI::App* weights = app.add_subcommand(
        "weights", "Weight distribution, minimum distance and error capability");
    weights->add_option("code", config.inputs, "Code-definition file")->required();

    CLI11_PARSE(app, argc, argv);

    if (matphi->parsed()) config.command = cosetgb::RunConfig::Command::matphi;
    if (rbasis->parsed()) config.command = cosetgb::RunConfig::Command::rbasis;
    if (decode->parsed()) config.command = cosetgb::RunConfig::Command::decode;
    if (decode_all->parsed()) config.command = cosetgb::RunConfig::Command::decode_all;
    if (equiv->parsed()) config.command = cosetgb::RunConfig::Command::equiv;
    if (stats->parsed()) config.command = cosetgb::RunConfig::Command::stats;
    if (weights->parsed()) config.command = cosetgb::RunConfig::Command::weights;

    config.order = order_name == "lex" ? cosetgb::OrderKind::lex : cosetgb::OrderKind::drl;
    if (!variable_order.empty()) config.variable_order = variable_order;
    if (!sigma.empty()) config.sigma = sigma;

    return emit(cosetgb::run(config), out_path);
}
