#include "cosetgb/cli.hpp"

#include <stdexcept>

#include "json.hpp"

#include "cosetgb/code.hpp"
#include "cosetgb/decode.hpp"
#include "cosetgb/equiv.hpp"
#include "cosetgb/json_io.hpp"
#include "cosetgb/matphi.hpp"
#include "cosetgb/rbasis.hpp"

namespace cosetgb {

using ordered_json = nlohmann::ordered_json;

namespace {

AdmissibleOrder make_order(const RunConfig& config, const Code& code) {
    if (config.variable_order)
        return AdmissibleOrder::with_variable_order(config.order, *config.variable_order);
    return AdmissibleOrder::natural(config.order, code.num_variables());
}

std::string run_decode(const RunConfig& config) {
    const Code code = load_code_file(config.inputs.at(0));
    if (config.vectors.empty())
        throw std::runtime_error("decode: at least one --vector literal is required");
    const AdmissibleOrder order = make_order(config, code);

    const bool binary = code.field().characteristic() == 2 && code.field().degree() == 1;
    std::string method = config.decode_method;
    if (method == "auto") method = binary ? "rbasis" : "matphi";
    if (method == "rbasis" && !binary)
        throw std::runtime_error("decode: the rbasis decoder requires a binary code (p=2, m=1)");

    std::optional<ReducedBasis> basis;
    std::optional<MatphiTable> table;
    if (method == "rbasis")
        basis = build_reduced_basis(code, order, config.coset_cap);
    else if (method == "matphi")
        table = build_matphi(code, order, config.coset_cap);
    else
        throw std::runtime_error("decode: unknown method '" + method + "'");

    std::vector<std::string> documents;
    for (const std::string& literal : config.vectors) {
        const VectorFq received = parse_vector_literal(code, literal);
        const DecodeResult result = basis ? decode_binary(*basis, code, received)
                                          : decode_matphi(*table, code, received);
        documents.push_back(decode_result_to_json_text(code, received, result));
    }
    if (documents.size() == 1) return documents.front();
    ordered_json all = ordered_json::array();
    for (const std::string& doc : documents) all.push_back(ordered_json::parse(doc));
    return all.dump(2) + "\n";
}

std::string run_decode_all(const RunConfig& config) {
    const Code code = load_code_file(config.inputs.at(0));
    const AdmissibleOrder order = make_order(config, code);

    long long total = 1;
    for (int i = 0; i < code.length(); ++i) {
        total *= code.field().size();
        if (total > static_cast<long long>(config.enumeration_cap))
            throw std::runtime_error("decode-all: q^n exceeds the enumeration cap");
    }

    const MatphiTable table = build_matphi(code, order, config.coset_cap);
    const bool binary = code.field().characteristic() == 2 && code.field().degree() == 1;
    std::optional<ReducedBasis> basis;
    if (binary) basis = build_reduced_basis(code, order, config.coset_cap);

    long long corrected = 0;
    long long rejected = 0;
    bool decoders_agree = true;
    const int n = code.length();
    const int q = code.field().size();
    for (long long idx = 0; idx < total; ++idx) {
        VectorFq v(static_cast<std::size_t>(n), code.field().zero());
        long long rest = idx;
        for (int i = 0; i < n; ++i) {
            v[static_cast<std::size_t>(i)] = code.field().element_at(static_cast<int>(rest % q));
            rest /= q;
        }
        const DecodeResult via_table = decode_matphi(table, code, v);
        if (via_table.corrected())
            ++corrected;
        else
            ++rejected;
        if (basis) {
            const DecodeResult via_basis = decode_binary(*basis, code, v);
            if (via_basis.corrected() != via_table.corrected() ||
                (via_table.corrected() && via_basis.error != via_table.error))
                decoders_agree = false;
        }
    }

    ordered_json j;
    j["n"] = n;
    j["k"] = code.dimension();
    j["t"] = table.t;
    j["total"] = total;
    j["corrected"] = corrected;
    j["too_many_errors"] = rejected;
    if (binary) j["decoders_agree"] = decoders_agree;
    return j.dump(2) + "\n";
}

std::string run_equiv(const RunConfig& config) {
    if (config.inputs.size() != 2)
        throw std::runtime_error("equiv: expected two code-definition files");
    const Code c1 = load_code_file(config.inputs.at(0));
    const Code c2 = load_code_file(config.inputs.at(1));

    if (config.sigma) {
        const Permutation sigma = Permutation::parse(*config.sigma, c1.length());
        ordered_json j;
        j["mode"] = "verify";
        j["sigma"] = sigma.images();
        const bool ok = verify_permutation(c1, c2, sigma);
        j["verify"] = ok;
        const bool binary = c1.field().characteristic() == 2 && c1.field().degree() == 1 &&
                            c2.field().characteristic() == 2 && c2.field().degree() == 1;
        if (binary) {
            const AdmissibleOrder order = AdmissibleOrder::natural(config.order, c1.num_variables());
            const ReducedBasis g1 = build_reduced_basis(c1, order, config.coset_cap);
            const ReducedBasis g2 = build_reduced_basis(c2, order, config.coset_cap);
            j["bases_equivalent"] = bases_equivalent(g1, g2, sigma);
        }
        if (c1.field() == c2.field() && c1.length() == c2.length() &&
            c1.redundancy() == c2.redundancy()) {
            const AdmissibleOrder order = AdmissibleOrder::natural(config.order, c1.num_variables());
            const MatphiTable t1 = build_matphi(c1, order, config.coset_cap);
            const MatphiTable t2 = build_matphi(c2, order, config.coset_cap);
            j["matphi_equivalent"] = matphi_equivalent(sigma, t1, t2);
        }
        return j.dump(2) + "\n";
    }

    FindOptions options;
    options.max_n = config.max_search_n;
    EquivVerdict verdict = find_permutation(c1, c2, options);
    ordered_json j = ordered_json::parse(verdict_to_json_text(verdict));
    ordered_json out;
    out["mode"] = "find";
    for (auto& [key, value] : j.items()) out[key] = value;
    return out.dump(2) + "\n";
}

std::string dispatch(const RunConfig& config) {
    switch (config.command) {
        case RunConfig::Command::matphi: {
            const Code code = load_code_file(config.inputs.at(0));
            return matphi_to_json_text(build_matphi(code, make_order(config, code), config.coset_cap));
        }
        case RunConfig::Command::rbasis: {
            const Code code = load_code_file(config.inputs.at(0));
            return rbasis_to_json_text(
                build_reduced_basis(code, make_order(config, code), config.coset_cap));
        }
        case RunConfig::Command::decode: return run_decode(config);
        case RunConfig::Command::decode_all: return run_decode_all(config);
        case RunConfig::Command::equiv: return run_equiv(config);
        case RunConfig::Command::stats: {
            const Code code = load_code_file(config.inputs.at(0));
            const ReducedBasis basis =
                build_reduced_basis(code, make_order(config, code), config.coset_cap);
            return level_stats_to_json_text(level_stats(basis, config.stats_level));
        }
        case RunConfig::Command::weights: {
            const Code code = load_code_file(config.inputs.at(0));
            return weights_to_json_text(code);
        }
    }
    throw std::logic_error("run: unknown subcommand");
}

} // namespace

RunResult run(const RunConfig& config) {
    try {
        if (config.command != RunConfig::Command::equiv && config.inputs.size() != 1)
            throw std::runtime_error("expected exactly one code-definition file");
        return RunResult{0, dispatch(config)};
    } catch (const std::exception& e) {
        ordered_json j;
        j["error"]["message"] = e.what();
        return RunResult{1, j.dump(2) + "\n"};
    }
}

} // namespace cosetgb
