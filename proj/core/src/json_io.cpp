#include "cosetgb/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cosetgb {

using ordered_json = nlohmann::ordered_json;

namespace {

FieldElement entry_from_json(const FieldSpec& field, const ordered_json& j) {
    if (j.is_number_integer()) {
        if (field.degree() != 1)
            throw std::runtime_error("code file: scalar matrix entry needs m = 1");
        return field.element_from_coeffs({j.get<int>()});
    }
    if (j.is_array()) {
        std::vector<int> coeffs;
        for (const auto& c : j) coeffs.push_back(c.get<int>());
        if (static_cast<int>(coeffs.size()) != field.degree())
            throw std::runtime_error("code file: entry needs m coefficients");
        return field.element_from_coeffs(std::move(coeffs));
    }
    throw std::runtime_error("code file: matrix entry must be an integer or a list");
}

ordered_json entry_to_json(const FieldSpec& field, const FieldElement& e) {
    if (field.degree() == 1) return e.coeffs[0];
    return ordered_json(e.coeffs);
}

std::vector<std::vector<FieldElement>> matrix_from_json(const FieldSpec& field,
                                                        const ordered_json& j) {
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& row : j) {
        std::vector<FieldElement> out;
        for (const auto& entry : row) out.push_back(entry_from_json(field, entry));
        rows.push_back(std::move(out));
    }
    return rows;
}

ordered_json matrix_to_json(const FieldSpec& field,
                            const std::vector<std::vector<FieldElement>>& rows) {
    ordered_json j = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json r = ordered_json::array();
        for (const FieldElement& e : row) r.push_back(entry_to_json(field, e));
        j.push_back(std::move(r));
    }
    return j;
}

ordered_json vector_to_json(const FieldSpec& field, const VectorFq& v) {
    ordered_json j = ordered_json::array();
    for (const FieldElement& e : v) j.push_back(entry_to_json(field, e));
    return j;
}

std::string dump(const ordered_json& j) {
    return j.dump(2) + "\n";
}

ordered_json order_to_json(const AdmissibleOrder& order) {
    ordered_json j;
    j["kind"] = order.kind == OrderKind::lex ? "lex" : "drl";
    j["variables"] = order.variable_order;
    return j;
}

} // namespace

Code code_from_json_text(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    const int p = j.at("p").get<int>();
    const int m = j.at("m").get<int>();
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();

    FieldSpec field = j.contains("irreducible")
                          ? FieldSpec(p, m, j.at("irreducible").get<std::vector<int>>())
                          : FieldSpec::with_default_modulus(p, m);

    const bool has_h = j.contains("H");
    const bool has_g = j.contains("G");
    if (has_h == has_g)
        throw std::runtime_error("code file: exactly one of H or G is required");

    Code code = has_h ? Code::from_parity_check(field, matrix_from_json(field, j.at("H")))
                      : Code::from_generator(field, matrix_from_json(field, j.at("G")));
    if (code.length() != n || code.dimension() != k)
        throw std::runtime_error("code file: matrix shape disagrees with the declared n, k");
    return code;
}

Code load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return code_from_json_text(buffer.str());
    } catch (const ordered_json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string code_to_json_text(const Code& code) {
    ordered_json j;
    j["p"] = code.field().characteristic();
    j["m"] = code.field().degree();
    j["n"] = code.length();
    j["k"] = code.dimension();
    if (code.field().degree() > 1) j["irreducible"] = code.field().modulus();
    // exactly one matrix on the wire, preferring the one that was supplied
    if (code.generator_was_given() && !code.parity_was_given())
        j["G"] = matrix_to_json(code.field(), code.generator_rows());
    else
        j["H"] = matrix_to_json(code.field(), code.parity_rows());
    return dump(j);
}

std::string matphi_to_json_text(const MatphiTable& table) {
    const Code& code = table.code;
    ordered_json j;
    j["p"] = code.field().characteristic();
    j["m"] = code.field().degree();
    j["n"] = code.length();
    j["k"] = code.dimension();
    j["order"] = order_to_json(table.order);
    ordered_json names = ordered_json::array();
    for (const Word& w : table.canonical_forms) names.push_back(w.str());
    j["N"] = std::move(names);
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < table.size(); ++i) {
        ordered_json row;
        row["vector"] = vector_to_json(code.field(), table.vectors[static_cast<std::size_t>(i)]);
        row["flag"] = static_cast<int>(table.flags[static_cast<std::size_t>(i)]);
        std::vector<int> phi_row = table.phi[static_cast<std::size_t>(i)];
        for (int& entry : phi_row) entry += 1; // 1-based on the wire
        row["phi"] = phi_row;
        rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    j["t"] = table.t;
    return dump(j);
}

std::string rbasis_to_json_text(const ReducedBasis& basis) {
    const Code& code = basis.code;
    ordered_json j;
    j["p"] = code.field().characteristic();
    j["m"] = code.field().degree();
    j["n"] = code.length();
    j["k"] = code.dimension();
    j["order"] = order_to_json(basis.order);
    ordered_json names = ordered_json::array();
    for (const Word& w : basis.canonical_forms) names.push_back(w.str());
    j["N"] = std::move(names);
    ordered_json levels = ordered_json::array();
    for (int level = 1; level <= basis.max_level(); ++level) {
        const std::vector<int> idx = basis.level_indices(level);
        if (idx.empty()) continue;
        ordered_json group;
        group["level"] = level;
        ordered_json pairs = ordered_json::array();
        for (int i : idx) {
            const Binomial& b = basis.binomials[static_cast<std::size_t>(i)];
            pairs.push_back(ordered_json::array({b.head.str(), b.tail.str()}));
        }
        group["binomials"] = std::move(pairs);
        levels.push_back(std::move(group));
    }
    j["G"] = std::move(levels);
    j["t"] = basis.t;
    return dump(j);
}

std::string decode_result_to_json_text(const Code& code, const VectorFq& received,
                                       const DecodeResult& result) {
    ordered_json j;
    j["received"] = vector_to_json(code.field(), received);
    if (result.corrected()) {
        j["outcome"] = "corrected";
        j["error"] = vector_to_json(code.field(), result.error);
        j["codeword"] = vector_to_json(code.field(), result.codeword);
        j["error_weight"] = result.canonical_weight;
    } else {
        j["outcome"] = "too_many_errors";
        j["canonical_weight"] = result.canonical_weight;
    }
    return dump(j);
}

std::string level_stats_to_json_text(const LevelStats& stats) {
    ordered_json j;
    j["level"] = stats.level;
    j["heads"] = stats.heads;
    j["irreds"] = stats.irreds;
    return dump(j);
}

std::string weights_to_json_text(const Code& code) {
    ordered_json j;
    j["n"] = code.length();
    j["k"] = code.dimension();
    j["distribution"] = code.weight_distribution();
    j["minimum_distance"] = code.minimum_distance();
    j["t"] = code.error_capability();
    return dump(j);
}

std::string verdict_to_json_text(const EquivVerdict& verdict) {
    ordered_json j;
    switch (verdict.kind) {
        case EquivVerdict::Kind::equivalent: j["verdict"] = "equivalent"; break;
        case EquivVerdict::Kind::not_equivalent: j["verdict"] = "not_equivalent"; break;
        case EquivVerdict::Kind::undecided: j["verdict"] = "undecided"; break;
    }
    if (verdict.witness) j["witness"] = verdict.witness->images();
    if (!verdict.certificate.empty()) j["certificate"] = verdict.certificate;
    return dump(j);
}

VectorFq parse_vector_literal(const Code& code, const std::string& text) {
    const FieldSpec& field = code.field();
    std::vector<std::string> groups;
    if (field.degree() == 1) {
        std::string item;
        std::istringstream in(text);
        while (std::getline(in, item, ',')) groups.push_back(item);
    } else {
        std::string item;
        std::istringstream in(text);
        while (std::getline(in, item, ';')) groups.push_back(item);
    }
    if (static_cast<int>(groups.size()) != code.length())
        throw std::runtime_error("vector literal: expected " + std::to_string(code.length()) +
                                 " coordinates");
    VectorFq v;
    for (const std::string& group : groups) {
        std::vector<int> coeffs;
        std::string item;
        std::istringstream in(group);
        while (std::getline(in, item, ',')) coeffs.push_back(std::stoi(item));
        if (static_cast<int>(coeffs.size()) != field.degree())
            throw std::runtime_error("vector literal: each coordinate needs m residues");
        v.push_back(field.element_from_coeffs(std::move(coeffs)));
    }
    return v;
}

std::string vector_literal(const Code& code, const VectorFq& v) {
    const FieldSpec& field = code.field();
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += field.degree() == 1 ? "," : ";";
        for (std::size_t j = 0; j < v[i].coeffs.size(); ++j) {
            if (j) out += ",";
            out += std::to_string(v[i].coeffs[j]);
        }
    }
    return out;
}

} // namespace cosetgb
