#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cosetgb/monomial.hpp"

namespace cosetgb {

/// One CLI invocation: a subcommand over code-definition files with a fixed,
/// machine-checkable JSON output contract.
struct RunConfig {
    enum class Command { matphi, rbasis, decode, decode_all, equiv, stats, weights };

    Command command = Command::rbasis;
    std::vector<std::string> inputs;                 // one code file, two for equiv
    OrderKind order = OrderKind::drl;
    std::optional<std::vector<int>> variable_order;  // override, 1-based flat indices
    std::vector<std::string> vectors;                // received-vector literals
    std::optional<std::string> sigma;                // cycle or list notation
    std::string decode_method = "auto";              // auto | rbasis | matphi
    int stats_level = 2;
    std::size_t coset_cap = std::size_t{1} << 16;
    std::size_t enumeration_cap = std::size_t{1} << 20;
    int max_search_n = 12;
};

struct RunResult {
    int status = 0;     // 0 ok, 1 error (output then holds an error object)
    std::string output; // UTF-8 JSON document, newline-terminated
};

RunResult run(const RunConfig& config);

} // namespace cosetgb
