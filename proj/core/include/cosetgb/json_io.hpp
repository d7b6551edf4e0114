#pragma once

#include <string>

#include "cosetgb/code.hpp"
#include "cosetgb/decode.hpp"
#include "cosetgb/equiv.hpp"
#include "cosetgb/matphi.hpp"
#include "cosetgb/rbasis.hpp"

namespace cosetgb {

// Code-definition files are JSON objects with fields p, m, n, k, optional
// "irreducible" (m+1 ascending coefficients) and exactly one of "H"
// ((n-k) x n rows) or "G" (k x n rows); matrix entries are residues mod p
// when m = 1 and length-m coefficient lists otherwise. All exports are
// deterministic: stable key order, two-space indent, 1-based indices.

Code code_from_json_text(const std::string& text);
Code load_code_file(const std::string& path);
std::string code_to_json_text(const Code& code);

std::string matphi_to_json_text(const MatphiTable& table);
std::string rbasis_to_json_text(const ReducedBasis& basis);
std::string decode_result_to_json_text(const Code& code, const VectorFq& received,
                                       const DecodeResult& result);
std::string level_stats_to_json_text(const LevelStats& stats);
std::string weights_to_json_text(const Code& code);
std::string verdict_to_json_text(const EquivVerdict& verdict);

/// Received-vector literal: comma-separated residues; for m > 1 the n
/// coordinates are semicolon-separated groups of m comma-separated residues.
VectorFq parse_vector_literal(const Code& code, const std::string& text);
std::string vector_literal(const Code& code, const VectorFq& v);

} // namespace cosetgb
