#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cosetgb/field.hpp"
#include "cosetgb/monomial.hpp"
#include "cosetgb/permutation.hpp"

namespace cosetgb {

using VectorFq = std::vector<FieldElement>;
/// Coset identifier: v*H, a length-(n-k) vector over GF(q).
using Syndrome = std::vector<FieldElement>;

int hamming_weight(const VectorFq& v);
/// Exact byte key of a syndrome, for associative lookup.
std::string syndrome_key(const Syndrome& s);

/// Linear [n, k] code over GF(q). Holds the parity-check matrix in both the
/// textbook (n-k) x n layout and in the n x (n-k) right-multiplication layout
/// used by the syndrome map, plus a generator matrix (derived by Gaussian
/// elimination when not supplied).
class Code {
public:
    /// Empty placeholder; every usable instance comes from a factory.
    Code() = default;

    static Code from_parity_check(FieldSpec field,
                                  std::vector<std::vector<FieldElement>> check_rows);
    static Code from_generator(FieldSpec field,
                               std::vector<std::vector<FieldElement>> generator_rows);
    static Code from_both(FieldSpec field,
                          std::vector<std::vector<FieldElement>> check_rows,
                          std::vector<std::vector<FieldElement>> generator_rows);

    const FieldSpec& field() const { return field_; }
    int length() const { return n_; }
    int dimension() const { return k_; }
    int redundancy() const { return n_ - k_; }
    int num_variables() const { return n_ * field_.degree(); }

    /// (n-k) x n rows, the file/textbook convention.
    const std::vector<std::vector<FieldElement>>& parity_rows() const { return check_rows_; }
    /// k x n generator rows; rank k, orthogonal to the checks.
    const std::vector<std::vector<FieldElement>>& generator_rows() const { return gen_rows_; }
    bool parity_was_given() const { return parity_given_; }
    bool generator_was_given() const { return generator_given_; }

    Syndrome syndrome(const VectorFq& v) const;
    bool is_codeword(const VectorFq& v) const;

    /// All q^k codewords, in message-enumeration order.
    std::vector<VectorFq> codewords(std::size_t cap = std::size_t{1} << 20) const;
    std::vector<long long> weight_distribution(std::size_t cap = std::size_t{1} << 20) const;
    /// Minimum nonzero codeword weight; n+1 sentinel when k = 0.
    int minimum_distance(std::size_t cap = std::size_t{1} << 20) const;
    int error_capability(std::size_t cap = std::size_t{1} << 20) const;

    Code apply_permutation(const Permutation& sigma) const;
    /// Same codeword set (row-space test; no enumeration).
    bool same_code(const Code& other) const;

private:
    void finish(bool parity_given, bool generator_given);

    FieldSpec field_ = FieldSpec::prime_field(2);
    int n_ = 0;
    int k_ = 0;
    std::vector<std::vector<FieldElement>> check_rows_; // (n-k) x n
    std::vector<std::vector<FieldElement>> gen_rows_;   // k x n
    bool parity_given_ = false;
    bool generator_given_ = false;
};

/// Morphism from words to vectors: position i receives sum_j beta_ij alpha^(j-1).
VectorFq psi(const Code& code, const Word& w);
/// xi(w) = psi(w) * H, the syndrome of a word.
Syndrome xi(const Code& code, const Word& w);
/// The unique standard word with psi(w) = v (power-basis digits per position).
Word standard_word(const Code& code, const VectorFq& v);

/// Coordinate permutation of a vector: entry at i moves to sigma(i).
VectorFq permute_vector(const Permutation& sigma, const VectorFq& v);

// Small exact linear algebra over GF(q), shared by the factories and tests.
int row_reduce(const FieldSpec& field, std::vector<std::vector<FieldElement>>& rows,
               std::vector<int>* pivot_cols = nullptr);
std::vector<std::vector<FieldElement>> right_kernel_basis(
    const FieldSpec& field, std::vector<std::vector<FieldElement>> rows, int cols);
bool same_row_space(const FieldSpec& field,
                    std::vector<std::vector<FieldElement>> a,
                    std::vector<std::vector<FieldElement>> b);

} // namespace cosetgb
