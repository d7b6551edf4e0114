#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cosetgb/permutation.hpp"

namespace cosetgb {

/// Variable x_{ij} of the free commutative monoid on n*m variables:
/// position i in 1..n, sublevel j in 1..m, flat index (i-1)*m + j.
struct VariableIndex {
    int position;
    int sublevel;
    int flat;
};

int flat_index(int position, int sublevel, int m);
VariableIndex variable_index(int flat, int m);

/// Word of the free commutative monoid: an exponent vector over num_vars
/// variables. Exponents are capped at 255; the all-zero word is the monoid
/// identity 1. Variables are addressed by 1-based flat index throughout.
class Word {
public:
    Word() = default;
    explicit Word(int num_vars) : exp_(static_cast<std::size_t>(num_vars), 0) {}

    static Word one(int num_vars) { return Word(num_vars); }
    static Word variable(int num_vars, int var);
    static Word from_exponents(const std::vector<int>& exponents);

    int num_vars() const { return static_cast<int>(exp_.size()); }
    int exponent(int var) const {
        return static_cast<unsigned char>(exp_[static_cast<std::size_t>(var - 1)]);
    }
    int degree() const;
    bool is_one() const;

    Word times(int var, int count = 1) const;
    Word times(const Word& other) const;
    bool divides(const Word& other) const;
    Word divided_by(const Word& divisor) const;

    /// Multiplicative string form: "x3*x7^2", identity prints as "1".
    std::string str() const;
    static Word parse(const std::string& text, int num_vars);

    /// Raw exponent bytes; usable as an exact hash/map key.
    const std::string& key() const;

    bool operator==(const Word& o) const { return exp_ == o.exp_; }
    auto operator<=>(const Word& o) const { return exp_ <=> o.exp_; }

private:
    std::string exp_; // one byte per variable
};

/// Positions touched by the word (sorted, 1-based).
std::vector<int> ind(const Word& w, int m);
int ind_size(const Word& w, int m);

bool is_standard(const Word& w, int p);
/// Exponents reduced mod p; the unique standard word with the same psi image.
Word standard_form(const Word& w, int p);

enum class OrderKind { lex, drl };

/// An admissible ordering: lex or degrevlex on top of a variable order
/// x_{variable_order[0]} < x_{variable_order[1]} < ... (1-based flat indices).
struct AdmissibleOrder {
    OrderKind kind = OrderKind::drl;
    std::vector<int> variable_order;

    static AdmissibleOrder natural(OrderKind kind, int num_vars);
    static AdmissibleOrder with_variable_order(OrderKind kind, std::vector<int> order);

    int num_vars() const { return static_cast<int>(variable_order.size()); }
    /// rank(v) in 0..nm-1; smaller rank = smaller variable.
    const std::vector<int>& ranks() const { return rank_; }

    bool operator==(const AdmissibleOrder& o) const {
        return kind == o.kind && variable_order == o.variable_order;
    }

private:
    std::vector<int> rank_;
};

std::strong_ordering cmp_admissible(const AdmissibleOrder& order, const Word& u, const Word& w);
/// The error-vector ordering: |Ind| first, then the admissible order.
/// Total, but not admissible.
std::strong_ordering cmp_error_vector(const AdmissibleOrder& order, int m,
                                      const Word& u, const Word& w);
bool less_e(const AdmissibleOrder& order, int m, const Word& u, const Word& w);

/// Coordinate action on words: the exponent of x_{ij} moves to x_{sigma(i)j}.
Word permute_word(const Permutation& sigma, const Word& w, int m);

} // namespace cosetgb
