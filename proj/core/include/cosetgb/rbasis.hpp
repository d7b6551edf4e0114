#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cosetgb/code.hpp"
#include "cosetgb/monomial.hpp"

namespace cosetgb {

/// head - tail with equal syndromes, tail in N and tail <_e head.
struct Binomial {
    Word head;
    Word tail;

    bool operator==(const Binomial&) const = default;
};

/// Reduced basis for (code, <_e): binomials stored sorted by
/// (|Ind(head)|, head under the admissible order), together with the
/// canonical-form set N produced by the same enumeration.
struct ReducedBasis {
    Code code;
    AdmissibleOrder order;
    int t = 0;

    std::vector<Word> canonical_forms; // insertion order, [0] = 1
    std::vector<Binomial> binomials;
    std::unordered_map<std::string, int> word_index; // N lookup

    int size() const { return static_cast<int>(binomials.size()); }
    int level(int binomial_idx) const;
    /// Indices of the binomials at |Ind(head)| = level, in stored order.
    std::vector<int> level_indices(int level) const;
    int max_level() const;
    bool is_canonical(const Word& w) const;
};

ReducedBasis build_reduced_basis(const Code& code, const AdmissibleOrder& order,
                                 std::size_t coset_cap = std::size_t{1} << 16);

struct RewriteStep {
    Word result;
    int binomial; // 0-based index into basis.binomials
};

/// One deterministic rewrite, any characteristic: strips one p-th power
/// (smallest variable first) when the word is non-standard and the matching
/// power binomial exists, otherwise applies the matching head of maximal
/// |Ind| level, ties broken by the admissible-least head. Empty when no
/// binomial head divides the word.
std::optional<RewriteStep> reduce_step(const ReducedBasis& basis, const Word& w);

/// Binary one-step reduction (p = 2 guard): squares first, then one head
/// rewrite; empty result means the word is irreducible.
std::optional<Word> reduce_once_binary(const ReducedBasis& basis, const Word& w);

/// Iterated reduction to the unique irreducible word; requires p = 2, m = 1
/// where the rewrite relation is noetherian and confluent.
Word canonical_form_binary(const ReducedBasis& basis, const Word& w);

enum class ReductionOutcome { canonical, cycle_detected, step_limit };

struct ReductionTrace {
    std::vector<Word> words;  // words[0] = input, one entry per visited word
    std::vector<int> applied; // binomial index per step, size words.size()-1
    ReductionOutcome outcome = ReductionOutcome::canonical;
    int cycle_start = -1;     // index into words when a cycle closes

    const Word& final_word() const { return words.back(); }
};

/// Full rewrite trace with cycle detection via the set of visited words;
/// limit 0 selects the default 10 * nm * max(deg(w), 1).
ReductionTrace reduce_traced(const ReducedBasis& basis, const Word& w,
                             std::size_t limit = 0);

/// True iff head and tail share a canonical form modulo the basis (binary).
bool reduces_to_zero(const ReducedBasis& basis, const Binomial& b);

} // namespace cosetgb
