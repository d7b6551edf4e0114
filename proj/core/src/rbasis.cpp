#include "cosetgb/rbasis.hpp"

#include <algorithm>
#include <stdexcept>

#include "cosetgb/matphi.hpp"

namespace cosetgb {

int ReducedBasis::level(int binomial_idx) const {
    return ind_size(binomials[static_cast<std::size_t>(binomial_idx)].head, code.field().degree());
}

std::vector<int> ReducedBasis::level_indices(int lvl) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (level(i) == lvl) out.push_back(i);
    return out;
}

int ReducedBasis::max_level() const {
    int best = 0;
    for (int i = 0; i < size(); ++i) best = std::max(best, level(i));
    return best;
}

bool ReducedBasis::is_canonical(const Word& w) const {
    return word_index.contains(w.key());
}

ReducedBasis build_reduced_basis(const Code& code, const AdmissibleOrder& order,
                                 std::size_t coset_cap) {
    if (order.num_vars() != code.num_variables())
        throw std::invalid_argument("build_reduced_basis: order arity does not match n*m");
    {
        long long cosets = 1;
        for (int i = 0; i < code.redundancy(); ++i) {
            cosets *= code.field().size();
            if (cosets > static_cast<long long>(coset_cap))
                throw std::runtime_error("build_reduced_basis: q^(n-k) exceeds the coset cap");
        }
    }

    ReducedBasis basis;
    basis.code = code;
    basis.order = order;
    basis.t = code.error_capability();

    const int nm = code.num_variables();
    const int m = code.field().degree();
    Worklist worklist(basis.order, m);
    worklist.insert(Word::one(nm));

    std::vector<Binomial> found; // insertion order
    std::unordered_map<std::string, int> syndrome_index;

    // Head-term membership in T(G) adapted to the non-admissible ordering: a
    // repeated-coset word w is dropped instead of recorded when some head
    // divides it with strictly smaller variable support, or when some
    // binomial rewrites it to a <_e-smaller word. Same-support divisors with
    // growing rewrites leave w as a genuine head (this is where the
    // non-binary reduction cycles come from). For binary codes every rewrite
    // decreases, so the test collapses to plain divisibility. New cosets are
    // never dropped: the first popped word of a coset represents it even
    // when a lower head happens to divide it.
    auto redundant_head = [&](const Word& w) {
        for (const Binomial& b : found) {
            if (!b.head.divides(w) || b.head == w) continue;
            bool support_proper = false;
            for (int v = 1; v <= nm && !support_proper; ++v)
                support_proper = w.exponent(v) > 0 && b.head.exponent(v) == 0;
            if (support_proper) return true;
            const Word rewritten = w.divided_by(b.head).times(b.tail);
            if (less_e(basis.order, m, rewritten, w)) return true;
        }
        return false;
    };

    while (!worklist.empty()) {
        const Word w = worklist.pop();
        const std::string key = syndrome_key(xi(code, w));
        const auto it = syndrome_index.find(key);
        if (it != syndrome_index.end()) {
            if (!redundant_head(w))
                found.push_back(
                    Binomial{w, basis.canonical_forms[static_cast<std::size_t>(it->second)]});
            continue;
        }
        const int j = static_cast<int>(basis.canonical_forms.size());
        syndrome_index.emplace(key, j);
        basis.word_index.emplace(w.key(), j);
        basis.canonical_forms.push_back(w);
        worklist.insert_successors(w);
    }

    // Stored order: (|Ind(head)|, head under the admissible order).
    std::sort(found.begin(), found.end(), [&](const Binomial& a, const Binomial& b) {
        const int la = ind_size(a.head, m);
        const int lb = ind_size(b.head, m);
        if (la != lb) return la < lb;
        return cmp_admissible(basis.order, a.head, b.head) < 0;
    });
    basis.binomials = std::move(found);
    return basis;
}

namespace {

void require_binary(const ReducedBasis& basis, const char* where) {
    if (basis.code.field().characteristic() != 2 || basis.code.field().degree() != 1)
        throw std::invalid_argument(std::string(where) + ": requires a binary code (p = 2, m = 1)");
}

} // namespace

std::optional<RewriteStep> reduce_step(const ReducedBasis& basis, const Word& w) {
    const int p = basis.code.field().characteristic();
    const int nm = basis.code.num_variables();
    if (w.num_vars() != nm) throw std::invalid_argument("reduce_step: word arity mismatch");

    // Standardization first: strip one p-th power, smallest variable first,
    // through the matching power binomial when the basis carries it.
    for (int rank = 0; rank < nm; ++rank) {
        const int v = basis.order.variable_order[static_cast<std::size_t>(rank)];
        if (w.exponent(v) < p) continue;
        const Word power = Word(nm).times(v, p);
        for (int i = 0; i < basis.size(); ++i) {
            const Binomial& b = basis.binomials[static_cast<std::size_t>(i)];
            if (b.head == power)
                return RewriteStep{w.divided_by(power).times(b.tail), i};
        }
    }

    // Otherwise the matching head of maximal |Ind|, ties to the stored order
    // (which is admissible-ascending within a level).
    const int m = basis.code.field().degree();
    int chosen = -1;
    int chosen_level = -1;
    for (int i = 0; i < basis.size(); ++i) {
        const Binomial& b = basis.binomials[static_cast<std::size_t>(i)];
        if (!b.head.divides(w)) continue;
        const int lvl = ind_size(b.head, m);
        if (lvl > chosen_level) {
            chosen = i;
            chosen_level = lvl;
        }
    }
    if (chosen < 0) return std::nullopt;
    const Binomial& b = basis.binomials[static_cast<std::size_t>(chosen)];
    return RewriteStep{w.divided_by(b.head).times(b.tail), chosen};
}

std::optional<Word> reduce_once_binary(const ReducedBasis& basis, const Word& w) {
    require_binary(basis, "reduce_once_binary");
    const auto step = reduce_step(basis, w);
    if (!step) return std::nullopt;
    return step->result;
}

Word canonical_form_binary(const ReducedBasis& basis, const Word& w) {
    require_binary(basis, "canonical_form_binary");
    Word current = w;
    // Noetherian for binary codes; the guard only catches broken bases.
    const std::size_t guard = 1000 + 100 * static_cast<std::size_t>(w.num_vars()) *
                                        static_cast<std::size_t>(std::max(w.degree(), 1));
    for (std::size_t steps = 0; steps <= guard; ++steps) {
        const auto step = reduce_step(basis, current);
        if (!step) return current;
        current = step->result;
    }
    throw std::logic_error("canonical_form_binary: reduction did not terminate");
}

ReductionTrace reduce_traced(const ReducedBasis& basis, const Word& w, std::size_t limit) {
    if (limit == 0)
        limit = 10 * static_cast<std::size_t>(basis.code.num_variables()) *
                static_cast<std::size_t>(std::max(w.degree(), 1));

    ReductionTrace trace;
    trace.words.push_back(w);
    std::unordered_map<std::string, int> visited;
    visited.emplace(w.key(), 0);

    for (std::size_t step_count = 0; step_count < limit; ++step_count) {
        const auto step = reduce_step(basis, trace.words.back());
        if (!step) {
            trace.outcome = ReductionOutcome::canonical;
            return trace;
        }
        trace.applied.push_back(step->binomial);
        const auto seen = visited.find(step->result.key());
        trace.words.push_back(step->result);
        if (seen != visited.end()) {
            trace.outcome = ReductionOutcome::cycle_detected;
            trace.cycle_start = seen->second;
            return trace;
        }
        visited.emplace(step->result.key(), static_cast<int>(trace.words.size()) - 1);
    }
    trace.outcome = ReductionOutcome::step_limit;
    return trace;
}

bool reduces_to_zero(const ReducedBasis& basis, const Binomial& b) {
    require_binary(basis, "reduces_to_zero");
    return canonical_form_binary(basis, b.head) == canonical_form_binary(basis, b.tail);
}

} // namespace cosetgb
