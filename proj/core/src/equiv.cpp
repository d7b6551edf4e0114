#include "cosetgb/equiv.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace cosetgb {

LevelStats level_stats(const ReducedBasis& basis, int level) {
    const int n = basis.code.length();
    const int m = basis.code.field().degree();
    LevelStats stats;
    stats.level = level;
    stats.heads.assign(static_cast<std::size_t>(n), 0);
    stats.irreds.assign(static_cast<std::size_t>(n), 0);
    for (const Binomial& b : basis.binomials) {
        if (ind_size(b.head, m) != level) continue;
        for (int i : ind(b.head, m)) ++stats.heads[static_cast<std::size_t>(i - 1)];
        for (int i : ind(b.tail, m)) ++stats.irreds[static_cast<std::size_t>(i - 1)];
    }
    return stats;
}

std::vector<Binomial> permute_basis(const Permutation& sigma, const ReducedBasis& basis) {
    const int m = basis.code.field().degree();
    std::vector<Binomial> out;
    out.reserve(basis.binomials.size());
    for (const Binomial& b : basis.binomials)
        out.push_back(Binomial{permute_word(sigma, b.head, m), permute_word(sigma, b.tail, m)});
    return out;
}

namespace {

int permute_variable(const Permutation& sigma, int var, int m) {
    const VariableIndex v = variable_index(var, m);
    return flat_index(sigma.image(v.position), v.sublevel, m);
}

} // namespace

MatphiTable permute_matphi(const Permutation& sigma, const MatphiTable& table) {
    const int m = table.code.field().degree();
    const int nm = table.code.num_variables();

    MatphiTable out;
    out.code = table.code.apply_permutation(sigma);
    out.t = table.t;

    std::vector<int> variable_order(static_cast<std::size_t>(nm));
    for (int r = 0; r < nm; ++r)
        variable_order[static_cast<std::size_t>(r)] =
            permute_variable(sigma, table.order.variable_order[static_cast<std::size_t>(r)], m);
    out.order = AdmissibleOrder::with_variable_order(table.order.kind, std::move(variable_order));

    const Permutation inverse = sigma.inverse();
    for (int i = 0; i < table.size(); ++i) {
        const Word moved = permute_word(sigma, table.canonical_forms[static_cast<std::size_t>(i)], m);
        out.canonical_forms.push_back(moved);
        out.vectors.push_back(permute_vector(sigma, table.vectors[static_cast<std::size_t>(i)]));
        out.flags.push_back(table.flags[static_cast<std::size_t>(i)]);
        out.word_index.emplace(moved.key(), i);
        out.syndrome_index.emplace(syndrome_key(out.code.syndrome(out.vectors.back())), i);

        std::vector<int> row(static_cast<std::size_t>(nm), -1);
        for (int v = 1; v <= nm; ++v)
            row[static_cast<std::size_t>(v - 1)] =
                table.phi[static_cast<std::size_t>(i)]
                         [static_cast<std::size_t>(permute_variable(inverse, v, m) - 1)];
        out.phi.push_back(std::move(row));
    }
    return out;
}

bool matphi_equivalent(const Permutation& sigma, const MatphiTable& table1,
                       const MatphiTable& table2) {
    const Code& c1 = table1.code;
    const Code& c2 = table2.code;
    if (!(c1.field() == c2.field()) || c1.length() != c2.length() ||
        c1.redundancy() != c2.redundancy())
        throw std::invalid_argument("matphi_equivalent: parameter mismatch");
    const int m = c1.field().degree();
    const int nm = c1.num_variables();

    // sigma(N1) must represent the cosets of code 2 bijectively.
    std::unordered_set<std::string> seen;
    for (int i = 0; i < table1.size(); ++i) {
        const Word moved = permute_word(sigma, table1.canonical_forms[static_cast<std::size_t>(i)], m);
        const Syndrome s = xi(c2, moved);
        if (!seen.insert(syndrome_key(s)).second) return false;
        if (table2.coset_index(s) < 0) return false;
    }

    // Multiplicativity coset-wise: sigma(phi(v, x)) and sigma(v)*sigma(x)
    // must land in the same coset of code 2 for every pair.
    for (int i = 0; i < table1.size(); ++i) {
        const Word& v = table1.canonical_forms[static_cast<std::size_t>(i)];
        for (int var = 1; var <= nm; ++var) {
            const Word lhs = permute_word(sigma, v.times(var), m);
            const int target = table1.phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(var - 1)];
            const Word rhs = permute_word(
                sigma, table1.canonical_forms[static_cast<std::size_t>(target)], m);
            if (table2.coset_index(xi(c2, lhs)) != table2.coset_index(xi(c2, rhs))) return false;
        }
    }
    return true;
}

bool bases_equivalent(const ReducedBasis& g1, const ReducedBasis& g2,
                      const Permutation& sigma) {
    if (g1.code.field().characteristic() != 2 || g1.code.field().degree() != 1 ||
        g2.code.field().characteristic() != 2 || g2.code.field().degree() != 1)
        throw std::invalid_argument("bases_equivalent: requires binary codes");
    if (g1.code.length() != g2.code.length())
        throw std::invalid_argument("bases_equivalent: length mismatch");
    const int m = 1;

    // sigma(G1) modulo G2, and G2 modulo sigma(G1); the second direction is
    // pulled back through sigma so that the terminating natural-order
    // reduction does the work.
    for (const Binomial& b : g1.binomials) {
        if (canonical_form_binary(g2, permute_word(sigma, b.head, m)) !=
            canonical_form_binary(g2, permute_word(sigma, b.tail, m)))
            return false;
    }
    const Permutation inverse = sigma.inverse();
    for (const Binomial& b : g2.binomials) {
        if (canonical_form_binary(g1, permute_word(inverse, b.head, m)) !=
            canonical_form_binary(g1, permute_word(inverse, b.tail, m)))
            return false;
    }
    return true;
}

bool verify_permutation(const Code& c1, const Code& c2, const Permutation& sigma) {
    if (!(c1.field() == c2.field()))
        throw std::invalid_argument("verify_permutation: field mismatch");
    if (c1.length() != c2.length() || sigma.size() != c1.length())
        throw std::invalid_argument("verify_permutation: length mismatch");
    if (c1.dimension() != c2.dimension()) return false;
    for (const auto& row : c1.generator_rows())
        if (!c2.is_codeword(permute_vector(sigma, row))) return false;
    return true;
}

namespace {

std::string int_list(const std::vector<long long>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out + "]";
}

// Positions grouped by their parity-check column block (all m variable
// syndromes); the class-size multiset is permutation-invariant.
std::pair<long long, std::vector<long long>> column_class_profile(const Code& code) {
    const int m = code.field().degree();
    std::map<std::string, long long> classes;
    long long zero_class = 0;
    for (int i = 1; i <= code.length(); ++i) {
        std::string key;
        bool all_zero = true;
        for (int j = 1; j <= m; ++j) {
            const Syndrome s =
                xi(code, Word::variable(code.num_variables(), flat_index(i, j, m)));
            key += syndrome_key(s);
            key += '|';
            for (const FieldElement& e : s)
                if (!e.is_zero()) all_zero = false;
        }
        if (all_zero)
            ++zero_class;
        else
            ++classes[key];
    }
    std::vector<long long> sizes;
    for (const auto& [key, count] : classes) sizes.push_back(count);
    std::sort(sizes.begin(), sizes.end());
    return {zero_class, sizes};
}

struct StrictSearch {
    const ReducedBasis* g1 = nullptr;
    const ReducedBasis* g2 = nullptr;
    long long* budget = nullptr;
    int n = 0;

    std::vector<std::vector<int>> candidates; // per position, 1-based images
    std::vector<int> position_order;
    std::vector<int> assignment; // 0 = unassigned, else image
    std::vector<bool> used;
    std::unordered_set<std::string> binomial_set2;
    std::optional<Permutation> witness;

    bool prepare() {
        const int m = 1;
        std::map<int, int> levels1;
        std::map<int, int> levels2;
        for (const Binomial& b : g1->binomials) ++levels1[ind_size(b.head, m)];
        for (const Binomial& b : g2->binomials) ++levels2[ind_size(b.head, m)];
        if (levels1 != levels2) return false;

        std::vector<int> stat_levels;
        for (int level = 2; level <= std::min(g1->t + 2, n); ++level) stat_levels.push_back(level);
        std::vector<LevelStats> s1, s2;
        for (int level : stat_levels) {
            s1.push_back(level_stats(*g1, level));
            s2.push_back(level_stats(*g2, level));
        }
        candidates.assign(static_cast<std::size_t>(n), {});
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                bool ok = true;
                for (std::size_t l = 0; l < stat_levels.size() && ok; ++l)
                    ok = s1[l].heads[static_cast<std::size_t>(i - 1)] ==
                             s2[l].heads[static_cast<std::size_t>(j - 1)] &&
                         s1[l].irreds[static_cast<std::size_t>(i - 1)] ==
                             s2[l].irreds[static_cast<std::size_t>(j - 1)];
                if (ok) candidates[static_cast<std::size_t>(i - 1)].push_back(j);
            }
            if (candidates[static_cast<std::size_t>(i - 1)].empty()) return false;
        }
        for (const Binomial& b : g2->binomials)
            binomial_set2.insert(b.head.key() + "/" + b.tail.key());

        position_order.resize(static_cast<std::size_t>(n));
        std::iota(position_order.begin(), position_order.end(), 1);
        std::stable_sort(position_order.begin(), position_order.end(), [&](int a, int b) {
            return candidates[static_cast<std::size_t>(a - 1)].size() <
                   candidates[static_cast<std::size_t>(b - 1)].size();
        });
        assignment.assign(static_cast<std::size_t>(n) + 1, 0);
        used.assign(static_cast<std::size_t>(n) + 1, false);
        return true;
    }

    // A binomial whose touched positions are all assigned must map exactly
    // into the other basis.
    bool consistent() const {
        for (const Binomial& b : g1->binomials) {
            std::vector<int> positions = ind(b.head, 1);
            for (int i : ind(b.tail, 1)) positions.push_back(i);
            bool complete = true;
            for (int i : positions)
                if (assignment[static_cast<std::size_t>(i)] == 0) {
                    complete = false;
                    break;
                }
            if (!complete) continue;
            std::vector<int> head_exp(static_cast<std::size_t>(n), 0);
            std::vector<int> tail_exp(static_cast<std::size_t>(n), 0);
            for (int v = 1; v <= n; ++v) {
                const int target = assignment[static_cast<std::size_t>(v)];
                if (target == 0) continue;
                head_exp[static_cast<std::size_t>(target - 1)] = b.head.exponent(v);
                tail_exp[static_cast<std::size_t>(target - 1)] = b.tail.exponent(v);
            }
            const std::string key = Word::from_exponents(head_exp).key() + "/" +
                                    Word::from_exponents(tail_exp).key();
            if (!binomial_set2.contains(key)) return false;
        }
        return true;
    }

    void dfs(std::size_t depth) {
        if (witness || *budget <= 0) return;
        --*budget;
        if (depth == position_order.size()) {
            std::vector<int> images(assignment.begin() + 1, assignment.end());
            Permutation sigma = Permutation::from_images(images);
            if (verify_permutation(g1->code, g2->code, sigma)) witness = sigma;
            return;
        }
        const int i = position_order[depth];
        for (int j : candidates[static_cast<std::size_t>(i - 1)]) {
            if (used[static_cast<std::size_t>(j)]) continue;
            assignment[static_cast<std::size_t>(i)] = j;
            used[static_cast<std::size_t>(j)] = true;
            if (consistent()) dfs(depth + 1);
            assignment[static_cast<std::size_t>(i)] = 0;
            used[static_cast<std::size_t>(j)] = false;
            if (witness || *budget <= 0) return;
        }
    }
};

struct ProfileSearch {
    const Code* c1 = nullptr;
    const Code* c2 = nullptr;
    long long* budget = nullptr;
    int n = 0;

    // weight profiles of supported codewords, single positions and pairs
    std::vector<std::vector<long long>> single1, single2;
    std::vector<std::vector<std::vector<long long>>> pair1, pair2;
    std::vector<std::vector<int>> candidates;
    std::vector<int> position_order;
    std::vector<int> assignment;
    std::vector<bool> used;
    std::optional<Permutation> witness;
    bool exhausted = true;
    int infeasible_position = 0;

    static void profiles(const Code& code, std::vector<std::vector<long long>>& single,
                         std::vector<std::vector<std::vector<long long>>>& pair) {
        const int n = code.length();
        single.assign(static_cast<std::size_t>(n),
                      std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
        pair.assign(static_cast<std::size_t>(n),
                    std::vector<std::vector<long long>>(
                        static_cast<std::size_t>(n),
                        std::vector<long long>(static_cast<std::size_t>(n) + 1, 0)));
        for (const VectorFq& word : code.codewords()) {
            const int weight = hamming_weight(word);
            std::vector<int> support;
            for (int i = 0; i < n; ++i)
                if (!word[static_cast<std::size_t>(i)].is_zero()) support.push_back(i);
            for (int i : support) {
                ++single[static_cast<std::size_t>(i)][static_cast<std::size_t>(weight)];
                for (int j : support)
                    if (i != j)
                        ++pair[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                              [static_cast<std::size_t>(weight)];
            }
        }
    }

    bool prepare() {
        profiles(*c1, single1, pair1);
        profiles(*c2, single2, pair2);
        candidates.assign(static_cast<std::size_t>(n), {});
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j)
                if (single1[static_cast<std::size_t>(i - 1)] ==
                    single2[static_cast<std::size_t>(j - 1)])
                    candidates[static_cast<std::size_t>(i - 1)].push_back(j);
            if (candidates[static_cast<std::size_t>(i - 1)].empty()) {
                infeasible_position = i;
                return false;
            }
        }
        position_order.resize(static_cast<std::size_t>(n));
        std::iota(position_order.begin(), position_order.end(), 1);
        std::stable_sort(position_order.begin(), position_order.end(), [&](int a, int b) {
            return candidates[static_cast<std::size_t>(a - 1)].size() <
                   candidates[static_cast<std::size_t>(b - 1)].size();
        });
        assignment.assign(static_cast<std::size_t>(n) + 1, 0);
        used.assign(static_cast<std::size_t>(n) + 1, false);
        return true;
    }

    bool compatible(int i, int j, std::size_t depth) const {
        for (std::size_t d = 0; d < depth; ++d) {
            const int other = position_order[d];
            const int other_img = assignment[static_cast<std::size_t>(other)];
            if (pair1[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(other - 1)] !=
                pair2[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(other_img - 1)])
                return false;
        }
        return true;
    }

    void dfs(std::size_t depth) {
        if (witness || *budget <= 0) return;
        --*budget;
        if (depth == position_order.size()) {
            std::vector<int> images(assignment.begin() + 1, assignment.end());
            Permutation sigma = Permutation::from_images(images);
            if (verify_permutation(*c1, *c2, sigma)) witness = sigma;
            return;
        }
        const int i = position_order[depth];
        for (int j : candidates[static_cast<std::size_t>(i - 1)]) {
            if (used[static_cast<std::size_t>(j)]) continue;
            if (!compatible(i, j, depth)) continue;
            assignment[static_cast<std::size_t>(i)] = j;
            used[static_cast<std::size_t>(j)] = true;
            dfs(depth + 1);
            assignment[static_cast<std::size_t>(i)] = 0;
            used[static_cast<std::size_t>(j)] = false;
            if (witness) return;
            if (*budget <= 0) {
                exhausted = false;
                return;
            }
        }
    }
};

} // namespace

EquivVerdict find_permutation(const Code& c1, const Code& c2, FindOptions options) {
    EquivVerdict verdict;
    const int n = c1.length();

    if (!(c1.field() == c2.field()) || c1.length() != c2.length() ||
        c1.dimension() != c2.dimension()) {
        verdict.kind = EquivVerdict::Kind::not_equivalent;
        verdict.certificate = "parameter mismatch: (n,k,q) = (" + std::to_string(c1.length()) +
                              "," + std::to_string(c1.dimension()) + "," +
                              std::to_string(c1.field().size()) + ") vs (" +
                              std::to_string(c2.length()) + "," + std::to_string(c2.dimension()) +
                              "," + std::to_string(c2.field().size()) + ")";
        return verdict;
    }
    if (n > options.max_n) {
        verdict.kind = EquivVerdict::Kind::undecided;
        verdict.certificate = "length " + std::to_string(n) + " exceeds the search cap " +
                              std::to_string(options.max_n);
        return verdict;
    }

    std::vector<long long> wd1, wd2;
    try {
        wd1 = c1.weight_distribution();
        wd2 = c2.weight_distribution();
    } catch (const std::runtime_error& e) {
        verdict.kind = EquivVerdict::Kind::undecided;
        verdict.certificate = std::string("codeword enumeration cap exceeded: ") + e.what();
        return verdict;
    }
    if (wd1 != wd2) {
        verdict.kind = EquivVerdict::Kind::not_equivalent;
        verdict.certificate =
            "weight distributions differ: " + int_list(wd1) + " vs " + int_list(wd2);
        return verdict;
    }

    if (verify_permutation(c1, c2, Permutation(n))) {
        verdict.kind = EquivVerdict::Kind::equivalent;
        verdict.witness = Permutation(n);
        verdict.certificate = "identity";
        return verdict;
    }

    long long budget = options.node_budget;
    const bool binary = c1.field().characteristic() == 2 && c1.field().degree() == 1;

    if (binary) {
        const AdmissibleOrder order = AdmissibleOrder::natural(OrderKind::drl, n);
        const ReducedBasis g1 = build_reduced_basis(c1, order);
        const ReducedBasis g2 = build_reduced_basis(c2, order);

        long long single1 = 0;
        long long single2 = 0;
        for (const Binomial& b : g1.binomials)
            if (b.head.degree() == 1) ++single1;
        for (const Binomial& b : g2.binomials)
            if (b.head.degree() == 1) ++single2;
        if (single1 != single2) {
            verdict.kind = EquivVerdict::Kind::not_equivalent;
            verdict.certificate =
                "the reduced bases disagree on single-variable heads: " +
                std::to_string(single1) + " binomials of the form x_i - v in the first basis, " +
                std::to_string(single2) +
                " variables covered by the head terms of the second; any permutation must map "
                "single-variable heads onto single-variable heads";
            return verdict;
        }

        if (g1.size() == g2.size()) {
            StrictSearch strict;
            strict.g1 = &g1;
            strict.g2 = &g2;
            strict.budget = &budget;
            strict.n = n;
            if (strict.prepare()) {
                strict.dfs(0);
                if (strict.witness) {
                    verdict.kind = EquivVerdict::Kind::equivalent;
                    verdict.witness = strict.witness;
                    verdict.certificate = "basis-transforming permutation";
                    return verdict;
                }
            }
        }
        if (budget <= 0) budget = options.node_budget / 2; // keep the complete phase alive
    }

    const auto classes1 = column_class_profile(c1);
    const auto classes2 = column_class_profile(c2);
    if (classes1 != classes2) {
        verdict.kind = EquivVerdict::Kind::not_equivalent;
        verdict.certificate =
            "parity-check column classes differ: zero-column count " +
            std::to_string(classes1.first) + " vs " + std::to_string(classes2.first) +
            ", duplicate-class sizes " + int_list(classes1.second) + " vs " +
            int_list(classes2.second);
        return verdict;
    }

    ProfileSearch search;
    search.c1 = &c1;
    search.c2 = &c2;
    search.budget = &budget;
    search.n = n;
    if (!search.prepare()) {
        verdict.kind = EquivVerdict::Kind::not_equivalent;
        verdict.certificate = "position " + std::to_string(search.infeasible_position) +
                              " of the first code has no image with a matching codeword weight "
                              "profile in the second code";
        return verdict;
    }
    search.dfs(0);
    if (search.witness) {
        verdict.kind = EquivVerdict::Kind::equivalent;
        verdict.witness = search.witness;
        verdict.certificate = "backtracking witness";
        return verdict;
    }
    if (!search.exhausted) {
        verdict.kind = EquivVerdict::Kind::undecided;
        verdict.certificate = "node budget exhausted before the search completed";
        return verdict;
    }
    verdict.kind = EquivVerdict::Kind::not_equivalent;
    verdict.certificate =
        "exhaustive backtracking over weight-profile-compatible assignments found no "
        "permutation; every leaf was rejected by the generator check";
    return verdict;
}

} // namespace cosetgb
