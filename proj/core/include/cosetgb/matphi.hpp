#pragma once

#include <cstddef>
#include <set>
#include <unordered_map>
#include <vector>

#include "cosetgb/code.hpp"
#include "cosetgb/monomial.hpp"

namespace cosetgb {

/// Worklist of candidate words, kept ascending w.r.t. the error-vector
/// ordering and duplicate-free.
class Worklist {
public:
    Worklist(const AdmissibleOrder& order, int m);

    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }
    /// Removes and returns the <_e-least word.
    Word pop();
    void insert(const Word& w);
    /// Inserts w*x for every variable x.
    void insert_successors(const Word& w);

private:
    struct Less {
        const AdmissibleOrder* order;
        int m;
        bool operator()(const Word& a, const Word& b) const;
    };
    std::set<Word, Less> items_;
};

/// The canonical-form set N together with the multiplicative table
/// phi : N x X -> N. Entry semantics match the classic triple shape:
/// per canonical form its vector psi(w), a flag (1 iff weight(psi(w)) <= t)
/// and the row of phi values as indices into N.
struct MatphiTable {
    Code code;
    AdmissibleOrder order;
    int t = 0;

    std::vector<Word> canonical_forms;       // insertion order, [0] = 1
    std::vector<VectorFq> vectors;           // psi of each canonical form
    std::vector<std::uint8_t> flags;
    std::vector<std::vector<int>> phi;       // |N| x nm, 0-based indices into N

    std::unordered_map<std::string, int> word_index;     // Word::key() -> index
    std::unordered_map<std::string, int> syndrome_index; // syndrome_key -> index

    int size() const { return static_cast<int>(canonical_forms.size()); }
    /// Index of a word of N, -1 if the word is not a canonical form.
    int index_of(const Word& w) const;
    /// Index of the canonical form of the coset with this syndrome.
    int coset_index(const Syndrome& s) const;
};

/// Coset-enumeration build of (N, phi): pops the worklist in <_e order,
/// registers each new syndrome as a canonical form and records phi entries
/// for every factorization w = u*x with u in N.
MatphiTable build_matphi(const Code& code, const AdmissibleOrder& order,
                         std::size_t coset_cap = std::size_t{1} << 16);

/// cf recursion: consumes the letters of w ascending and chains phi lookups;
/// the result lies in N and has the syndrome of w.
Word canonical_form_cf(const MatphiTable& table, const Word& w);

/// Canonical forms with |Ind| = level, insertion order preserved.
std::vector<Word> coset_level_slice(const MatphiTable& table, int level);

} // namespace cosetgb
