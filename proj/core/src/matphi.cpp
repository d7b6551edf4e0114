#include "cosetgb/matphi.hpp"

#include <algorithm>
#include <stdexcept>

namespace cosetgb {

bool Worklist::Less::operator()(const Word& a, const Word& b) const {
    const auto c = cmp_error_vector(*order, m, a, b);
    if (c != std::strong_ordering::equal) return c < 0;
    return false; // equal words coincide; the set deduplicates
}

Worklist::Worklist(const AdmissibleOrder& order, int m) : items_(Less{&order, m}) {}

Word Worklist::pop() {
    if (items_.empty()) throw std::logic_error("Worklist::pop: empty");
    Word w = *items_.begin();
    items_.erase(items_.begin());
    return w;
}

void Worklist::insert(const Word& w) {
    items_.insert(w);
}

void Worklist::insert_successors(const Word& w) {
    for (int v = 1; v <= w.num_vars(); ++v) items_.insert(w.times(v));
}

int MatphiTable::index_of(const Word& w) const {
    const auto it = word_index.find(w.key());
    return it == word_index.end() ? -1 : it->second;
}

int MatphiTable::coset_index(const Syndrome& s) const {
    const auto it = syndrome_index.find(syndrome_key(s));
    return it == syndrome_index.end() ? -1 : it->second;
}

namespace {

void check_build_inputs(const Code& code, const AdmissibleOrder& order, std::size_t coset_cap) {
    if (order.num_vars() != code.num_variables())
        throw std::invalid_argument("build: order arity does not match n*m");
    long long cosets = 1;
    for (int i = 0; i < code.redundancy(); ++i) {
        cosets *= code.field().size();
        if (cosets > static_cast<long long>(coset_cap))
            throw std::runtime_error("build: q^(n-k) exceeds the coset cap");
    }
}

} // namespace

MatphiTable build_matphi(const Code& code, const AdmissibleOrder& order, std::size_t coset_cap) {
    check_build_inputs(code, order, coset_cap);

    MatphiTable table;
    table.code = code;
    table.order = order;
    table.t = code.error_capability();

    const int nm = code.num_variables();
    Worklist worklist(table.order, code.field().degree());
    worklist.insert(Word::one(nm));

    // phi entries for every factorization w = u * x with u already in N.
    auto record_phi = [&](const Word& w, int target) {
        for (int v = 1; v <= nm; ++v) {
            if (w.exponent(v) == 0) continue;
            const int u = table.index_of(w.divided_by(Word::variable(nm, v)));
            if (u >= 0) table.phi[static_cast<std::size_t>(u)][static_cast<std::size_t>(v - 1)] = target;
        }
    };

    while (!worklist.empty()) {
        const Word w = worklist.pop();
        const std::string key = syndrome_key(xi(code, w));
        const auto it = table.syndrome_index.find(key);
        if (it != table.syndrome_index.end()) {
            record_phi(w, it->second);
            continue;
        }
        const int j = table.size();
        table.canonical_forms.push_back(w);
        table.vectors.push_back(psi(code, w));
        table.syndrome_index.emplace(key, j);
        table.word_index.emplace(w.key(), j);
        table.phi.emplace_back(static_cast<std::size_t>(nm), -1);
        worklist.insert_successors(w);
        record_phi(w, j);
    }

    table.flags.reserve(table.vectors.size());
    for (const VectorFq& v : table.vectors)
        table.flags.push_back(hamming_weight(v) <= table.t ? 1 : 0);

    for (const auto& row : table.phi)
        for (int entry : row)
            if (entry < 0) throw std::logic_error("build_matphi: incomplete phi table");
    return table;
}

Word canonical_form_cf(const MatphiTable& table, const Word& w) {
    const int nm = table.code.num_variables();
    if (w.num_vars() != nm) throw std::invalid_argument("canonical_form_cf: word arity mismatch");
    // Letters consumed ascending; each letter is one phi lookup.
    int current = 0;
    for (int rank = 0; rank < nm; ++rank) {
        const int v = table.order.variable_order[static_cast<std::size_t>(rank)];
        for (int count = 0; count < w.exponent(v); ++count)
            current = table.phi[static_cast<std::size_t>(current)][static_cast<std::size_t>(v - 1)];
    }
    return table.canonical_forms[static_cast<std::size_t>(current)];
}

std::vector<Word> coset_level_slice(const MatphiTable& table, int level) {
    std::vector<Word> out;
    const int m = table.code.field().degree();
    for (const Word& w : table.canonical_forms)
        if (ind_size(w, m) == level) out.push_back(w);
    return out;
}

} // namespace cosetgb
