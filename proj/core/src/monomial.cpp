#include "cosetgb/monomial.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace cosetgb {

int flat_index(int position, int sublevel, int m) {
    return (position - 1) * m + sublevel;
}

VariableIndex variable_index(int flat, int m) {
    const int position = (flat - 1) / m + 1;
    const int sublevel = (flat - 1) % m + 1;
    return VariableIndex{position, sublevel, flat};
}

Word Word::variable(int num_vars, int var) {
    if (var < 1 || var > num_vars) throw std::invalid_argument("Word::variable: index out of range");
    Word w(num_vars);
    w.exp_[static_cast<std::size_t>(var - 1)] = 1;
    return w;
}

Word Word::from_exponents(const std::vector<int>& exponents) {
    Word w(static_cast<int>(exponents.size()));
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        const int e = exponents[i];
        if (e < 0 || e > 255) throw std::invalid_argument("Word::from_exponents: exponent out of range");
        w.exp_[i] = static_cast<char>(e);
    }
    return w;
}

int Word::degree() const {
    int d = 0;
    for (char c : exp_) d += static_cast<unsigned char>(c);
    return d;
}

bool Word::is_one() const {
    for (char c : exp_)
        if (c != 0) return false;
    return true;
}

Word Word::times(int var, int count) const {
    Word w = *this;
    const int e = w.exponent(var) + count;
    if (e < 0 || e > 255) throw std::overflow_error("Word::times: exponent out of range");
    w.exp_[static_cast<std::size_t>(var - 1)] = static_cast<char>(e);
    return w;
}

Word Word::times(const Word& other) const {
    if (num_vars() != other.num_vars()) throw std::invalid_argument("Word::times: arity mismatch");
    Word w = *this;
    for (int v = 1; v <= num_vars(); ++v) {
        const int e = exponent(v) + other.exponent(v);
        if (e > 255) throw std::overflow_error("Word::times: exponent out of range");
        w.exp_[static_cast<std::size_t>(v - 1)] = static_cast<char>(e);
    }
    return w;
}

bool Word::divides(const Word& other) const {
    if (num_vars() != other.num_vars()) return false;
    for (int v = 1; v <= num_vars(); ++v)
        if (exponent(v) > other.exponent(v)) return false;
    return true;
}

Word Word::divided_by(const Word& divisor) const {
    if (!divisor.divides(*this)) throw std::invalid_argument("Word::divided_by: not a divisor");
    Word w = *this;
    for (int v = 1; v <= num_vars(); ++v)
        w.exp_[static_cast<std::size_t>(v - 1)] =
            static_cast<char>(exponent(v) - divisor.exponent(v));
    return w;
}

std::string Word::str() const {
    std::string out;
    for (int v = 1; v <= num_vars(); ++v) {
        const int e = exponent(v);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(v);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

Word Word::parse(const std::string& text, int num_vars) {
    Word w(num_vars);
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("Word::parse: expected a number in '" + text + "'");
        int value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            ++i;
        }
        return value;
    };
    skip_space();
    if (i < text.size() && text[i] == '1') {
        ++i;
        skip_space();
        if (i == text.size()) return w;
        throw std::invalid_argument("Word::parse: unexpected trailing text in '" + text + "'");
    }
    bool expect_factor = true;
    while (i < text.size()) {
        skip_space();
        if (i >= text.size()) break;
        if (!expect_factor) {
            if (text[i] != '*') throw std::invalid_argument("Word::parse: expected '*' in '" + text + "'");
            ++i;
            skip_space();
        }
        if (i >= text.size() || (text[i] != 'x' && text[i] != 'X'))
            throw std::invalid_argument("Word::parse: expected a variable in '" + text + "'");
        ++i;
        if (i < text.size() && text[i] == '_') ++i; // accept x_3 as well as x3
        const int var = read_int();
        if (var < 1 || var > num_vars)
            throw std::invalid_argument("Word::parse: variable index out of range in '" + text + "'");
        int e = 1;
        skip_space();
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip_space();
            e = read_int();
        }
        const int total = w.exponent(var) + e;
        if (total > 255) throw std::invalid_argument("Word::parse: exponent out of range");
        w.exp_[static_cast<std::size_t>(var - 1)] = static_cast<char>(total);
        expect_factor = false;
        skip_space();
    }
    if (expect_factor) throw std::invalid_argument("Word::parse: empty word text");
    return w;
}

const std::string& Word::key() const {
    return exp_;
}

std::vector<int> ind(const Word& w, int m) {
    std::vector<int> positions;
    const int n = w.num_vars() / m;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= m; ++j) {
            if (w.exponent(flat_index(i, j, m)) > 0) {
                positions.push_back(i);
                break;
            }
        }
    }
    return positions;
}

int ind_size(const Word& w, int m) {
    int count = 0;
    const int n = w.num_vars() / m;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= m; ++j) {
            if (w.exponent(flat_index(i, j, m)) > 0) {
                ++count;
                break;
            }
        }
    }
    return count;
}

bool is_standard(const Word& w, int p) {
    for (int v = 1; v <= w.num_vars(); ++v)
        if (w.exponent(v) >= p) return false;
    return true;
}

Word standard_form(const Word& w, int p) {
    std::vector<int> exps(static_cast<std::size_t>(w.num_vars()));
    for (int v = 1; v <= w.num_vars(); ++v)
        exps[static_cast<std::size_t>(v - 1)] = w.exponent(v) % p;
    return Word::from_exponents(exps);
}

AdmissibleOrder AdmissibleOrder::natural(OrderKind kind, int num_vars) {
    std::vector<int> order(static_cast<std::size_t>(num_vars));
    std::iota(order.begin(), order.end(), 1);
    return with_variable_order(kind, std::move(order));
}

AdmissibleOrder AdmissibleOrder::with_variable_order(OrderKind kind, std::vector<int> order) {
    AdmissibleOrder out;
    out.kind = kind;
    out.variable_order = std::move(order);
    const int nm = out.num_vars();
    out.rank_.assign(static_cast<std::size_t>(nm), -1);
    for (int r = 0; r < nm; ++r) {
        const int v = out.variable_order[static_cast<std::size_t>(r)];
        if (v < 1 || v > nm || out.rank_[static_cast<std::size_t>(v - 1)] != -1)
            throw std::invalid_argument("AdmissibleOrder: variable order is not a permutation of 1..nm");
        out.rank_[static_cast<std::size_t>(v - 1)] = r;
    }
    return out;
}

std::strong_ordering cmp_admissible(const AdmissibleOrder& order, const Word& u, const Word& w) {
    const int nm = order.num_vars();
    if (u.num_vars() != nm || w.num_vars() != nm)
        throw std::invalid_argument("cmp_admissible: arity mismatch");
    if (order.kind == OrderKind::lex) {
        // Larger exponent at the greatest differing variable wins.
        for (int r = nm - 1; r >= 0; --r) {
            const int v = order.variable_order[static_cast<std::size_t>(r)];
            if (u.exponent(v) != w.exponent(v))
                return u.exponent(v) <=> w.exponent(v);
        }
        return std::strong_ordering::equal;
    }
    // drl: total degree first, then the ascending variable sequences at the
    // first differing slot; equivalently, at the least differing variable the
    // larger exponent loses.
    if (u.degree() != w.degree()) return u.degree() <=> w.degree();
    for (int r = 0; r < nm; ++r) {
        const int v = order.variable_order[static_cast<std::size_t>(r)];
        if (u.exponent(v) != w.exponent(v))
            return w.exponent(v) <=> u.exponent(v);
    }
    return std::strong_ordering::equal;
}

std::strong_ordering cmp_error_vector(const AdmissibleOrder& order, int m,
                                      const Word& u, const Word& w) {
    const int iu = ind_size(u, m);
    const int iw = ind_size(w, m);
    if (iu != iw) return iu <=> iw;
    return cmp_admissible(order, u, w);
}

bool less_e(const AdmissibleOrder& order, int m, const Word& u, const Word& w) {
    return cmp_error_vector(order, m, u, w) < 0;
}

Word permute_word(const Permutation& sigma, const Word& w, int m) {
    const int nm = w.num_vars();
    const int n = nm / m;
    if (sigma.size() != n) throw std::invalid_argument("permute_word: permutation size mismatch");
    std::vector<int> exps(static_cast<std::size_t>(nm), 0);
    for (int i = 1; i <= n; ++i) {
        const int target = sigma.image(i);
        for (int j = 1; j <= m; ++j)
            exps[static_cast<std::size_t>(flat_index(target, j, m) - 1)] =
                w.exponent(flat_index(i, j, m));
    }
    return Word::from_exponents(exps);
}

} // namespace cosetgb
