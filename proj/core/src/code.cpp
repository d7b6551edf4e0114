#include "cosetgb/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace cosetgb {

int hamming_weight(const VectorFq& v) {
    int w = 0;
    for (const FieldElement& e : v)
        if (!e.is_zero()) ++w;
    return w;
}

std::string syndrome_key(const Syndrome& s) {
    std::string key;
    for (const FieldElement& e : s)
        for (int c : e.coeffs) key.push_back(static_cast<char>(c));
    return key;
}

int row_reduce(const FieldSpec& field, std::vector<std::vector<FieldElement>>& rows,
               std::vector<int>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    if (rows.empty()) return 0;
    const int nrows = static_cast<int>(rows.size());
    const int ncols = static_cast<int>(rows[0].size());
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int pivot = -1;
        for (int r = rank; r < nrows; ++r) {
            if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
        const FieldElement inv =
            field.inverse(rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)]);
        for (int c = 0; c < ncols; ++c)
            rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)] =
                field.mul(inv, rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)]);
        for (int r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            const FieldElement factor =
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (factor.is_zero()) continue;
            for (int c = 0; c < ncols; ++c) {
                const FieldElement delta =
                    field.mul(factor, rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)]);
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    field.sub(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], delta);
            }
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

std::vector<std::vector<FieldElement>> right_kernel_basis(
    const FieldSpec& field, std::vector<std::vector<FieldElement>> rows, int cols) {
    std::vector<int> pivots;
    const int rank = row_reduce(field, rows, &pivots);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        std::vector<FieldElement> v(static_cast<std::size_t>(cols), field.zero());
        v[static_cast<std::size_t>(free_col)] = field.one();
        for (int r = 0; r < rank; ++r) {
            const FieldElement coeff =
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(free_col)];
            v[static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = field.neg(coeff);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool same_row_space(const FieldSpec& field,
                    std::vector<std::vector<FieldElement>> a,
                    std::vector<std::vector<FieldElement>> b) {
    const int rank_a = row_reduce(field, a, nullptr);
    const int rank_b = row_reduce(field, b, nullptr);
    if (rank_a != rank_b) return false;
    a.resize(static_cast<std::size_t>(rank_a));
    b.resize(static_cast<std::size_t>(rank_b));
    return a == b;
}

namespace {

void validate_rows(const FieldSpec& field, const std::vector<std::vector<FieldElement>>& rows,
                   int cols, const char* what) {
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument(std::string(what) + ": ragged matrix");
        for (const FieldElement& e : row)
            if (static_cast<int>(e.coeffs.size()) != field.degree())
                throw std::invalid_argument(std::string(what) + ": entry does not match the field");
    }
}

} // namespace

Code Code::from_parity_check(FieldSpec field, std::vector<std::vector<FieldElement>> check_rows) {
    Code code;
    code.field_ = std::move(field);
    if (check_rows.empty())
        throw std::invalid_argument("Code::from_parity_check: empty matrix; "
                                    "use from_generator for the k = n code");
    code.n_ = static_cast<int>(check_rows[0].size());
    code.k_ = code.n_ - static_cast<int>(check_rows.size());
    validate_rows(code.field_, check_rows, code.n_, "Code::from_parity_check");
    code.check_rows_ = std::move(check_rows);
    code.finish(true, false);
    return code;
}

Code Code::from_generator(FieldSpec field, std::vector<std::vector<FieldElement>> generator_rows) {
    Code code;
    code.field_ = std::move(field);
    if (generator_rows.empty())
        throw std::invalid_argument("Code::from_generator: empty generator matrix");
    code.k_ = static_cast<int>(generator_rows.size());
    code.n_ = static_cast<int>(generator_rows[0].size());
    validate_rows(code.field_, generator_rows, code.n_, "Code::from_generator");
    code.gen_rows_ = std::move(generator_rows);
    code.finish(false, true);
    return code;
}

Code Code::from_both(FieldSpec field, std::vector<std::vector<FieldElement>> check_rows,
                     std::vector<std::vector<FieldElement>> generator_rows) {
    Code code;
    code.field_ = std::move(field);
    code.n_ = check_rows.empty() ? static_cast<int>(generator_rows[0].size())
                                 : static_cast<int>(check_rows[0].size());
    code.k_ = code.n_ - static_cast<int>(check_rows.size());
    validate_rows(code.field_, check_rows, code.n_, "Code::from_both");
    validate_rows(code.field_, generator_rows, code.n_, "Code::from_both");
    code.check_rows_ = std::move(check_rows);
    code.gen_rows_ = std::move(generator_rows);
    code.finish(true, true);
    return code;
}

void Code::finish(bool parity_given, bool generator_given) {
    parity_given_ = parity_given;
    generator_given_ = generator_given;
    if (n_ < 1) throw std::invalid_argument("Code: length must be positive");
    if (k_ < 0 || k_ > n_) throw std::invalid_argument("Code: dimension out of range");

    if (parity_given_) {
        auto reduced = check_rows_;
        if (row_reduce(field_, reduced, nullptr) != n_ - k_)
            throw std::invalid_argument("Code: parity-check matrix is rank deficient");
    }
    if (generator_given_) {
        auto reduced = gen_rows_;
        if (row_reduce(field_, reduced, nullptr) != k_)
            throw std::invalid_argument("Code: generator matrix is rank deficient");
    }
    if (!generator_given_) {
        gen_rows_ = right_kernel_basis(field_, check_rows_, n_);
        if (static_cast<int>(gen_rows_.size()) != k_)
            throw std::logic_error("Code: kernel dimension disagrees with n-k");
    }
    if (!parity_given_) {
        check_rows_ = right_kernel_basis(field_, gen_rows_, n_);
        if (static_cast<int>(check_rows_.size()) != n_ - k_)
            throw std::logic_error("Code: derived parity-check rank disagrees with n-k");
    }
    // G * H^T = 0.
    for (const auto& g : gen_rows_) {
        for (const auto& h : check_rows_) {
            FieldElement acc = field_.zero();
            for (int c = 0; c < n_; ++c)
                acc = field_.add(acc, field_.mul(g[static_cast<std::size_t>(c)],
                                                 h[static_cast<std::size_t>(c)]));
            if (!acc.is_zero())
                throw std::invalid_argument("Code: generator and parity-check matrices disagree");
        }
    }
}

Syndrome Code::syndrome(const VectorFq& v) const {
    if (static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("Code::syndrome: vector length mismatch");
    Syndrome s(static_cast<std::size_t>(n_ - k_), field_.zero());
    for (int r = 0; r < n_ - k_; ++r) {
        FieldElement acc = field_.zero();
        const auto& row = check_rows_[static_cast<std::size_t>(r)];
        for (int c = 0; c < n_; ++c)
            acc = field_.add(acc, field_.mul(v[static_cast<std::size_t>(c)],
                                             row[static_cast<std::size_t>(c)]));
        s[static_cast<std::size_t>(r)] = acc;
    }
    return s;
}

bool Code::is_codeword(const VectorFq& v) const {
    for (const FieldElement& e : syndrome(v))
        if (!e.is_zero()) return false;
    return true;
}

std::vector<VectorFq> Code::codewords(std::size_t cap) const {
    long long count = 1;
    for (int i = 0; i < k_; ++i) {
        count *= field_.size();
        if (count > static_cast<long long>(cap))
            throw std::runtime_error("Code::codewords: q^k exceeds the enumeration cap");
    }
    std::vector<VectorFq> words;
    words.reserve(static_cast<std::size_t>(count));
    std::vector<int> message(static_cast<std::size_t>(k_), 0);
    for (long long idx = 0; idx < count; ++idx) {
        long long rest = idx;
        for (int i = 0; i < k_; ++i) {
            message[static_cast<std::size_t>(i)] = static_cast<int>(rest % field_.size());
            rest /= field_.size();
        }
        VectorFq word(static_cast<std::size_t>(n_), field_.zero());
        for (int i = 0; i < k_; ++i) {
            const FieldElement coeff = field_.element_at(message[static_cast<std::size_t>(i)]);
            if (coeff.is_zero()) continue;
            const auto& row = gen_rows_[static_cast<std::size_t>(i)];
            for (int c = 0; c < n_; ++c)
                word[static_cast<std::size_t>(c)] =
                    field_.add(word[static_cast<std::size_t>(c)],
                               field_.mul(coeff, row[static_cast<std::size_t>(c)]));
        }
        words.push_back(std::move(word));
    }
    return words;
}

std::vector<long long> Code::weight_distribution(std::size_t cap) const {
    std::vector<long long> dist(static_cast<std::size_t>(n_) + 1, 0);
    for (const VectorFq& w : codewords(cap))
        ++dist[static_cast<std::size_t>(hamming_weight(w))];
    return dist;
}

int Code::minimum_distance(std::size_t cap) const {
    if (k_ == 0) return n_ + 1;
    const std::vector<long long> dist = weight_distribution(cap);
    for (int w = 1; w <= n_; ++w)
        if (dist[static_cast<std::size_t>(w)] > 0) return w;
    return n_ + 1;
}

int Code::error_capability(std::size_t cap) const {
    return (minimum_distance(cap) - 1) / 2;
}

Code Code::apply_permutation(const Permutation& sigma) const {
    if (sigma.size() != n_)
        throw std::invalid_argument("Code::apply_permutation: permutation size mismatch");
    auto permute_cols = [&](const std::vector<std::vector<FieldElement>>& rows) {
        std::vector<std::vector<FieldElement>> out(rows.size(),
                                                   VectorFq(static_cast<std::size_t>(n_), field_.zero()));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int c = 1; c <= n_; ++c)
                out[r][static_cast<std::size_t>(sigma.image(c) - 1)] =
                    rows[r][static_cast<std::size_t>(c - 1)];
        return out;
    };
    return Code::from_both(field_, permute_cols(check_rows_), permute_cols(gen_rows_));
}

bool Code::same_code(const Code& other) const {
    if (field_ != other.field_ || n_ != other.n_ || k_ != other.k_) return false;
    return same_row_space(field_, gen_rows_, other.gen_rows_);
}

VectorFq psi(const Code& code, const Word& w) {
    const FieldSpec& field = code.field();
    const int m = field.degree();
    if (w.num_vars() != code.num_variables())
        throw std::invalid_argument("psi: word arity mismatch");
    VectorFq v(static_cast<std::size_t>(code.length()), field.zero());
    for (int i = 1; i <= code.length(); ++i) {
        std::vector<int> coeffs(static_cast<std::size_t>(m), 0);
        for (int j = 1; j <= m; ++j)
            coeffs[static_cast<std::size_t>(j - 1)] =
                w.exponent(flat_index(i, j, m)) % field.characteristic();
        v[static_cast<std::size_t>(i - 1)] = field.element_from_coeffs(std::move(coeffs));
    }
    return v;
}

Syndrome xi(const Code& code, const Word& w) {
    return code.syndrome(psi(code, w));
}

Word standard_word(const Code& code, const VectorFq& v) {
    if (static_cast<int>(v.size()) != code.length())
        throw std::invalid_argument("standard_word: vector length mismatch");
    const int m = code.field().degree();
    std::vector<int> exps(static_cast<std::size_t>(code.num_variables()), 0);
    for (int i = 1; i <= code.length(); ++i)
        for (int j = 1; j <= m; ++j)
            exps[static_cast<std::size_t>(flat_index(i, j, m) - 1)] =
                v[static_cast<std::size_t>(i - 1)].coeffs[static_cast<std::size_t>(j - 1)];
    return Word::from_exponents(exps);
}

VectorFq permute_vector(const Permutation& sigma, const VectorFq& v) {
    if (sigma.size() != static_cast<int>(v.size()))
        throw std::invalid_argument("permute_vector: permutation size mismatch");
    VectorFq out(v.size());
    for (int i = 1; i <= sigma.size(); ++i)
        out[static_cast<std::size_t>(sigma.image(i) - 1)] = v[static_cast<std::size_t>(i - 1)];
    return out;
}

} // namespace cosetgb
