#include "cosetgb/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace cosetgb {

namespace {

int mod(int a, int p) {
    int r = a % p;
    return r < 0 ? r + p : r;
}

// Polynomials over F_p as ascending coefficient vectors, trailing zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = mod(c[i + j] + a[i] * b[j], p);
    trim(c);
    return c;
}

// Remainder of a modulo the monic divisor d.
Poly poly_rem(Poly a, const Poly& d, int p) {
    trim(a);
    const int deg_d = static_cast<int>(d.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= deg_d) {
        const int shift = static_cast<int>(a.size()) - 1 - deg_d;
        const int lead = a.back();
        for (int i = 0; i <= deg_d; ++i)
            a[static_cast<std::size_t>(shift + i)] =
                mod(a[static_cast<std::size_t>(shift + i)] - lead * d[static_cast<std::size_t>(i)], p);
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

} // namespace

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_irreducible_poly(int p, const std::vector<int>& poly) {
    Poly f = poly;
    trim(f);
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1 || f.back() != 1) return false;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            Poly g(static_cast<std::size_t>(d) + 1, 0);
            long long rest = idx;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<int>(rest % p);
                rest /= p;
            }
            g[static_cast<std::size_t>(d)] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

FieldSpec::FieldSpec(int p, int m, std::vector<int> irreducible)
    : p_(p), m_(m), irreducible_(std::move(irreducible)) {
    if (!is_prime(p_)) throw std::invalid_argument("FieldSpec: p must be prime");
    if (m_ < 1) throw std::invalid_argument("FieldSpec: m must be >= 1");
    long long q = 1;
    for (int i = 0; i < m_; ++i) {
        q *= p_;
        if (q > 256) throw std::invalid_argument("FieldSpec: p^m exceeds the supported cap 256");
    }
    q_ = static_cast<int>(q);
    if (static_cast<int>(irreducible_.size()) != m_ + 1)
        throw std::invalid_argument("FieldSpec: modulus must have m+1 coefficients");
    for (int& c : irreducible_) c = mod(c, p_);
    if (irreducible_[static_cast<std::size_t>(m_)] != 1)
        throw std::invalid_argument("FieldSpec: modulus must be monic");
    if (m_ > 1 && !is_irreducible_poly(p_, irreducible_))
        throw std::invalid_argument("FieldSpec: modulus is reducible over F_p");
}

FieldSpec FieldSpec::prime_field(int p) {
    return FieldSpec(p, 1, {0, 1});
}

FieldSpec FieldSpec::with_default_modulus(int p, int m) {
    if (m == 1) return prime_field(p);
    if (p == 2 && m == 2) return FieldSpec(2, 2, {1, 1, 1});
    if (p == 2 && m == 3) return FieldSpec(2, 3, {1, 1, 0, 1});
    if (p == 3 && m == 2) return FieldSpec(3, 2, {1, 0, 1});
    // First monic irreducible in base-p order of the lower coefficients.
    long long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
        std::vector<int> f(static_cast<std::size_t>(m) + 1, 0);
        long long rest = idx;
        for (int i = 0; i < m; ++i) {
            f[static_cast<std::size_t>(i)] = static_cast<int>(rest % p);
            rest /= p;
        }
        f[static_cast<std::size_t>(m)] = 1;
        if (is_irreducible_poly(p, f)) return FieldSpec(p, m, f);
    }
    throw std::logic_error("FieldSpec: no irreducible polynomial found");
}

void FieldSpec::check(const FieldElement& a, const char* where) const {
    if (static_cast<int>(a.coeffs.size()) != m_)
        throw std::invalid_argument(std::string(where) + ": element does not match this field");
    for (int c : a.coeffs)
        if (c < 0 || c >= p_)
            throw std::invalid_argument(std::string(where) + ": coefficient out of range");
}

FieldElement FieldSpec::zero() const {
    return FieldElement{std::vector<int>(static_cast<std::size_t>(m_), 0)};
}

FieldElement FieldSpec::one() const {
    return scalar_embed(1);
}

FieldElement FieldSpec::scalar_embed(int c) const {
    if (c < 0 || c >= p_) throw std::invalid_argument("scalar_embed: residue out of range");
    FieldElement a = zero();
    a.coeffs[0] = c;
    return a;
}

FieldElement FieldSpec::element_from_coeffs(std::vector<int> coeffs) const {
    if (static_cast<int>(coeffs.size()) != m_)
        throw std::invalid_argument("element_from_coeffs: wrong coefficient count");
    for (int& c : coeffs) c = mod(c, p_);
    return FieldElement{std::move(coeffs)};
}

FieldElement FieldSpec::element_at(int index) const {
    if (index < 0 || index >= q_) throw std::invalid_argument("element_at: index out of range");
    FieldElement a = zero();
    for (int j = 0; j < m_; ++j) {
        a.coeffs[static_cast<std::size_t>(j)] = index % p_;
        index /= p_;
    }
    return a;
}

int FieldSpec::index_of(const FieldElement& a) const {
    check(a, "index_of");
    int idx = 0;
    for (int j = m_ - 1; j >= 0; --j) idx = idx * p_ + a.coeffs[static_cast<std::size_t>(j)];
    return idx;
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
    check(a, "add");
    check(b, "add");
    FieldElement c = zero();
    for (int j = 0; j < m_; ++j)
        c.coeffs[static_cast<std::size_t>(j)] =
            mod(a.coeffs[static_cast<std::size_t>(j)] + b.coeffs[static_cast<std::size_t>(j)], p_);
    return c;
}

FieldElement FieldSpec::sub(const FieldElement& a, const FieldElement& b) const {
    return add(a, neg(b));
}

FieldElement FieldSpec::neg(const FieldElement& a) const {
    check(a, "neg");
    FieldElement c = zero();
    for (int j = 0; j < m_; ++j)
        c.coeffs[static_cast<std::size_t>(j)] = mod(-a.coeffs[static_cast<std::size_t>(j)], p_);
    return c;
}

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
    check(a, "mul");
    check(b, "mul");
    if (m_ == 1) return FieldElement{{mod(a.coeffs[0] * b.coeffs[0], p_)}};
    Poly product = poly_mul(a.coeffs, b.coeffs, p_);
    Poly reduced = poly_rem(std::move(product), irreducible_, p_);
    FieldElement c = zero();
    for (std::size_t j = 0; j < reduced.size(); ++j) c.coeffs[j] = reduced[j];
    return c;
}

FieldElement FieldSpec::scalar_mul(int c, const FieldElement& a) const {
    return mul(scalar_embed(mod(c, p_)), a);
}

FieldElement FieldSpec::inverse(const FieldElement& a) const {
    check(a, "inverse");
    if (a.is_zero()) throw std::domain_error("inverse: zero has no inverse");
    for (int i = 1; i < q_; ++i) {
        FieldElement candidate = element_at(i);
        if (mul(a, candidate) == one()) return candidate;
    }
    throw std::logic_error("inverse: no inverse found (modulus not irreducible?)");
}

std::string to_string(const FieldElement& a) {
    std::string out = "(";
    for (std::size_t j = 0; j < a.coeffs.size(); ++j) {
        if (j) out += ",";
        out += std::to_string(a.coeffs[j]);
    }
    out += ")";
    return out;
}

} // namespace cosetgb
