#pragma once

#include <string>
#include <vector>

namespace cosetgb {

/// Element of GF(p^m) in the power basis of a fixed irreducible polynomial:
/// coeffs[j] is the coefficient of alpha^j, reduced mod p.
struct FieldElement {
    std::vector<int> coeffs;

    bool is_zero() const;
    bool operator==(const FieldElement&) const = default;
};

/// GF(p^m) with p prime, m >= 1 and p^m <= 256. The modulus is a monic
/// irreducible polynomial of degree m over F_p, stored with ascending
/// coefficients (modulus()[i] is the coefficient of X^i). For m = 1 the
/// conventional modulus is X and plays no role in the arithmetic.
class FieldSpec {
public:
    FieldSpec(int p, int m, std::vector<int> irreducible);

    static FieldSpec prime_field(int p);
    /// Fixed table for GF(4) = X^2+X+1, GF(8) = X^3+X+1, GF(9) = X^2+1;
    /// otherwise the coefficient-lexicographically smallest monic irreducible.
    static FieldSpec with_default_modulus(int p, int m);

    int characteristic() const { return p_; }
    int degree() const { return m_; }
    int size() const { return q_; }
    const std::vector<int>& modulus() const { return irreducible_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement scalar_embed(int c) const;
    FieldElement element_from_coeffs(std::vector<int> coeffs) const;
    /// Elements indexed 0..q-1 by base-p digits, index 0 = zero, 1 = one.
    FieldElement element_at(int index) const;
    int index_of(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement scalar_mul(int c, const FieldElement& a) const;
    /// Multiplicative inverse of a nonzero element; throws on zero.
    FieldElement inverse(const FieldElement& a) const;

    bool operator==(const FieldSpec&) const = default;

private:
    void check(const FieldElement& a, const char* where) const;

    int p_ = 0;
    int m_ = 0;
    int q_ = 0;
    std::vector<int> irreducible_;
};

bool is_prime(int p);

/// Monic polynomials over F_p, ascending coefficients; used for the modulus
/// irreducibility check (trial division by every lower-degree monic).
bool is_irreducible_poly(int p, const std::vector<int>& poly);

std::string to_string(const FieldElement& a);

} // namespace cosetgb
