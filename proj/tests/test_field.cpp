#include "doctest.h"

#include "cosetgb/field.hpp"

using namespace cosetgb;

TEST_CASE("characteristic-2 addition") {
    const FieldSpec f2 = FieldSpec::prime_field(2);
    CHECK(f2.add(f2.one(), f2.one()) == f2.zero());

    const FieldSpec f4 = FieldSpec::with_default_modulus(2, 2);
    const FieldElement alpha = f4.element_from_coeffs({0, 1});
    CHECK(f4.add(alpha, alpha) == f4.zero());
}

TEST_CASE("mod-3 addition") {
    const FieldSpec f3 = FieldSpec::prime_field(3);
    CHECK(f3.add(f3.scalar_embed(2), f3.scalar_embed(2)) == f3.scalar_embed(1));
}

TEST_CASE("GF(4) multiplication reduces by X^2+X+1") {
    const FieldSpec f4 = FieldSpec::with_default_modulus(2, 2);
    const FieldElement alpha = f4.element_from_coeffs({0, 1});
    CHECK(f4.mul(alpha, alpha) == f4.element_from_coeffs({1, 1})); // alpha^2 = alpha + 1
}

TEST_CASE("multiplicative identity and absorbing zero") {
    for (const FieldSpec& f :
         {FieldSpec::prime_field(5), FieldSpec::with_default_modulus(2, 3),
          FieldSpec::with_default_modulus(3, 2)}) {
        for (int i = 0; i < f.size(); ++i) {
            const FieldElement a = f.element_at(i);
            CHECK(f.mul(a, f.one()) == a);
            CHECK(f.mul(a, f.zero()) == f.zero());
        }
    }
}

TEST_CASE("scalar_embed is a ring homomorphism from Z/pZ") {
    for (const FieldSpec& f :
         {FieldSpec::prime_field(7), FieldSpec::with_default_modulus(3, 2)}) {
        const int p = f.characteristic();
        CHECK(f.scalar_embed(0) == f.zero());
        CHECK(f.scalar_embed(1) == f.one());
        for (int a = 0; a < p; ++a) {
            for (int b = 0; b < p; ++b) {
                CHECK(f.add(f.scalar_embed(a), f.scalar_embed(b)) ==
                      f.scalar_embed((a + b) % p));
                CHECK(f.mul(f.scalar_embed(a), f.scalar_embed(b)) ==
                      f.scalar_embed((a * b) % p));
            }
        }
    }
}

TEST_CASE("field axioms by exhaustive enumeration") {
    const std::vector<FieldSpec> fields = {
        FieldSpec::prime_field(2),          FieldSpec::prime_field(3),
        FieldSpec::prime_field(5),          FieldSpec::prime_field(7),
        FieldSpec::with_default_modulus(2, 2), FieldSpec::with_default_modulus(2, 3),
        FieldSpec::with_default_modulus(2, 4), FieldSpec::with_default_modulus(2, 6),
        FieldSpec::with_default_modulus(3, 2), FieldSpec::with_default_modulus(3, 3),
        FieldSpec::with_default_modulus(5, 2), FieldSpec::with_default_modulus(7, 2),
    };
    for (const FieldSpec& f : fields) {
        const int q = f.size();
        REQUIRE(q <= 64);
        // commutativity + unique inverses
        int invertible = 0;
        for (int i = 0; i < q; ++i) {
            const FieldElement a = f.element_at(i);
            if (!a.is_zero()) {
                const FieldElement inv = f.inverse(a);
                CHECK(f.mul(a, inv) == f.one());
                ++invertible;
            }
            for (int j = i; j < q; ++j) {
                const FieldElement b = f.element_at(j);
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
            }
        }
        CHECK(invertible == q - 1);
        // associativity + distributivity
        for (int i = 0; i < q; ++i) {
            const FieldElement a = f.element_at(i);
            for (int j = 0; j < q; ++j) {
                const FieldElement b = f.element_at(j);
                for (int k = 0; k < q; ++k) {
                    const FieldElement c = f.element_at(k);
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("construction rejects bad moduli") {
    CHECK_THROWS(FieldSpec(4, 1, {0, 1}));          // p not prime
    CHECK_THROWS(FieldSpec(2, 2, {0, 1, 1}));       // X^2+X reducible
    CHECK_THROWS(FieldSpec(2, 2, {1, 0, 1}));       // X^2+1 = (X+1)^2 over F_2
    CHECK_THROWS(FieldSpec(2, 2, {1, 1, 1, 1}));    // wrong length
    CHECK_THROWS(FieldSpec(2, 9, {0, 1}));          // 512 > 256 cap
    CHECK_NOTHROW(FieldSpec(3, 2, {1, 0, 1}));      // X^2+1 irreducible over F_3
}

TEST_CASE("element arity mismatch is rejected") {
    const FieldSpec f4 = FieldSpec::with_default_modulus(2, 2);
    const FieldSpec f2 = FieldSpec::prime_field(2);
    CHECK_THROWS(f4.add(f4.one(), f2.one()));
}
