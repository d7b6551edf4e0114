#include "doctest.h"

#include <random>
#include <set>

#include "golden_data.hpp"
#include "test_util.hpp"

using namespace cosetgb;
using testutil::binomial_set;
using testutil::load_fixture;
using testutil::w;

namespace {

void check_listing(const char* fixture, const golden::WordList& names,
                   const golden::PairList& pairs) {
    const Code code = load_fixture(fixture);
    const ReducedBasis basis = build_reduced_basis(code, testutil::drl(code));
    // set comparison: the printed listings shuffle lines here and there
    const auto mine = testutil::word_strings(basis.canonical_forms);
    CHECK(std::set<std::string>(mine.begin(), mine.end()) ==
          std::set<std::string>(names.begin(), names.end()));
    CHECK(mine.size() == names.size());
    CHECK(binomial_set(basis) == binomial_set(pairs));
    CHECK(basis.size() == static_cast<int>(pairs.size()));
}

} // namespace

TEST_CASE("reduced bases match the listings") {
    check_listing("cf2.json", golden::cf2_N(), golden::cf2_G());
    check_listing("cf3.json", golden::cf3_N(), golden::cf3_G());
    check_listing("cf4.json", golden::cf4_N(), golden::cf4_G());
    check_listing("c1.json", golden::c1_N(), golden::c1_G());
    check_listing("c2.json", golden::c2_N(), golden::c2_G());
    check_listing("sigma_cf2_1.json", golden::sigma1_N_prime(), golden::sigma1_G_prime());
    check_listing("sigma_cf2_2.json", golden::sigma2_N_prime(), golden::sigma2_G_prime());
}

TEST_CASE("single-coset code reduces every variable to 1") {
    const FieldSpec f2 = FieldSpec::prime_field(2);
    std::vector<std::vector<FieldElement>> eye(3, VectorFq(3, f2.zero()));
    for (int i = 0; i < 3; ++i) eye[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = f2.one();
    const Code full = Code::from_generator(f2, eye);
    const ReducedBasis basis = build_reduced_basis(full, testutil::drl(full));
    CHECK(testutil::word_strings(basis.canonical_forms) == std::vector<std::string>{"1"});
    CHECK(binomial_set(basis) ==
          binomial_set(golden::PairList{{"x1", "1"}, {"x2", "1"}, {"x3", "1"}}));
    for (int v = 1; v <= 3; ++v)
        CHECK(canonical_form_binary(basis, Word::variable(3, v)).is_one());
}

TEST_CASE("one-step reduction follows the worked chain") {
    const Code cf2 = load_fixture("cf2.json");
    const ReducedBasis basis = build_reduced_basis(cf2, testutil::drl(cf2));

    const auto step1 = reduce_once_binary(basis, w("x1*x2*x3*x7*x8*x9", 10));
    REQUIRE(step1.has_value());
    CHECK(*step1 == w("x5*x7*x9^2*x10", 10));
    // the applied binomial is the level-4 head
    const auto detail = reduce_step(basis, w("x1*x2*x3*x7*x8*x9", 10));
    CHECK(basis.binomials[static_cast<std::size_t>(detail->binomial)].head ==
          w("x1*x2*x3*x8", 10));

    const auto step2 = reduce_once_binary(basis, *step1);
    REQUIRE(step2.has_value());
    CHECK(*step2 == w("x5*x7*x10", 10)); // x9^2 stripped first

    const auto step3 = reduce_once_binary(basis, *step2);
    REQUIRE(step3.has_value());
    CHECK(*step3 == w("x1*x3*x10", 10));
    CHECK_FALSE(reduce_once_binary(basis, *step3).has_value());

    CHECK(reduce_once_binary(basis, w("x9^2", 10)) == Word::one(10));
    // canonical forms are irreducible
    for (const Word& word : basis.canonical_forms)
        CHECK_FALSE(reduce_once_binary(basis, word).has_value());
}

TEST_CASE("canonical forms via the basis") {
    const Code cf2 = load_fixture("cf2.json");
    const ReducedBasis basis = build_reduced_basis(cf2, testutil::drl(cf2));
    CHECK(canonical_form_binary(basis, w("x1*x2*x3*x4*x9*x10", 10)) == w("x1", 10));
    CHECK(canonical_form_binary(basis, Word::one(10)).is_one());
    CHECK(canonical_form_binary(basis, w("x1*x2*x3*x7*x8*x9", 10)) == w("x1*x3*x10", 10));

    const Code cf3 = load_fixture("cf3.json");
    const ReducedBasis b3 = build_reduced_basis(cf3, testutil::drl(cf3));
    CHECK_THROWS(canonical_form_binary(b3, Word::one(7)));
    CHECK_THROWS(reduce_once_binary(b3, Word::one(7)));
}

TEST_CASE("non-binary reduction cycles are detected") {
    const Code cf3 = load_fixture("cf3.json");
    const ReducedBasis b3 = build_reduced_basis(cf3, testutil::drl(cf3));
    const ReductionTrace t3 = reduce_traced(b3, w("x1*x5*x7", 7));
    CHECK(t3.outcome == ReductionOutcome::cycle_detected);
    CHECK(t3.cycle_start == 0);
    CHECK(testutil::word_strings(t3.words) ==
          std::vector<std::string>{"x1*x5*x7", "x3*x7^2", "x1*x5*x7"});

    const Code cf4 = load_fixture("cf4.json");
    const ReducedBasis b4 = build_reduced_basis(cf4, testutil::drl(cf4));
    const ReductionTrace t4 = reduce_traced(b4, w("x2*x4*x7", 10));
    CHECK(t4.outcome == ReductionOutcome::cycle_detected);
    CHECK(t4.cycle_start == 1);
    CHECK(testutil::word_strings(t4.words) ==
          std::vector<std::string>{"x2*x4*x7", "x6*x7*x8", "x1*x8*x10", "x6*x7*x8"});

    // binary reduction always terminates
    const Code cf2 = load_fixture("cf2.json");
    const ReducedBasis b2 = build_reduced_basis(cf2, testutil::drl(cf2));
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> exp(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> exps(10);
        for (int& e : exps) e = exp(rng);
        const ReductionTrace trace = reduce_traced(b2, Word::from_exponents(exps));
        CHECK(trace.outcome == ReductionOutcome::canonical);
        CHECK(b2.is_canonical(trace.final_word()));
    }
}

TEST_CASE("mutual reduction to zero") {
    const Code cf2 = load_fixture("cf2.json");
    const ReducedBasis basis = build_reduced_basis(cf2, testutil::drl(cf2));
    for (const Binomial& b : basis.binomials) CHECK(reduces_to_zero(basis, b));
    CHECK_FALSE(reduces_to_zero(
        basis, Binomial{Word::variable(10, 1), Word::variable(10, 2)}));
}

TEST_CASE("basis and table builds agree on the canonical set") {
    for (const char* name :
         {"c1.json", "c2.json", "cf2.json", "cf3.json", "cf4.json", "example1.json"}) {
        const Code code = load_fixture(name);
        const MatphiTable table = build_matphi(code, testutil::drl(code));
        const ReducedBasis basis = build_reduced_basis(code, testutil::drl(code));
        CHECK(table.canonical_forms == basis.canonical_forms);
    }
}

TEST_CASE("binary confluence under randomized strategies") {
    const Code cf2 = load_fixture("cf2.json");
    const ReducedBasis basis = build_reduced_basis(cf2, testutil::drl(cf2));
    std::mt19937 words_rng(41);
    std::mt19937 s1(1001);
    std::mt19937 s2(2002);
    std::uniform_int_distribution<int> exp(0, 2);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<int> exps(10);
        for (int& e : exps) e = exp(words_rng);
        const Word word = Word::from_exponents(exps);
        const Word deterministic = canonical_form_binary(basis, word);
        CHECK(testutil::random_strategy_canonical_form(basis, word, s1) == deterministic);
        CHECK(testutil::random_strategy_canonical_form(basis, word, s2) == deterministic);
        // syndrome preserved, result canonical, smallest in its coset when
        // the coset is correctable
        CHECK(syndrome_key(xi(cf2, deterministic)) == syndrome_key(xi(cf2, word)));
        CHECK(basis.is_canonical(deterministic));
    }
}

TEST_CASE("heads form an antichain with full coverage (binary)") {
    for (const char* name : {"c1.json", "c2.json", "cf2.json", "sigma_cf2_1.json"}) {
        const Code code = load_fixture(name);
        const ReducedBasis basis = build_reduced_basis(code, testutil::drl(code));
        for (const Binomial& a : basis.binomials)
            for (const Binomial& b : basis.binomials)
                if (!(a == b)) CHECK_FALSE(a.head.divides(b.head));
        // every product N * x outside N is divisible by a head
        const int nm = code.num_variables();
        for (const Word& word : basis.canonical_forms) {
            for (int v = 1; v <= nm; ++v) {
                const Word product = word.times(v);
                if (basis.is_canonical(product)) continue;
                bool covered = false;
                for (const Binomial& b : basis.binomials)
                    if (b.head.divides(product)) {
                        covered = true;
                        break;
                    }
                CHECK(covered);
            }
        }
    }
}

TEST_CASE("stored order is by level then admissible order of heads") {
    const Code cf3 = load_fixture("cf3.json");
    const ReducedBasis basis = build_reduced_basis(cf3, testutil::drl(cf3));
    for (int i = 0; i + 1 < basis.size(); ++i) {
        const int la = basis.level(i);
        const int lb = basis.level(i + 1);
        CHECK(la <= lb);
        if (la == lb)
            CHECK(cmp_admissible(basis.order, basis.binomials[static_cast<std::size_t>(i)].head,
                                 basis.binomials[static_cast<std::size_t>(i + 1)].head) < 0);
    }
    // the cycle example's indices in this order: x3*x7 - x1*x5 is the 10th
    // binomial and x1*x5*x7 - x3*x7^2 the 35th (1-based)
    CHECK(basis.binomials[9].head == w("x3*x7", 7));
    CHECK(basis.binomials[9].tail == w("x1*x5", 7));
    CHECK(basis.binomials[34].head == w("x1*x5*x7", 7));
    CHECK(basis.binomials[34].tail == w("x3*x7^2", 7));
}

TEST_CASE("binomial invariants: equal syndromes, tail below head") {
    for (const char* name : {"cf2.json", "cf3.json", "cf4.json"}) {
        const Code code = load_fixture(name);
        const ReducedBasis basis = build_reduced_basis(code, testutil::drl(code));
        const int m = code.field().degree();
        for (const Binomial& b : basis.binomials) {
            CHECK(syndrome_key(xi(code, b.head)) == syndrome_key(xi(code, b.tail)));
            CHECK(less_e(basis.order, m, b.tail, b.head));
            CHECK(basis.is_canonical(b.tail));
            CHECK_FALSE(basis.is_canonical(b.head));
        }
    }
}

TEST_CASE("the counterexample binomial keeps its orientation") {
    // head x1*x7*x9 has the heavier vector, yet tail <_e head
    const Code cf4 = load_fixture("cf4.json");
    const ReducedBasis basis = build_reduced_basis(cf4, testutil::drl(cf4));
    const Binomial target{w("x1*x7*x9", 10), w("x3*x4*x10", 10)};
    bool found = false;
    for (const Binomial& b : basis.binomials) found = found || b == target;
    CHECK(found);

    const VectorFq head_vec = psi(cf4, target.head);
    const VectorFq tail_vec = psi(cf4, target.tail);
    CHECK(hamming_weight(head_vec) == 3);
    CHECK(hamming_weight(tail_vec) == 2);
    VectorFq expected_head(5, cf4.field().zero());
    expected_head[0] = cf4.field().one();
    expected_head[3] = cf4.field().one();
    expected_head[4] = cf4.field().one();
    CHECK(head_vec == expected_head);
    CHECK(less_e(basis.order, 2, target.tail, target.head));
}

TEST_CASE("x_i^2 - 1 sits in every binary basis with t >= 1") {
    for (const char* name : {"cf2.json", "sigma_cf2_1.json", "sigma_cf2_2.json"}) {
        const Code code = load_fixture(name);
        REQUIRE(code.error_capability() >= 1);
        const ReducedBasis basis = build_reduced_basis(code, testutil::drl(code));
        for (int i = 1; i <= code.length(); ++i) {
            const Binomial square{Word(code.length()).times(i, 2), Word::one(code.length())};
            bool found = false;
            for (const Binomial& b : basis.binomials) found = found || b == square;
            CHECK(found);
        }
    }
}
