#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "test_util.hpp"

using namespace cosetgb;
using testutil::bits;
using testutil::load_fixture;

TEST_CASE("syndromes") {
    const Code c1 = load_fixture("c1.json");
    CHECK(hamming_weight(c1.syndrome(bits(c1, "110000"))) == 0);
    CHECK(hamming_weight(c1.syndrome(bits(c1, "000000"))) == 0);

    const Code cf2 = load_fixture("cf2.json");
    const Syndrome s = cf2.syndrome(bits(cf2, "1000000000"));
    // first parity-check column of the CF2 block
    for (const FieldElement& e : s) CHECK(e == cf2.field().one());
    CHECK_THROWS(cf2.syndrome(bits(cf2, "101")));
}

TEST_CASE("codeword enumeration") {
    const Code c1 = load_fixture("c1.json");
    const auto words = c1.codewords();
    CHECK(words.size() == 8);
    CHECK(std::count(words.begin(), words.end(), bits(c1, "111111")) == 1);

    const Code cf2 = load_fixture("cf2.json");
    CHECK(cf2.codewords().size() == 16);

    // k = 0: only the zero word
    const FieldSpec f2 = FieldSpec::prime_field(2);
    std::vector<std::vector<FieldElement>> identity3(3, VectorFq(3, f2.zero()));
    for (int i = 0; i < 3; ++i) identity3[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = f2.one();
    const Code trivial = Code::from_parity_check(f2, identity3);
    CHECK(trivial.dimension() == 0);
    CHECK(trivial.codewords() == std::vector<VectorFq>{VectorFq(3, f2.zero())});
    CHECK(trivial.minimum_distance() == 4); // n+1 sentinel

    CHECK_THROWS(cf2.codewords(8)); // cap below q^k
}

TEST_CASE("weight distribution and error capability") {
    const Code c1 = load_fixture("c1.json");
    const Code c2 = load_fixture("c2.json");
    const std::vector<long long> expected{1, 0, 3, 0, 3, 0, 1};
    CHECK(c1.weight_distribution() == expected);
    CHECK(c2.weight_distribution() == expected);
    CHECK(c1.error_capability() == 0);

    const Code repetition = Code::from_generator(
        FieldSpec::prime_field(2), {{FieldSpec::prime_field(2).one(),
                                     FieldSpec::prime_field(2).one(),
                                     FieldSpec::prime_field(2).one()}});
    CHECK(repetition.weight_distribution() == std::vector<long long>{1, 0, 0, 1});

    CHECK(load_fixture("cf2.json").error_capability() == 1);
    CHECK(load_fixture("cf3.json").error_capability() == 1);
    CHECK(load_fixture("cf4.json").error_capability() == 1);

    // counts sum to q^k
    for (const char* name : {"cf2.json", "cf3.json", "cf4.json"}) {
        const Code code = load_fixture(name);
        const auto dist = code.weight_distribution();
        long long total = 0;
        for (long long count : dist) total += count;
        long long expected = 1;
        for (int i = 0; i < code.dimension(); ++i) expected *= code.field().size();
        CHECK(total == expected);
    }
}

TEST_CASE("derived matrices") {
    // Example-style generator: H follows by elimination and G*H^T = 0 is
    // checked inside the factory
    const Code example1 = load_fixture("example1.json");
    CHECK(example1.redundancy() == 3);
    {
        auto rows = example1.parity_rows();
        CHECK(row_reduce(example1.field(), rows, nullptr) == 3);
    }
    for (const auto& g : example1.generator_rows()) CHECK(example1.is_codeword(g));

    // identity generator: n = k, empty parity check
    const FieldSpec f2 = FieldSpec::prime_field(2);
    std::vector<std::vector<FieldElement>> eye(4, VectorFq(4, f2.zero()));
    for (int i = 0; i < 4; ++i) eye[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = f2.one();
    const Code full = Code::from_generator(f2, eye);
    CHECK(full.redundancy() == 0);
    CHECK(full.parity_rows().empty());

    // H -> G -> H' keeps the row space
    const Code c1 = load_fixture("c1.json");
    const Code rederived = Code::from_generator(c1.field(), c1.generator_rows());
    CHECK(same_row_space(c1.field(), c1.parity_rows(), rederived.parity_rows()));
    CHECK(c1.same_code(rederived));

    // rank-deficient input is rejected
    CHECK_THROWS(Code::from_generator(
        f2, {{f2.one(), f2.one()}, {f2.one(), f2.one()}}));
}

TEST_CASE("syndrome zero exactly on codewords") {
    for (const char* name : {"c1.json", "c2.json", "cf2.json", "cf3.json", "cf4.json"}) {
        const Code code = load_fixture(name);
        std::set<std::string> codeword_keys;
        for (const VectorFq& c : code.codewords()) {
            CHECK(hamming_weight(code.syndrome(c)) == 0);
            std::string key;
            for (const FieldElement& e : c)
                for (int digit : e.coeffs) key.push_back(static_cast<char>('0' + digit));
            codeword_keys.insert(key);
        }
        long long zero_count = 0;
        std::map<std::string, std::set<std::string>> coset_of;
        for (const VectorFq& v : testutil::ambient_space(code)) {
            if (hamming_weight(code.syndrome(v)) == 0) ++zero_count;
            // equal syndromes partition the space into cosets of size q^k
            std::string key;
            for (const FieldElement& e : v)
                for (int digit : e.coeffs) key.push_back(static_cast<char>('0' + digit));
            coset_of[syndrome_key(code.syndrome(v))].insert(key);
        }
        CHECK(zero_count == static_cast<long long>(code.codewords().size()));
        for (const auto& [syndrome, members] : coset_of)
            CHECK(members.size() == code.codewords().size());
    }
}

TEST_CASE("permuting coordinates") {
    const Code cf2 = load_fixture("cf2.json");
    const Permutation sigma1 = Permutation::parse("(1,10,2,7,9,6,4,3,5)", 10);
    CHECK(cf2.apply_permutation(sigma1).same_code(load_fixture("sigma_cf2_1.json")));

    const Permutation sigma2 = Permutation::parse("(1,2,6,9,10,4,5,3,7,8)", 10);
    CHECK(cf2.apply_permutation(sigma2).same_code(load_fixture("sigma_cf2_2.json")));

    CHECK(cf2.apply_permutation(Permutation(10)).same_code(cf2));
    CHECK(cf2.apply_permutation(sigma1).apply_permutation(sigma1.inverse()).same_code(cf2));

    // weight distribution and t are invariant
    std::mt19937 rng(37);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> images(10);
        std::iota(images.begin(), images.end(), 1);
        std::shuffle(images.begin(), images.end(), rng);
        const Code moved = cf2.apply_permutation(Permutation::from_images(images));
        CHECK(moved.weight_distribution() == cf2.weight_distribution());
        CHECK(moved.error_capability() == cf2.error_capability());
    }
}
