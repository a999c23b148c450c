#include <catch2/catch_amalgamated.hpp>

#include <klein/duality.hpp>
#include <klein/multivector.hpp>

#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace klein;
using oracle::BladeWord;
using oracle::IndexList;

TEST_CASE("word products from first principles") {
    // e12 e12 = -1 under the Euclidean signature: one transposition, then
    // two contractions with sigma1 sigma2 = 1.
    BladeWord w = oracle::oracle_product({{1, 2}, 1.0}, {{1, 2}, 1.0}, sig_euclidean);
    CHECK(w.indexes.empty());
    CHECK(w.sign == -1.0);

    w = oracle::oracle_product({{1}, 1.0}, {{2}, 1.0}, sig_de_sitter);
    CHECK(w.indexes == IndexList{1, 2});
    CHECK(w.sign == 1.0);

    w = oracle::oracle_product({{2, 0}, 1.0}, {{2, 0}, 1.0}, sig_euclidean);
    CHECK(w.sign == 0.0);
}

TEST_CASE("duality table rows") {
    auto row = [](std::size_t slot_index) { return oracle::oracle_dual(oracle::slot_words()[slot_index]); };
    CHECK(row(slot::e12) == std::pair<std::size_t, double>{slot::e0, 1.0});
    CHECK(row(slot::scalar) == std::pair<std::size_t, double>{slot::e012, -1.0});
    CHECK(row(slot::e0) == std::pair<std::size_t, double>{slot::e12, -1.0});
    CHECK(row(slot::e1) == std::pair<std::size_t, double>{slot::e20, -1.0});
    CHECK(row(slot::e2) == std::pair<std::size_t, double>{slot::e01, -1.0});
    CHECK(row(slot::e20) == std::pair<std::size_t, double>{slot::e1, 1.0});
    CHECK(row(slot::e01) == std::pair<std::size_t, double>{slot::e2, 1.0});
    CHECK(row(slot::e012) == std::pair<std::size_t, double>{slot::scalar, 1.0});
}

TEST_CASE("oracle exponential") {
    CHECK(oracle::oracle_exp(mv_zero, sig_euclidean, 5) == mv_one);

    double alpha = 1.1;
    Multivector got = oracle::oracle_exp(alpha * e12, sig_euclidean, 32);
    CHECK(got.c[slot::scalar] == Catch::Approx(std::cos(alpha)).epsilon(1e-12));
    CHECK(got.c[slot::e12] == Catch::Approx(std::sin(alpha)).epsilon(1e-12));

    double lambda = 0.7;
    got = oracle::oracle_exp(lambda * e20, sig_euclidean, 32);
    CHECK(got == mv_one + lambda * e20);
}

TEST_CASE("test-only meet agrees with the wedge route") {
    klein::testing::Rng rng(31);
    for (int iter = 0; iter < 50; ++iter) {
        Multivector a = klein::testing::random_multivector(rng);
        Multivector b = klein::testing::random_multivector(rng);
        DualMultivector lhs = oracle::meet_dual(dual(a), dual(b));
        DualMultivector rhs = dual(outer_product(a, b));
        CHECK(klein::testing::approx_equal(lhs, rhs, 1e-13));
    }
}
