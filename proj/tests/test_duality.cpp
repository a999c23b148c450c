#include <catch2/catch_amalgamated.hpp>

#include <klein/algebra.hpp>
#include <klein/duality.hpp>
#include <klein/spaces.hpp>

#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace klein;
using klein::testing::approx_equal;
using klein::testing::random_k_vector;
using klein::testing::random_multivector;
using klein::testing::Rng;

namespace {
DualMultivector dual_basis(std::size_t slot_index) {
    DualMultivector x;
    x.c[slot_index] = 1.0;
    return x;
}
} // namespace

TEST_CASE("duality on basis blades") {
    CHECK(dual(e12) == dual_basis(slot::e0));
    CHECK(dual(e0) == -dual_basis(slot::e12));
    CHECK(dual(mv_one) == -dual_basis(slot::e012));
    CHECK(dual(e012) == dual_basis(slot::scalar));

    Multivector p = e12 + 0.25 * e20 + 0.5 * e01;
    DualMultivector x = dual(p);
    CHECK(x.c[slot::e0] == 1.0);
    CHECK(x.c[slot::e1] == 0.25);
    CHECK(x.c[slot::e2] == 0.5);
}

TEST_CASE("undual inverts the table") {
    CHECK(undual(dual_basis(slot::e0)) == e12);
    CHECK(undual(dual_basis(slot::e12)) == -e0);
    CHECK(undual(-0.4 * dual_basis(slot::e20) + 0.9 * dual_basis(slot::e01)) ==
          linear_combine(0.4, e1, -0.9, e2));
}

TEST_CASE("round trips are exact") {
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(undual(dual(basis_blade(i))) == basis_blade(i));
        CHECK(dual(undual(dual_basis(i))) == dual_basis(i));
    }
    Rng rng(41);
    for (int iter = 0; iter < 500; ++iter) {
        Multivector a = random_multivector(rng);
        CHECK(undual(dual(a)) == a);
    }
}

TEST_CASE("dual agrees with the oracle permutation") {
    Rng rng(42);
    for (int iter = 0; iter < 200; ++iter) {
        Multivector a = random_multivector(rng);
        CHECK(dual(a) == oracle::oracle_dual_mv(a));
    }
}

TEST_CASE("identity map preserves coefficients") {
    CHECK(identity_map(e12) == dual_basis(slot::e12));
    CHECK(identity_map(3.0 * e0 + e1) ==
          3.0 * dual_basis(slot::e0) + dual_basis(slot::e1));
}

TEST_CASE("elliptic metric expresses duality as right multiplication") {
    // D(A) = Id(A I^{-1}) holds under the elliptic signature...
    Rng rng(43);
    Multivector i_inv = inverse(pseudoscalar, sig_elliptic);
    for (int iter = 0; iter < 100; ++iter) {
        Multivector a = random_multivector(rng);
        DualMultivector lhs = dual(a);
        DualMultivector rhs = identity_map(geometric_product(a, i_inv, sig_elliptic));
        CHECK(approx_equal(lhs, rhs, 1e-14));
    }
    CHECK(dual(e01) == identity_map(geometric_product(e01, i_inv, sig_elliptic)));

    // ...and fails under a degenerate one: with sigma0 = 0 the pseudoscalar
    // annihilates e0, while D(e0) stays -e^12. (-I stands in for the
    // inverse, which does not even exist in Euclidean space.)
    Multivector e0_route = geometric_product(e0, -pseudoscalar, sig_euclidean);
    CHECK(max_abs_coefficient(e0_route) == 0.0);
    CHECK(dual(e0) == -dual_basis(slot::e12));
}

TEST_CASE("join worked examples") {
    double a = 1.7, b = -0.6;
    CHECK(approx_equal(join(e12, point(a, b)), linear_combine(b, e1, -a, e2), 1e-15));
    CHECK(join(e1, e2) == mv_zero);

    Rng rng(44);
    for (int iter = 0; iter < 100; ++iter) {
        Multivector m = random_multivector(rng);
        CHECK(join(m, e012) == m);
        CHECK(join(e012, m) == m);
    }
}

TEST_CASE("join grade rule and anticommutativity on points") {
    Rng rng(45);
    for (int iter = 0; iter < 100; ++iter) {
        Multivector p = random_k_vector(rng, 2);
        Multivector q = random_k_vector(rng, 2);
        CHECK(approx_equal(join(p, q), -join(q, p), 1e-15));
        Multivector a = random_k_vector(rng, 1);
        CHECK(join(a, random_k_vector(rng, 1)) == mv_zero);
        CHECK(approx_equal(join(a, p), join(p, a), 1e-15));
    }
}

TEST_CASE("join is metric independent by construction") {
    // The pipeline never consults a signature; spot-check the identity
    // a ^ P = (a v P) I, whose right side does.
    Rng rng(46);
    for (const Space& space : all_spaces) {
        for (int iter = 0; iter < 100; ++iter) {
            Multivector a = random_k_vector(rng, 1);
            Multivector p = random_k_vector(rng, 2);
            Multivector lhs = outer_product(a, p);
            Multivector rhs = geometric_product(join(a, p), pseudoscalar, space.signature);
            CHECK(approx_equal(lhs, rhs, 1e-14));
        }
    }
}

TEST_CASE("commutator of points routes through the join") {
    Rng rng(47);
    for (const Space& space : all_spaces) {
        for (int iter = 0; iter < 100; ++iter) {
            Multivector p = random_k_vector(rng, 2);
            Multivector q = random_k_vector(rng, 2);
            Multivector lhs = commutator(p, q, space.signature);
            Multivector rhs = geometric_product(join(p, q), pseudoscalar, space.signature);
            CHECK(approx_equal(lhs, rhs, 1e-14));
        }
    }
}

TEST_CASE("inner product relates to join") {
    // A_k . B_l = (A_k I) v B_l for k <= l.
    Rng rng(48);
    for (const Space& space : all_spaces) {
        for (int k = 0; k <= 3; ++k) {
            for (int l = k; l <= 3; ++l) {
                for (int iter = 0; iter < 30; ++iter) {
                    Multivector a = random_k_vector(rng, k);
                    Multivector b = random_k_vector(rng, l);
                    Multivector lhs = inner_product(a, b, space.signature);
                    Multivector rhs =
                        join(geometric_product(a, pseudoscalar, space.signature), b);
                    CHECK(approx_equal(lhs, rhs, 1e-13));
                }
            }
        }
    }
}

TEST_CASE("outer product in the model representation") {
    DualMultivector ez = dual_basis(slot::e0);
    double a = 2.2, b = -0.3;
    DualMultivector rhs = ez + a * dual_basis(slot::e1) + b * dual_basis(slot::e2);
    DualMultivector got = outer_product_dual(ez, rhs);
    CHECK(approx_equal(got, -b * dual_basis(slot::e20) + a * dual_basis(slot::e01), 1e-15));

    double w = 0.5, x = 3.0, y = 1.0;
    DualMultivector u = w * dual_basis(slot::e0) + x * dual_basis(slot::e1) + y * dual_basis(slot::e2);
    DualMultivector f =
        dual_basis(slot::e12) + 3.0 * dual_basis(slot::e20) + dual_basis(slot::e01);
    DualMultivector wedge = outer_product_dual(u, f);
    CHECK(wedge.c[slot::e012] == Catch::Approx(w + 3 * x + y).margin(1e-15));

    Rng rng(49);
    for (int iter = 0; iter < 50; ++iter) {
        DualMultivector v;
        for (std::size_t i = slot::e0; i <= slot::e2; ++i) v.c[i] = rng.uniform(-1, 1);
        DualMultivector self = outer_product_dual(v, v);
        CHECK(klein::testing::approx_equal(self, DualMultivector{}, 1e-15));
    }
}

TEST_CASE("functional pairing") {
    Multivector f = multivector(0, 1, 3, 1, 0, 0, 0, 0);
    DualMultivector v = dual_basis(slot::e0) - 3.0 * dual_basis(slot::e1);
    CHECK(functional_apply(f, v) == Catch::Approx(-8.0));
    CHECK(functional_apply(e0, dual_basis(slot::e1)) == 0.0);

    // The pairing realizes projective duality: (1,a,b)[(1,x,y)] = 1 + ax + by.
    double a = 0.75, x = 2.0;
    double b = 1.0, y = -(1.0 + a * x) / b;
    DualMultivector on_line =
        dual_basis(slot::e0) + x * dual_basis(slot::e1) + y * dual_basis(slot::e2);
    CHECK(functional_apply(line(1, a, b), on_line) == Catch::Approx(0.0).margin(1e-15));

    CHECK_THROWS_AS(functional_apply(e12, v), Error);
    CHECK_THROWS_AS(functional_apply(e0, dual_basis(slot::e01)), Error);
}
