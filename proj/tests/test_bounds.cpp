#include <catch_amalgamated.hpp>

#include <cmath>

#include "kronrad/bounds.hpp"
#include "kronrad/complex_matrix.hpp"
#include "kronrad/generate.hpp"
#include "kronrad/rng.hpp"

using namespace kronrad;

TEST_CASE("product sandwich chain on random pairs") {
    Rng rng(71, 0);
    for (int t = 0; t < 5; ++t) {
        const CMatrix a = random_matrix(rng, 3, 3);
        const CMatrix b = random_matrix(rng, 2, 2);
        const P3Chain chain = p3_chain(a, b);
        REQUIRE(chain.report.ok(1e-8));
    }
}

TEST_CASE("comparison matrices refine the classical bound") {
    // worked instance: the off-diagonal 2x2 blocks beat |a_ij| ||B||
    const double s2 = std::sqrt(2.0);
    const CMatrix a{{cplx{0, 0}, cplx{1, 1}}, {cplx{s2, 0}, cplx{0, 0}}};
    const CMatrix b{{cplx{0, 0}, cplx{2, 0}}, {cplx{0, 0}, cplx{0, 0}}};

    const CMatrices cm = c_matrices(a, b);
    // C is symmetric with zero diagonal; its radius is its largest eigenvalue
    REQUIRE(std::abs(cm.c(0, 1).real() - cm.c(1, 0).real()) < 1e-12);
    const double wc = radius_value(cm.c);
    REQUIRE(std::abs(wc - s2) < 1e-9);

    const double hol = holbrook(a, b);
    REQUIRE(std::abs(hol - 2.0 * s2) < 1e-9); // w(A) = sqrt(2), ||B|| = 2
    REQUIRE(wc < hol - 1.0);                  // strictly better here

    const BoundReport rep = th4_chain(a, b);
    REQUIRE(rep.ok(1e-8));
    REQUIRE(std::abs(rep.value("c_radius") - s2) < 1e-9);
}

TEST_CASE("chain holds on non-negative instances including the Holbrook cap") {
    Rng rng(73, 0);
    for (int t = 0; t < 5; ++t) {
        const CMatrix a = random_nonneg_matrix(rng, 3, 3);
        const CMatrix b = random_matrix(rng, 2, 2);
        const BoundReport rep = th4_chain(a, b);
        REQUIRE(rep.ok(1e-8));
        // non-negative A links all the way to w(A)||B||
        bool has_holbrook_link = false;
        for (const auto& rel : rep.relations())
            if (rel.rhs == "holbrook") has_holbrook_link = true;
        REQUIRE(has_holbrook_link);
    }
}

TEST_CASE("strictness witness: diagonal times shift") {
    CMatrix a(2, 2), b(2, 2);
    a(0, 0) = 1.0;
    a(1, 1) = 2.0;
    b(0, 1) = 1.0;
    const double wk = radius_value(kron(a, b));
    REQUIRE(std::abs(wk - 1.0) < 1e-10); // = 2 w(B)
    REQUIRE(holbrook(a, b) == 2.0);      // w(A) ||B|| stays strictly larger
}

TEST_CASE("refined corollary bounds") {
    Rng rng(75, 0);
    for (int t = 0; t < 5; ++t) {
        const CMatrix a = random_matrix(rng, 3, 3);
        const CMatrix b = random_matrix(rng, 2, 2);
        REQUIRE(refined_bounds(a, b).ok(1e-8));
    }
}

TEST_CASE("equality characterization, forward direction") {
    Rng rng(77, 0);
    const CMatrix a = random_matrix(rng, 3, 3);
    const CMatrix b = random_hermitian(rng, 2); // w(B) = ||B||
    const EqualityCheck ec = cor1_equality_check(a, b);
    REQUIRE(ec.forward_applicable);
    REQUIRE(ec.forward_ok);
    REQUIRE(ec.equality);
}

TEST_CASE("equality characterization, converse direction") {
    Rng rng(79, 0);
    CMatrix a = random_nonneg_matrix(rng, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) a(i, i) += 0.3;

    // radius gap in B must break equality
    CMatrix b(3, 3);
    b(0, 1) = 1.5;
    b(1, 2) = 1.5;
    const EqualityCheck ec = cor1_equality_check(a, b);
    REQUIRE(ec.converse_applicable);
    REQUIRE(ec.w_b < ec.norm_b - 0.1);
    REQUIRE_FALSE(ec.equality);
    REQUIRE(ec.converse_ok); // vacuously: no equality claimed
}

TEST_CASE("four-term row/column chain") {
    Rng rng(81, 0);
    for (int t = 0; t < 5; ++t) {
        const CMatrix a = random_matrix(rng, 3, 3);
        const CMatrix b = random_matrix(rng, 2, 2);
        REQUIRE(e14_chain(a, b).ok(1e-8));
    }
}

TEST_CASE("block norm grid comparison") {
    Rng rng(83, 0);
    std::vector<std::vector<CMatrix>> blocks(2);
    for (auto& row : blocks)
        for (int j = 0; j < 2; ++j) row.push_back(random_matrix(rng, 2, 2));
    const auto [lhs, rhs] = hou_du_gap(blocks);
    REQUIRE(lhs <= rhs + 1e-8);

    // 1x1 blocks: both sides equal ||abs(A)|| only when entries align; still <=
    std::vector<std::vector<CMatrix>> scalars(2);
    for (auto& row : scalars)
        for (int j = 0; j < 2; ++j) row.push_back(random_matrix(rng, 1, 1));
    const auto [l2, r2] = hou_du_gap(scalars);
    REQUIRE(l2 <= r2 + 1e-10);

    blocks[0].pop_back();
    REQUIRE_THROWS_AS(hou_du_gap(blocks), std::invalid_argument);
}

TEST_CASE("two by two kron radius helper") {
    const CMatrix b{{cplx{0, 0}, cplx{2, 0}}, {cplx{0, 0}, cplx{0, 0}}};
    // x = y = 1: [[0,1],[1,0]] (x) B is anti-block-diagonal with w = ||B||/2 * 2 ... use sweep
    const double v = two_by_two_kron_radius(cplx{1, 0}, cplx{1, 0}, b);
    const CMatrix cell{{cplx{0, 0}, cplx{1, 0}}, {cplx{1, 0}, cplx{0, 0}}};
    REQUIRE(std::abs(v - radius_value(kron(cell, b))) < 1e-12);
}
