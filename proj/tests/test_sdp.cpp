#include "bqcut/sdp.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "bqcut/instance.hpp"
#include "helpers.hpp"

using namespace bqcut;

TEST_CASE("basic relaxation closed forms") {
    SECTION("complete graphs") {
        for (int n : {3, 5, 7}) {
            Matrix W = testutil::complete_graph(n);
            Matrix C = laplacian(W) / 4.0;
            // candidate optimum (n I - J)/(n-1): feasible and worth n^2/4
            Matrix Xstar = (n * Matrix::Identity(n, n) - Matrix::Ones(n, n)) / (n - 1.0);
            REQUIRE((Xstar.diagonal() - Vector::Ones(n)).lpNorm<Eigen::Infinity>() < 1e-12);
            Eigen::SelfAdjointEigenSolver<Matrix> es(Xstar, Eigen::EigenvaluesOnly);
            REQUIRE(es.eigenvalues().minCoeff() > -1e-12);
            REQUIRE(C.cwiseProduct(Xstar).sum() == Catch::Approx(n * n / 4.0));

            SdpSolution sol = solve_diag_sdp(C);
            CHECK(sol.value == Catch::Approx(n * n / 4.0).margin(1e-5));
            CHECK((sol.X.diagonal() - Vector::Ones(n)).lpNorm<Eigen::Infinity>() < 1e-8);
            Eigen::SelfAdjointEigenSolver<Matrix> esx(sol.X, Eigen::EigenvaluesOnly);
            CHECK(esx.eigenvalues().minCoeff() > -1e-8);
            CHECK(sol.gap <= 1e-7);
            CHECK(sol.dual_value >= sol.value - 1e-6);
        }
    }
    SECTION("zero cost") {
        SdpSolution sol = solve_diag_sdp(Matrix::Zero(6, 6));
        CHECK(sol.value == Catch::Approx(0.0).margin(1e-9));
    }
    SECTION("five-cycle") {
        Matrix C = laplacian(testutil::cycle_graph(5)) / 4.0;
        const double expected = (25.0 + 5.0 * std::sqrt(5.0)) / 8.0;
        CHECK(solve_diag_sdp(C).value == Catch::Approx(expected).margin(1e-5));
    }
}

TEST_CASE("relaxation upper-bounds the maximum cut") {
    Rng rng(29);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 6 + static_cast<int>(rng.uniform_int(0, 12));
        Matrix W = testutil::random_weights(rng, n, 0.6, -10, 10);
        MaxCutProblem p = maxcut_from_graph(W);
        SdpSolution sol = solve_diag_sdp(p.M);
        const double opt = brute_force_maxcut(p).value;
        CHECK(sol.value >= opt - 1e-6);
        CHECK(sol.dual_value >= opt - 1e-8);
    }
}

TEST_CASE("solver output is deterministic") {
    Rng rng(31);
    Matrix W = testutil::random_weights(rng, 10, 0.7, -5, 5);
    Matrix C = laplacian(W) / 4.0;
    SdpSolution a = solve_diag_sdp(C);
    SdpSolution b = solve_diag_sdp(C);
    CHECK(a.value == b.value);
    CHECK((a.X - b.X).lpNorm<Eigen::Infinity>() == 0.0);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("extra linear equalities") {
    Rng rng(37);
    Matrix W = testutil::random_weights(rng, 6, 0.8, 1, 6);
    Matrix C = laplacian(W) / 4.0;
    SECTION("pins a single entry") {
        SdpEquality eq;
        eq.G = Matrix::Zero(6, 6);
        eq.G(0, 1) = eq.G(1, 0) = 0.5;  // <G, X> = X01
        eq.rhs = 0.3;
        SdpSolution sol = solve_diag_sdp(C, {eq});
        CHECK(sol.X(0, 1) == Catch::Approx(0.3).margin(1e-6));
        CHECK(sol.value <= solve_diag_sdp(C).value + 1e-6);
    }
    SECTION("inconsistent constraint fails with a usable bound") {
        SdpEquality eq;
        eq.G = Matrix::Zero(6, 6);
        eq.G(0, 1) = eq.G(1, 0) = 0.5;
        eq.rhs = 3.0;  // impossible: |X01| <= 1 under unit diagonal
        CHECK_THROWS_AS(solve_diag_sdp(C, {eq}), SdpFailure);
    }
    SECTION("iteration cap reports failure carrying the best bound") {
        try {
            solve_diag_sdp(C, {}, 1e-7, 2);
            FAIL("expected SdpFailure");
        } catch (const SdpFailure& f) {
            CHECK(std::isfinite(f.best_bound));
            const double opt = brute_force_maxcut(maxcut_from_graph(W)).value;
            CHECK(f.best_bound >= opt - 1e-8);
        }
    }
}

TEST_CASE("eval_dual") {
    Matrix C = laplacian(testutil::complete_graph(3)) / 4.0;
    HypermetricCut tri;
    tri.support = {0, 1, 2};
    tri.signs = {1, 1, 1};

    SECTION("gamma = 0 reproduces the basic value") {
        DualEval ev = eval_dual(C, {tri}, Vector::Zero(1));
        CHECK(ev.f_value == Catch::Approx(9.0 / 4.0).margin(1e-5));
    }
    SECTION("weak duality against the strengthened optimum") {
        for (double g : {0.0, 0.1, 0.25, 0.5, 1.0, 2.0}) {
            DualEval ev = eval_dual(C, {tri}, Vector::Constant(1, g));
            CHECK(ev.f_value >= 2.0 - 1e-7);  // OPT_HYP(K3) = max cut = 2
            CHECK(ev.subgrad[0] == Catch::Approx(1.0 - tri.a_form(ev.X_gamma)).margin(1e-12));
            CHECK(ev.f_value ==
                  Catch::Approx(g + ev.X_gamma.cwiseProduct(C).sum() -
                                g * (tri.a_form(ev.X_gamma) - 1.0) - g)
                      .margin(1e-5));
        }
    }
    SECTION("input validation") {
        CHECK_THROWS_AS(eval_dual(C, {tri}, Vector::Zero(2)), InvalidInput);
        CHECK_THROWS_AS(eval_dual(C, {tri}, Vector::Constant(1, -0.5)), InvalidInput);
    }
}
