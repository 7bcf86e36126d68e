#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <utility>
#include <vector>

#include <gammakit/analytic.hpp>
#include <gammakit/random.hpp>
#include <gammakit/theorems.hpp>

using namespace gammakit;

namespace {

std::vector<std::pair<double, double>> random_points(SplitMix64& rng, std::size_t n) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        pts.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
    return pts;
}

OperatorParams random_operator(SplitMix64& rng) {
    return {rng.uniform(-3, 3), rng.signed_uniform(0.25, 4)};
}

} // namespace

TEST_CASE("components of z-polynomials solve the operator equation", "[lemma1]") {
    SECTION("specific instances") {
        const OperatorParams op{0.6, -1.75};
        const AlgebraParams alg = algebra_from_operator(op);

        auto [ru, rv] = lemma1_residuals(APoly::monomial(alg, 2, HNum::one(alg)), op);
        REQUIRE(ru.passed);
        REQUIRE(rv.passed);
        REQUIRE(ru.residual.has_value());
        REQUIRE(ru.residual->empty());

        auto [ru1, rv1] = lemma1_residuals(APoly::z(alg), op);
        REQUIRE(ru1.passed);
        REQUIRE(rv1.passed);
    }

    SECTION("classical harmonic cubic") {
        const OperatorParams op{0, 1};
        const AlgebraParams alg(0, 1);
        const APoly F = APoly::monomial(alg, 3, HNum::one(alg));
        REQUIRE(expand(F).u == BiPoly::from_terms({{3, 0, 1.0}, {1, 2, -3.0}}));
        auto [ru, rv] = lemma1_residuals(F, op);
        REQUIRE(ru.passed);
        REQUIRE(rv.passed);
    }

    SECTION("quantified over random operators and polynomials") {
        SplitMix64 rng(60001);
        for (int t = 0; t < 200; ++t) {
            const OperatorParams op = random_operator(rng);
            const AlgebraParams alg = algebra_from_operator(op);
            const APoly F = random_apoly(rng, alg, 1 + (t % 6), -10, 10);
            auto [ru, rv] = lemma1_residuals(F, op, 1e-9);
            REQUIRE(ru.passed);
            REQUIRE(rv.passed);
        }
    }

    SECTION("algebra mismatch is rejected") {
        const OperatorParams op{1, 1};
        REQUIRE_THROWS_AS(lemma1_residuals(APoly::z(AlgebraParams(0, 1)), op),
                          AlgebraMismatch);
        REQUIRE_THROWS_AS(
            lemma1_residuals(APoly::z(AlgebraParams(0, 1)), OperatorParams{1, 0}),
            DegenerateOperator);
    }
}

TEST_CASE("composition with a differentiable change of variables", "[theorem1]") {
    SECTION("harmonic product composed with the complex square") {
        const OperatorParams op{0, 1};
        const AlgebraParams alg(0, 1);
        const APoly F = APoly::monomial(alg, 2, HNum::one(alg));
        const BiPoly H = compose_solution(BiPoly::monomial(1, 1, 1.0), F, op);
        REQUIRE(H == BiPoly::from_terms({{3, 1, 2.0}, {1, 3, -2.0}}));
        REQUIRE(gamma_apply(op, H) == BiPoly::zero());
    }

    SECTION("second component as h") {
        const OperatorParams op{1, 1};
        const AlgebraParams alg(1, 1);
        const APoly F = APoly::monomial(alg, 2, HNum::one(alg));
        const BiPoly H = compose_solution(BiPoly::monomial(0, 1, 1.0), F, op);
        REQUIRE(H == BiPoly::from_terms({{1, 1, 2.0}, {0, 2, -1.0}}));
        REQUIRE(gamma_apply(op, H) == BiPoly::zero());
    }

    SECTION("identity change of variables") {
        const OperatorParams op{0, 1};
        const BiPoly H =
            compose_solution(BiPoly::monomial(1, 0, 1.0), APoly::z(AlgebraParams(0, 1)), op);
        REQUIRE(H == BiPoly::x());
    }

    SECTION("precondition is verified unless waived") {
        const OperatorParams op{0, 1};
        const APoly F = APoly::z(AlgebraParams(0, 1));
        const BiPoly u2 = BiPoly::monomial(2, 0, 1.0);
        REQUIRE_THROWS_AS(compose_solution(u2, F, op), NotASolution);
        REQUIRE(compose_solution(u2, F, op, 1e-9, false) == u2);
    }
}

TEST_CASE("composition residual and the factorization identity", "[theorem1]") {
    SECTION("solutions compose to solutions") {
        SplitMix64 rng(60002);
        for (int t = 0; t < 100; ++t) {
            const OperatorParams op = random_operator(rng);
            const AlgebraParams alg = algebra_from_operator(op);
            const APoly G = random_apoly(rng, alg, 1 + (t % 3), -2, 2);
            const ComponentPair hp = expand(G);
            const BiPoly h = (t % 2) ? hp.u : hp.v; // solves the equation in (u, v)
            const APoly F = random_apoly(rng, alg, 1 + ((t / 2) % 3), -2, 2);
            const Theorem1Report rep = theorem1_residual(h, F, op, 1e-8);
            REQUIRE(rep.composition.passed);
            REQUIRE(rep.factorization.passed);
        }
    }

    SECTION("identity composition preserves the defect") {
        const OperatorParams op{0, 1};
        const Theorem1Report rep =
            theorem1_residual(BiPoly::monomial(2, 0, 1.0), APoly::z(AlgebraParams(0, 1)), op);
        REQUIRE_FALSE(rep.composition.passed);
        REQUIRE(rep.composition.residual == BiPoly::constant(2.0));
        REQUIRE(rep.factorization.passed);
    }

    SECTION("non-solution through the complex square") {
        const OperatorParams op{0, 1};
        const AlgebraParams alg(0, 1);
        const APoly F = APoly::monomial(alg, 2, HNum::one(alg));
        const Theorem1Report rep = theorem1_residual(BiPoly::monomial(2, 0, 1.0), F, op);
        REQUIRE(rep.composition.residual ==
                BiPoly::from_terms({{2, 0, 8.0}, {0, 2, 8.0}}));
        REQUIRE(rep.factorization.passed);
    }

    SECTION("factorization holds for arbitrary h") {
        SplitMix64 rng(60003);
        for (int t = 0; t < 100; ++t) {
            const OperatorParams op = random_operator(rng);
            const AlgebraParams alg = algebra_from_operator(op);
            const BiPoly h = random_bipoly(rng, 4, -2, 2);
            const APoly F = random_apoly(rng, alg, 1 + (t % 3), -2, 2);
            REQUIRE(theorem1_residual(h, F, op, 1e-8).factorization.passed);
        }
    }
}

TEST_CASE("conjugate-product solutions of the squared equation", "[theorem2]") {
    SECTION("constant f degenerates to a first-order solution") {
        const OperatorParams op{1, 1};
        const AlgebraParams alg(1, 1);
        REQUIRE(goursat_solution(APoly::constant(HNum::one(alg)), APoly::zero(alg), op) ==
                BiPoly::monomial(0, 1, -1.0));
    }

    SECTION("strict second-order instance reproduces exactly") {
        const OperatorParams op{1, 1};
        const AlgebraParams alg(1, 1);
        const BiPoly h = goursat_solution(APoly::z(alg), APoly::zero(alg), op);
        REQUIRE(h == BiPoly::monomial(0, 2, 1.0));
        REQUIRE(gamma_apply(op, h) == BiPoly::constant(2.0)); // not a first-order solution
        REQUIRE(gamma_apply(op, gamma_apply(op, h)) == BiPoly::zero());
        REQUIRE(theorem2_residual(APoly::z(alg), APoly::zero(alg), op).passed);
    }

    SECTION("classical biharmonic instance reproduces exactly") {
        const OperatorParams op{0, 1};
        const AlgebraParams alg(0, 1);
        const APoly jz = APoly::monomial(alg, 1, HNum::j(alg));
        REQUIRE(goursat_solution(jz, APoly::zero(alg), op) ==
                BiPoly::from_terms({{2, 0, 1.0}, {0, 2, 1.0}}));
    }

    SECTION("zero f reduces to the second component of g") {
        const OperatorParams op{-0.5, 2};
        const AlgebraParams alg = algebra_from_operator(op);
        SplitMix64 rng(60004);
        const APoly g = random_apoly(rng, alg, 4, -3, 3);
        const BiPoly h = goursat_solution(APoly::zero(alg), g, op);
        REQUIRE(h == expand(g).v);
        REQUIRE(is_zero(gamma_apply(op, h), 1e-9, scale_or_one(h.max_abs_coeff())));
    }

    SECTION("quantified over random pairs") {
        SplitMix64 rng(60005);
        for (int t = 0; t < 100; ++t) {
            const OperatorParams op = random_operator(rng);
            const AlgebraParams alg = algebra_from_operator(op);
            const APoly f = random_apoly(rng, alg, 1 + (t % 5), -5, 5);
            const APoly g = random_apoly(rng, alg, 1 + ((t / 2) % 5), -5, 5);
            REQUIRE(theorem2_residual(f, g, op, 1e-8).passed);
        }
    }
}

TEST_CASE("real-component variant is empirically a squared-equation solution",
          "[theorem2][experimental]") {
    // Not covered by the representation statement; observed to hold.
    SplitMix64 rng(60006);
    for (int t = 0; t < 50; ++t) {
        const OperatorParams op = random_operator(rng);
        const AlgebraParams alg = algebra_from_operator(op);
        const APoly f = random_apoly(rng, alg, 1 + (t % 4), -3, 3);
        const APoly g = random_apoly(rng, alg, 1 + (t % 3), -3, 3);
        const BiPoly h = goursat_solution_re(f, g, op);
        const BiPoly r = gamma_apply(op, gamma_apply(op, h));
        REQUIRE(is_zero(r, 1e-8, scale_or_one(h.max_abs_coeff())));
    }
}

TEST_CASE("finite-difference stencil oracle", "[fd]") {
    SECTION("exact on low-degree solutions up to roundoff") {
        SplitMix64 rng(60007);
        const BiPoly u = BiPoly::from_terms({{2, 0, 1.0}, {0, 2, -1.0}});
        const ResidualReport rep =
            fd_residual([&](double x, double y) { return u(x, y); }, {0, 1},
                        {1e-3, FDOrder::Gamma}, random_points(rng, 25), 1e-8);
        REQUIRE(rep.passed);
    }

    SECTION("flags a non-solution with the expected magnitude") {
        const BiPoly x4 = BiPoly::monomial(4, 0, 1.0);
        const ResidualReport rep =
            fd_residual([&](double x, double y) { return x4(x, y); }, {0, 1},
                        {1e-3, FDOrder::Gamma}, {{1.0, 0.0}});
        REQUIRE_FALSE(rep.passed);
        REQUIRE(std::abs(rep.max_abs - 12.0) <= 1e-5);
    }

    SECTION("cross-checks the symbolic squared-equation path") {
        SplitMix64 rng(60008);
        const OperatorParams op{1, 1};
        const AlgebraParams alg(1, 1);
        const APoly f = random_apoly(rng, alg, 3, -2, 2);
        const APoly g = random_apoly(rng, alg, 3, -2, 2);
        const BiPoly h = goursat_solution(f, g, op);
        const ResidualReport rep =
            fd_residual([&](double x, double y) { return h(x, y); }, op,
                        {1e-2, FDOrder::GammaSquared}, random_points(rng, 25));
        REQUIRE(rep.passed);
    }

    SECTION("defaults and validation") {
        REQUIRE(FDScheme::default_step(FDOrder::Gamma) == 1e-3);
        REQUIRE(FDScheme::default_step(FDOrder::GammaSquared) == 1e-2);
        REQUIRE(FDScheme::default_tolerance(FDOrder::Gamma) == 1e-4);
        REQUIRE(FDScheme::default_tolerance(FDOrder::GammaSquared) == 1e-3);
        REQUIRE_THROWS_AS(fd_residual([](double, double) { return 0.0; }, {0, 1},
                                      {0.0, FDOrder::Gamma}, {{0, 0}}),
                          std::invalid_argument);
    }

    SECTION("oracle agrees with symbolically generated solutions") {
        SplitMix64 rng(60009);
        for (int t = 0; t < 20; ++t) {
            const OperatorParams op{rng.uniform(-2, 2), rng.signed_uniform(0.5, 2)};
            const AlgebraParams alg = algebra_from_operator(op);
            const ComponentPair p = expand(random_apoly(rng, alg, 4, -2, 2));
            const BiPoly sol = (t % 2) ? p.u : p.v;
            const auto pts = random_points(rng, 25);
            REQUIRE(fd_residual([&](double x, double y) { return sol(x, y); }, op,
                                {1e-3, FDOrder::Gamma}, pts)
                        .passed);

            const BiPoly h = goursat_solution(random_apoly(rng, alg, 4, -2, 2),
                                              random_apoly(rng, alg, 4, -2, 2), op);
            REQUIRE(fd_residual([&](double x, double y) { return h(x, y); }, op,
                                {1e-2, FDOrder::GammaSquared}, pts)
                        .passed);
        }
    }
}
