#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "polyrad/grid.hpp"

using namespace polyrad;

TEST_CASE("uniform grid matches the equispaced construction") {
    const auto g = build_grid(4, 1.0, 100, Grading::uniform());
    REQUIRE(g.size() == 100);
    CHECK(g.inner_cutoff() == Catch::Approx(0.01));
    CHECK(g.nodes.back() == 1.0);
    CHECK(g.node(49) == Catch::Approx(0.5));

    const auto h = build_grid(6, 0.5, 16, Grading::uniform());
    CHECK(h.nodes.back() == 0.5);
    CHECK(h.inner_cutoff() == Catch::Approx(0.03125));
}

TEST_CASE("geometric grid reaches eps = R q^n") {
    const auto g = build_grid(4, 1.0, 64, Grading::geometric(0.9));
    REQUIRE(g.size() == 65);
    CHECK(g.inner_cutoff() == Catch::Approx(std::pow(0.9, 64)));  // ~1.179e-3
    CHECK(g.nodes.back() == 1.0);
    // constant ratio within 1e-12 relative
    for (std::size_t i = 1; i + 1 < g.size(); ++i) {
        const double r0 = g.node(i) / g.node(i - 1);
        const double r1 = g.node(i + 1) / g.node(i);
        CHECK(std::abs(r1 / r0 - 1.0) < 1e-12);
    }
}

TEST_CASE("grid construction rejects bad arguments") {
    CHECK_THROWS_AS(build_grid(4, 1.0, 8, Grading::uniform()), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(4, 1.0, 64, Grading::geometric(1.1)), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(4, 1.0, 64, Grading::geometric(-0.5)), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(5, 1.0, 64, Grading::uniform()), std::invalid_argument);
    // fewer than 3 nodes per decade
    CHECK_THROWS_AS(build_grid(4, 1.0, 64, Grading::geometric(0.3)), std::invalid_argument);
}

TEST_CASE("doubling the step count never increases eps at fixed ratio") {
    const auto coarse = build_grid(4, 1.0, 32, Grading::geometric(0.9));
    const auto fine = build_grid(4, 1.0, 64, Grading::geometric(0.9));
    CHECK(fine.inner_cutoff() <= coarse.inner_cutoff());
}

TEST_CASE("bracket returns the enclosing node pair for random radii") {
    const auto gp = make_geometric_grid_to_eps(4, 1.0, 128, 1e-3);
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> unif(gp->inner_cutoff(), gp->radius);
    for (int t = 0; t < 200; ++t) {
        const double r = unif(rng);
        const auto [lo, hi] = gp->bracket(r);
        REQUIRE(hi == lo + 1);
        CHECK(gp->node(lo) <= r);
        CHECK(r <= gp->node(hi));
    }
    CHECK_THROWS_AS(gp->bracket(gp->inner_cutoff() / 2.0), std::invalid_argument);
}

TEST_CASE("eps-targeted geometric grid hits the requested cutoff") {
    const auto gp = make_geometric_grid_to_eps(4, 1.0, 512, 1e-3);
    REQUIRE(gp->size() == 512);
    CHECK(gp->inner_cutoff() == 1e-3);
    CHECK(gp->radius == 1.0);
}

TEST_CASE("restriction keeps a prefix and the grading descriptor") {
    const auto gp = make_geometric_grid_to_eps(4, 1.0, 256, 1e-3);
    const auto sub = restrict_to_radius(*gp, 0.35);
    CHECK(sub->radius <= 0.35);
    CHECK(sub->grading.kind == GradingKind::geometric);
    CHECK(sub->inner_cutoff() == gp->inner_cutoff());
    for (std::size_t i = 0; i < sub->size(); ++i) CHECK(sub->node(i) == gp->node(i));
}
