#include "doctest.h"

#include "support.hpp"
#include "valfield/errors.hpp"
#include "valfield/linprog.hpp"
#include "valfield/oracle.hpp"
#include "valfield/snf.hpp"

using namespace vt;

namespace {

void check_outcome_consistent(const LpInstance& in, const LpOutcome& out) {
    const Polyhedron feas = in.feasible_set();
    switch (out.status) {
    case LpStatus::Infeasible: CHECK(is_empty(feas)); break;
    case LpStatus::Feasible:
        CHECK(contains(feas, out.x));
        CHECK(in.objective(out.x).valuation() == out.value);
        break;
    case LpStatus::Unbounded: {
        CHECK(contains(feas, out.ray_base));
        const Scalar cr = dot(in.field(), in.c, out.ray);
        REQUIRE_FALSE(cr.is_zero());
        // base + alpha * ray with <c, x> = pi^-10 exactly
        const Scalar alpha = (power_of_uniformizer(in.field(), -10) - in.objective(out.ray_base)) / cr;
        const Vec x = out.ray_base + alpha * out.ray;
        CHECK(contains(feas, x));
        CHECK(in.objective(x).valuation() <= ExtValuation(-10));
        break;
    }
    }
}

} // namespace

TEST_CASE("lp examples") {
    const Field p2 = Field::padic(2);
    LpInstance inconsistent(Matrix(p2, 0, 1), Vec{}, V(p2, {"1"}), M(p2, {{"1"}, {"1"}}), V(p2, {"0", "1"}));
    auto o1 = solve_lp(inconsistent);
    CHECK(o1.status == LpStatus::Infeasible);
    CHECK(o1.reason == InfeasibleReason::InconsistentEqualities);

    auto o2 = solve_lp(LpInstance(M(p2, {{"0"}}), V(p2, {"1/2"}), V(p2, {"3"})));
    CHECK(o2.status == LpStatus::Infeasible);
    CHECK(o2.reason == InfeasibleReason::NonIntegralConstants);

    LpInstance ub(M(p2, {{"1", "0"}}), V(p2, {"0"}), V(p2, {"0", "1"}));
    auto o3 = solve_lp(ub);
    CHECK(o3.status == LpStatus::Unbounded);
    check_outcome_consistent(ub, o3);

    auto o4 = solve_lp(LpInstance(M(p2, {{"1"}}), V(p2, {"0"}), V(p2, {"1"})));
    REQUIRE(o4.status == LpStatus::Feasible);
    CHECK(o4.x == V(p2, {"1"}));
    CHECK(o4.value == ExtValuation(0));

    LpInstance boundary(M(p2, {{"2"}}), V(p2, {"1"}), V(p2, {"1"}));
    auto o5 = solve_lp(boundary);
    REQUIRE(o5.status == LpStatus::Feasible);
    CHECK(o5.value == ExtValuation(-1));
    CHECK(o5.x == V(p2, {"-1/2"}));
    CHECK(lp_sampled_optimum(boundary, SampleGrid::standard(p2, 4, -4, 4)) == ExtValuation(-1));
}

TEST_CASE("diagonal lp examples") {
    const Field p3 = Field::padic(3);
    auto zero = solve_diagonal_lp(Matrix(p3, 2, 2), V(p3, {"1", "3"}), V(p3, {"0", "0"}), Scalar(p3));
    REQUIRE(zero.status == LpStatus::Feasible);
    CHECK(zero.x == V(p3, {"0", "0"}));
    CHECK(zero.value == ExtValuation::infinity());

    auto whole = solve_diagonal_lp(Matrix::identity(p3, 2), V(p3, {"1/3", "0"}), V(p3, {"1", "1"}), Scalar(p3));
    REQUIRE(whole.status == LpStatus::Feasible);
    CHECK(whole.value == ExtValuation(-1));
    CHECK(whole.x == V(p3, {"-1/3", "0"}));
}

TEST_CASE("equality reduction and diagonalization") {
    const Field p5 = Field::padic(5);
    LpInstance plain(M(p5, {{"1", "2"}}), V(p5, {"0"}), V(p5, {"1", "1"}));
    auto id = reduce_equalities(plain);
    CHECK(id.j == Matrix::identity(p5, 2));
    CHECK(id.x0 == zero_vector(p5, 2));

    LpInstance one(Matrix::identity(p5, 2), V(p5, {"0", "0"}), V(p5, {"1", "1"}), M(p5, {{"1", "0"}}), V(p5, {"1"}));
    auto r = reduce_equalities(one);
    CHECK(r.x0 == V(p5, {"1", "0"}));
    REQUIRE(r.j.cols() == 1);
    CHECK(r.j(0, 0).is_zero());
    CHECK(r.reduced.offset == Scalar(p5, 1L));

    LpInstance bad(Matrix(p5, 0, 1), Vec{}, V(p5, {"1"}), M(p5, {{"0"}}), V(p5, {"1"}));
    CHECK_THROWS_AS(reduce_equalities(bad), InconsistentEqualities);

    auto dg = diagonalize_lp(LpInstance(M(p5, {{"0", "1"}, {"1", "0"}}), V(p5, {"1", "2"}), V(p5, {"3", "4"})));
    CHECK(dg.s == Matrix::identity(p5, 2));
}

TEST_CASE("property: lp outcomes are certified") {
    Gen g(81);
    int feasible = 0, unbounded = 0, infeasible = 0;
    for (int it = 0; it < 300; ++it) {
        const Field f = g.field();
        const std::size_t n = g.range(1, 3), d = g.range(1, 3), m = g.range(0, 1);
        LpInstance in(g.matrix(f, d, n, -2, 2, 30), g.vec(f, d, -2, 2, 30), g.vec(f, n, -2, 2, 30),
                      g.matrix(f, m, n, -1, 1, 30), g.vec(f, m, -1, 1, 30));
        CAPTURE(it);
        auto out = solve_lp(in);
        check_outcome_consistent(in, out);
        CHECK((out.status == LpStatus::Infeasible) == is_empty(in.feasible_set()));
        if (out.status == LpStatus::Feasible) {
            ++feasible;
            auto grid = SampleGrid::standard(f, 2, -6, 6, it);
            CHECK(lp_sampled_optimum(in, grid) == out.value);
        }
        unbounded += out.status == LpStatus::Unbounded;
        infeasible += out.status == LpStatus::Infeasible;
    }
    CHECK(feasible > 30);
    CHECK(unbounded > 10);
    CHECK(infeasible > 10);
}

TEST_CASE("property: invariance under unimodular rows and cost scaling") {
    Gen g(91);
    for (int it = 0; it < 150; ++it) {
        const Field f = g.field();
        const std::size_t n = g.range(1, 3), d = g.range(1, 3);
        LpInstance in(g.matrix(f, d, n, -2, 2, 25), g.vec(f, d, -2, 2, 25), g.vec(f, n, -2, 2, 25));
        auto base = solve_lp(in);
        Matrix u = g.unimodular(f, d);
        auto moved = solve_lp(LpInstance(u * in.A, u * in.b, in.c));
        CHECK(moved.status == base.status);
        if (base.status == LpStatus::Feasible) CHECK(moved.value == base.value);

        auto unit = solve_lp(LpInstance(in.A, in.b, g.unit(f) * in.c));
        auto shifted = solve_lp(LpInstance(in.A, in.b, uniformizer(f) * in.c));
        CHECK(unit.status == base.status);
        CHECK(shifted.status == base.status);
        if (base.status == LpStatus::Feasible) {
            CHECK(unit.value == base.value);
            CHECK(shifted.value == base.value + ExtValuation(1));
        }
    }
}

TEST_CASE("maximization") {
    const Field p2 = Field::padic(2);
    // x in -1/2 + (1/2)O: x = 0 is feasible, so the supremum is +inf.
    auto o = solve_lp(LpInstance(M(p2, {{"2"}}), V(p2, {"1"}), V(p2, {"1"}), Sense::Maximize));
    REQUIRE(o.status == LpStatus::Feasible);
    CHECK(o.value == ExtValuation::infinity());
    CHECK(o.x == V(p2, {"0"}));
    // x in 1/2 + 2O: val x = -1 everywhere.
    auto c = solve_lp(LpInstance(M(p2, {{"1/2"}}), V(p2, {"-1/4"}), V(p2, {"1"}), Sense::Maximize));
    REQUIRE(c.status == LpStatus::Feasible);
    CHECK(c.value == ExtValuation(-1));

    Gen g(101);
    for (int it = 0; it < 150; ++it) {
        const Field f = g.field();
        const std::size_t n = g.range(1, 3), d = g.range(1, 3);
        LpInstance in(g.matrix(f, d, n, -2, 2, 25), g.vec(f, d, -2, 2, 25), g.vec(f, n, -2, 2, 25), Sense::Maximize);
        auto out = solve_lp(in);
        CHECK(out.status != LpStatus::Unbounded);
        if (out.status != LpStatus::Feasible) continue;
        CHECK(contains(in.feasible_set(), out.x));
        CHECK(in.objective(out.x).valuation() == out.value);
        // no sampled feasible point beats it
        for (const auto& x : sample_polyhedron_points(in.feasible_set(), SampleGrid::standard(f, 2, -4, 4, it), 40))
            CHECK(in.objective(x).valuation() <= out.value);
    }
}
