#include "doctest.h"

#include "support.hpp"
#include "valfield/errors.hpp"
#include "valfield/oracle.hpp"

using namespace vt;

namespace {

Polyhedron ball_poly(const Scalar& c, std::int64_t r) {
    // val(x - c) >= r  <=>  pi^-r x - pi^-r c integral
    const Field& f = c.field();
    Scalar s = power_of_uniformizer(f, -r);
    return Polyhedron(Matrix::from_rows(f, {{s}}, 1), Vec{-(s * c)});
}

Polyhedron random_polyhedron(Gen& g, const Field& f, std::size_t n, std::size_t rows) {
    return Polyhedron(g.matrix(f, rows, n, -2, 2, 25), g.vec(f, rows, -2, 2, 25));
}

} // namespace

TEST_CASE("contains examples") {
    const Field p3 = Field::padic(3);
    auto disc = Polyhedron::unit_polydisc(p3, 2);
    CHECK_FALSE(contains(disc, V(p3, {"1", "1/3"})));
    CHECK(contains(disc, V(p3, {"0", "3"})));
    Polyhedron cut(Matrix::identity(p3, 2), zero_vector(p3, 2), M(p3, {{"1", "0"}}), V(p3, {"0"}));
    CHECK(contains(cut, V(p3, {"0", "3"})));
    CHECK_FALSE(contains(cut, V(p3, {"3", "0"})));
    CHECK_THROWS_AS(contains(disc, V(p3, {"1"})), DimensionMismatch);
    CHECK(contains(Polyhedron::whole_space(p3, 2), V(p3, {"1/27", "5"})));
    CHECK(is_empty(Polyhedron::empty(p3, 2)));
}

TEST_CASE("emptiness examples") {
    for (const Field& f : {Field::padic(2), Field::padic(5), Field::laurent()}) {
        const Scalar ip = power_of_uniformizer(f, -1);
        Polyhedron p(Matrix::identity(f, 1), Vec{ip});
        auto w = witness_point(p);
        REQUIRE(w.has_value());
        CHECK(contains(p, *w));
        CHECK((*w)[0] == -ip);

        Polyhedron eq(Matrix(f, 0, 1), Vec{}, Matrix::from_rows(f, {{Scalar(f, 1L)}, {Scalar(f, 1L)}}, 1),
                      Vec{Scalar(f), Scalar(f, -1L)});
        CHECK(is_empty(eq));

        // val(x) >= 0 and val(x - 1/pi) >= 0 are disjoint balls.
        Polyhedron two(Matrix::from_rows(f, {{Scalar(f, 1L)}, {Scalar(f, 1L)}}, 1), Vec{Scalar(f), -ip});
        CHECK(is_empty(two));
        CHECK(canonical_ball_form(two).kind() == Ball::Kind::Empty);
    }
}

TEST_CASE("property: witness points and emptiness agree with sampling") {
    Gen g(21);
    for (int it = 0; it < 200; ++it) {
        const Field f = g.field();
        const std::size_t n = g.range(1, 3);
        const std::size_t d = g.range(0, 4), e = g.range(0, 1);
        Polyhedron p(g.matrix(f, d, n, -2, 2, 30), g.vec(f, d, -2, 2, 30), g.matrix(f, e, n, -1, 1, 30),
                     g.vec(f, e, -1, 1, 30));
        auto w = witness_point(p);
        if (w) {
            CHECK(contains(p, *w));
        } else {
            auto grid = SampleGrid::standard(f, 2, -3, 3, it);
            for (const auto& x : sample_vectors(grid, n, 100)) CHECK_FALSE(contains(p, x));
        }
    }
}

TEST_CASE("direct image examples") {
    const Field p2 = Field::padic(2);
    auto proj = AffineMap::linear(M(p2, {{"1", "0"}}));
    auto img = direct_image(proj, Polyhedron::unit_polydisc(p2, 2));
    CHECK(canonical_ball_form(img).same_set(Ball::disc(Scalar(p2), 0)));

    // translation
    Gen g(4);
    Polyhedron p = random_polyhedron(g, p2, 2, 3);
    while (is_empty(p)) p = random_polyhedron(g, p2, 2, 3);
    Vec h = V(p2, {"1/2", "3"});
    auto shifted = direct_image(AffineMap(Matrix::identity(p2, 2), h), p);
    auto grid = SampleGrid::standard(p2, 3, -4, 4, 1);
    for (const auto& x : sample_vectors(grid, 2, 300)) CHECK(contains(p, x) == contains(shifted, x + h));

    // val(x1 + x2/2) >= 0, val(x2 + 1) >= 0 projected to x1: 1/2 + (1/2)O = B(0, -1)
    Polyhedron q(M(p2, {{"1", "1/2"}, {"0", "1"}}), V(p2, {"0", "1"}));
    auto qi = direct_image(proj, q);
    CHECK(canonical_ball_form(qi).same_set(Ball::disc(S(p2, "1/2"), -1)));
    auto rep = check_direct_image(proj, q, qi, grid, 200);
    CHECK(rep.forward_checked == 200);
    CHECK(rep.ok());

    // Empty input maps to empty output.
    CHECK(is_empty(direct_image(proj, Polyhedron::empty(p2, 2))));
    CHECK_THROWS_AS(direct_image(proj, Polyhedron::unit_polydisc(p2, 3)), DimensionMismatch);
}

TEST_CASE("property: projections and affine images") {
    Gen g(31);
    int nonempty = 0;
    for (int it = 0; it < 60; ++it) {
        const Field f = g.field();
        const std::size_t n = g.range(1, 3);
        Polyhedron p = random_polyhedron(g, f, n, g.range(1, 4));
        if (g.chance(30)) {
            p.B = g.matrix(f, 1, n, -1, 1, 20);
            p.w = g.vec(f, 1, -1, 1, 20);
        }
        const std::size_t m = g.range(1, 3);
        AffineMap fmap(g.matrix(f, m, n, -2, 2, 35), g.vec(f, m, -2, 2, 35));
        CAPTURE(f.describe());
        CAPTURE(it);
        auto img = direct_image(fmap, p);
        auto rep = check_direct_image(fmap, p, img, SampleGrid::standard(f, 2, -4, 4, it), 60);
        CHECK(rep.forward_violations == 0);
        CHECK(rep.backward_violations == 0);
        CHECK(is_empty(p) == is_empty(img));
        nonempty += !is_empty(p);
    }
    CHECK(nonempty > 20);
}

TEST_CASE("property: automorphism invariance and intersection closure") {
    Gen g(41);
    for (int it = 0; it < 60; ++it) {
        const Field f = g.field();
        const std::size_t n = g.range(1, 3);
        Polyhedron p = random_polyhedron(g, f, n, 3), q = random_polyhedron(g, f, n, 2);
        Matrix u = g.unimodular(f, n);
        auto up = apply_automorphism(p, u);
        auto pq = intersect(p, q);
        for (const auto& x : sample_vectors(SampleGrid::standard(f, 2, -3, 3, it), n, 40)) {
            CHECK(contains(p, x) == contains(up, u * x));
            CHECK(contains(pq, x) == (contains(p, x) && contains(q, x)));
        }
    }
}

TEST_CASE("polydisc images") {
    const Field p5 = Field::padic(5);
    auto unit = as_polydisc_image(Polyhedron::unit_polydisc(p5, 3));
    CHECK(unit.disc_dim() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK_FALSE(unit.is_free(i));

    Polyhedron line(Matrix(p5, 0, 2), Vec{}, M(p5, {{"1", "0"}}), V(p5, {"-7"}));
    auto li = as_polydisc_image(line);
    CHECK(li.base == V(p5, {"7", "0"}));
    REQUIRE(li.disc_dim() == 1);
    CHECK(li.is_free(0));
    CHECK(li.map(0, 0).is_zero());
    CHECK_THROWS_AS(as_polydisc_image(Polyhedron::empty(p5, 2)), EmptyPolyhedron);

    Gen g(51);
    for (int it = 0; it < 40; ++it) {
        const Field f = g.field();
        Polyhedron p = random_polyhedron(g, f, 2, 3);
        if (is_empty(p)) continue;
        auto img = as_polydisc_image(p);
        auto grid = SampleGrid::standard(f, 2, -3, 3, it);
        for (const auto& x : sample_polyhedron_points(p, grid, 50)) CHECK(contains(p, x));
        for (const auto& x : sample_vectors(grid, 2, 100)) CHECK(contains(p, x) == img.image_contains(x));
    }
}

TEST_CASE("canonical ball form") {
    const Field p3 = Field::padic(3);
    CHECK(canonical_ball_form(Polyhedron::unit_polydisc(p3, 1)).same_set(Ball::disc(Scalar(p3), 0)));
    Polyhedron two(M(p3, {{"3"}, {"1"}}), V(p3, {"0", "0"}));
    CHECK(canonical_ball_form(two).same_set(Ball::disc(Scalar(p3), 0)));
    CHECK(canonical_ball_form(Polyhedron::whole_space(p3, 1)).kind() == Ball::Kind::All);
    Polyhedron point(Matrix(p3, 0, 1), Vec{}, M(p3, {{"2"}}), V(p3, {"1"}));
    auto pb = canonical_ball_form(point);
    CHECK(pb.radius() == ExtValuation::infinity());
    CHECK(pb.contains(S(p3, "-1/2")));

    Gen g(61);
    for (int it = 0; it < 100; ++it) {
        const Field f = g.field();
        Polyhedron p = random_polyhedron(g, f, 1, g.range(1, 3));
        Ball b = canonical_ball_form(p);
        auto grid = SampleGrid::standard(f, 3, -5, 5, it);
        Vec xs = sample_scalars(grid);
        if (b.kind() == Ball::Kind::Disc) xs.push_back(b.center());
        for (const auto& x : xs) CHECK(b.contains(x) == contains(p, Vec{x}));
    }
}

TEST_CASE("minkowski sums") {
    const Field p3 = Field::padic(3);
    auto o = Polyhedron::unit_polydisc(p3, 1);
    CHECK(canonical_ball_form(minkowski_sum(o, o)).same_set(Ball::disc(Scalar(p3), 0)));

    auto sum = minkowski_sum(ball_poly(Scalar(p3), 1), ball_poly(Scalar(p3, 1L), 2));
    CHECK(canonical_ball_form(sum).same_set(Ball::disc(Scalar(p3, 1L), 1)));

    Gen g(71);
    Polyhedron p = random_polyhedron(g, p3, 2, 3);
    while (is_empty(p)) p = random_polyhedron(g, p3, 2, 3);
    Polyhedron zero(Matrix(p3, 0, 2), Vec{}, Matrix::identity(p3, 2), zero_vector(p3, 2));
    auto pz = minkowski_sum(p, zero);
    for (const auto& x : sample_vectors(SampleGrid::standard(p3, 2, -3, 3, 2), 2, 200))
        CHECK(contains(p, x) == contains(pz, x));
    CHECK_THROWS_AS(minkowski_sum(o, zero), DimensionMismatch);
}
