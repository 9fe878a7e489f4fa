#pragma once

#include <optional>

#include "valfield/matrix.hpp"

namespace valfield {

/**
 * Polyhedron over K in matrix form
 *
 *     { x in K^n : A x + v >= 0,  B x + w = 0 }
 *
 * where z >= 0 means every coordinate of z is integral. Either block may
 * have zero rows; with both empty the polyhedron is all of K^n.
 */
struct Polyhedron {
    Polyhedron(Matrix a, Vec v, Matrix b, Vec w);
    /// Inequality-only polyhedron.
    Polyhedron(Matrix a, Vec v);

    static Polyhedron whole_space(const Field& field, std::size_t n);
    /// O_K^n.
    static Polyhedron unit_polydisc(const Field& field, std::size_t n);
    /// The canonical empty polyhedron: a single row 0*x + pi^-1 >= 0.
    static Polyhedron empty(const Field& field, std::size_t n);

    const Field& field() const { return A.field(); }
    std::size_t dim() const { return n; }
    bool has_equalities() const { return B.rows() > 0; }

    std::size_t n;
    Matrix A;
    Vec v;
    Matrix B;
    Vec w;
};

/// x -> F x + g.
struct AffineMap {
    AffineMap(Matrix f, Vec g);
    static AffineMap linear(Matrix f);

    std::size_t source_dim() const { return F.cols(); }
    std::size_t target_dim() const { return F.rows(); }
    Vec operator()(const Vec& x) const;

    Matrix F;
    Vec g;
};

/// Closed ball {x : val(x - center) >= radius} in K, or the empty set, or K.
class Ball {
public:
    enum class Kind { Empty, All, Disc };

    static Ball empty_set(const Field& field);
    static Ball whole_line(const Field& field);
    /// radius = infinity gives the singleton {center}.
    static Ball disc(Scalar center, ExtValuation radius);

    Kind kind() const { return kind_; }
    const Scalar& center() const { return center_; }
    ExtValuation radius() const { return radius_; }

    bool contains(const Scalar& x) const;
    /// Set equality (balls with different centers may coincide).
    bool same_set(const Ball& o) const;

private:
    Ball(Kind kind, Scalar center, ExtValuation radius)
        : kind_(kind), center_(std::move(center)), radius_(radius) {}
    Kind kind_;
    Scalar center_;
    ExtValuation radius_;
};

/**
 * A nonempty polyhedron written as base + map * D where D is the polydisc
 * { z in K^R : val(scale_i * z_i + shift_i) >= 0 }. A coordinate with
 * scale_i = 0 is unconstrained (shift_i is then 0).
 */
struct PolydiscImage {
    Vec base;
    Matrix map;
    Vec scale;
    Vec shift;

    std::size_t disc_dim() const { return scale.size(); }
    bool is_free(std::size_t i) const { return scale[i].is_zero(); }
    bool disc_contains(const Vec& z) const;
    /// The center of coordinate i (zero for free coordinates).
    Scalar center(std::size_t i) const;
    Vec point(const Vec& z) const;
    /// True iff x = base + map z for some z in the disc.
    bool image_contains(const Vec& x) const;
};

/// Throws DimensionMismatch.
bool contains(const Polyhedron& p, const Vec& x);
/// A point of P, or nullopt when P is empty.
std::optional<Vec> witness_point(const Polyhedron& p);
bool is_empty(const Polyhedron& p);

/// Constraint blocks concatenated.
Polyhedron intersect(const Polyhedron& a, const Polyhedron& b);
/// {z : z - h in P}.
Polyhedron translate(const Polyhedron& p, const Vec& h);
/// U(P) = {y : U^-1 y in P} for invertible U.
Polyhedron apply_automorphism(const Polyhedron& p, const Matrix& u);

/**
 * Image of an inequality-only nonempty polyhedron in K^k under the
 * projection dropping the last coordinate. The result is inequality-only.
 */
Polyhedron project_last_coordinate(const Polyhedron& p);

/// f(P). Empty input maps to Polyhedron::empty.
Polyhedron direct_image(const AffineMap& f, const Polyhedron& p);

/// {s + t : s in P1, t in P2}.
Polyhedron minkowski_sum(const Polyhedron& p1, const Polyhedron& p2);

/// Throws EmptyPolyhedron.
PolydiscImage as_polydisc_image(const Polyhedron& p);

/// Exact ball form of a polyhedron in K^1.
Ball canonical_ball_form(const Polyhedron& p);

/// Drops rows that hold for every x (zero rows with integral or zero constant).
Polyhedron drop_trivial_rows(const Polyhedron& p);

} // namespace valfield
