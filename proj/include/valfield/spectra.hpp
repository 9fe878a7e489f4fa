#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "valfield/matrix.hpp"
#include "valfield/mpoly.hpp"
#include "valfield/polyhedron.hpp"

namespace valfield {

/// M is positive semidefinite iff every eigenvalue has nonnegative valuation,
/// iff its characteristic polynomial has integral coefficients. Throws NonSquare.
bool is_psd(const Matrix& m);

/// Same decision read off the Newton polygon of the characteristic
/// polynomial: PSD iff no slope is positive. Throws NonSquare.
bool psd_newton_crosscheck(const Matrix& m);

/// Affine pencil A_0 + x_1 A_1 + ... + x_n A_n of d x d matrices (not
/// necessarily symmetric).
class Pencil {
public:
    /// `matrices` holds A_0..A_n; all must be d x d over one field.
    Pencil(Field field, std::size_t d, std::vector<Matrix> matrices);

    const Field& field() const { return field_; }
    std::size_t degree() const { return d_; }
    std::size_t num_vars() const { return mats_.size() - 1; }
    const std::vector<Matrix>& matrices() const { return mats_; }

    /// A_0 + sum x_i A_i. Throws DimensionMismatch.
    Matrix evaluate(const Vec& x) const;

    /// diag(l_1(x), ..., l_d(x)) for the inequality rows of a polyhedron.
    static Pencil diagonal(const Polyhedron& p);
    static Pencil block_diagonal(const std::vector<Pencil>& blocks);

private:
    Field field_;
    std::size_t d_;
    std::vector<Matrix> mats_;
};

/// Equality constraints B x + w = 0 cutting a spectrahedron.
struct AffineSection {
    Matrix B;
    Vec w;
};

/// x satisfies the section (if any) and the pencil at x is PSD.
bool spectrahedron_contains(const Pencil& s, const Vec& x, const std::optional<AffineSection>& section = std::nullopt);

/// The d non-leading coefficients p_0..p_{d-1} of the characteristic
/// polynomial of the pencil, as polynomials in x. The spectrahedron is
/// the intersection of the sets val(p_i(x)) >= 0.
std::vector<MPoly> semialgebraic_description(const Pencil& s);

/// {x in K : lower <= val(x) <= upper}, 1 <= lower <= upper.
struct Annulus {
    Annulus(std::int64_t lower, std::int64_t upper);
    bool contains(const Scalar& x) const;

    std::int64_t lower;
    std::int64_t upper;
};

/// Semidefinite representation: x in the set iff some y makes the pencil
/// in the variables (x, y) PSD. Variables are ordered x_1..x_n, y_1..y_m.
struct SdRepresentation {
    Pencil pencil;
    std::size_t dim;     ///< n
    std::size_t height;  ///< m

    std::size_t degree() const { return pencil.degree(); }
    bool holds(const Vec& x, const Vec& y) const;
};

/// Height 1, degree 4 representation of the annulus
///   diag(pi^-a x, pi^b y, [[pi^-1, -pi^-1 x], [pi^-1 y, -pi^-1]]).
/// Throws InvalidBounds unless 1 <= a <= b.
SdRepresentation annulus_sdr(const Field& field, std::int64_t a, std::int64_t b);

/// Block-diagonal assembly: height n, degree 4n.
SdRepresentation polyannulus_sdr(const Field& field, const std::vector<Annulus>& annuli);

/// Canonical witness y = x^-1 (coordinatewise; zero maps to zero).
Vec annulus_witness(const Vec& x);

/**
 * Sampling evidence that a subset of K is not a single ball: true iff every
 * candidate ball B(c, r) with c in `centers` and r in [r_min, r_max]
 * disagrees with `member` on at least one of `samples`.
 */
bool is_not_single_ball(const std::function<bool(const Scalar&)>& member, const Vec& centers, std::int64_t r_min,
                        std::int64_t r_max, const Vec& samples);

/// Annulus variant: centers are sampled annulus points, radii span
/// [a-2, b+2], and samples are u*pi^k for units u of `units` and
/// k in [a-3, b+3], plus 0.
bool annulus_is_not_ball_check(const Field& field, std::int64_t a, std::int64_t b, const Vec& units);

} // namespace valfield
