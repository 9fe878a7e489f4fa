#pragma once

#include <optional>

#include "valfield/matrix.hpp"
#include "valfield/polyhedron.hpp"

namespace valfield {

enum class Sense { Minimize, Maximize };

/**
 * Linear program over K:
 *
 *     optimize  val(<c, x> + offset)   s.t.  A x + b >= 0,  D x = e
 *
 * `offset` is zero for user instances; it carries the constant <c, x0>
 * picked up when the equality block is eliminated.
 */
struct LpInstance {
    LpInstance(Matrix a, Vec b, Vec c, Matrix d, Vec e, Sense sense = Sense::Minimize);
    /// Instance without equality constraints.
    LpInstance(Matrix a, Vec b, Vec c, Sense sense = Sense::Minimize);

    const Field& field() const { return A.field(); }
    std::size_t num_vars() const { return A.cols(); }
    /// {x : A x + b >= 0, D x - e = 0}.
    Polyhedron feasible_set() const;
    Scalar objective(const Vec& x) const;

    Matrix A;
    Vec b;
    Vec c;
    Matrix D;
    Vec e;
    Sense sense;
    Scalar offset;
};

enum class LpStatus { Infeasible, Unbounded, Feasible };

enum class InfeasibleReason { None, InconsistentEqualities, NonIntegralConstants };

struct LpOutcome {
    LpStatus status;
    /// Feasible: an optimal point.
    Vec x;
    /// Feasible: the optimal valuation val(<c, x>).
    ExtValuation value = ExtValuation::infinity();
    InfeasibleReason reason = InfeasibleReason::None;
    /// Unbounded: a feasible point and a direction with <c, ray> != 0 such that
    /// point + alpha * ray is feasible for every alpha in K.
    Vec ray_base;
    Vec ray;
    /// Unbounded: index of the free coordinate of the diagonal problem.
    std::size_t ray_index = 0;

    static LpOutcome infeasible(InfeasibleReason why);
    static LpOutcome feasible(Vec x, ExtValuation value);
    static LpOutcome unbounded(Vec base, Vec ray, std::size_t index);
};

/// The SNF-based solver: eliminate equalities, diagonalize, read off the optimum.
LpOutcome solve_lp(const LpInstance& instance);

/// Reduced instance over K^R with x = x0 + J y.
struct EqualityReduction {
    LpInstance reduced;
    Vec x0;
    Matrix j;

    Vec lift(const Vec& y) const { return x0 + j * y; }
};

/// Throws InconsistentEqualities.
EqualityReduction reduce_equalities(const LpInstance& instance);

/// Diagonal instance (S, Q b, P^-T c) with x = P^-1 y.
struct Diagonalization {
    Matrix s;
    Vec b;
    Vec c;
    Matrix p_inv;

    Vec lift(const Vec& y) const { return p_inv * y; }
};

/// Requires an instance without equality rows.
Diagonalization diagonalize_lp(const LpInstance& instance);

/// Closed-form solution of a diagonal instance; s must be in Smith form.
LpOutcome solve_diagonal_lp(const Matrix& s, const Vec& b, const Vec& c, const Scalar& offset,
                            Sense sense = Sense::Minimize);

} // namespace valfield
