#include "valfield/linprog.hpp"

#include "valfield/errors.hpp"
#include "valfield/snf.hpp"

namespace valfield {

LpInstance::LpInstance(Matrix a, Vec b_, Vec c_, Matrix d, Vec e_, Sense s)
    : A(std::move(a)), b(std::move(b_)), c(std::move(c_)), D(std::move(d)), e(std::move(e_)), sense(s),
      offset(A.field()) {
    if (!(A.field() == D.field())) throw FieldMismatch();
    if (b.size() != A.rows()) throw DimensionMismatch("b must have one entry per row of A");
    if (c.size() != A.cols()) throw DimensionMismatch("c must have one entry per column of A");
    if (D.cols() != A.cols()) throw DimensionMismatch("D and A must have the same number of columns");
    if (e.size() != D.rows()) throw DimensionMismatch("e must have one entry per row of D");
}

LpInstance::LpInstance(Matrix a, Vec b_, Vec c_, Sense s)
    : LpInstance(a, std::move(b_), std::move(c_), Matrix(a.field(), 0, a.cols()), Vec{}, s) {}

Polyhedron LpInstance::feasible_set() const { return Polyhedron(A, b, D, Scalar(field(), -1L) * e); }

Scalar LpInstance::objective(const Vec& x) const { return dot(field(), c, x) + offset; }

LpOutcome LpOutcome::infeasible(InfeasibleReason why) {
    LpOutcome o{LpStatus::Infeasible, {}, ExtValuation::infinity(), why, {}, {}, 0};
    return o;
}

LpOutcome LpOutcome::feasible(Vec x, ExtValuation value) {
    LpOutcome o{LpStatus::Feasible, std::move(x), value, InfeasibleReason::None, {}, {}, 0};
    return o;
}

LpOutcome LpOutcome::unbounded(Vec base, Vec ray, std::size_t index) {
    LpOutcome o{LpStatus::Unbounded, {}, ExtValuation::infinity(), InfeasibleReason::None,
                std::move(base), std::move(ray), index};
    return o;
}

EqualityReduction reduce_equalities(const LpInstance& in) {
    const Field& f = in.field();
    auto x0 = solve_affine(in.D, in.e);
    if (!x0) throw InconsistentEqualities();
    Matrix j = kernel_basis(in.D);
    const std::size_t dim = j.cols();
    LpInstance reduced(in.A * j, in.b + in.A * *x0, j.transpose() * in.c, Matrix(f, 0, dim), Vec{}, in.sense);
    reduced.offset = in.offset + dot(f, in.c, *x0);
    return EqualityReduction{std::move(reduced), std::move(*x0), std::move(j)};
}

Diagonalization diagonalize_lp(const LpInstance& in) {
    if (in.D.rows() > 0) throw std::logic_error("diagonalize_lp expects an instance without equalities");
    auto snf = smith_normal_form(in.A);
    Vec b = snf.q * in.b;
    Vec c = snf.p_inv.transpose() * in.c;
    return Diagonalization{std::move(snf.s), std::move(b), std::move(c), std::move(snf.p_inv)};
}

LpOutcome solve_diagonal_lp(const Matrix& s, const Vec& b, const Vec& c, const Scalar& offset, Sense sense) {
    const Field& f = s.field();
    const std::size_t d = s.rows();
    const std::size_t n = s.cols();
    if (b.size() != d || c.size() != n) throw DimensionMismatch("diagonal LP data has wrong shape");
    std::size_t r = 0;
    while (r < std::min(d, n) && !s(r, r).is_zero()) ++r;

    for (std::size_t i = r; i < d; ++i)
        if (!b[i].is_integral()) return LpOutcome::infeasible(InfeasibleReason::NonIntegralConstants);

    // Feasible set: y_i in (-b_i + O_K) / s_i for i < r, y_i free otherwise.
    Vec center = zero_vector(f, n);
    for (std::size_t i = 0; i < r; ++i) center[i] = -(b[i] / s(i, i));
    // Image of the feasible set under the objective: lambda + pi^v O_K.
    Scalar lambda = offset;
    ExtValuation v = ExtValuation::infinity();
    for (std::size_t i = 0; i < r; ++i) {
        lambda += c[i] * center[i];
        v = min(v, (c[i] / s(i, i)).valuation());
    }
    std::size_t free = r;
    while (free < n && c[free].is_zero()) ++free;
    std::size_t attain = 0;
    while (attain < r && (c[attain] / s(attain, attain)).valuation() != v) ++attain;
    const ExtValuation val_lambda = lambda.valuation();

    if (sense == Sense::Minimize) {
        if (free < n) {
            Vec ray = zero_vector(f, n);
            ray[free] = Scalar(f, 1L);
            return LpOutcome::unbounded(std::move(center), std::move(ray), free);
        }
        if (val_lambda < v || v.is_infinite() || val_lambda == v) return LpOutcome::feasible(center, min(val_lambda, v));
        // val(lambda) > v: move along coordinate `attain` by one unit of s_j y_j.
        Vec y = center;
        y[attain] += s(attain, attain).inverse();
        return LpOutcome::feasible(std::move(y), v);
    }

    // Maximization: the objective can be made zero unless it is constant in valuation.
    if (free < n) {
        Vec y = center;
        y[free] -= lambda / c[free];
        return LpOutcome::feasible(std::move(y), ExtValuation::infinity());
    }
    if (val_lambda < v) return LpOutcome::feasible(center, val_lambda);
    if (lambda.is_zero()) return LpOutcome::feasible(center, ExtValuation::infinity());
    Vec y = center;
    y[attain] -= lambda / c[attain];
    return LpOutcome::feasible(std::move(y), ExtValuation::infinity());
}

LpOutcome solve_lp(const LpInstance& in) {
    if (in.D.rows() > 0) {
        if (!solve_affine(in.D, in.e)) return LpOutcome::infeasible(InfeasibleReason::InconsistentEqualities);
        if (!in.D.is_zero()) {
            EqualityReduction red = reduce_equalities(in);
            LpOutcome out = solve_lp(red.reduced);
            if (out.status == LpStatus::Feasible) out.x = red.lift(out.x);
            if (out.status == LpStatus::Unbounded) {
                out.ray_base = red.lift(out.ray_base);
                out.ray = red.j * out.ray;
            }
            return out;
        }
    }
    LpInstance plain(in.A, in.b, in.c, in.sense);
    plain.offset = in.offset;
    Diagonalization diag = diagonalize_lp(plain);
    LpOutcome out = solve_diagonal_lp(diag.s, diag.b, diag.c, in.offset, in.sense);
    if (out.status == LpStatus::Feasible) out.x = diag.lift(out.x);
    if (out.status == LpStatus::Unbounded) {
        out.ray_base = diag.lift(out.ray_base);
        out.ray = diag.lift(out.ray);
    }
    return out;
}

} // namespace valfield
