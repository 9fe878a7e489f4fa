#include "valfield/polyhedron.hpp"

#include <algorithm>

#include "valfield/errors.hpp"
#include "valfield/snf.hpp"

namespace valfield {

namespace {

void require_length(const Vec& v, std::size_t n, const char* what) {
    if (v.size() != n) throw DimensionMismatch(what);
}

Vec concat(const Vec& a, const Vec& b) {
    Vec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

// P = x0 + J P' with P' = {y : a_red y + v_red >= 0} in K^R, followed by the
// SNF of a_red: q a_red p_inv = s, so P' = p_inv {z : s z + q v_red >= 0}.
struct Reduction {
    bool nonempty = false;
    Vec x0;
    Matrix j;
    Matrix a_red;
    Vec v_red;
    std::optional<SnfDecomposition> snf;
    Vec shifted;  // q * v_red
};

Reduction reduce(const Polyhedron& p) {
    const Field& f = p.field();
    Reduction red{false, {}, Matrix(f, 0, 0), Matrix(f, 0, 0), {}, std::nullopt, {}};
    if (p.has_equalities()) {
        Vec rhs = Scalar(f, -1L) * p.w;
        auto sol = solve_affine(p.B, rhs);
        if (!sol) return red;
        red.x0 = *sol;
        red.j = kernel_basis(p.B);
    } else {
        red.x0 = zero_vector(f, p.n);
        red.j = Matrix::identity(f, p.n);
    }
    red.a_red = p.A * red.j;
    red.v_red = p.A * red.x0 + p.v;
    red.snf = smith_normal_form(red.a_red);
    red.shifted = red.snf->q * red.v_red;
    const std::size_t r = red.snf->rank();
    red.nonempty = true;
    for (std::size_t i = r; i < red.shifted.size(); ++i)
        if (!red.shifted[i].is_integral()) red.nonempty = false;
    return red;
}

// Image of a nonempty inequality-only polyhedron under a linear map L,
// following the factorization L = q_inv * Delta * p.
Polyhedron linear_image(const Matrix& l, const Polyhedron& src) {
    const Field& f = l.field();
    const std::size_t m = l.rows();
    auto snf = smith_normal_form(l);
    const std::size_t r = snf.rank();

    // u = p x: the polyhedron p(src), an automorphism image.
    Polyhedron u(src.A * snf.p_inv, src.v);

    // Drop coordinates R-1, ..., r one at a time.
    while (u.n > r) u = project_last_coordinate(u);

    // Diagonal scaling z_i = delta_i u_i.
    Matrix a = u.A;
    for (std::size_t i = 0; i < r; ++i) a.scale_col(i, snf.s(i, i).inverse());

    // Immersion K^r -> K^m: pad with zero columns and pin z_r..z_{m-1} to 0.
    Matrix a_imm(f, a.rows(), m);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < r; ++j) a_imm(i, j) = a(i, j);
    Matrix b_imm(f, m - r, m);
    for (std::size_t j = r; j < m; ++j) b_imm(j - r, j) = Scalar(f, 1L);

    // y = q_inv z, i.e. the constraints on z applied to q y.
    return Polyhedron(a_imm * snf.q, u.v, b_imm * snf.q, zero_vector(f, m - r));
}

struct Row {
    Vec coeffs;
    Scalar constant;
};

std::size_t argmin_valuation(const Vec& a, std::size_t first, std::size_t last, bool prefer_last) {
    std::size_t best = last;
    ExtValuation bv = ExtValuation::infinity();
    for (std::size_t i = first; i < last; ++i) {
        if (a[i].is_zero()) continue;
        ExtValuation v = a[i].valuation();
        if (v < bv || (prefer_last && v == bv)) {
            bv = v;
            best = i;
        }
    }
    return best;
}

} // namespace

Polyhedron::Polyhedron(Matrix a, Vec v_, Matrix b, Vec w_)
    : n(a.cols()), A(std::move(a)), v(std::move(v_)), B(std::move(b)), w(std::move(w_)) {
    if (B.cols() != n) throw DimensionMismatch("equality block has wrong number of columns");
    if (!(A.field() == B.field())) throw FieldMismatch();
    require_length(v, A.rows(), "inequality constant vector length mismatch");
    require_length(w, B.rows(), "equality constant vector length mismatch");
}

Polyhedron::Polyhedron(Matrix a, Vec v_)
    : Polyhedron(a, std::move(v_), Matrix(a.field(), 0, a.cols()), Vec{}) {}

Polyhedron Polyhedron::whole_space(const Field& field, std::size_t n) { return Polyhedron(Matrix(field, 0, n), {}); }

Polyhedron Polyhedron::unit_polydisc(const Field& field, std::size_t n) {
    return Polyhedron(Matrix::identity(field, n), zero_vector(field, n));
}

Polyhedron Polyhedron::empty(const Field& field, std::size_t n) {
    return Polyhedron(Matrix(field, 1, n), Vec{power_of_uniformizer(field, -1)});
}

AffineMap::AffineMap(Matrix f, Vec g_) : F(std::move(f)), g(std::move(g_)) {
    require_length(g, F.rows(), "affine offset length mismatch");
}

AffineMap AffineMap::linear(Matrix f) {
    Vec g = zero_vector(f.field(), f.rows());
    return AffineMap(std::move(f), std::move(g));
}

Vec AffineMap::operator()(const Vec& x) const { return F * x + g; }

Ball Ball::empty_set(const Field& field) { return Ball(Kind::Empty, Scalar(field), ExtValuation::infinity()); }
Ball Ball::whole_line(const Field& field) { return Ball(Kind::All, Scalar(field), ExtValuation::infinity()); }
Ball Ball::disc(Scalar center, ExtValuation radius) { return Ball(Kind::Disc, std::move(center), radius); }

bool Ball::contains(const Scalar& x) const {
    switch (kind_) {
    case Kind::Empty: return false;
    case Kind::All: return true;
    case Kind::Disc: return (x - center_).valuation() >= radius_;
    }
    return false;
}

bool Ball::same_set(const Ball& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ != Kind::Disc) return true;
    return radius_ == o.radius_ && (center_ - o.center_).valuation() >= radius_;
}

bool PolydiscImage::disc_contains(const Vec& z) const {
    require_length(z, disc_dim(), "disc point has wrong dimension");
    for (std::size_t i = 0; i < z.size(); ++i)
        if (!is_free(i) && !(scale[i] * z[i] + shift[i]).is_integral()) return false;
    return true;
}

Scalar PolydiscImage::center(std::size_t i) const {
    if (is_free(i)) return Scalar(scale[i].field());
    return -(shift[i] / scale[i]);
}

Vec PolydiscImage::point(const Vec& z) const { return base + map * z; }

bool PolydiscImage::image_contains(const Vec& x) const {
    require_length(x, base.size(), "point has wrong dimension");
    auto z = solve_affine(map, x - base);
    return z && disc_contains(*z);
}

bool contains(const Polyhedron& p, const Vec& x) {
    require_length(x, p.n, "point dimension does not match polyhedron");
    Vec ineq = p.A * x + p.v;
    for (const auto& s : ineq)
        if (!s.is_integral()) return false;
    Vec eq = p.B * x + p.w;
    for (const auto& s : eq)
        if (!s.is_zero()) return false;
    return true;
}

std::optional<Vec> witness_point(const Polyhedron& p) {
    Reduction red = reduce(p);
    if (!red.nonempty) return std::nullopt;
    const Field& f = p.field();
    const std::size_t r = red.snf->rank();
    Vec z = zero_vector(f, red.j.cols());
    for (std::size_t i = 0; i < r; ++i) z[i] = -(red.shifted[i] / red.snf->s(i, i));
    return red.x0 + red.j * (red.snf->p_inv * z);
}

bool is_empty(const Polyhedron& p) { return !reduce(p).nonempty; }

Polyhedron intersect(const Polyhedron& a, const Polyhedron& b) {
    if (a.n != b.n) throw DimensionMismatch("intersection of polyhedra in different dimensions");
    return Polyhedron(vstack(a.A, b.A), concat(a.v, b.v), vstack(a.B, b.B), concat(a.w, b.w));
}

Polyhedron translate(const Polyhedron& p, const Vec& h) {
    require_length(h, p.n, "translation vector has wrong dimension");
    return Polyhedron(p.A, p.v - p.A * h, p.B, p.w - p.B * h);
}

Polyhedron apply_automorphism(const Polyhedron& p, const Matrix& u) {
    if (!u.is_square() || u.rows() != p.n) throw DimensionMismatch("automorphism has wrong shape");
    Matrix u_inv = inverse(u);
    return Polyhedron(p.A * u_inv, p.v, p.B * u_inv, p.w);
}

Polyhedron project_last_coordinate(const Polyhedron& p) {
    if (p.has_equalities()) throw std::logic_error("projection expects an inequality-only polyhedron");
    if (p.n == 0) throw DimensionMismatch("cannot project a polyhedron in K^0");
    const Field& f = p.field();
    const std::size_t k = p.n - 1;
    const std::size_t d = p.A.rows();
    if (d == 0) return Polyhedron::whole_space(f, k);

    // q A' p_inv = s for the first k columns; x' = p y are the new coordinates.
    auto snf = smith_normal_form(p.A.columns(0, k));
    const std::size_t r = snf.rank();
    const Vec a = snf.q * p.A.col(k);
    const Vec vp = snf.q * p.v;

    // Rows s >= r only see the last coordinate: val(a_s x_n + vp_s) >= 0 is the
    // ball of center -vp_s/a_s and radius valuation -val(a_s). The smallest
    // one has the least val(a_s); ties go to the last row.
    const std::size_t ball = argmin_valuation(a, r, d, true);
    if (ball < d) {
        Scalar center = -(vp[ball] / a[ball]);
        for (std::size_t s = r; s < d; ++s)
            if (!(a[s] * center + vp[s]).is_integral()) return Polyhedron::empty(f, k);
    } else {
        for (std::size_t s = r; s < d; ++s)
            if (!vp[s].is_integral()) return Polyhedron::empty(f, k);
    }

    // Constraints in the scaled coordinates z_i = delta_i x'_i (i < r).
    std::vector<Row> rows;
    auto unit_row = [&](std::size_t i) {
        Vec c = zero_vector(f, k);
        c[i] = Scalar(f, 1L);
        return c;
    };
    if (ball < d) {
        // With w = a_ball x_n, the ball row reads val(w + vp_ball) >= 0.
        Vec rel(r, Scalar(f));
        for (std::size_t i = 0; i < r; ++i) rel[i] = a[i] / a[ball];
        const std::size_t piv = argmin_valuation(rel, 0, r, false);
        if (piv == r || rel[piv].is_integral()) {
            for (std::size_t i = 0; i < r; ++i) rows.push_back({unit_row(i), vp[i] - rel[i] * vp[ball]});
        } else {
            Scalar inv = rel[piv].inverse();
            Vec c = zero_vector(f, k);
            c[piv] = inv;
            rows.push_back({c, inv * vp[piv] - vp[ball]});
            for (std::size_t i = 0; i < r; ++i) {
                if (i == piv) continue;
                Scalar ratio = rel[i] * inv;
                Vec ci = unit_row(i);
                ci[piv] = -ratio;
                rows.push_back({ci, vp[i] - ratio * vp[piv]});
            }
        }
    } else {
        // x_n is unconstrained outside rows < r: solve it from the row whose
        // coefficient has least valuation and substitute into the others.
        const std::size_t piv = argmin_valuation(a, 0, r, false);
        for (std::size_t i = 0; i < r; ++i) {
            if (i == piv) continue;
            if (piv == r) {
                rows.push_back({unit_row(i), vp[i]});
                continue;
            }
            Scalar ratio = a[i] / a[piv];
            Vec ci = unit_row(i);
            ci[piv] = -ratio;
            rows.push_back({ci, vp[i] - ratio * vp[piv]});
        }
    }

    Matrix cz(f, rows.size(), k);
    Vec consts;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < k; ++j) cz(i, j) = rows[i].coeffs[j];
        consts.push_back(rows[i].constant);
    }
    for (std::size_t j = 0; j < r; ++j) cz.scale_col(j, snf.s(j, j));
    return Polyhedron(cz * snf.p, consts);
}

Polyhedron direct_image(const AffineMap& f, const Polyhedron& p) {
    if (f.source_dim() != p.n) throw DimensionMismatch("affine map source does not match polyhedron dimension");
    if (!(f.F.field() == p.field())) throw FieldMismatch();
    Reduction red = reduce(p);
    if (!red.nonempty) return Polyhedron::empty(p.field(), f.target_dim());

    // f restricted to x0 + ker B, then translated by f(x0).
    Matrix l = f.F * red.j;
    Vec h = f(red.x0);
    Polyhedron image = linear_image(l, Polyhedron(red.a_red, red.v_red));
    return drop_trivial_rows(translate(image, h));
}

Polyhedron minkowski_sum(const Polyhedron& p1, const Polyhedron& p2) {
    if (p1.n != p2.n) throw DimensionMismatch("Minkowski sum of polyhedra in different dimensions");
    const Field& f = p1.field();
    const std::size_t n = p1.n;
    Polyhedron product(block_diagonal(p1.A, p2.A), concat(p1.v, p2.v), block_diagonal(p1.B, p2.B),
                       concat(p1.w, p2.w));
    Matrix sum = hstack(Matrix::identity(f, n), Matrix::identity(f, n));
    return direct_image(AffineMap::linear(sum), product);
}

PolydiscImage as_polydisc_image(const Polyhedron& p) {
    Reduction red = reduce(p);
    if (!red.nonempty) throw EmptyPolyhedron();
    const Field& f = p.field();
    const std::size_t dim = red.j.cols();
    const std::size_t r = red.snf->rank();
    PolydiscImage out{red.x0, red.j * red.snf->p_inv, zero_vector(f, dim), zero_vector(f, dim)};
    for (std::size_t i = 0; i < r; ++i) {
        out.scale[i] = red.snf->s(i, i);
        out.shift[i] = red.shifted[i];
    }
    return out;
}

Ball canonical_ball_form(const Polyhedron& p) {
    if (p.n != 1) throw DimensionMismatch("ball form requires a polyhedron in K^1");
    const Field& f = p.field();
    if (is_empty(p)) return Ball::empty_set(f);
    PolydiscImage img = as_polydisc_image(p);
    Scalar center = img.base[0];
    ExtValuation radius = ExtValuation::infinity();
    for (std::size_t i = 0; i < img.disc_dim(); ++i) {
        const Scalar& coef = img.map(0, i);
        if (coef.is_zero()) continue;
        if (img.is_free(i)) return Ball::whole_line(f);
        center += coef * img.center(i);
        radius = min(radius, ExtValuation(coef.valuation().value() - img.scale[i].valuation().value()));
    }
    return Ball::disc(center, radius);
}

Polyhedron drop_trivial_rows(const Polyhedron& p) {
    const Field& f = p.field();
    std::vector<Vec> a_rows, b_rows;
    Vec v, w;
    for (std::size_t i = 0; i < p.A.rows(); ++i) {
        Vec row = p.A.row(i);
        bool zero = std::all_of(row.begin(), row.end(), [](const Scalar& s) { return s.is_zero(); });
        if (zero && p.v[i].is_integral()) continue;
        a_rows.push_back(std::move(row));
        v.push_back(p.v[i]);
    }
    for (std::size_t i = 0; i < p.B.rows(); ++i) {
        Vec row = p.B.row(i);
        bool zero = std::all_of(row.begin(), row.end(), [](const Scalar& s) { return s.is_zero(); });
        if (zero && p.w[i].is_zero()) continue;
        b_rows.push_back(std::move(row));
        w.push_back(p.w[i]);
    }
    return Polyhedron(Matrix::from_rows(f, a_rows, p.n), v, Matrix::from_rows(f, b_rows, p.n), w);
}

} // namespace valfield
