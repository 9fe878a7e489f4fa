#include "valfield/spectra.hpp"

#include "valfield/detail/faddeev_leverrier.hpp"
#include "valfield/errors.hpp"
#include "valfield/polynomial.hpp"

namespace valfield {

bool is_psd(const Matrix& m) { return characteristic_polynomial(m).is_integral(); }

bool psd_newton_crosscheck(const Matrix& m) {
    NewtonPolygon np = newton_polygon(characteristic_polynomial(m));
    return np.segments.empty() || np.max_slope() <= 0;
}

Pencil::Pencil(Field field, std::size_t d, std::vector<Matrix> matrices)
    : field_(std::move(field)), d_(d), mats_(std::move(matrices)) {
    if (mats_.empty()) throw DimensionMismatch("pencil needs at least the constant matrix A_0");
    for (const auto& m : mats_) {
        if (m.rows() != d_ || m.cols() != d_) throw DimensionMismatch("pencil matrices must all be d x d");
        if (!(m.field() == field_)) throw FieldMismatch();
    }
}

Matrix Pencil::evaluate(const Vec& x) const {
    if (x.size() != num_vars()) throw DimensionMismatch("point dimension does not match pencil");
    Matrix out = mats_[0];
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) out = out + x[i] * mats_[i + 1];
    return out;
}

Pencil Pencil::diagonal(const Polyhedron& p) {
    const Field& f = p.field();
    const std::size_t d = p.A.rows();
    std::vector<Matrix> mats(p.n + 1, Matrix(f, d, d));
    for (std::size_t i = 0; i < d; ++i) {
        mats[0](i, i) = p.v[i];
        for (std::size_t j = 0; j < p.n; ++j) mats[j + 1](i, i) = p.A(i, j);
    }
    return Pencil(f, d, std::move(mats));
}

Pencil Pencil::block_diagonal(const std::vector<Pencil>& blocks) {
    if (blocks.empty()) throw DimensionMismatch("no pencil blocks");
    const Field& f = blocks.front().field();
    const std::size_t n = blocks.front().num_vars();
    std::vector<Matrix> mats(n + 1, Matrix(f, 0, 0));
    std::size_t d = 0;
    for (const auto& b : blocks) {
        if (b.num_vars() != n) throw DimensionMismatch("pencil blocks have different numbers of variables");
        for (std::size_t i = 0; i <= n; ++i) mats[i] = valfield::block_diagonal(mats[i], b.matrices()[i]);
        d += b.degree();
    }
    return Pencil(f, d, std::move(mats));
}

bool spectrahedron_contains(const Pencil& s, const Vec& x, const std::optional<AffineSection>& section) {
    if (x.size() != s.num_vars()) throw DimensionMismatch("point dimension does not match pencil");
    if (section) {
        Vec r = section->B * x + section->w;
        for (const auto& c : r)
            if (!c.is_zero()) return false;
    }
    return is_psd(s.evaluate(x));
}

std::vector<MPoly> semialgebraic_description(const Pencil& s) {
    const Field& f = s.field();
    const std::size_t n = s.num_vars();
    const std::size_t d = s.degree();
    std::vector<MPoly> entries;
    entries.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            MPoly e = MPoly::constant(s.matrices()[0](i, j), n);
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = s.matrices()[k + 1](i, j);
                if (!c.is_zero()) e = e + MPoly::variable(f, n, k) * c;
            }
            entries.push_back(std::move(e));
        }
    auto coeffs = detail::faddeev_leverrier(entries, d, f, MPoly(f, n), MPoly::constant(Scalar(f, 1L), n),
                                            [](const MPoly& r, const Scalar& c) { return r * c; });
    coeffs.pop_back();  // leading coefficient 1
    return coeffs;
}

Annulus::Annulus(std::int64_t a, std::int64_t b) : lower(a), upper(b) {
    if (a < 1 || b < a)
        throw InvalidBounds("annulus bounds must satisfy 1 <= a <= b, got a=" + std::to_string(a) +
                            " b=" + std::to_string(b));
}

bool Annulus::contains(const Scalar& x) const {
    ExtValuation v = x.valuation();
    return v >= ExtValuation(lower) && v <= ExtValuation(upper);
}

bool SdRepresentation::holds(const Vec& x, const Vec& y) const {
    if (x.size() != dim || y.size() != height) throw DimensionMismatch("SDR point has wrong dimension");
    Vec xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    return is_psd(pencil.evaluate(xy));
}

SdRepresentation annulus_sdr(const Field& field, std::int64_t a, std::int64_t b) {
    Annulus checked(a, b);
    const Scalar inv_pi = power_of_uniformizer(field, -1);
    Matrix a0(field, 4, 4), ax(field, 4, 4), ay(field, 4, 4);
    ax(0, 0) = power_of_uniformizer(field, -checked.lower);
    ay(1, 1) = power_of_uniformizer(field, checked.upper);
    a0(2, 2) = inv_pi;
    a0(3, 3) = -inv_pi;
    ax(2, 3) = -inv_pi;
    ay(3, 2) = inv_pi;
    return SdRepresentation{Pencil(field, 4, {a0, ax, ay}), 1, 1};
}

SdRepresentation polyannulus_sdr(const Field& field, const std::vector<Annulus>& annuli) {
    const std::size_t n = annuli.size();
    if (n == 0) throw DimensionMismatch("polyannulus needs at least one annulus");
    // Block i uses variables x_i (index i) and y_i (index n + i).
    std::vector<Matrix> mats(2 * n + 1, Matrix(field, 4 * n, 4 * n));
    for (std::size_t i = 0; i < n; ++i) {
        SdRepresentation block = annulus_sdr(field, annuli[i].lower, annuli[i].upper);
        const auto& bm = block.pencil.matrices();
        const std::size_t off = 4 * i;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) {
                mats[0](off + r, off + c) = bm[0](r, c);
                mats[1 + i](off + r, off + c) = bm[1](r, c);
                mats[1 + n + i](off + r, off + c) = bm[2](r, c);
            }
    }
    return SdRepresentation{Pencil(field, 4 * n, std::move(mats)), n, n};
}

Vec annulus_witness(const Vec& x) {
    Vec y;
    y.reserve(x.size());
    for (const auto& c : x) y.push_back(c.is_zero() ? c : c.inverse());
    return y;
}

bool is_not_single_ball(const std::function<bool(const Scalar&)>& member, const Vec& centers, std::int64_t r_min,
                        std::int64_t r_max, const Vec& samples) {
    std::vector<bool> inside;
    inside.reserve(samples.size());
    for (const auto& s : samples) inside.push_back(member(s));
    for (const auto& c : centers)
        for (std::int64_t r = r_min; r <= r_max; ++r) {
            Ball ball = Ball::disc(c, r);
            bool agrees = true;
            for (std::size_t k = 0; k < samples.size() && agrees; ++k)
                agrees = ball.contains(samples[k]) == inside[k];
            if (agrees) return false;
        }
    return true;
}

bool annulus_is_not_ball_check(const Field& field, std::int64_t a, std::int64_t b, const Vec& units) {
    Annulus ann(a, b);
    Vec samples{Scalar(field)};
    for (std::int64_t k = a - 3; k <= b + 3; ++k)
        for (const auto& u : units) samples.push_back(u * power_of_uniformizer(field, k));
    Vec centers;
    for (const auto& s : samples)
        if (ann.contains(s)) centers.push_back(s);
    return is_not_single_ball([&](const Scalar& x) { return ann.contains(x); }, centers, a - 2, b + 2, samples);
}

} // namespace valfield
