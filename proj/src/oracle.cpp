#include "valfield/oracle.hpp"

#include "valfield/errors.hpp"

namespace valfield {

namespace {

// Every k-subset of {0..n-1}, in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

} // namespace

Vec default_units(const Field& field, std::size_t count) {
    Vec out;
    if (field.is_padic()) {
        for (long m = 1; out.size() < count; ++m) {
            if (m % field.prime() == 0) continue;
            out.emplace_back(field, m);
            if (out.size() < count) out.emplace_back(field, -m);
        }
        return out;
    }
    const Scalar t = uniformizer(field);
    for (long m = 1; out.size() < count && m <= 3; ++m) {
        out.emplace_back(field, m);
        if (out.size() < count) out.emplace_back(field, -m);
    }
    for (long m = 1; out.size() < count; ++m) {
        out.push_back(Scalar(field, m) + t);
        if (out.size() < count) out.push_back(Scalar(field, m) - t);
    }
    return out;
}

SampleGrid SampleGrid::standard(const Field& field, std::size_t count, std::int64_t kmin, std::int64_t kmax,
                                std::uint64_t seed) {
    return SampleGrid{field, default_units(field, count), kmin, kmax, seed};
}

Vec sample_scalars(const SampleGrid& g) {
    Vec out{Scalar(g.field)};
    for (std::int64_t k = g.kmin; k <= g.kmax; ++k) {
        const Scalar pk = power_of_uniformizer(g.field, k);
        for (const auto& u : g.units) out.push_back(u * pk);
    }
    return out;
}

Vec sample_integral_scalars(const SampleGrid& g) {
    SampleGrid nonneg = g;
    nonneg.kmin = std::max<std::int64_t>(g.kmin, 0);
    nonneg.kmax = std::max<std::int64_t>(g.kmax, 0);
    return sample_scalars(nonneg);
}

std::vector<Vec> sample_vectors(const SampleGrid& g, std::size_t n, std::size_t count) {
    const Vec pool = sample_scalars(g);
    std::mt19937_64 rng(g.seed);
    std::vector<Vec> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        Vec x;
        x.reserve(n);
        for (std::size_t i = 0; i < n; ++i) x.push_back(pool[pick(rng, pool.size())]);
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<Vec> sample_polyhedron_points(const Polyhedron& p, const SampleGrid& g, std::size_t count) {
    if (is_empty(p)) return {};
    const PolydiscImage img = as_polydisc_image(p);
    const Vec all = sample_scalars(g);
    const Vec integral = sample_integral_scalars(g);
    std::mt19937_64 rng(g.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<Vec> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        Vec z;
        z.reserve(img.disc_dim());
        for (std::size_t i = 0; i < img.disc_dim(); ++i) {
            if (img.is_free(i))
                z.push_back(all[pick(rng, all.size())]);
            else
                z.push_back(img.center(i) + integral[pick(rng, integral.size())] / img.scale[i]);
        }
        out.push_back(img.point(z));
    }
    return out;
}

std::vector<std::int64_t> snf_invariants_by_minors(const Matrix& m) {
    if (m.rows() > 4 || m.cols() > 4) throw SizeTooLarge("minor oracle handles matrices up to 4 x 4");
    std::vector<std::int64_t> out;
    std::int64_t prev = 0;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        ExtValuation best = ExtValuation::infinity();
        for (const auto& rs : subsets(m.rows(), k))
            for (const auto& cs : subsets(m.cols(), k)) {
                Matrix minor(m.field(), k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(rs[i], cs[j]);
                best = min(best, determinant(minor).valuation());
            }
        if (best.is_infinite()) break;
        out.push_back(best.value() - prev);
        prev = best.value();
    }
    return out;
}

ExtValuation lp_sampled_optimum(const LpInstance& in, const SampleGrid& g, std::size_t cap) {
    const Polyhedron feas = in.feasible_set();
    if (is_empty(feas)) return ExtValuation::infinity();
    const PolydiscImage img = as_polydisc_image(feas);
    const Vec all = sample_scalars(g);
    const Vec integral = sample_integral_scalars(g);

    std::vector<Vec> choices(img.disc_dim());
    std::size_t total = 1;
    for (std::size_t i = 0; i < img.disc_dim(); ++i) {
        if (img.is_free(i)) {
            choices[i] = all;
        } else {
            for (const auto& t : integral) choices[i].push_back(img.center(i) + t / img.scale[i]);
        }
        if (total <= cap) total *= choices[i].size();
    }

    // <c, base + map z> + offset = c0 + sum_i w_i z_i; tabulate each w_i z_i once.
    const Scalar c0 = in.objective(img.base);
    const Vec w = img.map.transpose() * in.c;
    std::vector<Vec> terms(choices.size());
    for (std::size_t i = 0; i < choices.size(); ++i)
        for (const auto& z : choices[i]) terms[i].push_back(w[i] * z);

    ExtValuation best = ExtValuation::infinity();
    auto eval = [&](const std::vector<std::size_t>& idx) {
        Scalar sum = c0;
        for (std::size_t i = 0; i < idx.size(); ++i) sum += terms[i][idx[i]];
        best = min(best, sum.valuation());
    };

    std::vector<std::size_t> idx(choices.size(), 0);
    if (total <= cap) {
        for (;;) {
            eval(idx);
            std::size_t i = 0;
            while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
            if (i == idx.size()) break;
        }
    } else {
        std::mt19937_64 rng(g.seed);
        for (std::size_t s = 0; s < cap; ++s) {
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = pick(rng, choices[i].size());
            eval(idx);
        }
    }
    return best;
}

InclusionReport check_direct_image(const AffineMap& f, const Polyhedron& p, const Polyhedron& image,
                                   const SampleGrid& g, std::size_t count) {
    InclusionReport rep;
    for (const auto& x : sample_polyhedron_points(p, g, count)) {
        ++rep.forward_checked;
        if (!contains(image, f(x))) ++rep.forward_violations;
    }
    SampleGrid back = g;
    back.seed = g.seed + 1;
    for (const auto& z : sample_polyhedron_points(image, back, count)) {
        ++rep.backward_checked;
        // f(x) = z  <=>  F x + (g - z) = 0
        Polyhedron fiber(Matrix(p.field(), 0, p.n), Vec{}, f.F, f.g - z);
        if (is_empty(intersect(p, fiber))) ++rep.backward_violations;
    }
    return rep;
}

} // namespace valfield
