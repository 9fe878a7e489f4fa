#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "valfield/linprog.hpp"
#include "valfield/polyhedron.hpp"

namespace valfield {

/// Deterministic enumeration of scalars u * pi^k.
struct SampleGrid {
    Field field;
    Vec units;
    std::int64_t kmin = -5;
    std::int64_t kmax = 5;
    std::uint64_t seed = 0;

    /// Grid with the first `count` default units.
    static SampleGrid standard(const Field& field, std::size_t count, std::int64_t kmin, std::int64_t kmax,
                               std::uint64_t seed = 0);
};

/// 1, -1, 2, -2, 3, ... skipping multiples of p; for Laurent fields the
/// integers followed by 1 + t, 1 - t, 2 + t, ...
Vec default_units(const Field& field, std::size_t count);

/// 0 first, then u * pi^k for k = kmin..kmax (outer) and each unit u (inner).
Vec sample_scalars(const SampleGrid& grid);

/// The k >= 0 part of the grid, plus 0: a sample of O_K.
Vec sample_integral_scalars(const SampleGrid& grid);

/// Random vectors with coordinates drawn from sample_scalars(grid).
std::vector<Vec> sample_vectors(const SampleGrid& grid, std::size_t n, std::size_t count);

/// Random points of a nonempty polyhedron, drawn through its polydisc image.
/// Returns nothing for an empty polyhedron.
std::vector<Vec> sample_polyhedron_points(const Polyhedron& p, const SampleGrid& grid, std::size_t count);

/// Exponents a_1 <= ... <= a_r with a_1 + ... + a_k the least valuation of a
/// k x k minor. Throws SizeTooLarge beyond 4 x 4.
std::vector<std::int64_t> snf_invariants_by_minors(const Matrix& m);

/**
 * min val(<c, x> + offset) over feasible points x = base + map z of the polydisc
 * image, with integral offsets from the k >= 0 grid (plus 0) around each disc
 * center and free coordinates from the whole grid. The product is enumerated
 * exhaustively up to `cap` points, otherwise `cap` seeded random picks are used.
 * Infeasible instances give infinity.
 */
ExtValuation lp_sampled_optimum(const LpInstance& instance, const SampleGrid& grid, std::size_t cap = 20000);

struct InclusionReport {
    std::size_t forward_checked = 0;
    std::size_t forward_violations = 0;
    std::size_t backward_checked = 0;
    std::size_t backward_violations = 0;

    bool ok() const { return forward_violations == 0 && backward_violations == 0; }
};

/**
 * Sampled check that `image` equals f(P): f(x) in image for sampled x in P,
 * and every sampled z in image has a preimage in P (decided by emptiness of
 * P cut by f(x) = z).
 */
InclusionReport check_direct_image(const AffineMap& f, const Polyhedron& p, const Polyhedron& image,
                                   const SampleGrid& grid, std::size_t count);

} // namespace valfield
