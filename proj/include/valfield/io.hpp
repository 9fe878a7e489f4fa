#pragma once

#include "json.hpp"

#include "valfield/linprog.hpp"
#include "valfield/polyhedron.hpp"
#include "valfield/snf.hpp"
#include "valfield/spectra.hpp"

// JSON encodings. Scalars are strings in the field's text format (plain
// integers are also accepted on input); valuations are integers or "inf".
// Readers throw ParseError on malformed input and DimensionMismatch on
// inconsistent shapes.
namespace valfield::io {

using Json = nlohmann::json;

/// {"kind":"p-adic","p":5} or {"kind":"laurent","var":"t"}.
Field read_field(const Json& j);
Json write_field(const Field& f);

Scalar read_scalar(const Field& f, const Json& j);
Json write_scalar(const Scalar& x);

Vec read_vec(const Field& f, const Json& j);
Json write_vec(const Vec& v);

/// A list of rows, or {"rows":r,"cols":c,"entries":[...]} (needed for r = 0).
Matrix read_matrix(const Field& f, const Json& j);
/// List of rows; the object form when there are no rows.
Json write_matrix(const Matrix& m);

Json write_valuation(const ExtValuation& v);
ExtValuation read_valuation(const Json& j);

/// {"n":..,"A":..,"v":..,"B":..,"w":..}; the equality block may be omitted.
Polyhedron read_polyhedron(const Field& f, const Json& j);
Json write_polyhedron(const Polyhedron& p);

/// {"F":..,"g":..}; g defaults to zero.
AffineMap read_affine_map(const Field& f, const Json& j);
Json write_affine_map(const AffineMap& m);

/// {"kind":"disc","center":..,"radius":..} or {"kind":"empty"} / {"kind":"all"}.
Json write_ball(const Ball& b);
Ball read_ball(const Field& f, const Json& j);

Json write_polydisc_image(const PolydiscImage& img);

/// {"Q","S","P","exponents","rank"}.
Json write_snf(const SnfDecomposition& d);

/// {"A","b","c","D","e","sense":"min"|"max","offset"}; D/e, sense and offset optional.
LpInstance read_lp(const Field& f, const Json& j);
/// {"type":"FEAS","x":..,"value":..} | {"type":"INFEAS","reason":..} |
/// {"type":"UNBOUND","x":..,"ray":..,"ray_index":..}.
Json write_lp_outcome(const LpOutcome& o);

/// {"d":..,"n":..,"A":[A_0,...,A_n]}.
Pencil read_pencil(const Field& f, const Json& j);
Json write_pencil(const Pencil& p);
/// Pencil fields plus "height".
Json write_sdr(const SdRepresentation& s);

/// The field of a problem file, unless overridden.
Field problem_field(const Json& problem, const std::optional<Field>& override_field);

} // namespace valfield::io
