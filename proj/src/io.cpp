#include "valfield/io.hpp"

#include "valfield/errors.hpp"

namespace valfield::io {

namespace {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::int64_t read_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

std::size_t read_size(const Json& j, const char* what) {
    std::int64_t v = read_int(j, what);
    if (v < 0) throw ParseError(std::string(what) + " must be nonnegative");
    return static_cast<std::size_t>(v);
}

} // namespace

Field read_field(const Json& j) {
    const Json& kind = member(j, "kind");
    if (!kind.is_string()) throw ParseError("field kind must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "p-adic" || k == "padic") return Field::padic(read_int(member(j, "p"), "p"));
    if (k == "laurent") {
        if (!j.contains("var")) return Field::laurent();
        if (!j.at("var").is_string()) throw ParseError("var must be a string");
        return Field::laurent(j.at("var").get<std::string>());
    }
    throw ParseError("unknown field kind \"" + k + "\"");
}

Json write_field(const Field& f) {
    if (f.is_padic()) return Json{{"kind", "p-adic"}, {"p", f.prime()}};
    return Json{{"kind", "laurent"}, {"var", f.variable()}};
}

Scalar read_scalar(const Field& f, const Json& j) {
    if (j.is_string()) return parse_scalar(f, j.get<std::string>());
    if (j.is_number_integer()) return parse_scalar(f, j.dump());
    throw ParseError("scalar must be a string or an integer, got " + j.dump());
}

Json write_scalar(const Scalar& x) { return x.to_string(); }

Vec read_vec(const Field& f, const Json& j) {
    if (!j.is_array()) throw ParseError("vector must be an array");
    Vec out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(read_scalar(f, e));
    return out;
}

Json write_vec(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(write_scalar(x));
    return out;
}

Matrix read_matrix(const Field& f, const Json& j) {
    const Json* rows = &j;
    std::optional<std::size_t> r, c;
    if (j.is_object()) {
        r = read_size(member(j, "rows"), "rows");
        c = read_size(member(j, "cols"), "cols");
        rows = j.contains("entries") ? &j.at("entries") : nullptr;
    } else if (!j.is_array()) {
        throw ParseError("matrix must be an array of rows or an object");
    }
    std::vector<Vec> rs;
    if (rows) {
        if (!rows->is_array()) throw ParseError("matrix entries must be an array of rows");
        for (const auto& row : *rows) rs.push_back(read_vec(f, row));
    }
    const std::size_t cols = c ? *c : (rs.empty() ? 0 : rs.front().size());
    if (r && *r != rs.size()) throw DimensionMismatch("matrix has " + std::to_string(rs.size()) + " rows, declared " +
                                                      std::to_string(*r));
    for (const auto& row : rs)
        if (row.size() != cols) throw DimensionMismatch("matrix rows have different lengths");
    return Matrix::from_rows(f, rs, cols);
}

Json write_matrix(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(write_vec(m.row(i)));
    if (m.rows() == 0) return Json{{"rows", 0}, {"cols", m.cols()}, {"entries", rows}};
    return rows;
}

Json write_valuation(const ExtValuation& v) {
    if (v.is_infinite()) return "inf";
    return v.value();
}

ExtValuation read_valuation(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return ExtValuation::infinity();
    return ExtValuation(read_int(j, "valuation"));
}

Polyhedron read_polyhedron(const Field& f, const Json& j) {
    const std::size_t n = read_size(member(j, "n"), "n");
    auto block = [&](const char* mkey, const char* vkey) {
        Matrix m = j.contains(mkey) ? read_matrix(f, j.at(mkey)) : Matrix(f, 0, n);
        if (m.rows() == 0 && m.cols() == 0) m = Matrix(f, 0, n);
        Vec v = j.contains(vkey) ? read_vec(f, j.at(vkey)) : Vec{};
        return std::pair{std::move(m), std::move(v)};
    };
    auto [a, v] = block("A", "v");
    auto [b, w] = block("B", "w");
    if (a.cols() != n || b.cols() != n) throw DimensionMismatch("polyhedron blocks must have n columns");
    return Polyhedron(std::move(a), std::move(v), std::move(b), std::move(w));
}

Json write_polyhedron(const Polyhedron& p) {
    return Json{{"n", p.n},
                {"A", write_matrix(p.A)},
                {"v", write_vec(p.v)},
                {"B", write_matrix(p.B)},
                {"w", write_vec(p.w)}};
}

AffineMap read_affine_map(const Field& f, const Json& j) {
    Matrix fm = read_matrix(f, member(j, "F"));
    Vec g = j.contains("g") ? read_vec(f, j.at("g")) : zero_vector(f, fm.rows());
    return AffineMap(std::move(fm), std::move(g));
}

Json write_affine_map(const AffineMap& m) { return Json{{"F", write_matrix(m.F)}, {"g", write_vec(m.g)}}; }

Json write_ball(const Ball& b) {
    switch (b.kind()) {
    case Ball::Kind::Empty: return Json{{"kind", "empty"}};
    case Ball::Kind::All: return Json{{"kind", "all"}};
    case Ball::Kind::Disc: break;
    }
    return Json{{"kind", "disc"}, {"center", write_scalar(b.center())}, {"radius", write_valuation(b.radius())}};
}

Ball read_ball(const Field& f, const Json& j) {
    const std::string kind = member(j, "kind").get<std::string>();
    if (kind == "empty") return Ball::empty_set(f);
    if (kind == "all") return Ball::whole_line(f);
    if (kind == "disc") return Ball::disc(read_scalar(f, member(j, "center")), read_valuation(member(j, "radius")));
    throw ParseError("unknown ball kind \"" + kind + "\"");
}

Json write_polydisc_image(const PolydiscImage& img) {
    return Json{{"base", write_vec(img.base)},
                {"map", write_matrix(img.map)},
                {"scale", write_vec(img.scale)},
                {"shift", write_vec(img.shift)}};
}

Json write_snf(const SnfDecomposition& d) {
    return Json{{"Q", write_matrix(d.q)},
                {"S", write_matrix(d.s)},
                {"P", write_matrix(d.p)},
                {"exponents", d.exponents},
                {"rank", d.rank()}};
}

LpInstance read_lp(const Field& f, const Json& j) {
    Matrix a = read_matrix(f, member(j, "A"));
    Vec c = read_vec(f, member(j, "c"));
    if (a.rows() == 0 && a.cols() == 0) a = Matrix(f, 0, c.size());
    Vec b = read_vec(f, member(j, "b"));
    Matrix d = j.contains("D") ? read_matrix(f, j.at("D")) : Matrix(f, 0, a.cols());
    if (d.rows() == 0 && d.cols() == 0) d = Matrix(f, 0, a.cols());
    Vec e = j.contains("e") ? read_vec(f, j.at("e")) : Vec{};
    Sense sense = Sense::Minimize;
    if (j.contains("sense")) {
        const std::string s = j.at("sense").get<std::string>();
        if (s == "max") sense = Sense::Maximize;
        else if (s != "min") throw ParseError("sense must be \"min\" or \"max\"");
    }
    LpInstance out(std::move(a), std::move(b), std::move(c), std::move(d), std::move(e), sense);
    if (j.contains("offset")) out.offset = read_scalar(f, j.at("offset"));
    return out;
}

Json write_lp_outcome(const LpOutcome& o) {
    switch (o.status) {
    case LpStatus::Infeasible:
        return Json{{"type", "INFEAS"},
                    {"reason", o.reason == InfeasibleReason::InconsistentEqualities ? "inconsistent-equalities"
                                                                                     : "non-integral-constants"}};
    case LpStatus::Unbounded:
        return Json{{"type", "UNBOUND"},
                    {"x", write_vec(o.ray_base)},
                    {"ray", write_vec(o.ray)},
                    {"ray_index", o.ray_index}};
    case LpStatus::Feasible: break;
    }
    return Json{{"type", "FEAS"}, {"x", write_vec(o.x)}, {"value", write_valuation(o.value)}};
}

Pencil read_pencil(const Field& f, const Json& j) {
    const std::size_t d = read_size(member(j, "d"), "d");
    const Json& mats = member(j, "A");
    if (!mats.is_array() || mats.empty()) throw ParseError("pencil needs a nonempty list A of matrices");
    std::vector<Matrix> ms;
    for (const auto& m : mats) {
        Matrix x = read_matrix(f, m);
        if (d == 0 && x.rows() == 0) x = Matrix(f, 0, 0);
        ms.push_back(std::move(x));
    }
    if (j.contains("n") && read_size(j.at("n"), "n") + 1 != ms.size())
        throw DimensionMismatch("pencil needs n + 1 matrices");
    return Pencil(f, d, std::move(ms));
}

Json write_pencil(const Pencil& p) {
    Json mats = Json::array();
    for (const auto& m : p.matrices()) mats.push_back(write_matrix(m));
    return Json{{"d", p.degree()}, {"n", p.num_vars()}, {"A", mats}};
}

Json write_sdr(const SdRepresentation& s) {
    Json out = write_pencil(s.pencil);
    out["height"] = s.height;
    return out;
}

Field problem_field(const Json& problem, const std::optional<Field>& override_field) {
    if (override_field) return *override_field;
    return read_field(member(problem, "field"));
}

} // namespace valfield::io
