#include "valfield/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "valfield/errors.hpp"
#include "valfield/oracle.hpp"
#include "valfield/polynomial.hpp"

namespace valfield::cli {

using io::Json;

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("problem is missing \"") + key + "\"");
    return j.at(key);
}

std::string join(const Json& arr) {
    std::string s;
    for (const auto& e : arr) s += (s.empty() ? "" : ", ") + (e.is_string() ? e.get<std::string>() : e.dump());
    return "(" + s + ")";
}

std::string valuation_text(const Json& v) { return v.is_string() ? "+inf" : v.dump(); }

SampleGrid grid_for(const Field& f, std::uint64_t seed, std::int64_t lo = -5, std::int64_t hi = 5) {
    return SampleGrid::standard(f, 4, lo, hi, seed);
}

Polyhedron product(const Polyhedron& p, const Polyhedron& q) {
    return Polyhedron(block_diagonal(p.A, q.A), [&] { Vec v = p.v; v.insert(v.end(), q.v.begin(), q.v.end()); return v; }(),
                      block_diagonal(p.B, q.B), [&] { Vec w = p.w; w.insert(w.end(), q.w.begin(), q.w.end()); return w; }());
}

Json inclusion_json(const InclusionReport& r) {
    return Json{{"agree", r.ok()},
                {"forward_checked", r.forward_checked},
                {"forward_violations", r.forward_violations},
                {"backward_checked", r.backward_checked},
                {"backward_violations", r.backward_violations}};
}

// -- tasks ------------------------------------------------------------------

Json task_lp(const Json& pr, const Field& f, bool verify, std::uint64_t seed) {
    const LpInstance in = io::read_lp(f, pr);
    const LpOutcome o = solve_lp(in);
    Json res = io::write_lp_outcome(o);
    if (!verify) return res;

    const Polyhedron feas = in.feasible_set();
    const bool empty = is_empty(feas);
    Json orc{{"is_empty", empty}};
    bool agree = empty == (o.status == LpStatus::Infeasible);
    if (o.status == LpStatus::Feasible) {
        const bool point_ok = contains(feas, o.x) && in.objective(o.x).valuation() == o.value;
        orc["point_feasible"] = point_ok;
        agree = agree && point_ok;
        if (in.sense == Sense::Minimize && in.num_vars() <= 3) {
            std::int64_t lo = -5, hi = 5;
            if (o.value.is_finite()) {
                lo = std::min(lo, o.value.value() - 4);
                hi = std::max(hi, o.value.value() + 4);
            }
            const ExtValuation sampled = lp_sampled_optimum(in, grid_for(f, seed, lo, hi));
            orc["sampled_optimum"] = io::write_valuation(sampled);
            agree = agree && sampled == o.value;
        } else if (in.sense == Sense::Maximize) {
            bool beaten = false;
            for (const auto& x : sample_polyhedron_points(feas, grid_for(f, seed), 200))
                beaten = beaten || in.objective(x).valuation() > o.value;
            orc["sample_exceeds_value"] = beaten;
            agree = agree && !beaten;
        }
    } else if (o.status == LpStatus::Unbounded) {
        const Scalar cr = dot(f, in.c, o.ray);
        bool cert = !cr.is_zero();
        if (cert) {
            const Scalar alpha = (power_of_uniformizer(f, -10) - in.objective(o.ray_base)) / cr;
            const Vec x = o.ray_base + alpha * o.ray;
            cert = contains(feas, x) && in.objective(x).valuation() <= ExtValuation(-10);
            orc["certificate"] = io::write_vec(x);
        }
        orc["certified"] = cert;
        agree = agree && cert;
    }
    orc["agree"] = agree;
    res["oracle"] = orc;
    return res;
}

Json task_snf(const Json& pr, const Field& f, bool verify) {
    const Matrix m = io::read_matrix(f, need(pr, "M"));
    const SnfDecomposition d = smith_normal_form(m);
    Json res = io::write_snf(d);
    if (!verify) return res;
    const bool rebuilt = d.q_inv * d.s * d.p == m && is_unimodular(d.q) && is_unimodular(d.p);
    Json orc{{"reconstruction", rebuilt}};
    bool agree = rebuilt;
    if (m.rows() <= 4 && m.cols() <= 4) {
        const auto minors = snf_invariants_by_minors(m);
        orc["minor_exponents"] = minors;
        agree = agree && minors == d.exponents;
    } else {
        orc["minor_exponents"] = "skipped";
    }
    orc["agree"] = agree;
    res["oracle"] = orc;
    return res;
}

Json task_psd(const Json& pr, const Field& f, bool verify) {
    const Matrix m = io::read_matrix(f, need(pr, "M"));
    const UniPolynomial chi = characteristic_polynomial(m);
    Json res{{"psd", chi.is_integral()}, {"charpoly", io::write_vec(chi.coeffs())}};
    if (verify) {
        const bool newton = psd_newton_crosscheck(m);
        res["oracle"] = Json{{"newton_polygon", newton}, {"agree", newton == chi.is_integral()}};
    }
    return res;
}

Json task_poly_project(const Json& pr, const Field& f, bool verify, std::uint64_t seed) {
    const Polyhedron p = io::read_polyhedron(f, need(pr, "P"));
    AffineMap map = AffineMap::linear(Matrix(f, 0, p.n));
    if (pr.contains("f")) {
        map = io::read_affine_map(f, pr.at("f"));
    } else {
        if (p.n == 0) throw DimensionMismatch("cannot drop a coordinate of K^0");
        map = AffineMap::linear(Matrix::identity(f, p.n).rows_range(0, p.n - 1));
    }
    const Polyhedron img = direct_image(map, p);
    Json res{{"image", io::write_polyhedron(img)}, {"empty", is_empty(img)}};
    if (verify) res["oracle"] = inclusion_json(check_direct_image(map, p, img, grid_for(f, seed), 200));
    return res;
}

Json task_poly_member(const Json& pr, const Field& f, bool verify) {
    const Polyhedron p = io::read_polyhedron(f, need(pr, "P"));
    const Vec x = io::read_vec(f, need(pr, "x"));
    const bool in = contains(p, x);
    Json res{{"member", in}};
    if (verify) {
        const bool via = is_empty(p) ? false : as_polydisc_image(p).image_contains(x);
        res["oracle"] = Json{{"polydisc_image", via}, {"agree", via == in}};
    }
    return res;
}

Json task_poly_empty(const Json& pr, const Field& f, bool verify, std::uint64_t seed) {
    const Polyhedron p = io::read_polyhedron(f, need(pr, "P"));
    const auto w = witness_point(p);
    Json res{{"empty", !w.has_value()}, {"witness", w ? io::write_vec(*w) : Json(nullptr)}};
    if (verify) {
        bool agree = true;
        std::size_t hits = 0;
        if (w) {
            agree = contains(p, *w);
        } else {
            for (const auto& x : sample_vectors(grid_for(f, seed), p.n, 500)) hits += contains(p, x);
            agree = hits == 0;
        }
        res["oracle"] = Json{{"witness_contained", w ? Json(contains(p, *w)) : Json(nullptr)},
                             {"sampled_members", hits},
                             {"agree", agree}};
    }
    return res;
}

Json task_poly_minkowski(const Json& pr, const Field& f, bool verify, std::uint64_t seed) {
    const Polyhedron p1 = io::read_polyhedron(f, need(pr, "P1"));
    const Polyhedron p2 = io::read_polyhedron(f, need(pr, "P2"));
    const Polyhedron sum = minkowski_sum(p1, p2);
    Json res{{"sum", io::write_polyhedron(sum)}, {"empty", is_empty(sum)}};
    if (verify) {
        const Matrix id = Matrix::identity(f, p1.n);
        const AffineMap add = AffineMap::linear(hstack(id, id));
        res["oracle"] = inclusion_json(check_direct_image(add, product(p1, p2), sum, grid_for(f, seed), 200));
    }
    return res;
}

Json task_ball_form(const Json& pr, const Field& f, bool verify, std::uint64_t seed) {
    const Polyhedron p = io::read_polyhedron(f, need(pr, "P"));
    if (p.n != 1) throw DimensionMismatch("ball-form needs a polyhedron in K^1");
    const Ball b = canonical_ball_form(p);
    Json res{{"ball", io::write_ball(b)}};
    if (verify) {
        SampleGrid g = SampleGrid::standard(f, 8, -5, 5, seed);
        Vec xs = sample_scalars(g);
        if (b.kind() == Ball::Kind::Disc)
            for (const auto& x : sample_scalars(g)) xs.push_back(b.center() + x);
        std::size_t bad = 0;
        for (const auto& x : xs) bad += b.contains(x) != contains(p, Vec{x});
        res["oracle"] = Json{{"checked", xs.size()}, {"violations", bad}, {"agree", bad == 0}};
    }
    return res;
}

Json task_poly_polydisc(const Json& pr, const Field& f, bool verify, std::uint64_t seed) {
    const Polyhedron p = io::read_polyhedron(f, need(pr, "P"));
    const PolydiscImage img = as_polydisc_image(p);
    Json res = io::write_polydisc_image(img);
    if (verify) {
        std::size_t bad = 0, checked = 0;
        for (const auto& x : sample_polyhedron_points(p, grid_for(f, seed), 200)) {
            bad += !contains(p, x);
            ++checked;
        }
        for (const auto& x : sample_vectors(grid_for(f, seed + 1), p.n, 200)) {
            bad += contains(p, x) != img.image_contains(x);
            ++checked;
        }
        res["oracle"] = Json{{"checked", checked}, {"violations", bad}, {"agree", bad == 0}};
    }
    return res;
}

Json task_sdr_annulus(const Json& pr, const Field& f, bool verify, std::uint64_t seed) {
    std::vector<Annulus> anns;
    if (pr.contains("annuli")) {
        for (const auto& a : pr.at("annuli"))
            anns.emplace_back(need(a, "a").get<std::int64_t>(), need(a, "b").get<std::int64_t>());
    } else {
        anns.emplace_back(need(pr, "a").get<std::int64_t>(), need(pr, "b").get<std::int64_t>());
    }
    const SdRepresentation sdr = polyannulus_sdr(f, anns);
    Json res = io::write_sdr(sdr);
    if (!verify) return res;

    // Coordinatewise check: vary one x_i over u * pi^k, k in [a_i - 2, b_i + 2],
    // keeping the other coordinates at pi^{a_j} with witness pi^{-a_j}.
    std::size_t checked = 0, bad = 0;
    for (std::size_t i = 0; i < anns.size(); ++i) {
        Vec x, y;
        for (const auto& a : anns) {
            x.push_back(power_of_uniformizer(f, a.lower));
            y.push_back(power_of_uniformizer(f, -a.lower));
        }
        const SampleGrid xs = SampleGrid::standard(f, 3, anns[i].lower - 2, anns[i].upper + 2, seed);
        const Vec ys = sample_scalars(SampleGrid::standard(f, 3, -anns[i].upper - 4, 4, seed + 1));
        for (const auto& xi : sample_scalars(xs)) {
            if (xi.is_zero()) continue;
            x[i] = xi;
            ++checked;
            if (anns[i].contains(xi)) {
                y[i] = xi.inverse();
                bad += !sdr.holds(x, y);
            } else {
                bool found = false;
                for (const auto& yi : ys) {
                    y[i] = yi;
                    found = found || sdr.holds(x, y);
                }
                bad += found;
            }
        }
    }
    res["oracle"] = Json{{"checked", checked}, {"violations", bad}, {"agree", bad == 0}};
    return res;
}

Json task_spectra_member(const Json& pr, const Field& f, bool verify) {
    const Pencil pen = io::read_pencil(f, need(pr, "pencil"));
    const Vec x = io::read_vec(f, need(pr, "x"));
    std::optional<AffineSection> sec;
    if (pr.contains("section")) {
        const Json& s = pr.at("section");
        sec = AffineSection{io::read_matrix(f, need(s, "B")), io::read_vec(f, need(s, "w"))};
        if (sec->B.rows() == 0) sec->B = Matrix(f, 0, x.size());
        if (sec->B.cols() != x.size() || sec->w.size() != sec->B.rows())
            throw DimensionMismatch("section shape does not match the point");
    }
    const bool in = spectrahedron_contains(pen, x, sec);
    Json res{{"member", in}};
    if (verify) {
        bool via = true;
        for (const auto& c : semialgebraic_description(pen)) via = via && c.evaluate(x).is_integral();
        if (sec) {
            for (const auto& r : sec->B * x + sec->w) via = via && r.is_zero();
        }
        res["oracle"] = Json{{"semialgebraic", via}, {"agree", via == in}};
    }
    return res;
}

Json task_spectra_describe(const Json& pr, const Field& f, bool verify, std::uint64_t seed) {
    const Pencil pen = io::read_pencil(f, need(pr, "pencil"));
    const auto coeffs = semialgebraic_description(pen);
    Json cs = Json::array();
    for (const auto& c : coeffs) cs.push_back(c.to_string("x"));
    Json res{{"coefficients", cs}};
    if (verify) {
        std::size_t bad = 0;
        const auto pts = sample_vectors(grid_for(f, seed, -3, 3), pen.num_vars(), 100);
        for (const auto& x : pts) {
            bool via = true;
            for (const auto& c : coeffs) via = via && c.evaluate(x).is_integral();
            bad += via != spectrahedron_contains(pen, x);
        }
        res["oracle"] = Json{{"checked", pts.size()}, {"violations", bad}, {"agree", bad == 0}};
    }
    return res;
}

std::string vec_text(const Json& v) { return join(v); }

} // namespace

std::string task_name(const std::string& command, const std::string& sub) {
    if (command == "poly" && sub == "ball-form") return "ball-form";
    return sub.empty() ? command : command + "-" + sub;
}

Json solve_task(const std::string& task, const Json& pr, const Field& f, bool verify, std::uint64_t seed) {
    if (task == "lp") return task_lp(pr, f, verify, seed);
    if (task == "snf") return task_snf(pr, f, verify);
    if (task == "psd") return task_psd(pr, f, verify);
    if (task == "poly-project") return task_poly_project(pr, f, verify, seed);
    if (task == "poly-member") return task_poly_member(pr, f, verify);
    if (task == "poly-empty") return task_poly_empty(pr, f, verify, seed);
    if (task == "poly-minkowski") return task_poly_minkowski(pr, f, verify, seed);
    if (task == "ball-form") return task_ball_form(pr, f, verify, seed);
    if (task == "poly-polydisc") return task_poly_polydisc(pr, f, verify, seed);
    if (task == "sdr-annulus") return task_sdr_annulus(pr, f, verify, seed);
    if (task == "spectra-member") return task_spectra_member(pr, f, verify);
    if (task == "spectra-describe") return task_spectra_describe(pr, f, verify, seed);
    throw ParseError("unknown task \"" + task + "\"");
}

std::string render_summary(const std::string& task, const Json& r) {
    std::ostringstream os;
    if (task == "lp") {
        const std::string type = r.at("type").get<std::string>();
        if (type == "FEAS") {
            os << "feasible; optimal valuation " << valuation_text(r.at("value")) << "; attained at x = "
               << vec_text(r.at("x"));
        } else if (type == "INFEAS") {
            os << "infeasible: "
               << (r.at("reason") == "inconsistent-equalities" ? "equality system inconsistent"
                                                               : "constant block non-integral");
        } else {
            os << "unbounded: objective valuation → −∞ along ray index " << r.at("ray_index").dump();
        }
    } else if (task == "snf") {
        os << "rank " << r.at("rank").dump() << "; invariant factor exponents " << join(r.at("exponents"));
    } else if (task == "psd") {
        os << (r.at("psd").get<bool>() ? "positive semidefinite" : "not positive semidefinite")
           << "; characteristic polynomial coefficients " << join(r.at("charpoly"));
    } else if (task == "poly-project" || task == "poly-minkowski") {
        const Json& p = task == "poly-project" ? r.at("image") : r.at("sum");
        if (r.at("empty").get<bool>())
            os << "result is empty";
        else
            os << "result is a polyhedron in K^" << p.at("n").dump() << " with " << p.at("v").size()
               << " inequality and " << p.at("w").size() << " equality rows";
    } else if (task == "poly-member" || task == "spectra-member") {
        os << (r.at("member").get<bool>() ? "member" : "not a member");
    } else if (task == "poly-empty") {
        if (r.at("empty").get<bool>())
            os << "empty";
        else
            os << "nonempty; witness x = " << vec_text(r.at("witness"));
    } else if (task == "ball-form") {
        const Json& b = r.at("ball");
        const std::string kind = b.at("kind").get<std::string>();
        if (kind == "disc")
            os << "ball with center " << b.at("center").get<std::string>() << " and radius valuation "
               << valuation_text(b.at("radius"));
        else
            os << (kind == "empty" ? "the empty set" : "the whole line");
    } else if (task == "poly-polydisc") {
        os << "image of a polydisc of dimension " << r.at("scale").size() << " based at "
           << vec_text(r.at("base"));
    } else if (task == "sdr-annulus") {
        os << "semidefinite representation of height " << r.at("height").dump() << " and degree "
           << r.at("d").dump();
    } else if (task == "spectra-describe") {
        os << r.at("coefficients").size() << " coefficient conditions val(p_i(x)) >= 0";
    }
    if (r.contains("oracle"))
        os << (r.at("oracle").at("agree").get<bool>() ? ". Oracle agrees." : ". ORACLE MISMATCH.");
    return os.str();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Optimization and convex geometry over discretely valued fields", "valfield"};
    app.fallthrough();
    app.require_subcommand(1);
    bool verify = false, summary = false;
    std::uint64_t seed = 0;
    std::string field_text, output, file;
    app.add_flag("--verify", verify, "Cross-check the result against an independent oracle");
    app.add_option("--seed", seed, "Seed for oracle sampling");
    app.add_option("--field", field_text, "Field descriptor JSON, overriding the file");
    app.add_option("-o,--output", output, "Write the result JSON to this path");
    app.add_flag("--summary", summary, "Print a one-line human summary to stderr");

    std::string task;
    auto leaf = [&](CLI::App* cmd, const std::string& name) {
        cmd->add_option("file", file, "Problem JSON, or - for stdin")->required();
        cmd->callback([&task, name] { task = name; });
    };
    leaf(app.add_subcommand("lp", "Linear program: optimize val<c,x> subject to Ax + b >= 0, Dx = e"), "lp");
    leaf(app.add_subcommand("snf", "Smith normal form over the valuation ring"), "snf");
    leaf(app.add_subcommand("psd", "Positive semidefiniteness via the characteristic polynomial"), "psd");
    auto* poly = app.add_subcommand("poly", "Polyhedra")->require_subcommand(1);
    leaf(poly->add_subcommand("project", "Direct image under an affine map (default: drop last coordinate)"),
         "poly-project");
    leaf(poly->add_subcommand("member", "Membership test"), "poly-member");
    leaf(poly->add_subcommand("empty", "Emptiness with a witness point"), "poly-empty");
    leaf(poly->add_subcommand("minkowski", "Minkowski sum"), "poly-minkowski");
    leaf(poly->add_subcommand("ball-form", "Canonical ball of a polyhedron in K"), "ball-form");
    leaf(poly->add_subcommand("polydisc", "Write a polyhedron as the image of a polydisc"), "poly-polydisc");
    auto* sdr = app.add_subcommand("sdr", "Semidefinite representations")->require_subcommand(1);
    leaf(sdr->add_subcommand("annulus", "Annulus or polyannulus representation"), "sdr-annulus");
    auto* spec = app.add_subcommand("spectra", "Spectrahedra")->require_subcommand(1);
    leaf(spec->add_subcommand("member", "Membership in a spectrahedron"), "spectra-member");
    leaf(spec->add_subcommand("describe", "Semialgebraic description"), "spectra-describe");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : InputError;
    }

    try {
        std::stringstream buf;
        if (file == "-") {
            buf << in.rdbuf();
        } else {
            std::ifstream fin(file);
            if (!fin) throw ParseError("cannot read " + file);
            buf << fin.rdbuf();
        }
        const Json problem = Json::parse(buf.str());
        if (problem.contains("task")) {
            const std::string tag = problem.at("task").get<std::string>();
            if (tag != task && !(task == "ball-form" && tag == "poly-ball-form"))
                throw ParseError("problem file is tagged \"" + tag + "\" but the subcommand is " + task);
        }
        std::optional<Field> over;
        if (!field_text.empty()) over = io::read_field(Json::parse(field_text));
        const Field f = io::problem_field(problem, over);

        const Json result = solve_task(task, problem, f, verify, seed);
        const std::string text = result.dump(2) + "\n";
        if (output.empty()) {
            out << text;
        } else {
            std::ofstream fout(output);
            if (!fout) throw ParseError("cannot write " + output);
            fout << text;
        }
        if (summary) err << render_summary(task, result) << "\n";
        if (result.contains("oracle") && !result.at("oracle").at("agree").get<bool>()) {
            err << "valfield: oracle disagrees with the result\n";
            return OracleMismatch;
        }
        return Ok;
    } catch (const Json::exception& e) {
        err << "valfield: malformed JSON: " << e.what() << "\n";
        return InputError;
    } catch (const Error& e) {
        err << "valfield: " << e.what() << "\n";
        return InputError;
    } catch (const std::exception& e) {
        err << "valfield: internal error: " << e.what() << "\n";
        return Internal;
    }
}

} // namespace valfield::cli
