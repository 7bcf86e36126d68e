#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gammakit/gammakit.hpp>

namespace gk = gammakit;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gk::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

gk::json load_json(const std::string& path) { return gk::parse_json_text(read_file(path)); }

// Accepts either a bare z-polynomial document or the output of `generate`
// (which wraps it under "F"), so generated files round-trip unmodified.
gk::APoly load_apoly(const std::string& path) {
    gk::json j = load_json(path);
    if (j.is_object() && !j.contains("coeffs") && j.contains("F")) j = j["F"];
    return gk::apoly_from_json(j);
}

gk::BiPoly load_bipoly(const std::string& path) { return gk::bipoly_from_json(load_json(path)); }

void emit(const gk::json& j) { std::cout << j.dump(2) << '\n'; }

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gk::ParseError("cannot write " + path);
    out << text;
}

// One field per flag, per subcommand where the defaults differ: CLI11
// binds by reference, so two subcommands sharing a field would also share
// whichever default was registered last.
struct Options {
    double alpha = 0.0, beta = 1.0;
    double l1 = 0.0, l2 = 1.0;
    double verify_tol = 1e-9, generate_tol = 1e-9;
    double compose_tol = 1e-8, goursat_tol = 1e-8;
    double fd_tol = 0.0;
    double step = 0.0;
    unsigned degree = 0;
    int fd_order = 1, bvp_order = 1;
    std::uint64_t seed = 0;
    std::size_t fd_samples = 25, bvp_samples = 64;
    std::string in, h_path, f_path, g_path, field_path, data_path;
    std::string out_path, grid_path;
    std::string shape = "circle";
};

int run_classify(const Options& o, bool from_operator) {
    const gk::AlgebraParams alg = from_operator
                                      ? gk::algebra_from_operator({o.alpha, o.beta})
                                      : gk::AlgebraParams(o.l1, o.l2);
    emit(gk::algebra_to_json(alg));
    return 0;
}

int run_verify_cr(const Options& o) {
    const gk::AlgebraParams alg(o.l1, o.l2);
    const gk::APoly F = load_apoly(o.in);
    if (F.algebra() != alg)
        throw gk::AlgebraMismatch("input file algebra does not match --l1/--l2");
    const gk::ComponentPair p = gk::expand(F);
    const auto [r1, r2] = gk::cr_residuals(p, alg);
    const double scale = gk::scale_or_one(std::max(p.u.max_abs_coeff(), p.v.max_abs_coeff()));
    const gk::ResidualReport rep1 = gk::make_symbolic_report(r1, o.verify_tol, scale);
    const gk::ResidualReport rep2 = gk::make_symbolic_report(r2, o.verify_tol, scale);
    gk::json j;
    j["passed"] = rep1.passed && rep2.passed;
    j["r1"] = gk::report_to_json(rep1);
    j["r2"] = gk::report_to_json(rep2);
    emit(j);
    return (rep1.passed && rep2.passed) ? 0 : 1;
}

int run_generate(const Options& o) {
    const gk::OperatorParams op{o.alpha, o.beta};
    const gk::AlgebraParams alg = gk::algebra_from_operator(op);
    gk::SplitMix64 rng(o.seed);
    const gk::APoly F = gk::random_apoly(rng, alg, o.degree, -1.0, 1.0);
    const gk::ComponentPair p = gk::expand(F);
    const auto [ru, rv] = gk::lemma1_residuals(F, op, o.generate_tol);
    gk::json j;
    j["F"] = gk::apoly_to_json(F);
    j["u"] = gk::bipoly_to_json(p.u);
    j["v"] = gk::bipoly_to_json(p.v);
    j["lemma1"] = {{"u", gk::report_to_json(ru)}, {"v", gk::report_to_json(rv)}};
    emit(j);
    return (ru.passed && rv.passed) ? 0 : 1;
}

int run_compose(const Options& o) {
    const gk::BiPoly h = load_bipoly(o.h_path);
    const gk::APoly F = load_apoly(o.f_path);
    const gk::Theorem1Report rep = gk::theorem1_residual(h, F, {o.alpha, o.beta}, o.compose_tol);
    gk::json j;
    j["H"] = gk::bipoly_to_json(rep.composed);
    j["report"] = gk::report_to_json(rep.composition);
    j["factorization"] = gk::report_to_json(rep.factorization);
    emit(j);
    if (!rep.factorization.passed)
        std::cerr << "warning: factorization identity residual above tolerance\n";
    return rep.composition.passed ? 0 : 1;
}

int run_goursat(const Options& o) {
    const gk::OperatorParams op{o.alpha, o.beta};
    const gk::APoly f = load_apoly(o.f_path);
    const gk::APoly g = load_apoly(o.g_path);
    const gk::BiPoly h = gk::goursat_solution(f, g, op);
    const gk::ResidualReport rep = gk::theorem2_residual(f, g, op, o.goursat_tol);
    gk::json j;
    j["h"] = gk::bipoly_to_json(h);
    j["report"] = gk::report_to_json(rep);
    emit(j);
    return rep.passed ? 0 : 1;
}

int run_fd_verify(const Options& o, bool step_given, bool tol_given) {
    const gk::OperatorParams op{o.alpha, o.beta};
    const gk::BiPoly field = load_bipoly(o.field_path);
    const gk::FDOrder order = o.fd_order == 1 ? gk::FDOrder::Gamma : gk::FDOrder::GammaSquared;
    gk::FDScheme scheme;
    scheme.order = order;
    scheme.step = step_given ? o.step : gk::FDScheme::default_step(order);
    gk::SplitMix64 rng(o.seed);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(o.fd_samples);
    for (std::size_t k = 0; k < o.fd_samples; ++k) {
        const double x = rng.uniform(-1.0, 1.0);
        const double y = rng.uniform(-1.0, 1.0);
        pts.emplace_back(x, y);
    }
    const auto eval_field = [&](double x, double y) { return field(x, y); };
    const gk::ResidualReport rep = gk::fd_residual(
        eval_field, op, scheme, pts,
        tol_given ? std::optional<double>(o.fd_tol) : std::nullopt);
    gk::json j;
    j["order"] = o.fd_order;
    j["step"] = scheme.step;
    j["samples"] = o.fd_samples;
    j["seed"] = o.seed;
    j["report"] = gk::report_to_json(rep);
    emit(j);
    return rep.passed ? 0 : 1;
}

int run_solve_bvp(const Options& o) {
    const gk::OperatorParams op{o.alpha, o.beta};
    const std::vector<gk::BiPoly> basis =
        o.bvp_order == 1 ? gk::basis_gamma(op, o.degree) : gk::basis_gamma2(op, o.degree);
    const gk::ShapeTag shape = o.shape == "circle" ? gk::ShapeTag(gk::Circle{})
                                                   : gk::ShapeTag(gk::RectShape{});
    const gk::BiPoly data = load_bipoly(o.data_path);
    const gk::BoundarySample sample = gk::sample_boundary(shape, o.bvp_samples, data);
    gk::FitOptions fo;
    fo.op = op;
    fo.pde_order = o.bvp_order;
    const gk::CollocationFit fit = gk::fit_dirichlet(basis, sample, fo);

    const gk::json j = gk::fit_to_json(fit);
    emit(j);
    if (!fit.warning.empty()) std::cerr << "warning: " << fit.warning << '\n';
    if (!o.out_path.empty()) write_text(o.out_path, j.dump(2) + "\n");

    if (!o.grid_path.empty()) {
        // 21 x 21 grid over the shape's bounding box; circle grids keep
        // strictly interior points only.
        double x0, y0, x1, y1;
        const gk::Circle* circ = std::get_if<gk::Circle>(&shape);
        if (circ) {
            x0 = circ->cx - circ->r, x1 = circ->cx + circ->r;
            y0 = circ->cy - circ->r, y1 = circ->cy + circ->r;
        } else {
            const gk::RectShape& rc = std::get<gk::RectShape>(shape);
            x0 = rc.x0, x1 = rc.x1, y0 = rc.y0, y1 = rc.y1;
        }
        gk::BoundarySample grid;
        for (int iy = 0; iy <= 20; ++iy) {
            for (int ix = 0; ix <= 20; ++ix) {
                const double x = x0 + (x1 - x0) * ix / 20.0;
                const double y = y0 + (y1 - y0) * iy / 20.0;
                if (circ && std::hypot(x - circ->cx, y - circ->cy) >= circ->r) continue;
                grid.points.emplace_back(x, y);
            }
        }
        grid.values = gk::evaluate_fit(fit, grid.points);
        std::ostringstream csv;
        gk::write_boundary_csv(csv, grid);
        write_text(o.grid_path, csv.str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-parameter algebra toolkit: classification, generalized "
                 "Cauchy-Riemann checks, solution generation and composition, "
                 "finite-difference verification, and Dirichlet collocation"};
    app.require_subcommand(1);
    Options o;

    CLI::App* classify = app.add_subcommand(
        "classify", "classify an operator (--alpha/--beta) or an algebra (--l1/--l2)");
    auto* ca = classify->add_option("--alpha", o.alpha, "operator coefficient of the cross term");
    auto* cb = classify->add_option("--beta", o.beta, "operator coefficient of the yy term");
    auto* c1 = classify->add_option("--l1", o.l1, "algebra parameter l1");
    auto* c2 = classify->add_option("--l2", o.l2, "algebra parameter l2");
    ca->needs(cb);
    cb->needs(ca);
    c1->needs(c2);
    c2->needs(c1);
    ca->excludes(c1)->excludes(c2);
    cb->excludes(c1)->excludes(c2);

    CLI::App* verify = app.add_subcommand(
        "verify-cr", "verify the generalized Cauchy-Riemann conditions of a z-polynomial file");
    verify->add_option("--in", o.in, "z-polynomial JSON file")->required();
    verify->add_option("--l1", o.l1, "algebra parameter l1")->required();
    verify->add_option("--l2", o.l2, "algebra parameter l2")->required();
    verify->add_option("--tol", o.verify_tol, "relative tolerance")->capture_default_str();

    CLI::App* generate = app.add_subcommand(
        "generate", "emit a random z-polynomial, its components, and their operator residuals");
    generate->add_option("--alpha", o.alpha)->required();
    generate->add_option("--beta", o.beta)->required();
    generate->add_option("--degree", o.degree, "polynomial degree")->required();
    auto* gseed = generate->add_option("--seed", o.seed, "generator seed");
    generate->add_option("--tol", o.generate_tol, "relative tolerance")->capture_default_str();

    CLI::App* compose = app.add_subcommand(
        "compose", "compose h(u, v) with a z-polynomial and verify the result solves the equation");
    // long-only help so the option named "h" stays available
    compose->set_help_flag("--help", "print help and exit");
    compose->add_option("--h", o.h_path, "polynomial in (u, v), JSON file")->required();
    compose->add_option("--f", o.f_path, "z-polynomial JSON file")->required();
    compose->add_option("--alpha", o.alpha)->required();
    compose->add_option("--beta", o.beta)->required();
    compose->add_option("--tol", o.compose_tol, "relative tolerance")->capture_default_str();

    CLI::App* goursat = app.add_subcommand(
        "goursat", "build Im(conj(z) f + g) and verify it solves the squared equation");
    goursat->add_option("--f", o.f_path, "z-polynomial JSON file")->required();
    goursat->add_option("--g", o.g_path, "z-polynomial JSON file")->required();
    goursat->add_option("--alpha", o.alpha)->required();
    goursat->add_option("--beta", o.beta)->required();
    goursat->add_option("--tol", o.goursat_tol, "relative tolerance")->capture_default_str();

    CLI::App* fd = app.add_subcommand(
        "fd-verify", "check a polynomial field against the finite-difference stencil oracle");
    fd->add_option("--field", o.field_path, "polynomial JSON file")->required();
    fd->add_option("--alpha", o.alpha)->required();
    fd->add_option("--beta", o.beta)->required();
    fd->add_option("--order", o.fd_order, "1 applies the operator, 2 its square")
        ->capture_default_str()
        ->check(CLI::Range(1, 2));
    auto* fstep = fd->add_option("--step", o.step, "stencil spacing (default by order)");
    fd->add_option("--samples", o.fd_samples, "number of random sample points in [-1,1]^2")
        ->capture_default_str();
    auto* fseed = fd->add_option("--seed", o.seed, "generator seed");
    auto* ftol =
        fd->add_option("--tol", o.fd_tol, "absolute tolerance, scaled by 1 + max |field|");

    CLI::App* solve = app.add_subcommand(
        "solve-bvp", "fit Dirichlet boundary data by least-squares collocation");
    solve->add_option("--alpha", o.alpha)->required();
    solve->add_option("--beta", o.beta)->required();
    solve->add_option("--order", o.bvp_order, "1 fits the operator equation, 2 its square")
        ->capture_default_str()
        ->check(CLI::Range(1, 2));
    solve->add_option("--degree", o.degree, "maximum basis degree")->required();
    solve->add_option("--shape", o.shape, "boundary shape: unit circle or [-1,1]^2")
        ->capture_default_str()
        ->check(CLI::IsMember({"circle", "rect"}));
    solve->add_option("--samples", o.bvp_samples, "number of boundary samples")
        ->capture_default_str();
    solve->add_option("--data", o.data_path, "boundary data polynomial, JSON file")->required();
    solve->add_option("--out", o.out_path, "also write the fit JSON to this file");
    solve->add_option("--grid", o.grid_path, "write fitted values on an interior grid as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(classify)) {
            if (!ca->count() && !c1->count()) {
                std::cerr << "classify: give either --alpha/--beta or --l1/--l2\n";
                return 2;
            }
            return run_classify(o, ca->count() > 0);
        }
        if (app.got_subcommand(verify)) return run_verify_cr(o);
        if (app.got_subcommand(generate)) {
            if (!gseed->count()) o.seed = gk::seed_from_env(0);
            return run_generate(o);
        }
        if (app.got_subcommand(compose)) return run_compose(o);
        if (app.got_subcommand(goursat)) return run_goursat(o);
        if (app.got_subcommand(fd)) {
            if (!fseed->count()) o.seed = gk::seed_from_env(0);
            return run_fd_verify(o, fstep->count() > 0, ftol->count() > 0);
        }
        if (app.got_subcommand(solve)) return run_solve_bvp(o);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const gk::NotASolution& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const gk::UnderDetermined& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const gk::DegenerateBasis& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
