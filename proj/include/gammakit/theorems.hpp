#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gammakit/algebra.hpp"
#include "gammakit/analytic.hpp"
#include "gammakit/bipoly.hpp"
#include "gammakit/errors.hpp"

namespace gammakit {

/// Stencil order: Gamma applies the 9-point second-order stencil once,
/// GammaSquared composes it with itself on a nested grid.
enum class FDOrder { Gamma, GammaSquared };

struct FDScheme {
    double step = 1e-3;
    FDOrder order = FDOrder::Gamma;

    static double default_step(FDOrder o) { return o == FDOrder::Gamma ? 1e-3 : 1e-2; }
    static double default_tolerance(FDOrder o) { return o == FDOrder::Gamma ? 1e-4 : 1e-3; }
};

/// Outcome of one residual check. Symbolic checks carry the residual
/// polynomial and its largest coefficient magnitude; numeric checks carry
/// the largest absolute stencil value. Either way:
/// passed == (max_abs <= tolerance * scale).
struct ResidualReport {
    std::optional<BiPoly> residual;
    double max_abs = 0.0;
    double scale = 1.0;
    double tolerance = 0.0;
    bool passed = false;
};

inline ResidualReport make_symbolic_report(BiPoly residual, double tol, double scale) {
    ResidualReport r;
    r.max_abs = residual.max_abs_coeff();
    r.scale = scale;
    r.tolerance = tol;
    r.passed = r.max_abs <= tol * scale;
    r.residual = std::move(residual);
    return r;
}

inline ResidualReport make_numeric_report(double max_abs, double tol, double scale) {
    ResidualReport r;
    r.max_abs = max_abs;
    r.scale = scale;
    r.tolerance = tol;
    r.passed = max_abs <= tol * scale;
    return r;
}

namespace detail {
inline void require_operator_algebra(const APoly& F, const OperatorParams& op) {
    if (F.algebra() != algebra_from_operator(op))
        throw AlgebraMismatch("function algebra does not match the operator's algebra");
}
} // namespace detail

/// Both component polynomials of a z-polynomial over the operator's algebra
/// are annihilated by the operator. Returns the two symbolic residuals
/// (for u, then v); each must be the zero polynomial.
inline std::pair<ResidualReport, ResidualReport>
lemma1_residuals(const APoly& F, const OperatorParams& op, double tol = 1e-9) {
    detail::require_operator_algebra(F, op);
    const ComponentPair p = expand(F);
    const double scale = scale_or_one(std::max(p.u.max_abs_coeff(), p.v.max_abs_coeff()));
    return {make_symbolic_report(gamma_apply(op, p.u), tol, scale),
            make_symbolic_report(gamma_apply(op, p.v), tol, scale)};
}

/// Change of variables H = h(u(x,y), v(x,y)) with (u, v) the components of
/// F. When h solves the operator equation in its own variables, H solves it
/// in (x, y). The precondition on h is verified symbolically unless
/// require_solution is cleared.
inline BiPoly compose_solution(const BiPoly& h, const APoly& F, const OperatorParams& op,
                               double tol = 1e-9, bool require_solution = true) {
    detail::require_operator_algebra(F, op);
    if (require_solution) {
        const BiPoly gh = gamma_apply(op, h);
        if (!is_zero(gh, tol, scale_or_one(h.max_abs_coeff())))
            throw NotASolution("h is not annihilated by the operator in (u, v)");
    }
    const ComponentPair p = expand(F);
    return compose(h, p.u, p.v);
}

/// theorem1_residual's two checks: the composed residual Gamma(h o F), and
/// the factorization identity
///   Gamma(h o F) = |J(F)| * ((h_uu + alpha*h_uv + beta*h_vv) o F),
/// which holds for arbitrary h, not just solutions.
struct Theorem1Report {
    ResidualReport composition;
    ResidualReport factorization;
    BiPoly composed; // H = h o F
};

inline Theorem1Report theorem1_residual(const BiPoly& h, const APoly& F,
                                        const OperatorParams& op, double tol = 1e-8) {
    detail::require_operator_algebra(F, op);
    const ComponentPair p = expand(F);

    Theorem1Report out;
    out.composed = compose(h, p.u, p.v);
    const BiPoly lhs = gamma_apply(op, out.composed);
    out.composition =
        make_symbolic_report(lhs, tol, scale_or_one(out.composed.max_abs_coeff()));

    const BiPoly jac = partial_x(p.u) * partial_y(p.v) - partial_y(p.u) * partial_x(p.v);
    const BiPoly rhs = jac * compose(gamma_apply(op, h), p.u, p.v);
    // Scale includes H itself: when h solves the equation both sides are
    // roundoff over H, and the identity must not fail on that noise.
    const double fscale = scale_or_one(std::max(
        {lhs.max_abs_coeff(), rhs.max_abs_coeff(), out.composed.max_abs_coeff()}));
    out.factorization = make_symbolic_report(lhs - rhs, tol, fscale);
    return out;
}

/// Goursat-style generator for the squared operator: the imaginary
/// component of conj(z)*f(z) + g(z) for f, g over the operator's algebra.
inline BiPoly goursat_solution(const APoly& f, const APoly& g, const OperatorParams& op) {
    detail::require_operator_algebra(f, op);
    detail::require_operator_algebra(g, op);
    return zbar_times(f).v + expand(g).v;
}

/// Experimental real-part variant of the Goursat generator. Not covered by
/// the Im-based statement above; exercised empirically in the tests.
inline BiPoly goursat_solution_re(const APoly& f, const APoly& g, const OperatorParams& op) {
    detail::require_operator_algebra(f, op);
    detail::require_operator_algebra(g, op);
    return zbar_times(f).u + expand(g).u;
}

/// Symbolic residual Gamma(Gamma(h)) of the generated Goursat solution.
/// The square is literally two applications of gamma_apply.
inline ResidualReport theorem2_residual(const APoly& f, const APoly& g,
                                        const OperatorParams& op, double tol = 1e-8) {
    const BiPoly h = goursat_solution(f, g, op);
    const BiPoly r = gamma_apply(op, gamma_apply(op, h));
    return make_symbolic_report(r, tol, scale_or_one(h.max_abs_coeff()));
}

using ScalarField = std::function<double(double, double)>;

namespace detail {

// 9-point stencil: second central differences for dxx and dyy plus the
// cross difference (f(x+h,y+h) - f(x+h,y-h) - f(x-h,y+h) + f(x-h,y-h)) / (4h^2).
inline double gamma_stencil(const ScalarField& f, const OperatorParams& op, double h,
                            double x, double y, double& max_field) {
    auto probe = [&](double px, double py) {
        const double v = f(px, py);
        max_field = std::max(max_field, std::abs(v));
        return v;
    };
    const double c = probe(x, y);
    const double dxx = (probe(x + h, y) - 2.0 * c + probe(x - h, y)) / (h * h);
    const double dyy = (probe(x, y + h) - 2.0 * c + probe(x, y - h)) / (h * h);
    const double dxy = (probe(x + h, y + h) - probe(x + h, y - h) - probe(x - h, y + h) +
                        probe(x - h, y - h)) /
                       (4.0 * h * h);
    return dxx + op.alpha * dxy + op.beta * dyy;
}

} // namespace detail

/// Independent finite-difference oracle: largest absolute stencil residual
/// over the sample points, scaled by 1 + max |field| seen on the stencil.
inline ResidualReport fd_residual(const ScalarField& field, const OperatorParams& op,
                                  const FDScheme& scheme,
                                  const std::vector<std::pair<double, double>>& points,
                                  std::optional<double> tolerance = std::nullopt) {
    if (!(scheme.step > 0.0)) throw std::invalid_argument("stencil step must be positive");
    const double tol = tolerance.value_or(FDScheme::default_tolerance(scheme.order));
    double max_field = 0.0;
    double max_abs = 0.0;
    for (const auto& [x, y] : points) {
        double r;
        if (scheme.order == FDOrder::Gamma) {
            r = detail::gamma_stencil(field, op, scheme.step, x, y, max_field);
        } else {
            auto once = [&](double px, double py) {
                return detail::gamma_stencil(field, op, scheme.step, px, py, max_field);
            };
            double ignored = 0.0;
            r = detail::gamma_stencil(once, op, scheme.step, x, y, ignored);
        }
        max_abs = std::max(max_abs, std::abs(r));
    }
    return make_numeric_report(max_abs, tol, 1.0 + max_field);
}

} // namespace gammakit
