#pragma once

#include <Eigen/Dense>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gammakit/algebra.hpp"
#include "gammakit/analytic.hpp"
#include "gammakit/bipoly.hpp"
#include "gammakit/errors.hpp"

namespace gammakit {

struct Circle {
    double cx = 0.0;
    double cy = 0.0;
    double r = 1.0;
};

struct RectShape {
    double x0 = -1.0;
    double y0 = -1.0;
    double x1 = 1.0;
    double y1 = 1.0;
};

/// Marker for samples whose points came from elsewhere (a file, a user).
struct CustomShape {};

using ShapeTag = std::variant<Circle, RectShape, CustomShape>;

/// Dirichlet data: collocation points with one value per point.
struct BoundarySample {
    std::vector<std::pair<double, double>> points;
    std::vector<double> values;
    ShapeTag shape_tag = CustomShape{};

    std::size_t size() const { return points.size(); }
};

/// Evenly spaced boundary points: uniform angle starting at angle 0 on a
/// circle, uniform arc length along the rectangle perimeter starting at
/// (x0, y0) and walking counterclockwise.
inline std::vector<std::pair<double, double>> boundary_points(const ShapeTag& shape,
                                                              std::size_t m) {
    if (m == 0) throw std::invalid_argument("need at least one boundary point");
    std::vector<std::pair<double, double>> pts;
    pts.reserve(m);
    if (const Circle* c = std::get_if<Circle>(&shape)) {
        if (!(c->r > 0.0)) throw std::invalid_argument("circle radius must be positive");
        for (std::size_t k = 0; k < m; ++k) {
            const double th = 2.0 * std::numbers::pi * static_cast<double>(k) /
                              static_cast<double>(m);
            pts.emplace_back(c->cx + c->r * std::cos(th), c->cy + c->r * std::sin(th));
        }
        return pts;
    }
    if (const RectShape* rc = std::get_if<RectShape>(&shape)) {
        const double w = rc->x1 - rc->x0;
        const double h = rc->y1 - rc->y0;
        if (!(w > 0.0) || !(h > 0.0))
            throw std::invalid_argument("rectangle must have positive width and height");
        const double per = 2.0 * (w + h);
        for (std::size_t k = 0; k < m; ++k) {
            const double s = per * static_cast<double>(k) / static_cast<double>(m);
            double x, y;
            if (s < w) {
                x = rc->x0 + s;
                y = rc->y0;
            } else if (s < w + h) {
                x = rc->x1;
                y = rc->y0 + (s - w);
            } else if (s < 2.0 * w + h) {
                x = rc->x1 - (s - w - h);
                y = rc->y1;
            } else {
                x = rc->x0;
                y = rc->y1 - (s - 2.0 * w - h);
            }
            pts.emplace_back(x, y);
        }
        return pts;
    }
    throw std::invalid_argument("custom shapes carry their own points");
}

inline BoundarySample sample_boundary(const ShapeTag& shape, std::size_t m,
                                      const std::function<double(double, double)>& data) {
    BoundarySample s;
    s.points = boundary_points(shape, m);
    s.values.reserve(m);
    for (const auto& [x, y] : s.points) s.values.push_back(data(x, y));
    s.shape_tag = shape;
    return s;
}

inline BoundarySample sample_boundary(const ShapeTag& shape, std::size_t m,
                                      const BiPoly& data) {
    return sample_boundary(shape, m,
                           [&](double x, double y) { return data(x, y); });
}

/// Solution basis for the operator's equation up to degree D over
/// A_{alpha/beta, 1/beta}: the real component of z^0, then for each k in
/// 1..D the real and imaginary components of z^k. The imaginary component
/// of z^0 is zero and is skipped. Entries are operator-annihilated by
/// construction and linearly independent (leading monomials x^k, x^{k-1}y).
inline std::vector<BiPoly> basis_gamma(const OperatorParams& op, unsigned max_degree) {
    const AlgebraParams alg = algebra_from_operator(op);
    std::vector<BiPoly> out;
    out.reserve(2 * static_cast<std::size_t>(max_degree) + 1);
    out.push_back(BiPoly::constant(1.0));
    for (unsigned k = 1; k <= max_degree; ++k) {
        const ComponentPair p = expand(APoly::monomial(alg, k, HNum::one(alg)));
        out.push_back(p.u);
        out.push_back(p.v);
    }
    return out;
}

namespace detail {

// Dense coefficient vector over all monomials of total degree <= maxdeg.
inline Eigen::VectorXd to_dense(const BiPoly& p, unsigned maxdeg) {
    const unsigned dim = (maxdeg + 1) * (maxdeg + 2) / 2;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
    for (const auto& [m, c] : p.terms()) {
        const unsigned d = m.i + m.j;
        v(d * (d + 1) / 2 + m.j) = c;
    }
    return v;
}

// Modified Gram-Schmidt rank filter: a candidate survives when its
// component orthogonal to everything accepted so far keeps at least
// rel_threshold of its original length. The second sweep re-orthogonalizes
// against accumulated roundoff.
class RankFilter {
  public:
    RankFilter(unsigned maxdeg, double rel_threshold)
        : maxdeg_(maxdeg), rel_(rel_threshold) {}

    bool accept(const BiPoly& p) {
        Eigen::VectorXd w = to_dense(p, maxdeg_);
        const double n0 = w.norm();
        if (!(n0 > 0.0)) return false;
        for (const auto& q : ortho_) w -= q.dot(w) * q;
        for (const auto& q : ortho_) w -= q.dot(w) * q;
        const double n1 = w.norm();
        if (n1 <= rel_ * n0) return false;
        ortho_.push_back(w / n1);
        return true;
    }

  private:
    unsigned maxdeg_;
    double rel_;
    std::vector<Eigen::VectorXd> ortho_;
};

} // namespace detail

/// Solution basis for the squared operator up to degree D: basis_gamma
/// extended with the conjugate-product generators Im(conj(z) z^k) and
/// Im(conj(z) j z^k) for k in 0..D, which together span Im(conj(z) f(z))
/// over all f of degree <= D. Linearly dependent candidates (the k = 0
/// pair always, and more wherever the algebra makes generators collide)
/// are dropped by a Gram-Schmidt rank filter at relative threshold 1e-10.
inline std::vector<BiPoly> basis_gamma2(const OperatorParams& op, unsigned max_degree) {
    const AlgebraParams alg = algebra_from_operator(op);
    const unsigned maxdeg = max_degree + 1; // conj(z) * z^D has degree D + 1
    detail::RankFilter filter(maxdeg, 1e-10);
    std::vector<BiPoly> out;
    for (BiPoly& p : basis_gamma(op, max_degree)) {
        if (filter.accept(p)) out.push_back(std::move(p));
    }
    for (unsigned k = 0; k <= max_degree; ++k) {
        for (const HNum& c : {HNum::one(alg), HNum::j(alg)}) {
            BiPoly cand = zbar_times(APoly::monomial(alg, k, c)).v;
            if (filter.accept(cand)) out.push_back(std::move(cand));
        }
    }
    return out;
}

struct FitOptions {
    /// When set, every basis element is checked symbolically against the
    /// operator (pde_order 1) or its square (pde_order 2) before fitting,
    /// and hyperbolic operators attach a well-posedness warning.
    std::optional<OperatorParams> op;
    int pde_order = 1;
    double rank_threshold = 1e-10;
};

struct CollocationFit {
    std::vector<BiPoly> basis;
    std::vector<double> coefficients;       // one per basis element, dropped ones 0.0
    std::vector<std::size_t> dropped_columns;
    double boundary_rms = 0.0;
    double condition_estimate = 1.0;
    std::string warning;                    // empty when no diagnostic applies
};

/// Least-squares collocation for Dirichlet data: minimize the boundary
/// residual over the basis span with column-pivoted Householder QR (never
/// normal equations). Requires at least twice as many samples as basis
/// elements. Columns judged rank-deficient at the relative diagonal
/// threshold are dropped (zero coefficient) and reported.
inline CollocationFit fit_dirichlet(const std::vector<BiPoly>& basis,
                                    const BoundarySample& sample,
                                    const FitOptions& opts = {}) {
    const std::size_t n = basis.size();
    const std::size_t m = sample.points.size();
    if (sample.values.size() != m)
        throw std::invalid_argument("boundary sample has mismatched points and values");
    if (n == 0) throw DegenerateBasis("empty basis");
    if (m < 2 * n)
        throw UnderDetermined("need at least twice as many boundary samples as basis elements");

    if (opts.op) {
        if (opts.pde_order != 1 && opts.pde_order != 2)
            throw std::invalid_argument("pde_order must be 1 or 2");
        for (std::size_t k = 0; k < n; ++k) {
            BiPoly r = gamma_apply(*opts.op, basis[k]);
            if (opts.pde_order == 2) r = gamma_apply(*opts.op, r);
            if (!is_zero(r, 1e-9, scale_or_one(basis[k].max_abs_coeff())))
                throw std::invalid_argument("basis element " + std::to_string(k) +
                                            " does not satisfy the target equation");
        }
    }

    Eigen::MatrixXd A(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
    Eigen::VectorXd b(static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i) {
        b(static_cast<Eigen::Index>(i)) = sample.values[i];
        for (std::size_t k = 0; k < n; ++k)
            A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                basis[k](sample.points[i].first, sample.points[i].second);
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr;
    qr.setThreshold(opts.rank_threshold);
    qr.compute(A);
    const Eigen::Index rank = qr.rank();
    if (rank == 0) throw DegenerateBasis("basis evaluates to rank zero on the samples");

    const Eigen::VectorXd c = qr.solve(b);

    CollocationFit fit;
    fit.basis = basis;
    fit.coefficients.assign(c.data(), c.data() + c.size());

    const auto& perm = qr.colsPermutation().indices();
    for (Eigen::Index k = rank; k < static_cast<Eigen::Index>(n); ++k)
        fit.dropped_columns.push_back(static_cast<std::size_t>(perm(k)));
    std::sort(fit.dropped_columns.begin(), fit.dropped_columns.end());
    for (std::size_t k : fit.dropped_columns) fit.coefficients[k] = 0.0;

    const Eigen::VectorXd resid = A * c - b;
    fit.boundary_rms = std::sqrt(resid.squaredNorm() / static_cast<double>(m));

    const auto& R = qr.matrixR();
    fit.condition_estimate = std::abs(R(0, 0) / R(rank - 1, rank - 1));

    if (opts.op && opts.op->kind() == AlgebraKind::Hyperbolic)
        fit.warning = "hyperbolic operator: the Dirichlet problem on a closed "
                      "boundary is not well posed; treat this fit as a formal "
                      "least-squares projection";
    return fit;
}

inline std::vector<double>
evaluate_fit(const CollocationFit& fit, const std::vector<std::pair<double, double>>& points) {
    if (fit.basis.size() != fit.coefficients.size())
        throw std::invalid_argument("coefficient count does not match basis size");
    std::vector<double> out;
    out.reserve(points.size());
    std::vector<double> terms(fit.basis.size());
    for (const auto& [x, y] : points) {
        for (std::size_t k = 0; k < fit.basis.size(); ++k)
            terms[k] = fit.coefficients[k] * fit.basis[k](x, y);
        out.push_back(detail::pairwise_sum(terms.data(), terms.size()));
    }
    return out;
}

} // namespace gammakit
