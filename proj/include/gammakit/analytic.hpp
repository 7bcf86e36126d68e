#pragma once

#include <utility>
#include <vector>

#include "gammakit/algebra.hpp"
#include "gammakit/bipoly.hpp"
#include "gammakit/errors.hpp"

namespace gammakit {

/// Real and imaginary component polynomials of an algebra-valued function
/// u(x,y) + j*v(x,y).
struct ComponentPair {
    BiPoly u;
    BiPoly v;
};

/// Product of two component pairs under the algebra rule
/// j^2 = -l2 - l1*j. This is the one place that reduces powers of j;
/// expansion and conjugate products all route through it.
inline ComponentPair pair_mul(const ComponentPair& a, const ComponentPair& b,
                              const AlgebraParams& alg) {
    const BiPoly bd = a.v * b.v;
    return ComponentPair{a.u * b.u - alg.l2() * bd,
                         a.u * b.v + a.v * b.u - alg.l1() * bd};
}

/// Polynomial in z = x + j*y with coefficients from one algebra. Such
/// functions satisfy the generalized Cauchy-Riemann conditions by
/// construction, which makes them the constructive family for every
/// solution generator here.
class APoly {
public:
    explicit APoly(const AlgebraParams& alg) : algebra_(alg) {}

    APoly(const AlgebraParams& alg, std::vector<HNum> coeffs) : algebra_(alg) {
        for (const HNum& c : coeffs)
            if (c.algebra != alg)
                throw AlgebraMismatch("coefficient algebra differs from container");
        coeffs_ = std::move(coeffs);
        trim();
    }

    /// Coefficients given as (re, im) pairs, index = power of z.
    static APoly from_pairs(const AlgebraParams& alg,
                            const std::vector<std::pair<double, double>>& cs) {
        std::vector<HNum> coeffs;
        coeffs.reserve(cs.size());
        for (const auto& [re, im] : cs) coeffs.emplace_back(re, im, alg);
        return APoly(alg, std::move(coeffs));
    }

    static APoly zero(const AlgebraParams& alg) { return APoly(alg); }

    static APoly constant(const HNum& c) { return APoly(c.algebra, {c}); }

    /// The identity function z.
    static APoly z(const AlgebraParams& alg) {
        return APoly(alg, {HNum::zero(alg), HNum::one(alg)});
    }

    /// c * z^k.
    static APoly monomial(const AlgebraParams& alg, unsigned k, const HNum& c) {
        std::vector<HNum> coeffs(k + 1, HNum::zero(alg));
        coeffs[k] = c;
        return APoly(alg, std::move(coeffs));
    }

    const AlgebraParams& algebra() const { return algebra_; }
    const std::vector<HNum>& coeffs() const { return coeffs_; }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    HNum coeff(unsigned k) const {
        return k < coeffs_.size() ? coeffs_[k] : HNum::zero(algebra_);
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().re == 0.0 && coeffs_.back().im == 0.0)
            coeffs_.pop_back();
    }

    AlgebraParams algebra_;
    std::vector<HNum> coeffs_;
};

/// Expand F(z) = sum c_k z^k with z = x + j*y into component polynomials
/// (u, v), reducing powers of j through pair_mul.
inline ComponentPair expand(const APoly& F) {
    const AlgebraParams& alg = F.algebra();
    const ComponentPair zpair{BiPoly::x(), BiPoly::y()};
    ComponentPair acc{BiPoly::zero(), BiPoly::zero()};
    ComponentPair zpow{BiPoly::constant(1.0), BiPoly::zero()};
    for (std::size_t k = 0; k < F.coeffs().size(); ++k) {
        if (k > 0) zpow = pair_mul(zpow, zpair, alg);
        const HNum& c = F.coeffs()[k];
        if (c.re == 0.0 && c.im == 0.0) continue;
        const ComponentPair cpair{BiPoly::constant(c.re), BiPoly::constant(c.im)};
        const ComponentPair term = pair_mul(cpair, zpow, alg);
        acc.u += term.u;
        acc.v += term.v;
    }
    return acc;
}

/// Generalized Cauchy-Riemann residuals:
///   r1 = u_x - v_y - l1*v_x,  r2 = u_y + l2*v_x.
/// The pair defines a differentiable function over the algebra iff both
/// vanish identically.
inline std::pair<BiPoly, BiPoly> cr_residuals(const ComponentPair& p, const AlgebraParams& alg) {
    const BiPoly vx = partial_x(p.v);
    return {partial_x(p.u) - partial_y(p.v) - alg.l1() * vx,
            partial_y(p.u) + alg.l2() * vx};
}

inline bool is_a_differentiable(const ComponentPair& p, const AlgebraParams& alg, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    const auto [r1, r2] = cr_residuals(p, alg);
    const double scale = scale_or_one(std::max(p.u.max_abs_coeff(), p.v.max_abs_coeff()));
    return is_zero(r1, tol, scale) && is_zero(r2, tol, scale);
}

/// Components of conj(z) * f(z), with conj(z) = x - j*y:
///   real = x*uf + l2*y*vf,  imag = x*vf - y*uf + l1*y*vf.
inline ComponentPair zbar_times(const APoly& f) {
    const ComponentPair zbar{BiPoly::x(), -BiPoly::y()};
    return pair_mul(zbar, expand(f), f.algebra());
}

/// Horner evaluation of F at a point of the same algebra.
inline HNum apoly_eval(const APoly& F, const HNum& z) {
    if (z.algebra != F.algebra())
        throw AlgebraMismatch("evaluation point belongs to a different algebra");
    HNum acc = HNum::zero(F.algebra());
    for (auto it = F.coeffs().rbegin(); it != F.coeffs().rend(); ++it) acc = acc * z + *it;
    return acc;
}

} // namespace gammakit
