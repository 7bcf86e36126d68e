#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>

#include "gammakit/errors.hpp"

namespace gammakit {

/// Sign class of the discriminant l1^2 - 4*l2 (operator form: alpha^2 - 4*beta).
enum class AlgebraKind { Elliptic, Parabolic, Hyperbolic };

inline const char* kind_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::Elliptic: return "Elliptic";
        case AlgebraKind::Parabolic: return "Parabolic";
        case AlgebraKind::Hyperbolic: return "Hyperbolic";
    }
    return "?";
}

inline AlgebraKind classify_discriminant(double d) {
    if (d < 0.0) return AlgebraKind::Elliptic;
    if (d > 0.0) return AlgebraKind::Hyperbolic;
    return AlgebraKind::Parabolic;
}

/// The parameter pair (l1, l2) of the commutative unital algebra with
/// basis {1, j} and defining relation j^2 = -l2 - l1*j.
///
/// Parameters are canonicalized at construction (-0.0 becomes +0.0) so the
/// bitwise identity test used for mismatch detection never splits one
/// algebra into two.
class AlgebraParams {
public:
    AlgebraParams(double l1, double l2) : l1_(l1 + 0.0), l2_(l2 + 0.0) {
        if (!std::isfinite(l1) || !std::isfinite(l2))
            throw std::invalid_argument("algebra parameters must be finite");
    }

    double l1() const { return l1_; }
    double l2() const { return l2_; }

    double discriminant() const { return l1_ * l1_ - 4.0 * l2_; }
    AlgebraKind kind() const { return classify_discriminant(discriminant()); }

    friend bool operator==(const AlgebraParams& a, const AlgebraParams& b) {
        return std::bit_cast<std::uint64_t>(a.l1_) == std::bit_cast<std::uint64_t>(b.l1_) &&
               std::bit_cast<std::uint64_t>(a.l2_) == std::bit_cast<std::uint64_t>(b.l2_);
    }
    friend bool operator!=(const AlgebraParams& a, const AlgebraParams& b) { return !(a == b); }

private:
    double l1_;
    double l2_;
};

/// Coefficients (alpha, beta) of the second-order operator
/// dxx + alpha*dxy + beta*dyy.
struct OperatorParams {
    double alpha = 0.0;
    double beta = 1.0;

    double discriminant() const { return alpha * alpha - 4.0 * beta; }
    AlgebraKind kind() const { return classify_discriminant(discriminant()); }
};

/// The algebra whose differentiable functions interact with the operator
/// (alpha, beta): (l1, l2) = (alpha/beta, 1/beta). Requires beta != 0.
inline AlgebraParams algebra_from_operator(const OperatorParams& op) {
    if (op.beta == 0.0)
        throw DegenerateOperator("beta = 0: operator induces no algebra");
    return AlgebraParams(op.alpha / op.beta, 1.0 / op.beta);
}

/// An element t + s*j of a specific algebra. The parameters ride along with
/// the value; binary operations refuse to mix distinct algebras.
struct HNum {
    double re = 0.0;
    double im = 0.0;
    AlgebraParams algebra;

    HNum(double t, double s, const AlgebraParams& alg) : re(t), im(s), algebra(alg) {}
    static HNum zero(const AlgebraParams& alg) { return HNum(0.0, 0.0, alg); }
    static HNum one(const AlgebraParams& alg) { return HNum(1.0, 0.0, alg); }
    static HNum j(const AlgebraParams& alg) { return HNum(0.0, 1.0, alg); }
};

namespace detail {
inline void require_same_algebra(const HNum& a, const HNum& b) {
    if (a.algebra != b.algebra)
        throw AlgebraMismatch("operands belong to different algebras");
}
} // namespace detail

inline HNum operator+(const HNum& a, const HNum& b) {
    detail::require_same_algebra(a, b);
    return HNum(a.re + b.re, a.im + b.im, a.algebra);
}

inline HNum operator-(const HNum& a, const HNum& b) {
    detail::require_same_algebra(a, b);
    return HNum(a.re - b.re, a.im - b.im, a.algebra);
}

inline HNum operator-(const HNum& a) { return HNum(-a.re, -a.im, a.algebra); }

/// (a + bj)(c + dj) = (ac - l2*bd) + (ad + bc - l1*bd) j.
inline HNum operator*(const HNum& a, const HNum& b) {
    detail::require_same_algebra(a, b);
    const double bd = a.im * b.im;
    return HNum(a.re * b.re - a.algebra.l2() * bd,
                a.re * b.im + a.im * b.re - a.algebra.l1() * bd,
                a.algebra);
}

inline HNum operator*(double c, const HNum& z) { return HNum(c * z.re, c * z.im, z.algebra); }
inline HNum operator*(const HNum& z, double c) { return c * z; }

inline HNum conjugate(const HNum& z) { return HNum(z.re, -z.im, z.algebra); }

/// Determinant of the multiplication-by-z map: t^2 - l1*t*s + l2*s^2.
/// Vanishes exactly on zero and on zero divisors.
inline double norm_form(const HNum& z) {
    return z.re * z.re - z.algebra.l1() * z.re * z.im + z.algebra.l2() * z.im * z.im;
}

/// Reciprocal, solving (t + sj) w = 1. Zero divisors are detected by
/// |norm_form| <= 1e-12 * max(1, t^2 + s^2).
inline HNum inverse(const HNum& z) {
    const double det = norm_form(z);
    const double tol = 1e-12 * std::max(1.0, z.re * z.re + z.im * z.im);
    if (std::abs(det) <= tol)
        throw NotInvertible("zero or zero divisor has no inverse");
    return HNum((z.re - z.algebra.l1() * z.im) / det, -z.im / det, z.algebra);
}

inline HNum pow(const HNum& z, unsigned n) {
    HNum acc = HNum::one(z.algebra);
    for (unsigned k = 0; k < n; ++k) acc = acc * z;
    return acc;
}

inline std::ostream& operator<<(std::ostream& os, const HNum& z) {
    return os << z.re << (z.im < 0 ? " - " : " + ") << std::abs(z.im) << "j";
}

} // namespace gammakit
