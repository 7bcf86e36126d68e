#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gammakit/algebra.hpp"
#include "gammakit/errors.hpp"

namespace gammakit {

// Exponent pair of the monomial x^i * y^j.
struct Monomial2 {
    unsigned i = 0;
    unsigned j = 0;
    unsigned degree() const { return i + j; }
    friend bool operator==(const Monomial2&, const Monomial2&) = default;
};

// Graded-lexicographic term order, x before y, leading terms first:
// x^2 > xy > y^2 > x > y > 1.
struct GradedLexDesc {
    bool operator()(const Monomial2& a, const Monomial2& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return a.i > b.i;
    }
};

inline double ipow(double base, unsigned e) {
    double r = 1.0;
    for (unsigned k = 0; k < e; ++k) r *= base;
    return r;
}

namespace detail {
inline double pairwise_sum(const double* v, std::size_t n) {
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = v[0];
        for (std::size_t k = 1; k < n; ++k) s += v[k];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}
} // namespace detail

/// Sparse bivariate real polynomial in canonical form: no stored
/// coefficient is exactly 0.0, terms keyed by exponent pair in the
/// graded-lex order above. Exact-zero pruning is the only normalization;
/// tolerance decisions live in is_zero(), never in the ring operations.
class BiPoly {
public:
    using TermMap = std::map<Monomial2, double, GradedLexDesc>;

    BiPoly() = default;

    static BiPoly zero() { return BiPoly(); }

    static BiPoly constant(double c) {
        BiPoly p;
        p.set(0, 0, c);
        return p;
    }

    static BiPoly monomial(unsigned i, unsigned j, double c) {
        BiPoly p;
        p.set(i, j, c);
        return p;
    }

    static BiPoly x() { return monomial(1, 0, 1.0); }
    static BiPoly y() { return monomial(0, 1, 1.0); }

    // {{i, j, c}, ...}; duplicate exponent pairs accumulate.
    static BiPoly from_terms(std::initializer_list<std::tuple<unsigned, unsigned, double>> ts) {
        BiPoly p;
        for (const auto& [i, j, c] : ts) p.add_term(i, j, c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    double coeff(unsigned i, unsigned j) const {
        auto it = terms_.find(Monomial2{i, j});
        return it == terms_.end() ? 0.0 : it->second;
    }

    void set(unsigned i, unsigned j, double c) {
        if (c == 0.0)
            terms_.erase(Monomial2{i, j});
        else
            terms_[Monomial2{i, j}] = c;
    }

    void add_term(unsigned i, unsigned j, double c) {
        const Monomial2 m{i, j};
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) it->second += c;
        if (it->second == 0.0) terms_.erase(it);
    }

    // -1 stands in for the -infinity degree of the zero polynomial.
    int total_degree() const {
        if (terms_.empty()) return -1;
        return static_cast<int>(terms_.begin()->first.degree());
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& [mono, c] : terms_) m = std::max(m, std::abs(c));
        return m;
    }

    unsigned max_exponent_x() const {
        unsigned m = 0;
        for (const auto& [mono, c] : terms_) m = std::max(m, mono.i);
        return m;
    }

    unsigned max_exponent_y() const {
        unsigned m = 0;
        for (const auto& [mono, c] : terms_) m = std::max(m, mono.j);
        return m;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    BiPoly& operator+=(const BiPoly& q) {
        for (const auto& [m, c] : q.terms_) add_term(m.i, m.j, c);
        return *this;
    }

    BiPoly& operator-=(const BiPoly& q) {
        for (const auto& [m, c] : q.terms_) add_term(m.i, m.j, -c);
        return *this;
    }

    BiPoly& operator*=(double c) {
        if (c == 0.0) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= c;
            if (it->second == 0.0)
                it = terms_.erase(it);
            else
                ++it;
        }
        return *this;
    }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(const BiPoly& a) {
        BiPoly r = a;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend BiPoly operator*(BiPoly a, double c) { return a *= c; }
    friend BiPoly operator*(double c, BiPoly a) { return a *= c; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma.i + mb.i, ma.j + mb.j, ca * cb);
        return r;
    }

    // Per-term power evaluation reduced by pairwise summation.
    double operator()(double x, double y) const {
        std::vector<double> vals;
        vals.reserve(terms_.size());
        for (const auto& [m, c] : terms_) vals.push_back(c * ipow(x, m.i) * ipow(y, m.j));
        return detail::pairwise_sum(vals.data(), vals.size());
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const double a = std::abs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            const bool bare = (m.i == 0 && m.j == 0);
            if (a != 1.0 || bare) os << a;
            if (m.i > 0) {
                if (a != 1.0) os << "*";
                os << "x";
                if (m.i > 1) os << "^" << m.i;
            }
            if (m.j > 0) {
                if (m.i > 0 || a != 1.0) os << "*";
                os << "y";
                if (m.j > 1) os << "^" << m.j;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.str(); }

private:
    TermMap terms_;
};

inline double eval(const BiPoly& p, double x, double y) { return p(x, y); }

inline BiPoly partial_x(const BiPoly& p) {
    BiPoly r;
    for (const auto& [m, c] : p.terms())
        if (m.i > 0) r.add_term(m.i - 1, m.j, c * static_cast<double>(m.i));
    return r;
}

inline BiPoly partial_y(const BiPoly& p) {
    BiPoly r;
    for (const auto& [m, c] : p.terms())
        if (m.j > 0) r.add_term(m.i, m.j - 1, c * static_cast<double>(m.j));
    return r;
}

/// p_xx + alpha*p_xy + beta*p_yy.
inline BiPoly gamma_apply(const OperatorParams& op, const BiPoly& p) {
    const BiPoly px = partial_x(p);
    return partial_x(px) + op.alpha * partial_y(px) + op.beta * partial_y(partial_y(p));
}

/// Substitute u <- pu, v <- pv into h(u, v), with memoized power tables so
/// each pu^a, pv^b is formed once.
inline BiPoly compose(const BiPoly& h, const BiPoly& pu, const BiPoly& pv) {
    if (h.empty()) return BiPoly::zero();
    const unsigned mi = h.max_exponent_x();
    const unsigned mj = h.max_exponent_y();
    std::vector<BiPoly> pu_pow(mi + 1), pv_pow(mj + 1);
    pu_pow[0] = BiPoly::constant(1.0);
    for (unsigned a = 1; a <= mi; ++a) pu_pow[a] = pu_pow[a - 1] * pu;
    pv_pow[0] = BiPoly::constant(1.0);
    for (unsigned b = 1; b <= mj; ++b) pv_pow[b] = pv_pow[b - 1] * pv;
    BiPoly r;
    for (const auto& [m, c] : h.terms()) r += c * (pu_pow[m.i] * pv_pow[m.j]);
    return r;
}

/// Every coefficient within tol*scale of zero. scale is the caller's
/// input-coefficient magnitude; it must be positive.
inline bool is_zero(const BiPoly& p, double tol, double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("is_zero: scale must be positive");
    const double bound = tol * scale;
    for (const auto& [m, c] : p.terms())
        if (std::abs(c) > bound) return false;
    return true;
}

// Relative-check scale with a unit floor for all-zero inputs.
inline double scale_or_one(double s) { return s > 0.0 ? s : 1.0; }

} // namespace gammakit
