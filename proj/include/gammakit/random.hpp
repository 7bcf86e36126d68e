#pragma once

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <string_view>

#include "gammakit/algebra.hpp"
#include "gammakit/analytic.hpp"
#include "gammakit/bipoly.hpp"

namespace gammakit {

/// splitmix64: fixed 64-bit state, identical stream on every platform.
/// Chosen over std:: engines because their parameterizations (and
/// distribution implementations) are not pinned across standard libraries,
/// and reproducible streams are part of the CLI contract.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform magnitude in [lo, hi] with a random sign.
    double signed_uniform(double lo, double hi) {
        const double m = uniform(lo, hi);
        return (next() & 1) ? m : -m;
    }

  private:
    std::uint64_t state_;
};

/// Seed precedence: the explicit value wins unless it is absent, then the
/// GAMMAKIT_SEED environment variable, then 0. Unparseable env values fall
/// through to the fallback.
inline std::uint64_t seed_from_env(std::uint64_t fallback = 0) {
    const char* s = std::getenv("GAMMAKIT_SEED");
    if (!s) return fallback;
    std::string_view sv(s);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (ec != std::errc{} || ptr != sv.data() + sv.size()) return fallback;
    return value;
}

/// Dense random polynomial: every monomial of total degree <= max_degree
/// gets a coefficient uniform in [lo, hi]. Terms are drawn in graded order
/// so a given seed yields the same polynomial everywhere.
inline BiPoly random_bipoly(SplitMix64& rng, unsigned max_degree, double lo, double hi) {
    BiPoly p;
    for (unsigned d = 0; d <= max_degree; ++d)
        for (unsigned i = 0; i <= d; ++i) p.set(d - i, i, rng.uniform(lo, hi));
    return p;
}

/// Random z-polynomial of exactly the requested degree (the leading
/// coefficient is redrawn until its components are not both tiny).
inline APoly random_apoly(SplitMix64& rng, const AlgebraParams& alg, unsigned degree,
                          double lo, double hi) {
    std::vector<HNum> coeffs;
    coeffs.reserve(degree + 1);
    for (unsigned k = 0; k <= degree; ++k)
        coeffs.emplace_back(rng.uniform(lo, hi), rng.uniform(lo, hi), alg);
    while (std::abs(coeffs.back().re) < 1e-3 && std::abs(coeffs.back().im) < 1e-3)
        coeffs.back() = HNum(rng.uniform(lo, hi), rng.uniform(lo, hi), alg);
    return APoly(alg, std::move(coeffs));
}

} // namespace gammakit
