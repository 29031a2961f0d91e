#include "poincare/desitter.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace poincare {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// ln(((q + p)^2 + msq) / (2 p (q + p))) with q = sqrt(p^2 + msq) and
// msq = m2^2: equals 2 atanh((q - p)/(q + p)).  Factored into
// log1p(msq / (2 p (q + p))) + log1p((m2 / (q + p))^2) so the value stays
// accurate near zero and finite wherever sigma itself fits in a double,
// even when msq or the inner quotient would overflow.
double sigma_log_form(double m2, double p) {
    const double q = std::hypot(p, m2);
    const double qp = q + p;
    const double ratio = m2 / qp;  // in [0, 1)
    const double t = m2 * ratio / (2.0 * p);
    const double lead = std::isfinite(t)
                            ? std::log1p(t)
                            : std::log(m2) + std::log(ratio) - std::log(2.0 * p);
    return lead + std::log1p(ratio * ratio);
}

}  // namespace

MassPair mass_decompose(double m, double chi) {
    if (!(std::isfinite(m) && std::isfinite(chi))) throw NonFiniteError("mass_decompose");
    if (m < 0.0) throw DomainError("mass must be >= 0");
    if (chi < 0.0 || chi > kHalfPi) throw DomainError("chi must lie in [0, pi/2]");
    return {m * std::cos(chi), m * std::sin(chi)};
}

DeSitterState::DeSitterState(double m, double chi, double p) : m_(m), chi_(chi), p_(p) {
    mass_decompose(m, chi);  // reuse the domain checks on m and chi
    if (!std::isfinite(p) || p < 0.0) throw DomainError("momentum must be finite and >= 0");
}

EnergyPair energies(const DeSitterState& s) {
    const MassPair mp = mass_decompose(s.m(), s.chi());
    return {std::hypot(mp.m1, s.p()), std::hypot(mp.m2, s.p())};
}

FiveVector five_vector(const DeSitterState& s) {
    const EnergyPair e = energies(s);
    return {e.e1, e.e2, s.p(), 0.0, 0.0};
}

std::pair<ComplexMat2, ComplexMat2> momentum_matrix_pair(const DeSitterState& s) {
    const MassPair mp = mass_decompose(s.m(), s.chi());
    const EnergyPair e = energies(s);
    const double hi1 = e.e1 + s.p(), hi2 = e.e2 + s.p();
    return {ComplexMat2::diagonal(hi1, mp.m1 * mp.m1 / hi1),
            ComplexMat2::diagonal(hi2, mp.m2 * mp.m2 / hi2)};
}

double sigma_from_chi(const DeSitterState& s) {
    const MassPair mp = mass_decompose(s.m(), s.chi());
    const double msq = mp.m2 * mp.m2;
    if (s.p() == 0.0) {
        if (msq > 0.0)
            throw ZeroMomentumError("sigma diverges at p = 0 for a massive second channel");
        return 0.0;
    }
    return sigma_log_form(mp.m2, s.p());
}

double sigma_max(double m, double p) {
    if (!(std::isfinite(m) && std::isfinite(p))) throw NonFiniteError("sigma_max");
    if (m <= 0.0) throw DomainError("mass must be > 0");
    if (p <= 0.0) throw ZeroMomentumError("sigma bound needs p > 0");
    return sigma_log_form(m, p);
}

double chi_from_sigma(double m, double p, double sigma) {
    if (!std::isfinite(sigma)) throw NonFiniteError("chi_from_sigma");
    if (sigma < 0.0) throw NegativeSigmaError(sigma);
    const double bound = sigma_max(m, p);  // validates m and p
    if (sigma > bound) {
        if (sigma - bound <= 1e-5 * std::max(1.0, bound)) return kHalfPi;
        throw OutOfRangeError("sigma exceeds the value reachable at chi = pi/2");
    }
    // The maximum of sigma over chi is quadratic, so chi(sigma) has a
    // square-root singularity at the bound: one rounding error in sigma is
    // worth ~1e-8 in chi there.  Inside a few ulps of the bound, pi/2 is
    // the backward-stable answer; computing through asin would surrender
    // half the digits for no informational gain.
    if (bound - sigma <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, bound))
        return kHalfPi;
    // sin^2(chi) = 4 p^2 t / (m^2 (1 - t)^2) with t = tanh(sigma/2) and
    // 1 - t = 2 / (e^sigma + 1); the log branch avoids overflowing e^sigma
    double s2;
    if (sigma < 300.0) {
        const double t = std::tanh(0.5 * sigma);
        const double ep1 = std::exp(sigma) + 1.0;
        s2 = p * p * t * ep1 * ep1 / (m * m);
    } else {
        const double log_t = std::log(std::tanh(0.5 * sigma));
        s2 = std::exp(2.0 * std::log(p / m) + log_t + 2.0 * sigma +
                      2.0 * std::log1p(std::exp(-sigma)));
    }
    return std::asin(std::sqrt(std::min(1.0, s2)));
}

double bridge_lhs(double sigma) {
    if (!std::isfinite(sigma)) throw NonFiniteError("bridge_lhs");
    if (sigma < 0.0) throw NegativeSigmaError(sigma);
    if (sigma < 300.0) {
        const double t = std::tanh(0.5 * sigma);
        const double ep1 = std::exp(sigma) + 1.0;
        return 0.25 * t * ep1 * ep1;
    }
    return std::exp(std::log(std::tanh(0.5 * sigma)) + 2.0 * sigma +
                    2.0 * std::log1p(std::exp(-sigma)) - std::log(4.0));
}

double bridge_rhs(double m, double p, double chi) {
    if (!(std::isfinite(m) && std::isfinite(p) && std::isfinite(chi)))
        throw NonFiniteError("bridge_rhs");
    if (p <= 0.0) throw ZeroMomentumError("bridge_rhs needs p > 0");
    if (chi < 0.0 || chi > kHalfPi) throw DomainError("chi must lie in [0, pi/2]");
    const double ratio = m / (2.0 * p);
    const double sc = std::sin(chi);
    return ratio * ratio * sc * sc;
}

std::vector<HyperbolaRow> hyperbola_sweep(const std::vector<double>& masses,
                                          std::pair<double, double> p_range, int n) {
    if (n < 2) throw DomainError("sweep needs at least 2 points");
    const auto [lo, hi] = p_range;
    if (!(std::isfinite(lo) && std::isfinite(hi)) || lo < 0.0 || hi < lo)
        throw DomainError("momentum range must satisfy 0 <= lo <= hi");
    std::vector<HyperbolaRow> rows;
    rows.reserve(masses.size() * static_cast<std::size_t>(n));
    for (const double m : masses) {
        if (!std::isfinite(m) || m < 0.0) throw DomainError("masses must be finite and >= 0");
        for (int i = 0; i < n; ++i) {
            const double p = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
            rows.push_back({m, p, std::hypot(m, p)});
        }
    }
    return rows;
}

}  // namespace poincare
