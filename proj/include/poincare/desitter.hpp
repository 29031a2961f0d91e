#pragma once

#include <utility>
#include <vector>

#include "poincare/mat2.hpp"

namespace poincare {

// One mass m split over two channels by an angle chi in [0, pi/2]:
// m1 = m cos(chi), m2 = m sin(chi).  m1^2 + m2^2 = m^2 for every chi.
struct MassPair {
    double m1, m2;
};

MassPair mass_decompose(double m, double chi);

// (m, chi, p): shared spatial momentum of magnitude p >= 0 along z.
class DeSitterState {
public:
    DeSitterState(double m, double chi, double p);

    double m() const noexcept { return m_; }
    double chi() const noexcept { return chi_; }
    double p() const noexcept { return p_; }

private:
    double m_, chi_, p_;
};

// E1 = sqrt(m1^2 + p^2), E2 = sqrt(m2^2 + p^2).
// E1^2 + E2^2 = m^2 + 2 p^2 independently of chi.
struct EnergyPair {
    double e1, e2;
};

EnergyPair energies(const DeSitterState& s);

// (E1, E2, pz, px, py) with the momentum along z.
// e1^2 - pz^2 - px^2 - py^2 = m1^2 >= 0.
struct FiveVector {
    double e1, e2, pz, px, py;
};

FiveVector five_vector(const DeSitterState& s);

// diag(Ei + p, Ei - p) per channel; determinants m1^2 and m2^2.  The small
// diagonal entry is computed as mi^2/(Ei + p), which is the same number
// with the cancellation divided out instead of subtracted.
std::pair<ComplexMat2, ComplexMat2> momentum_matrix_pair(const DeSitterState& s);

// Decoherence exponent of the second channel:
// sigma = 2 atanh((E2 - p)/(E2 + p)), evaluated in log form so it stays
// finite and accurate for every p > 0.  sigma = 0 iff the channel is empty
// (chi = 0 or m = 0).  p = 0 with a massive second channel has no finite
// sigma and throws ZeroMomentumError.
double sigma_from_chi(const DeSitterState& s);

// Largest sigma reachable at fixed (m, p): the chi = pi/2 value.
double sigma_max(double m, double p);

// Inverse of sigma_from_chi at fixed m > 0, p > 0.  Inputs within
// 1e-5 * max(1, sigma_max) above the bound clamp to pi/2; beyond that
// throws OutOfRangeError.
double chi_from_sigma(double m, double p, double sigma);

// tanh(sigma/2) / (1 - tanh(sigma/2))^2; grows without bound as sigma does
double bridge_lhs(double sigma);

// (m / 2p)^2 sin^2(chi); equals bridge_lhs(sigma_from_chi) identically
double bridge_rhs(double m, double p, double chi);

struct HyperbolaRow {
    double m, p, e;  // e = sqrt(m^2 + p^2)
};

// n >= 2 momentum values evenly spaced over p_range, one row per (mass, p),
// masses kept in input order
std::vector<HyperbolaRow> hyperbola_sweep(const std::vector<double>& masses,
                                          std::pair<double, double> p_range, int n);

}  // namespace poincare
