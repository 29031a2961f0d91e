#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "poincare/sl2c.hpp"

namespace poincare {

// Transverse optical field: two complex amplitudes riding the common
// envelope exp(i(k z - omega t)).  Stored as exact complex amplitudes so
// that rotations, which mix the components, lose nothing; the amplitude
// and phase accessors read the polar form back out.
class JonesState {
public:
    // a, b >= 0
    JonesState(double a, double b, double phi1, double phi2, double k, double omega);

    static JonesState from_amplitudes(Complex amp1, Complex amp2, double k, double omega);

    Complex amp1() const noexcept { return amp1_; }
    Complex amp2() const noexcept { return amp2_; }
    double a() const { return std::abs(amp1_); }
    double b() const { return std::abs(amp2_); }
    double phi1() const { return std::arg(amp1_); }
    double phi2() const { return std::arg(amp2_); }
    double k() const noexcept { return k_; }
    double omega() const noexcept { return omega_; }

    // both field components at position z and time t
    std::pair<Complex, Complex> evaluate(double z, double t) const;

private:
    JonesState(Complex amp1, Complex amp2, double k, double omega);

    Complex amp1_, amp2_;
    double k_, omega_;
};

// PhaseShift(phi)  multiplies by diag(e^{-i phi/2}, e^{+i phi/2})
// Attenuation(mu)  multiplies by diag(e^{mu/2}, e^{-mu/2})
// Rotation(theta)  mixes components through the half-angle rotation
// These are exactly the three group generators acting on the field.
enum class ElementKind { PhaseShift, Attenuation, Rotation };

struct OpticalElement {
    ElementKind kind;
    double param;
};

JonesState apply_element(const OpticalElement& elem, const JonesState& state);

// Hermitian, positive-semidefinite time-average of the field outer product.
// Tolerances on the invariants scale with max(1, matrix norm) so large
// intensities are not rejected for pure roundoff.
class CoherencyMatrix {
public:
    explicit CoherencyMatrix(const ComplexMat2& mat);

    const ComplexMat2& mat() const noexcept { return mat_; }

private:
    ComplexMat2 mat_;
};

// [[a^2, a^2 e^{-sigma} e^{-i phi}], [a^2 e^{-sigma} e^{+i phi}, a^2]]
// sigma >= 0 is the decoherence exponent; sigma = 0 is fully coherent.
CoherencyMatrix coherency_closed_form(double a, double phi, double sigma);

// Uniformly sampled pair signal.  Entries of the coherency estimate are
// plain means over the samples; the estimator needs at least 100 of them.
struct SampledSignal {
    std::vector<std::pair<Complex, Complex>> samples;
    double dt{};
    double window{};
};

// CSV with header "t,re1,im1,re2,im2"; dt is inferred from the first two
// rows and every later row must keep the same spacing.  Errors carry the
// offending 1-based line number.
SampledSignal load_sampled_signal_csv(std::istream& in);

CoherencyMatrix coherency_from_samples(const SampledSignal& sig);

// C' = G C G^dagger; preserves the determinant
CoherencyMatrix transform_coherency(const GroupElement& g, const CoherencyMatrix& c);

// eigenvalues, largest first
std::pair<double, double> diagonalize_coherency(const CoherencyMatrix& c);

// Component order (s0, s3, s1, s2) mirrors the four-vector order (t, z, x, y):
// s0 carries intensity, s3 the diagonal imbalance, s1/s2 the off-diagonal
// correlation.  Physical states satisfy s0^2 >= s1^2 + s2^2 + s3^2.
struct StokesVector {
    double s0{}, s3{}, s1{}, s2{};
};

// sqrt(2) * C read back through the four-vector correspondence, so group
// actions on the matrix and on the vector commute with this map.
StokesVector stokes_from_coherency(const CoherencyMatrix& c);

// inverse of stokes_from_coherency; rejects vectors outside the light cone
// by more than 1e-9 * s0^2
CoherencyMatrix coherency_from_stokes(const StokesVector& s);

// sqrt(s1^2 + s2^2 + s3^2): distance from the sphere's center
double poincare_radius(const StokesVector& s);

// |C01| / sqrt(C00 C11), clamped to [0, 1]; needs both intensities positive
double degree_of_coherence(const CoherencyMatrix& c);

}  // namespace poincare
