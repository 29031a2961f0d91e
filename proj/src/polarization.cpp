#include "poincare/polarization.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <string>
#include <string_view>

namespace poincare {

namespace {

constexpr std::size_t kMinSamples = 100;
constexpr double kCoherencyTol = 1e-12;
const double kInvSqrt2 = std::sqrt(0.5);

}  // namespace

JonesState::JonesState(Complex amp1, Complex amp2, double k, double omega)
    : amp1_(amp1), amp2_(amp2), k_(k), omega_(omega) {
    if (!is_finite(amp1_) || !is_finite(amp2_) || !std::isfinite(k_) || !std::isfinite(omega_))
        throw NonFiniteError("JonesState");
}

JonesState::JonesState(double a, double b, double phi1, double phi2, double k, double omega)
    : JonesState(std::polar(a, phi1), std::polar(b, phi2), k, omega) {
    if (a < 0.0 || b < 0.0) throw DomainError("Jones amplitudes must be >= 0");
}

JonesState JonesState::from_amplitudes(Complex amp1, Complex amp2, double k, double omega) {
    return JonesState(amp1, amp2, k, omega);
}

std::pair<Complex, Complex> JonesState::evaluate(double z, double t) const {
    const Complex envelope = std::polar(1.0, k_ * z - omega_ * t);
    return {amp1_ * envelope, amp2_ * envelope};
}

JonesState apply_element(const OpticalElement& elem, const JonesState& state) {
    if (!std::isfinite(elem.param)) throw NonFiniteError("optical element parameter");
    const double h = 0.5 * elem.param;
    switch (elem.kind) {
        case ElementKind::PhaseShift:
            return JonesState::from_amplitudes(state.amp1() * std::polar(1.0, -h),
                                               state.amp2() * std::polar(1.0, h), state.k(),
                                               state.omega());
        case ElementKind::Attenuation:
            return JonesState::from_amplitudes(state.amp1() * std::exp(h),
                                               state.amp2() * std::exp(-h), state.k(),
                                               state.omega());
        case ElementKind::Rotation:
        default: {
            const double c = std::cos(h), s = std::sin(h);
            return JonesState::from_amplitudes(c * state.amp1() - s * state.amp2(),
                                               s * state.amp1() + c * state.amp2(), state.k(),
                                               state.omega());
        }
    }
}

CoherencyMatrix::CoherencyMatrix(const ComplexMat2& mat) {
    const double scale = std::max(1.0, mat.max_abs());
    const double defect = mat.hermiticity_defect();
    if (defect > kCoherencyTol * scale) throw HermiticityError(defect);
    mat_ = mat.hermitian_part();
    if (mat_.e00.real() < 0.0 || mat_.e11.real() < 0.0)
        throw DomainError("coherency diagonal must be >= 0");
    if (mat_.det().real() < -kCoherencyTol * scale * scale)
        throw DomainError("coherency matrix must be positive semidefinite");
}

CoherencyMatrix coherency_closed_form(double a, double phi, double sigma) {
    if (!(std::isfinite(a) && std::isfinite(phi) && std::isfinite(sigma)))
        throw NonFiniteError("coherency parameters");
    if (a < 0.0) throw DomainError("amplitude must be >= 0");
    if (sigma < 0.0) throw NegativeSigmaError(sigma);
    const double a2 = a * a;
    const Complex off = a2 * std::exp(-sigma) * std::polar(1.0, -phi);
    return CoherencyMatrix({Complex(a2), off, std::conj(off), Complex(a2)});
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

double parse_field(std::string_view field, std::size_t line) {
    field = trim(field);
    double value = 0.0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw FileFormatError(line, "bad number '" + std::string(field) + "'");
    return value;
}

}  // namespace

SampledSignal load_sampled_signal_csv(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(in, line)) throw FileFormatError(1, "empty file");
    ++lineno;
    if (trim(line) != "t,re1,im1,re2,im2")
        throw FileFormatError(1, "expected header t,re1,im1,re2,im2");

    SampledSignal sig;
    std::vector<double> times;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view rest = trim(line);
        if (rest.empty()) continue;
        std::array<double, 5> f{};
        for (int i = 0; i < 5; ++i) {
            const std::size_t comma = rest.find(',');
            if ((comma == std::string_view::npos) != (i == 4))
                throw FileFormatError(lineno, "expected 5 comma-separated fields");
            f[static_cast<std::size_t>(i)] =
                parse_field(rest.substr(0, comma == std::string_view::npos ? rest.size() : comma),
                            lineno);
            if (comma != std::string_view::npos) rest.remove_prefix(comma + 1);
        }
        times.push_back(f[0]);
        sig.samples.emplace_back(Complex(f[1], f[2]), Complex(f[3], f[4]));
    }

    if (sig.samples.size() < 2) throw FileFormatError(lineno + 1, "need at least two sample rows");
    sig.dt = times[1] - times[0];
    if (!(sig.dt > 0.0)) throw FileFormatError(3, "time steps must increase");
    for (std::size_t i = 2; i < times.size(); ++i) {
        const double step = times[i] - times[i - 1];
        if (std::abs(step - sig.dt) > 1e-9 * std::max(std::abs(sig.dt), 1e-300))
            throw FileFormatError(i + 2, "non-uniform time spacing");
    }
    sig.window = static_cast<double>(sig.samples.size()) * sig.dt;
    return sig;
}

CoherencyMatrix coherency_from_samples(const SampledSignal& sig) {
    const std::size_t n = sig.samples.size();
    if (n < kMinSamples) throw InsufficientSamplesError(n);
    double s11 = 0.0, s22 = 0.0;
    Complex s12{};
    for (const auto& [psi1, psi2] : sig.samples) {
        s11 += std::norm(psi1);
        s22 += std::norm(psi2);
        s12 += psi1 * std::conj(psi2);
    }
    const double inv = 1.0 / static_cast<double>(n);
    const Complex off = s12 * inv;
    return CoherencyMatrix({Complex(s11 * inv), off, std::conj(off), Complex(s22 * inv)});
}

CoherencyMatrix transform_coherency(const GroupElement& g, const CoherencyMatrix& c) {
    return CoherencyMatrix(g.mat() * c.mat() * g.mat().adjoint());
}

std::pair<double, double> diagonalize_coherency(const CoherencyMatrix& c) {
    const double d0 = c.mat().e00.real(), d1 = c.mat().e11.real();
    const double mean = 0.5 * (d0 + d1);
    const double disc = std::hypot(0.5 * (d0 - d1), std::abs(c.mat().e10));
    return {mean + disc, mean - disc};
}

StokesVector stokes_from_coherency(const CoherencyMatrix& c) {
    const FourVector v = matrix_to_four_vector(c.mat() * Complex(std::sqrt(2.0)));
    return {v.t, v.z, v.x, v.y};
}

CoherencyMatrix coherency_from_stokes(const StokesVector& s) {
    if (!(std::isfinite(s.s0) && std::isfinite(s.s3) && std::isfinite(s.s1) &&
          std::isfinite(s.s2)))
        throw NonFiniteError("StokesVector");
    if (s.s0 < 0.0) throw UnphysicalStokesError("s0 must be >= 0");
    const double r2 = s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3;
    if (s.s0 * s.s0 < r2 - 1e-9 * s.s0 * s.s0)
        throw UnphysicalStokesError("polarized part exceeds total intensity");
    return CoherencyMatrix(four_vector_to_matrix({s.s0, s.s3, s.s1, s.s2}) *
                           Complex(kInvSqrt2));
}

double poincare_radius(const StokesVector& s) {
    return std::sqrt(s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3);
}

double degree_of_coherence(const CoherencyMatrix& c) {
    const double d0 = c.mat().e00.real(), d1 = c.mat().e11.real();
    if (d0 <= 0.0 || d1 <= 0.0) throw ZeroIntensityError();
    return std::clamp(std::abs(c.mat().e10) / std::sqrt(d0 * d1), 0.0, 1.0);
}

}  // namespace poincare
