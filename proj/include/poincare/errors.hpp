#pragma once

#include <stdexcept>
#include <string>

namespace poincare {

// Base class for every domain error raised by the numeric modules.
// The command-line driver maps these to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A constructor was handed NaN or Inf.
class NonFiniteError : public Error {
public:
    explicit NonFiniteError(const std::string& where)
        : Error("non-finite value in " + where) {}
};

// A matrix expected to be Hermitian is not, beyond tolerance.
class HermiticityError : public Error {
public:
    explicit HermiticityError(double defect)
        : Error("matrix is not Hermitian (defect " + std::to_string(defect) + ")"),
          defect_(defect) {}
    double defect() const noexcept { return defect_; }

private:
    double defect_;
};

// A group element's determinant moved away from 1.  Never repaired in place:
// a drift past the gate means an upstream composition bug or a matrix that
// was never in the group.
class DeterminantDriftError : public Error {
public:
    explicit DeterminantDriftError(double drift)
        : Error("determinant drifted from 1 by " + std::to_string(drift)),
          drift_(drift) {}
    double drift() const noexcept { return drift_; }

private:
    double drift_;
};

// Timelike or lightlike momentum with energy <= 0.
class NonPositiveEnergyError : public Error {
public:
    explicit NonPositiveEnergyError(double energy)
        : Error("momentum requires positive energy, got t = " + std::to_string(energy)) {}
};

// Spacelike momenta are classified but have no standard form here.
class SpacelikeUnsupportedError : public Error {
public:
    explicit SpacelikeUnsupportedError(double mass_squared)
        : Error("no canonical form for spacelike momentum (interval " +
                std::to_string(mass_squared) + ")") {}
};

// Generator kind not admitted by the given momentum class.
class KindMismatchError : public Error {
public:
    explicit KindMismatchError(const std::string& msg) : Error(msg) {}
};

// Decoherence parameter must be >= 0.
class NegativeSigmaError : public Error {
public:
    explicit NegativeSigmaError(double sigma)
        : Error("decoherence parameter must be >= 0, got " + std::to_string(sigma)) {}
};

// Time averages over fewer samples than the estimator supports.
class InsufficientSamplesError : public Error {
public:
    explicit InsufficientSamplesError(std::size_t n)
        : Error("need at least 100 samples, got " + std::to_string(n)) {}
};

// Stokes vector outside the light cone of physical states.
class UnphysicalStokesError : public Error {
public:
    explicit UnphysicalStokesError(const std::string& msg) : Error(msg) {}
};

// Coherency matrix with a vanishing or negative diagonal where intensity
// is required.
class ZeroIntensityError : public Error {
public:
    explicit ZeroIntensityError() : Error("zero-intensity component") {}
};

// Momentum must be nonzero for the requested map.
class ZeroMomentumError : public Error {
public:
    explicit ZeroMomentumError(const std::string& msg) : Error(msg) {}
};

// Parameter outside the reachable range of the requested inverse map.
class OutOfRangeError : public Error {
public:
    explicit OutOfRangeError(const std::string& msg) : Error(msg) {}
};

// Catch-all precondition violation on scalar arguments.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Malformed sample file; carries the 1-based line number.
class FileFormatError : public Error {
public:
    FileFormatError(std::size_t line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace poincare
