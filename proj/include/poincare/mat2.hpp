#pragma once

#include <cmath>
#include <complex>

#include "poincare/errors.hpp"

namespace poincare {

using Complex = std::complex<double>;

inline bool is_finite(Complex v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// 2x2 complex matrix, row-major: [[e00, e01], [e10, e11]].
// Carrier for group elements, for four-vectors written as Hermitian
// matrices, and for coherency matrices.  Constructors reject NaN/Inf.
struct ComplexMat2 {
    Complex e00{}, e01{}, e10{}, e11{};

    ComplexMat2() = default;

    ComplexMat2(Complex a00, Complex a01, Complex a10, Complex a11)
        : e00(a00), e01(a01), e10(a10), e11(a11) {
        if (!is_finite(e00) || !is_finite(e01) || !is_finite(e10) || !is_finite(e11))
            throw NonFiniteError("ComplexMat2");
    }

    static ComplexMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    static ComplexMat2 diagonal(Complex d0, Complex d1) { return {d0, 0.0, 0.0, d1}; }

    Complex det() const { return e00 * e11 - e01 * e10; }

    Complex trace() const { return e00 + e11; }

    // conjugate transpose
    ComplexMat2 adjoint() const {
        return {std::conj(e00), std::conj(e10), std::conj(e01), std::conj(e11)};
    }

    ComplexMat2 conjugate() const {
        return {std::conj(e00), std::conj(e01), std::conj(e10), std::conj(e11)};
    }

    ComplexMat2 transposed() const { return {e00, e10, e01, e11}; }

    double max_abs() const {
        return std::max(std::max(std::abs(e00), std::abs(e01)),
                        std::max(std::abs(e10), std::abs(e11)));
    }

    // max-norm of (M - M^dagger); zero exactly when Hermitian
    double hermiticity_defect() const {
        double d = std::abs(e01 - std::conj(e10));
        d = std::max(d, 2.0 * std::abs(e00.imag()));
        d = std::max(d, 2.0 * std::abs(e11.imag()));
        return d;
    }

    // (M + M^dagger)/2; drops the skew part
    ComplexMat2 hermitian_part() const {
        return {Complex(e00.real(), 0.0), 0.5 * (e01 + std::conj(e10)),
                0.5 * (e10 + std::conj(e01)), Complex(e11.real(), 0.0)};
    }

    ComplexMat2 operator*(const ComplexMat2& o) const {
        return {e00 * o.e00 + e01 * o.e10, e00 * o.e01 + e01 * o.e11,
                e10 * o.e00 + e11 * o.e10, e10 * o.e01 + e11 * o.e11};
    }

    ComplexMat2 operator+(const ComplexMat2& o) const {
        return {e00 + o.e00, e01 + o.e01, e10 + o.e10, e11 + o.e11};
    }

    ComplexMat2 operator-(const ComplexMat2& o) const {
        return {e00 - o.e00, e01 - o.e01, e10 - o.e10, e11 - o.e11};
    }

    ComplexMat2 operator-() const { return {-e00, -e01, -e10, -e11}; }

    ComplexMat2 operator*(Complex s) const { return {s * e00, s * e01, s * e10, s * e11}; }
};

inline ComplexMat2 operator*(Complex s, const ComplexMat2& m) { return m * s; }

inline double max_abs_diff(const ComplexMat2& a, const ComplexMat2& b) {
    return (a - b).max_abs();
}

}  // namespace poincare
