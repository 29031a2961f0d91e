#pragma once

#include <array>
#include <optional>
#include <vector>

#include "poincare/mat2.hpp"

namespace poincare {

// Minkowskian four-vector.  Component order is (t, z, x, y) everywhere in
// this library: z comes first among the spatial components because the 2x2
// form puts t +/- z on the diagonal.  Most other libraries order components
// (t, x, y, z); convert at the boundary if you interoperate.
struct FourVector {
    double t{}, z{}, x{}, y{};

    FourVector() = default;

    FourVector(double t_, double z_, double x_, double y_) : t(t_), z(z_), x(x_), y(y_) {
        if (!(std::isfinite(t) && std::isfinite(z) && std::isfinite(x) && std::isfinite(y)))
            throw NonFiniteError("FourVector");
    }
};

// t^2 - z^2 - x^2 - y^2
double interval(const FourVector& v);

// [[t+z, x-iy], [x+iy, t-z]]; Hermitian with determinant equal to interval(v)
ComplexMat2 four_vector_to_matrix(const FourVector& v);

// Inverse read-off: t=(e00+e11)/2, z=(e00-e11)/2, x=Re e10, y=Im e10.
// The skew part is discarded when its max-norm is within the Hermiticity
// gate (relative to max(1, |h|)); beyond the gate throws HermiticityError.
FourVector matrix_to_four_vector(const ComplexMat2& h);

// unit-determinant gate on group elements; violations throw, never repair
inline constexpr double kDetDriftTol = 1e-12;

// Hermiticity gate on four-vector matrices, relative to max(1, matrix norm)
inline constexpr double kHermiticityTol = 1e-10;

enum class GeneratorKind { PhaseZ, RotY, BoostZ };

struct GeneratorStep {
    GeneratorKind kind;
    double param;
};

// Element of the unit-determinant 2x2 complex group.  Wraps the matrix with
// an optional generator decomposition (kept through compose/inverse when
// both operands know theirs).
class GroupElement {
public:
    explicit GroupElement(const ComplexMat2& mat,
                          std::optional<std::vector<GeneratorStep>> provenance = std::nullopt);

    static GroupElement identity();

    const ComplexMat2& mat() const noexcept { return mat_; }
    const std::optional<std::vector<GeneratorStep>>& provenance() const noexcept {
        return provenance_;
    }

    // same Lorentz action, opposite sheet of the double cover
    GroupElement negated() const;

    // exact adjugate; the determinant is 1 so no division is needed
    GroupElement inverse() const;

private:
    ComplexMat2 mat_;
    std::optional<std::vector<GeneratorStep>> provenance_;
};

// PhaseZ(phi)  = diag(e^{-i phi/2}, e^{+i phi/2})
// RotY(theta)  = [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]]
// BoostZ(mu)   = diag(e^{mu/2}, e^{-mu/2})
// Half-angle arguments: the induced four-vector map uses the full parameter.
GroupElement make_generator(GeneratorKind kind, double param);

// matrix product g1 * g2 (g2 acts first on four-vectors)
GroupElement compose(const GroupElement& g1, const GroupElement& g2);

GroupElement negate(const GroupElement& g);

// X' = G X G^dagger pulled back to components
FourVector act_on_four_vector(const GroupElement& g, const FourVector& v);

// 4x4 real matrix, row-major, acting on column vectors in (t, z, x, y) order.
struct Mat4R {
    std::array<double, 16> m{};

    double& at(int r, int c) { return m[static_cast<std::size_t>(4 * r + c)]; }
    double at(int r, int c) const { return m[static_cast<std::size_t>(4 * r + c)]; }

    static Mat4R identity();

    FourVector apply(const FourVector& v) const;
    Mat4R operator*(const Mat4R& o) const;
};

double max_abs_diff(const Mat4R& a, const Mat4R& b);

// Four-by-four image of g, built column by column from the action on the
// four basis vectors.  g and -g map to the same matrix.
Mat4R covering_map(const GroupElement& g);

}  // namespace poincare
