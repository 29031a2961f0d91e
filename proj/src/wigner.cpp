#include "poincare/wigner.hpp"

#include <algorithm>
#include <cmath>

namespace poincare {

namespace {

constexpr double kClassifyRel = 1e-10;

double spatial_norm(const FourVector& v) { return std::sqrt(v.z * v.z + v.x * v.x + v.y * v.y); }

// rotation carrying the +z axis onto the direction (nz, nx, ny); identity
// when the direction is degenerate
GroupElement rotation_from_z(double nz, double nx, double ny) {
    const double theta = std::acos(std::clamp(nz, -1.0, 1.0));
    const double alpha = std::atan2(ny, nx);
    return compose(make_generator(GeneratorKind::PhaseZ, alpha),
                   make_generator(GeneratorKind::RotY, theta));
}

}  // namespace

MassClass classify(const FourVector& momentum) {
    const double scale = momentum.t * momentum.t + momentum.z * momentum.z +
                         momentum.x * momentum.x + momentum.y * momentum.y;
    const double tol = kClassifyRel * scale;
    const double m2 = interval(momentum);
    if (m2 < -tol) return {MassTag::Spacelike, m2};
    if (momentum.t <= 0.0) throw NonPositiveEnergyError(momentum.t);
    if (m2 > tol) return {MassTag::Massive, m2};
    return {MassTag::Massless, m2};
}

CanonicalForm canonical_form(const FourVector& momentum) {
    const MassClass cls = classify(momentum);
    if (cls.tag == MassTag::Spacelike) throw SpacelikeUnsupportedError(cls.mass_squared);

    const double p = spatial_norm(momentum);

    if (cls.tag == MassTag::Massless) {
        // energy equals momentum magnitude; only the direction needs undoing
        const FourVector standard{momentum.t, momentum.t, 0.0, 0.0};
        GroupElement g = rotation_from_z(momentum.z / p, momentum.x / p, momentum.y / p);
        return {standard, std::move(g)};
    }

    const double m = std::sqrt(cls.mass_squared);
    const FourVector standard{m, 0.0, 0.0, 0.0};
    if (p == 0.0) return {standard, GroupElement::identity()};

    const double mu = std::log((momentum.t + p) / m);
    GroupElement g = compose(rotation_from_z(momentum.z / p, momentum.x / p, momentum.y / p),
                             make_generator(GeneratorKind::BoostZ, mu));
    return {standard, std::move(g)};
}

LittleGroupElement little_group_generator(const MassClass& cls, LittleKind kind, double param) {
    if (!std::isfinite(param)) throw NonFiniteError("little-group parameter");
    switch (cls.tag) {
        case MassTag::Massive:
            if (kind == LittleKind::ZPhase)
                return {make_generator(GeneratorKind::PhaseZ, param), kind, param};
            if (kind == LittleKind::YRotation)
                return {make_generator(GeneratorKind::RotY, param), kind, param};
            throw KindMismatchError("massive momenta admit phase and rotation elements only");
        case MassTag::Massless:
            if (kind == LittleKind::ZPhase)
                return {make_generator(GeneratorKind::PhaseZ, param), kind, param};
            if (kind == LittleKind::GaugeTriangular)
                return {GroupElement(ComplexMat2{1.0, Complex(param), 0.0, 1.0}), kind, param};
            throw KindMismatchError("massless momenta admit phase and gauge elements only");
        case MassTag::Spacelike:
        default:
            throw KindMismatchError("spacelike momenta have no little-group constructors here");
    }
}

double verify_little_group(const GroupElement& w, const FourVector& momentum) {
    const ComplexMat2 X = four_vector_to_matrix(momentum);
    return max_abs_diff(w.mat() * X * w.mat().adjoint(), X);
}

}  // namespace poincare
