#pragma once

#include "poincare/sl2c.hpp"

namespace poincare {

enum class MassTag { Massive, Massless, Spacelike };

struct MassClass {
    MassTag tag;
    double mass_squared;
};

// Sorts a momentum by the sign of its interval.  The lightlike band scales
// with the momentum: |interval| <= 1e-10 * (t^2 + |p|^2) counts as massless,
// so a heavily boosted photon-like momentum with a noisy interval still
// classifies correctly.  Timelike/lightlike momenta must have t > 0.
MassClass classify(const FourVector& momentum);

// standard: rest form (m,0,0,0) when massive, (E0,E0,0,0) when massless
// (the physical energy is kept; nothing is rescaled).
// g: act_on_four_vector(g, standard) reproduces the input momentum.
struct CanonicalForm {
    FourVector standard;
    GroupElement g;
};

// Reduction is deterministic: an azimuthal phase brings the momentum into
// the z-x plane, a y-rotation lays it on z, a z-boost (massive only) sets
// the magnitude.  g is the inverse of that reduction.
CanonicalForm canonical_form(const FourVector& momentum);

enum class LittleKind { ZPhase, YRotation, GaugeTriangular };

struct LittleGroupElement {
    GroupElement element;
    LittleKind kind;
    double param;
};

// Membership table: massive momenta admit ZPhase and YRotation; massless
// admit ZPhase and GaugeTriangular [[1, gamma], [0, 1]]; spacelike admit
// nothing.  Anything else throws KindMismatchError.
LittleGroupElement little_group_generator(const MassClass& cls, LittleKind kind, double param);

// max-norm of (W X W^dagger - X) for X the matrix of the momentum;
// zero exactly when w leaves the momentum invariant
double verify_little_group(const GroupElement& w, const FourVector& momentum);

}  // namespace poincare
