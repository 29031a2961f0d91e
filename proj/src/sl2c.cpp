#include "poincare/sl2c.hpp"

#include <cmath>
#include <utility>

namespace poincare {

double interval(const FourVector& v) { return v.t * v.t - v.z * v.z - v.x * v.x - v.y * v.y; }

ComplexMat2 four_vector_to_matrix(const FourVector& v) {
    return {Complex(v.t + v.z, 0.0), Complex(v.x, -v.y), Complex(v.x, v.y),
            Complex(v.t - v.z, 0.0)};
}

FourVector matrix_to_four_vector(const ComplexMat2& h) {
    const double defect = h.hermiticity_defect();
    if (defect > kHermiticityTol * std::max(1.0, h.max_abs())) throw HermiticityError(defect);
    const ComplexMat2 s = h.hermitian_part();
    return {0.5 * (s.e00.real() + s.e11.real()), 0.5 * (s.e00.real() - s.e11.real()),
            s.e10.real(), s.e10.imag()};
}

GroupElement::GroupElement(const ComplexMat2& mat,
                           std::optional<std::vector<GeneratorStep>> provenance)
    : mat_(mat), provenance_(std::move(provenance)) {
    const double drift = std::abs(mat_.det() - Complex(1.0, 0.0));
    if (drift > kDetDriftTol) throw DeterminantDriftError(drift);
}

GroupElement GroupElement::identity() {
    return GroupElement(ComplexMat2::identity(), std::vector<GeneratorStep>{});
}

GroupElement GroupElement::negated() const { return GroupElement(-mat_); }

GroupElement GroupElement::inverse() const {
    ComplexMat2 inv{mat_.e11, -mat_.e01, -mat_.e10, mat_.e00};
    std::optional<std::vector<GeneratorStep>> prov;
    if (provenance_) {
        std::vector<GeneratorStep> rev(provenance_->rbegin(), provenance_->rend());
        for (auto& step : rev) step.param = -step.param;
        prov = std::move(rev);
    }
    return GroupElement(inv, std::move(prov));
}

GroupElement make_generator(GeneratorKind kind, double param) {
    if (!std::isfinite(param)) throw NonFiniteError("generator parameter");
    ComplexMat2 mat;
    switch (kind) {
        case GeneratorKind::PhaseZ:
            mat = ComplexMat2::diagonal(std::polar(1.0, -0.5 * param),
                                        std::polar(1.0, 0.5 * param));
            break;
        case GeneratorKind::RotY: {
            const double c = std::cos(0.5 * param), s = std::sin(0.5 * param);
            mat = {Complex(c), Complex(-s), Complex(s), Complex(c)};
            break;
        }
        case GeneratorKind::BoostZ:
            mat = ComplexMat2::diagonal(Complex(std::exp(0.5 * param)),
                                        Complex(std::exp(-0.5 * param)));
            break;
    }
    return GroupElement(mat, std::vector<GeneratorStep>{{kind, param}});
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
    std::optional<std::vector<GeneratorStep>> prov;
    if (g1.provenance() && g2.provenance()) {
        std::vector<GeneratorStep> steps = *g1.provenance();
        steps.insert(steps.end(), g2.provenance()->begin(), g2.provenance()->end());
        prov = std::move(steps);
    }
    return GroupElement(g1.mat() * g2.mat(), std::move(prov));
}

GroupElement negate(const GroupElement& g) { return g.negated(); }

FourVector act_on_four_vector(const GroupElement& g, const FourVector& v) {
    const ComplexMat2 image = g.mat() * four_vector_to_matrix(v) * g.mat().adjoint();
    // roundoff skew past the gate would mean a corrupted element, not input
    return matrix_to_four_vector(image);
}

Mat4R Mat4R::identity() {
    Mat4R r;
    for (int i = 0; i < 4; ++i) r.at(i, i) = 1.0;
    return r;
}

FourVector Mat4R::apply(const FourVector& v) const {
    const std::array<double, 4> in{v.t, v.z, v.x, v.y};
    std::array<double, 4> out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[static_cast<std::size_t>(r)] += at(r, c) * in[static_cast<std::size_t>(c)];
    return {out[0], out[1], out[2], out[3]};
}

Mat4R Mat4R::operator*(const Mat4R& o) const {
    Mat4R r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

double max_abs_diff(const Mat4R& a, const Mat4R& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < 16; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
    return d;
}

Mat4R covering_map(const GroupElement& g) {
    static const std::array<FourVector, 4> basis{FourVector{1, 0, 0, 0}, FourVector{0, 1, 0, 0},
                                                 FourVector{0, 0, 1, 0}, FourVector{0, 0, 0, 1}};
    Mat4R lambda;
    for (int j = 0; j < 4; ++j) {
        const FourVector col = act_on_four_vector(g, basis[static_cast<std::size_t>(j)]);
        lambda.at(0, j) = col.t;
        lambda.at(1, j) = col.z;
        lambda.at(2, j) = col.x;
        lambda.at(3, j) = col.y;
    }
    return lambda;
}

}  // namespace poincare
