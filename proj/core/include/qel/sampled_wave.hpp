#pragma once

#include <complex>
#include <vector>

namespace qel {

using cplx = std::complex<double>;

/// Piecewise-linear complex function on a strictly increasing node set,
/// identically zero outside [nodes.front(), nodes.back()].
struct SampledWaveFunction {
    std::vector<double> nodes;
    std::vector<cplx> values;

    SampledWaveFunction() = default;
    SampledWaveFunction(std::vector<double> n, std::vector<cplx> v);

    size_t panel_count() const { return nodes.size() - 1; }
    double left() const { return nodes.front(); }
    double right() const { return nodes.back(); }

    /// Linear interpolation; zero outside the node range.
    cplx operator()(double x) const;

    /// Exact integral of |w|^2 under the piecewise-linear interpretation
    /// (per-panel closed form of the quadratic integrand).
    double norm_squared() const;

    /// Exact integral of conj(a) * b over the common refinement of both meshes
    /// (both factors piecewise linear, per-panel closed form).
    static cplx inner_product(const SampledWaveFunction& a, const SampledWaveFunction& b);

    void scale(cplx s);
    void shift_nodes(double s);
};

/// Validates node monotonicity and matching sizes; throws std::invalid_argument.
void validate(const SampledWaveFunction& w);

/// norm_squared as a free function, matching the operation vocabulary.
double norm_squared(const SampledWaveFunction& w);

/// a*u + b*v on the union mesh of the two inputs.
SampledWaveFunction linear_combination(cplx a, const SampledWaveFunction& u,
                                       cplx b, const SampledWaveFunction& v);

}  // namespace qel
