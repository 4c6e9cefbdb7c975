#pragma once

#include <span>
#include <vector>

#include "qel/sampled_wave.hpp"

namespace qel {

/// Free-particle kernel normalization.
///
///   Paper:    K(x,y;dt) = (pi i dt)^{-1/2} exp(-i (x-y)^2 / dt)
///   Standard: K(x,y;t)  = (4 pi i t)^{-1/2} exp(+i (x-y)^2 / (4 t)),
///             the unitary kernel of H = p^2 (hbar = 1, 2m = 1).
///
/// Both are unitary. For real-valued initial data the probability densities
/// under Paper at time dt equal those under Standard at time dt/4 (the Paper
/// kernel is the conjugated, 4x-rescaled Standard kernel).
enum class KernelConvention { Paper, Standard };

KernelConvention parse_convention(const std::string& name);
std::string convention_name(KernelConvention c);

struct PropagationResult {
    SampledWaveFunction wave;  // evaluated at the requested output points
    double dt = 0.0;
    KernelConvention convention = KernelConvention::Paper;
    double est_error = 0.0;  // absolute bound on per-point primitive error
};

/// Exact free propagation of piecewise-linear data: for each output x the
/// kernel integral is assembled per input panel from quadratic-phase moments
/// (k = 0,1 after the affine substitution), so the boundary layer x ~ sqrt(dt)
/// carries no stationary-phase approximation error.
///
/// outputs must be nonempty and strictly increasing; dt > 0.
PropagationResult propagate(const SampledWaveFunction& w, double dt,
                            KernelConvention convention, std::span<const double> outputs);

/// Single-point value by adaptive Gauss-Kronrod quadrature of the oscillatory
/// integrand, no quadratic-phase shortcuts. Slow; absolute error <= tol.
/// Throws std::runtime_error if the refinement budget is exhausted before the
/// tolerance is met (phase too large; reduce dt span or panel size).
cplx propagate_oracle(const SampledWaveFunction& w, double dt, KernelConvention convention,
                      double x, double tol = 1e-10);

namespace detail {
/// Worker count used for batched output evaluation (>=1).
unsigned propagate_threads();
}

}  // namespace qel
