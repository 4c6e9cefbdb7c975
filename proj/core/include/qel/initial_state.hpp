#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qel/sampled_wave.hpp"

namespace qel {

/// Closed support interval of a compactly supported state. Default is (-1, 0).
struct SupportInterval {
    double left = -1.0;
    double right = 0.0;

    double width() const { return right - left; }
};

void validate(const SupportInterval& s);

enum class StateFamily {
    KinkedSine,   // continuous, zero at both endpoints, one-sided derivative nonzero
    UniformJump,  // constant on the support, unit-height jump at both endpoints
    SmoothBump,   // value and first derivative vanish at the endpoints
    Gaussian,     // no compact support; boundary data empty
    CustomSamples
};

StateFamily parse_family(const std::string& name);  // throws std::invalid_argument
std::string family_name(StateFamily f);

struct StateParams {
    double sigma = 1.0;   // gaussian width
    double center = 0.0;  // gaussian center
    std::vector<double> custom_nodes;
    std::vector<cplx> custom_values;
};

/// One-sided (inside) boundary values and derivatives at the support endpoints.
/// Since the state vanishes outside, `value_*` is also the jump magnitude.
struct BoundaryData {
    cplx value_left{}, value_right{};
    cplx deriv_left{}, deriv_right{};
};

struct InitialState {
    StateFamily family = StateFamily::KinkedSine;
    std::optional<SupportInterval> support;  // absent for gaussian
    StateParams params;
    std::optional<BoundaryData> boundary_data;
};

/// Analytic evaluation of a built-in family (piecewise-linear for custom).
cplx evaluate(const InitialState& s, double x);

/// Node set on [left,right]: panels refined geometrically toward both endpoints
/// (ratio 0.9 per step, floor min_frac * width), uniform in the interior so the
/// bulk is resolved too. Deterministic in its arguments.
std::vector<double> graded_support_mesh(double left, double right, size_t n_nodes,
                                        double ratio = 0.9, double min_frac = 1e-6);

struct MadeState {
    InitialState state;
    SampledWaveFunction wave;
};

/// Normalized state plus its sampling (sampling rescaled so that the
/// piecewise-linear norm is exactly 1). mesh_size >= 16.
MadeState make_initial_state(StateFamily family, std::optional<SupportInterval> support,
                             const StateParams& params, size_t mesh_size);

/// True if the family (or custom boundary data) admits finite <H^2>:
/// no value jump and no derivative kink at the support boundary.
bool mean_square_smooth(const InitialState& s);

}  // namespace qel
