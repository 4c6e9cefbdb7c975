#include "qel/initial_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qel {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Width of the sampling window for the gaussian family, in units of sigma.
// Truncated tail mass erfc(9/sqrt(2)) ~ 2e-19 keeps normalization within 1e-10.
constexpr double kGaussianWindow = 9.0;

double bump_norm(double w) { return std::sqrt(8.0 / (3.0 * w)); }

}  // namespace

void validate(const SupportInterval& s) {
    if (!(s.left < s.right)) throw std::invalid_argument("support: left < right required");
}

StateFamily parse_family(const std::string& name) {
    if (name == "kinked-sine") return StateFamily::KinkedSine;
    if (name == "uniform-jump") return StateFamily::UniformJump;
    if (name == "smooth-bump") return StateFamily::SmoothBump;
    if (name == "gaussian") return StateFamily::Gaussian;
    if (name == "custom-samples") return StateFamily::CustomSamples;
    throw std::invalid_argument("unknown state family: " + name);
}

std::string family_name(StateFamily f) {
    switch (f) {
        case StateFamily::KinkedSine: return "kinked-sine";
        case StateFamily::UniformJump: return "uniform-jump";
        case StateFamily::SmoothBump: return "smooth-bump";
        case StateFamily::Gaussian: return "gaussian";
        case StateFamily::CustomSamples: return "custom-samples";
    }
    return "?";
}

cplx evaluate(const InitialState& s, double x) {
    switch (s.family) {
        case StateFamily::KinkedSine: {
            const auto& sp = *s.support;
            if (x <= sp.left || x >= sp.right) return 0.0;
            const double w = sp.width();
            return std::sqrt(2.0 / w) * std::sin(kPi * (x - sp.left) / w);
        }
        case StateFamily::UniformJump: {
            const auto& sp = *s.support;
            if (x < sp.left || x > sp.right) return 0.0;
            return 1.0 / std::sqrt(sp.width());
        }
        case StateFamily::SmoothBump: {
            const auto& sp = *s.support;
            if (x <= sp.left || x >= sp.right) return 0.0;
            const double w = sp.width();
            const double t = std::sin(kPi * (x - sp.left) / w);
            return bump_norm(w) * t * t;
        }
        case StateFamily::Gaussian: {
            const double sg = s.params.sigma, c = s.params.center;
            return std::pow(2.0 * kPi * sg * sg, -0.25) *
                   std::exp(-(x - c) * (x - c) / (4.0 * sg * sg));
        }
        case StateFamily::CustomSamples: {
            SampledWaveFunction w(s.params.custom_nodes, s.params.custom_values);
            return w(x);
        }
    }
    return 0.0;
}

std::vector<double> graded_support_mesh(double left, double right, size_t n_nodes,
                                        double ratio, double min_frac) {
    if (n_nodes < 8) throw std::invalid_argument("graded mesh needs >= 8 nodes");
    const double w = right - left;
    const double hmin = min_frac * w;
    const size_t target_panels = n_nodes - 1;

    // count panels used by: geometric run hmin..h averaged per side + uniform interior
    auto panels_for = [&](double h) -> double {
        const double run_len = std::ceil(std::log(h / hmin) / std::log(1.0 / ratio));
        double width_run = 0.0, size = hmin;
        for (int i = 0; i < static_cast<int>(run_len) && width_run < 0.5 * w; ++i) {
            width_run += size;
            size /= ratio;
        }
        const double interior = std::max(0.0, w - 2.0 * width_run);
        return 2.0 * run_len + interior / h;
    };

    // bisect interior panel width so the budget is met
    double lo = hmin, hi = w;
    for (int it = 0; it < 200; ++it) {
        const double mid = std::sqrt(lo * hi);
        if (panels_for(mid) > static_cast<double>(target_panels)) lo = mid;
        else hi = mid;
    }
    const double h_int = hi;

    // assemble widths: ascending geometric run, uniform middle, mirrored run
    std::vector<double> widths;
    {
        std::vector<double> run;
        double size = hmin, covered = 0.0;
        while (size < h_int && covered < 0.45 * w) {
            run.push_back(size);
            covered += size;
            size /= ratio;
        }
        const double middle = w - 2.0 * covered;
        const size_t mid_panels = std::max<size_t>(1, static_cast<size_t>(std::round(middle / h_int)));
        widths = run;
        for (size_t i = 0; i < mid_panels; ++i) widths.push_back(middle / static_cast<double>(mid_panels));
        widths.insert(widths.end(), run.rbegin(), run.rend());
    }
    // normalize to cover [left,right] exactly
    double total = 0.0;
    for (double x : widths) total += x;
    std::vector<double> nodes;
    nodes.reserve(widths.size() + 1);
    nodes.push_back(left);
    double acc = 0.0;
    for (size_t i = 0; i + 1 < widths.size(); ++i) {
        acc += widths[i];
        nodes.push_back(left + acc * (w / total));
    }
    nodes.push_back(right);
    return nodes;
}

MadeState make_initial_state(StateFamily family, std::optional<SupportInterval> support,
                             const StateParams& params, size_t mesh_size) {
    if (mesh_size < 16) throw std::invalid_argument("mesh_size must be >= 16");

    InitialState st;
    st.family = family;
    st.params = params;

    std::vector<double> nodes;
    switch (family) {
        case StateFamily::Gaussian: {
            if (!(params.sigma > 0.0))
                throw std::invalid_argument("gaussian: sigma must be > 0 (non-normalizable)");
            st.support.reset();
            const double a = params.center - kGaussianWindow * params.sigma;
            const double b = params.center + kGaussianWindow * params.sigma;
            nodes.resize(mesh_size);
            for (size_t i = 0; i < mesh_size; ++i)
                nodes[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(mesh_size - 1);
            st.boundary_data.reset();
            break;
        }
        case StateFamily::CustomSamples: {
            if (params.custom_nodes.size() < 2 ||
                params.custom_nodes.size() != params.custom_values.size())
                throw std::invalid_argument("custom-samples: need matching nodes/values, >= 2");
            SampledWaveFunction w(params.custom_nodes, params.custom_values);
            const double n2 = w.norm_squared();
            if (!(n2 > 0.0)) throw std::invalid_argument("custom-samples: non-normalizable (zero norm)");
            w.scale(1.0 / std::sqrt(n2));
            st.support = SupportInterval{w.left(), w.right()};
            st.params.custom_values = w.values;
            // one-sided 3-point derivative and boundary values from the samples
            auto fd3 = [](double x0, double x1, double x2, cplx f0, cplx f1, cplx f2) {
                const double h1 = x1 - x0, h2 = x2 - x0;
                // derivative at x0 of the quadratic through the three samples
                return f0 * (-(h1 + h2) / (h1 * h2)) + f1 * (h2 / (h1 * (h2 - h1))) +
                       f2 * (-h1 / (h2 * (h2 - h1)));
            };
            BoundaryData bd;
            const auto& n = w.nodes;
            const auto& v = w.values;
            const size_t m = n.size();
            bd.value_left = v.front();
            bd.value_right = v.back();
            bd.deriv_left = fd3(n[0], n[1], n[2], v[0], v[1], v[2]);
            bd.deriv_right = fd3(n[m - 1], n[m - 2], n[m - 3], v[m - 1], v[m - 2], v[m - 3]);
            st.boundary_data = bd;
            return MadeState{st, std::move(w)};
        }
        default: {
            SupportInterval sp = support.value_or(SupportInterval{});
            validate(sp);
            st.support = sp;
            nodes = graded_support_mesh(sp.left, sp.right, mesh_size);
            const double w = sp.width();
            BoundaryData bd;
            if (family == StateFamily::KinkedSine) {
                bd.value_left = bd.value_right = 0.0;
                bd.deriv_left = std::sqrt(2.0 / w) * kPi / w;
                bd.deriv_right = -std::sqrt(2.0 / w) * kPi / w;
            } else if (family == StateFamily::UniformJump) {
                bd.value_left = bd.value_right = 1.0 / std::sqrt(w);
                bd.deriv_left = bd.deriv_right = 0.0;
            } else {  // SmoothBump
                bd.value_left = bd.value_right = 0.0;
                bd.deriv_left = bd.deriv_right = 0.0;
            }
            st.boundary_data = bd;
            break;
        }
    }

    std::vector<cplx> vals(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) vals[i] = evaluate(st, nodes[i]);
    SampledWaveFunction w(std::move(nodes), std::move(vals));
    const double n2 = w.norm_squared();
    if (!(n2 > 0.0)) throw std::invalid_argument("state sampling has zero norm");
    w.scale(1.0 / std::sqrt(n2));
    return MadeState{st, std::move(w)};
}

bool mean_square_smooth(const InitialState& s) {
    switch (s.family) {
        case StateFamily::Gaussian:
        case StateFamily::SmoothBump: return true;
        case StateFamily::KinkedSine:
        case StateFamily::UniformJump: return false;
        case StateFamily::CustomSamples: {
            if (!s.boundary_data) return false;
            const auto& b = *s.boundary_data;
            const double tol = 1e-8;
            return std::abs(b.value_left) < tol && std::abs(b.value_right) < tol &&
                   std::abs(b.deriv_left) < tol && std::abs(b.deriv_right) < tol;
        }
    }
    return false;
}

}  // namespace qel
