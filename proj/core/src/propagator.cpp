#include "qel/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "qel/fresnel.hpp"

namespace qel {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct KernelSpec {
    double lambda;
    int sign;
    cplx prefactor;
};

KernelSpec kernel_spec(double dt, KernelConvention c) {
    const cplx rot(std::sqrt(0.5), -std::sqrt(0.5));  // e^{-i pi/4}
    if (c == KernelConvention::Paper) {
        return {1.0 / dt, -1, rot / std::sqrt(kPi * dt)};
    }
    return {1.0 / (4.0 * dt), +1, rot / std::sqrt(4.0 * kPi * dt)};
}

struct Panel {
    double y0, y1;
    cplx slope;   // m_j
    cplx offset;  // v_j - m_j y_j, so value(y) = offset + slope * y
};

std::vector<Panel> build_panels(const SampledWaveFunction& w) {
    std::vector<Panel> p(w.panel_count());
    for (size_t j = 0; j + 1 < w.nodes.size(); ++j) {
        const double y0 = w.nodes[j], y1 = w.nodes[j + 1];
        const cplx m = (w.values[j + 1] - w.values[j]) / (y1 - y0);
        p[j] = Panel{y0, y1, m, w.values[j] - m * y0};
    }
    return p;
}

cplx point_value(const std::vector<Panel>& panels, const KernelSpec& k, double x) {
    cplx acc(0.0, 0.0);
    for (const Panel& p : panels) {
        // substitute u = y - x: value(y) = (offset + slope x) + slope u
        const cplx c0 = p.offset + p.slope * x;
        const double a = p.y0 - x, b = p.y1 - x;
        acc += c0 * detail::panel_moment_signed(a, b, k.lambda, 0, k.sign);
        if (p.slope != cplx(0.0, 0.0))
            acc += p.slope * detail::panel_moment_signed(a, b, k.lambda, 1, k.sign);
    }
    return k.prefactor * acc;
}

}  // namespace

namespace detail {
unsigned propagate_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}
}  // namespace detail

KernelConvention parse_convention(const std::string& name) {
    if (name == "paper") return KernelConvention::Paper;
    if (name == "standard") return KernelConvention::Standard;
    throw std::invalid_argument("unknown kernel convention: " + name);
}

std::string convention_name(KernelConvention c) {
    return c == KernelConvention::Paper ? "paper" : "standard";
}

PropagationResult propagate(const SampledWaveFunction& w, double dt,
                            KernelConvention convention, std::span<const double> outputs) {
    validate(w);
    if (!(dt > 0.0)) throw std::invalid_argument("propagate: dt must be > 0");
    if (outputs.empty()) throw std::invalid_argument("propagate: outputs must be nonempty");
    for (size_t i = 1; i < outputs.size(); ++i)
        if (!(outputs[i] > outputs[i - 1]))
            throw std::invalid_argument("propagate: outputs must be strictly increasing");

    const KernelSpec k = kernel_spec(dt, convention);
    const std::vector<Panel> panels = build_panels(w);

    std::vector<cplx> vals(outputs.size());
    const unsigned nt = std::min<unsigned>(detail::propagate_threads(),
                                           static_cast<unsigned>(outputs.size()));
    if (nt <= 1 || outputs.size() < 16) {
        for (size_t i = 0; i < outputs.size(); ++i) vals[i] = point_value(panels, k, outputs[i]);
    } else {
        std::vector<std::future<void>> jobs;
        const size_t chunk = (outputs.size() + nt - 1) / nt;
        for (unsigned t = 0; t < nt; ++t) {
            const size_t lo = t * chunk;
            const size_t hi = std::min(outputs.size(), lo + chunk);
            if (lo >= hi) break;
            jobs.push_back(std::async(std::launch::async, [&, lo, hi] {
                for (size_t i = lo; i < hi; ++i) vals[i] = point_value(panels, k, outputs[i]);
            }));
        }
        for (auto& j : jobs) j.get();
    }

    double vmax = 0.0;
    for (const cplx& v : w.values) vmax = std::max(vmax, std::abs(v));
    PropagationResult res;
    res.wave = SampledWaveFunction(std::vector<double>(outputs.begin(), outputs.end()),
                                   std::move(vals));
    res.dt = dt;
    res.convention = convention;
    res.est_error =
        std::abs(k.prefactor) * 1e-12 * static_cast<double>(panels.size()) * std::max(1.0, vmax);
    return res;
}

namespace {

// Gauss-Kronrod 7-15 node pair on [-1,1].
constexpr double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                            0.741531185599394, 0.586087235467691, 0.405845151377397,
                            0.207784955007898, 0.0};
constexpr double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                            0.140653259715525, 0.169004726639267, 0.190350578064785,
                            0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469};

template <typename Fn>
void gk15(const Fn& f, double a, double b, cplx& value, double& err) {
    const double m = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx acc_k(0.0, 0.0), acc_g(0.0, 0.0);
    for (int i = 0; i < 8; ++i) {
        const cplx fl = i == 7 ? f(m) : f(m - h * kXgk[i]);
        const cplx fr = i == 7 ? fl : f(m + h * kXgk[i]);
        const cplx s = i == 7 ? fl : fl + fr;
        acc_k += kWgk[i] * s;
        if (i % 2 == 1) acc_g += kWg[i / 2] * s;
    }
    value = acc_k * h;
    err = std::abs(acc_k - acc_g) * h;
}

}  // namespace

cplx propagate_oracle(const SampledWaveFunction& w, double dt, KernelConvention convention,
                      double x, double tol) {
    validate(w);
    if (!(dt > 0.0)) throw std::invalid_argument("propagate_oracle: dt must be > 0");
    const KernelSpec k = kernel_spec(dt, convention);

    auto integrand = [&](double y) -> cplx {
        const double d = y - x;
        return w(y) * std::exp(cplx(0.0, k.sign * k.lambda * d * d));
    };

    struct Seg {
        double a, b;
        cplx v;
        double e;
    };
    // seed with the input panels so the piecewise-linear breakpoints are honored
    std::vector<Seg> stack;
    cplx total(0.0, 0.0);
    double total_err = 0.0;
    size_t evals = 0;
    const size_t max_evals = 6'000'000;
    for (size_t j = 0; j + 1 < w.nodes.size(); ++j) {
        Seg s{w.nodes[j], w.nodes[j + 1], {}, 0.0};
        gk15(integrand, s.a, s.b, s.v, s.e);
        evals += 15;
        stack.push_back(s);
    }
    const double per_tol = tol / std::abs(k.prefactor);
    while (true) {
        double emax = 0.0;
        size_t imax = 0, live = stack.size();
        double esum = 0.0;
        for (size_t i = 0; i < live; ++i) {
            esum += stack[i].e;
            if (stack[i].e > emax) {
                emax = stack[i].e;
                imax = i;
            }
        }
        if (esum < per_tol) {
            total = cplx(0.0, 0.0);
            for (const Seg& s : stack) total += s.v;
            total_err = esum;
            break;
        }
        if (evals > max_evals)
            throw std::runtime_error("propagate_oracle: quadrature did not converge "
                                     "(oscillation too strong for the eval budget)");
        Seg s = stack[imax];
        const double m = 0.5 * (s.a + s.b);
        Seg l{s.a, m, {}, 0.0}, r{m, s.b, {}, 0.0};
        gk15(integrand, l.a, l.b, l.v, l.e);
        gk15(integrand, r.a, r.b, r.v, r.e);
        evals += 30;
        stack[imax] = l;
        stack.push_back(r);
    }
    (void)total_err;
    return k.prefactor * total;
}

}  // namespace qel
