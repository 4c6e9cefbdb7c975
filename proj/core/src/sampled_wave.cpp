#include "qel/sampled_wave.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qel {

SampledWaveFunction::SampledWaveFunction(std::vector<double> n, std::vector<cplx> v)
    : nodes(std::move(n)), values(std::move(v)) {
    validate(*this);
}

void validate(const SampledWaveFunction& w) {
    if (w.nodes.size() < 2) throw std::invalid_argument("sampled wave needs at least 2 nodes");
    if (w.nodes.size() != w.values.size())
        throw std::invalid_argument("sampled wave: nodes/values size mismatch");
    for (size_t i = 1; i < w.nodes.size(); ++i) {
        if (!(w.nodes[i] > w.nodes[i - 1]))
            throw std::invalid_argument("sampled wave: nodes must be strictly increasing");
    }
}

cplx SampledWaveFunction::operator()(double x) const {
    if (x <= nodes.front() || x >= nodes.back()) {
        if (x == nodes.front()) return values.front();
        if (x == nodes.back()) return values.back();
        return cplx(0.0, 0.0);
    }
    const auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
    const size_t j = static_cast<size_t>(it - nodes.begin()) - 1;
    const double t = (x - nodes[j]) / (nodes[j + 1] - nodes[j]);
    return values[j] + t * (values[j + 1] - values[j]);
}

double SampledWaveFunction::norm_squared() const {
    // int |v0 + t (v1 - v0)|^2 h dt = h/3 (|v0|^2 + Re(conj(v0) v1) + |v1|^2)
    double acc = 0.0;
    for (size_t j = 0; j + 1 < nodes.size(); ++j) {
        const double h = nodes[j + 1] - nodes[j];
        const cplx v0 = values[j], v1 = values[j + 1];
        acc += h / 3.0 * (std::norm(v0) + (std::conj(v0) * v1).real() + std::norm(v1));
    }
    return acc;
}

cplx SampledWaveFunction::inner_product(const SampledWaveFunction& a,
                                        const SampledWaveFunction& b) {
    // merge node sets over the overlap; both factors are linear per merged panel
    const double lo = std::max(a.left(), b.left());
    const double hi = std::min(a.right(), b.right());
    if (!(lo < hi)) return cplx(0.0, 0.0);
    std::vector<double> grid;
    grid.reserve(a.nodes.size() + b.nodes.size());
    for (double x : a.nodes)
        if (x >= lo && x <= hi) grid.push_back(x);
    for (double x : b.nodes)
        if (x >= lo && x <= hi) grid.push_back(x);
    grid.push_back(lo);
    grid.push_back(hi);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    cplx acc(0.0, 0.0);
    for (size_t j = 0; j + 1 < grid.size(); ++j) {
        const double x0 = grid[j], x1 = grid[j + 1];
        const double h = x1 - x0;
        if (h <= 0.0) continue;
        const cplx a0 = a(x0), a1 = a(x1), b0 = b(x0), b1 = b(x1);
        // int_0^1 conj(a0 + t da)(b0 + t db) dt, exact
        const cplx da = a1 - a0, db = b1 - b0;
        acc += h * (std::conj(a0) * b0 + 0.5 * (std::conj(a0) * db + std::conj(da) * b0) +
                    std::conj(da) * db / 3.0);
    }
    return acc;
}

void SampledWaveFunction::scale(cplx s) {
    for (auto& v : values) v *= s;
}

void SampledWaveFunction::shift_nodes(double s) {
    for (auto& x : nodes) x += s;
}

double norm_squared(const SampledWaveFunction& w) { return w.norm_squared(); }

SampledWaveFunction linear_combination(cplx a, const SampledWaveFunction& u,
                                       cplx b, const SampledWaveFunction& v) {
    std::vector<double> grid;
    grid.reserve(u.nodes.size() + v.nodes.size());
    grid.insert(grid.end(), u.nodes.begin(), u.nodes.end());
    grid.insert(grid.end(), v.nodes.begin(), v.nodes.end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::vector<cplx> vals(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) vals[i] = a * u(grid[i]) + b * v(grid[i]);
    return SampledWaveFunction(std::move(grid), std::move(vals));
}

}  // namespace qel
