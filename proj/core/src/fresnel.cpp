#include "qel/fresnel.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace qel {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const double kSqrtPi = std::sqrt(kPi);
const cplx kExpMiPi4 = cplx(std::sqrt(0.5), -std::sqrt(0.5));  // e^{-i pi/4}

// Series / pole-expansion switch for T(a) = int_a^inf exp(-i u^2) du.
// Below the switch the Maclaurin series of int_0^a loses at most ~e^{a^2} ~ 55x
// in cancellation, keeping ~1e-14 absolute in doubles.
constexpr double kSeriesMax = 2.0;

// Pole expansion of the Faddeeva function (trapezoidal sum over a Gaussian):
//   w(z) ~ (i h / pi) [ 1/z + sum_k e^{-k^2 h^2} 2z/(z^2 - k^2 h^2) ],  Im z > 0.
// Truncation and aliasing errors are < 1e-15 for Im z >= sqrt(2) with h = 0.25.
constexpr double kPoleStep = 0.25;
constexpr int kPoleTerms = 26;

struct PoleTable {
    std::array<double, kPoleTerms + 1> w{};
    PoleTable() {
        for (int k = 0; k <= kPoleTerms; ++k) {
            const double kh = k * kPoleStep;
            w[static_cast<size_t>(k)] = std::exp(-kh * kh);
        }
    }
};
const PoleTable kPoles;

// e^{-i phi} with the argument formed in extended precision. For the large
// quadratic phases reached here (up to ~1e8 rad) the product itself, not the
// libm range reduction, is the accuracy limit.
cplx cis_neg(long double phi) {
    const long double tau = 2.0L * 3.14159265358979323846264338327950288L;
    const double r = static_cast<double>(std::fmod(phi, tau));
    return cplx(std::cos(r), -std::sin(r));
}

// T(a) for 0 <= a <= kSeriesMax:  T(0) - sum_n (-i)^n a^{2n+1} / (n! (2n+1)).
cplx tail_series(double a) {
    const cplx t0 = 0.5 * kSqrtPi * kExpMiPi4;
    cplx sum(a, 0.0);
    cplx term(a, 0.0);
    const double a2 = a * a;
    for (int n = 1; n < 64; ++n) {
        term *= cplx(0.0, -1.0) * a2 / static_cast<double>(n);
        const cplx add = term / static_cast<double>(2 * n + 1);
        sum += add;
        if (std::abs(add.real()) + std::abs(add.imag()) < 1e-18) break;
    }
    return t0 - sum;
}

// T(a) for a > kSeriesMax via  T(a) = (sqrt(pi)/2) e^{-i pi/4} e^{-i a^2} w(e^{3 i pi/4} a).
cplx tail_poles(double a, long double a2) {
    const cplx z = a * cplx(-std::sqrt(0.5), std::sqrt(0.5));
    const cplx z2 = z * z;  // = -i a^2, exact up to rounding
    cplx s = 1.0 / z;
    for (int k = 1; k <= kPoleTerms; ++k) {
        const double kh2 = (k * kPoleStep) * (k * kPoleStep);
        s += kPoles.w[static_cast<size_t>(k)] * 2.0 * z / (z2 - kh2);
    }
    const cplx w = cplx(0.0, kPoleStep / kPi) * s;
    return 0.5 * kSqrtPi * kExpMiPi4 * cis_neg(a2) * w;
}

// T(a) with the squared argument supplied separately (extended precision).
cplx tail_unit(double a, long double a2) {
    if (a >= 0.0) {
        return (a <= kSeriesMax) ? tail_series(a) : tail_poles(a, a2);
    }
    // even integrand: int_a^inf = int_{-inf}^{inf} - int_{-a}^{inf}
    const cplx full = kSqrtPi * kExpMiPi4;
    return full - ((-a <= kSeriesMax) ? tail_series(-a) : tail_poles(-a, a2));
}

// Direct Gauss-Legendre rule for int_a^b exp(s i lambda z^2) dz on panels whose
// total phase span is small; keeps relative accuracy on skinny panels where a
// difference of two O(1) tails would lose it.
constexpr std::array<double, 4> kGlx = {0.0, 0.4058451513773971669066064,
                                        0.7415311855993944398638648,
                                        0.9491079123427585245261897};
constexpr std::array<double, 4> kGlw = {0.4179591836734693877551020,
                                        0.3818300505051189449503698,
                                        0.2797053914892766679014678,
                                        0.1294849661688696932706114};

cplx panel_gauss(double a, double b, double lambda, int k, int sign) {
    const double m = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    auto f = [&](double z) {
        const cplx e = std::exp(cplx(0.0, sign * lambda * z * z));
        return k == 1 ? z * e : e;
    };
    cplx acc = kGlw[0] * f(m);
    for (size_t j = 1; j < kGlx.size(); ++j) {
        acc += kGlw[j] * (f(m - h * kGlx[j]) + f(m + h * kGlx[j]));
    }
    return acc * h;
}

}  // namespace

namespace detail {

cplx fresnel_tail_unit(double a) { return tail_unit(a, static_cast<long double>(a) * a); }

cplx faddeeva_upper(cplx z) {
    if (z.imag() <= 0.0) throw std::invalid_argument("faddeeva_upper: Im(z) must be > 0");
    const cplx z2 = z * z;
    cplx s = 1.0 / z;
    for (int k = 1; k <= kPoleTerms; ++k) {
        const double kh2 = (k * kPoleStep) * (k * kPoleStep);
        s += kPoles.w[static_cast<size_t>(k)] * 2.0 * z / (z2 - kh2);
    }
    return cplx(0.0, kPoleStep / kPi) * s;
}

cplx fresnel_tail_signed(double xi, double lambda, int sign) {
    if (!(lambda > 0.0)) throw std::invalid_argument("fresnel_tail: lambda must be > 0");
    const double rl = std::sqrt(lambda);
    const long double a2 = static_cast<long double>(xi) * xi * lambda;
    const cplx t = tail_unit(xi * rl, a2) / rl;
    return sign < 0 ? t : std::conj(t);
}

cplx panel_moment_signed(double a, double b, double lambda, int k, int sign) {
    if (!(lambda > 0.0)) throw std::invalid_argument("panel_moment: lambda must be > 0");
    if (k != 0 && k != 1) throw std::invalid_argument("panel_moment: k must be 0 or 1");
    if (a == b) return cplx(0.0, 0.0);
    if (a > b) return -panel_moment_signed(b, a, lambda, k, sign);

    if (k == 1) {
        // int_a^b z e^{-i lambda z^2} dz = e^{-i lambda a^2} (1 - e^{-i lambda (b^2-a^2)}) / (2 i lambda)
        const long double phia = static_cast<long double>(lambda) * a * a;
        const double dphi = static_cast<double>(
            static_cast<long double>(lambda) * (b - a) * (b + a));
        const double sh = std::sin(0.5 * dphi);
        const cplx one_minus = cplx(2.0 * sh * sh, std::sin(dphi));  // 1 - e^{-i dphi}
        const cplx v = cis_neg(phia) * one_minus / cplx(0.0, 2.0 * lambda);
        return sign < 0 ? v : std::conj(v);
    }

    // phase span across the panel decides between a direct rule and tail differences
    const double span = lambda * (b - a) * (std::abs(a) + std::abs(b) + (b - a));
    if (span < 0.5) return panel_gauss(a, b, lambda, 0, sign < 0 ? -1 : 1);

    const double rl = std::sqrt(lambda);
    const cplx ta = tail_unit(a * rl, static_cast<long double>(lambda) * a * a);
    const cplx tb = tail_unit(b * rl, static_cast<long double>(lambda) * b * b);
    const cplx v = (ta - tb) / rl;
    return sign < 0 ? v : std::conj(v);
}

}  // namespace detail

cplx fresnel_tail(double xi, double lambda) {
    return detail::fresnel_tail_signed(xi, lambda, -1);
}

FresnelTail fresnel_tail_full(double xi, double lambda) {
    return FresnelTail{fresnel_tail(xi, lambda), xi, lambda};
}

cplx panel_moment(double a, double b, double lambda, int k) {
    return detail::panel_moment_signed(a, b, lambda, k, -1);
}

}  // namespace qel
