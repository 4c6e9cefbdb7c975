#pragma once

#include <complex>

namespace qel {

using cplx = std::complex<double>;

/// Tail of a quadratic-phase integral:
///   value     = integral_{xi}^{inf} exp(-i lambda z^2) dz
///   argument  = xi (lower limit), phase_scale = lambda > 0.
/// |value| <= sqrt(pi/lambda) and value -> 0 as xi -> +inf.
struct FresnelTail {
    cplx   value;
    double argument;
    double phase_scale;
};

/// integral_{xi}^{inf} exp(-i lambda z^2) dz to ~1e-13 absolute accuracy.
///
/// Power series is used for small |xi| sqrt(lambda); a pole expansion of the
/// complex error function for large. The switch point sits where the series
/// still has ~3 guard digits left against cancellation in doubles.
/// Throws std::invalid_argument for lambda <= 0.
cplx fresnel_tail(double xi, double lambda);

/// Same, packaged with its inputs.
FresnelTail fresnel_tail_full(double xi, double lambda);

/// integral_a^b z^k exp(-i lambda z^2) dz for k in {0,1}.
/// k=1 is elementary (difference of exponentials, evaluated cancellation-free);
/// k=0 is a difference of fresnel_tail values, with a direct Gauss rule on
/// panels whose phase span is small. Throws for lambda <= 0 or k outside {0,1}.
cplx panel_moment(double a, double b, double lambda, int k);

namespace detail {

/// Phase-sign-general version: integral_{xi}^{inf} exp(sign * i lambda z^2) dz.
/// sign=-1 is fresnel_tail; sign=+1 is its complex conjugate (real xi).
cplx fresnel_tail_signed(double xi, double lambda, int sign);

/// Signed panel moment, used by the propagator for both kernel conventions.
cplx panel_moment_signed(double a, double b, double lambda, int k, int sign);

/// T(a) = integral_a^inf exp(-i u^2) du, the lambda=1 reduction.
cplx fresnel_tail_unit(double a);

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz) for Im(z) > 0.
cplx faddeeva_upper(cplx z);

}  // namespace detail

}  // namespace qel
