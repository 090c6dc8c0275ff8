#pragma once

namespace rap {

struct Angle {
    double radians = 0.0;
};

/// Hyperbolic volume with an absolute error bound.
struct Volume {
    double value = 0.0;
    double error_bound = 0.0;
};

struct Evaluation {
    double value = 0.0;
    double error_bound = 0.0;
};

/// Lobachevsky function  -int_0^theta log|2 sin t| dt.
///
/// Returns the series value. With verification on (RAP_VERIFY=1 or
/// set_verification(true)) every call is cross-checked against quadrature
/// and a disagreement above 1e-9 raises InternalError. Throws NonFinite.
double lobachevsky(Angle theta);

/// Series route: half the Clausen function Cl2(2 theta) through its
/// Bernoulli-number expansion on [-pi, pi], with an explicit tail bound.
Evaluation lobachevsky_series(Angle theta);

/// Quadrature route: adaptive Gauss-Kronrod on the defining integral, with
/// breakpoints at the logarithmic singularities (multiples of pi).
Evaluation lobachevsky_quadrature(Angle theta);

/// Fourier partial sum  1/2 sum_{k<=terms} sin(2k theta)/k^2  with the
/// Abel-summation bound on the remainder. Slow; meant for cross-checks.
Evaluation lobachevsky_fourier(Angle theta, long terms);

/// theta_n = pi/2 - arccos(1 / (2 cos(pi/n))), n >= 5.
Angle theta_n(int n);

/// Closed-form volume of the Lobell polyhedron L(n), n >= 5.
Volume lobell_volume(int n);

/// Dihedral angle of the unbending edge at parameter t:
/// (1 - t) pi/2 + t pi.
Angle deformation_angle(double t);

bool verification_enabled();
void set_verification(bool on);

} // namespace rap
