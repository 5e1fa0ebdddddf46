#pragma once

#include <vector>

#include "majorate/entropy.hpp"

namespace majorate {

/// A value V with its tilt parameter alpha_V and the four asymptotic
/// exponents (bits): mass exponents M, M* and size exponents S, S*.
struct ExponentPoint {
    double V = 0.0;
    ExtendedAlpha alpha_V;
    double M = 0.0;
    double M_star = 0.0;
    double S = 0.0;
    double S_star = 0.0;
};

/// Solves F'(alpha) = V on the extended line. V must lie in the closed
/// interval [log2 p(d), log2 p(1)] (within 1e-12); the endpoints map to
/// -inf/+inf. Expanding bracket plus bisection (F' is strictly increasing),
/// finished with Newton polish; accuracy 1e-12 in V.
ExtendedAlpha solve_alpha(const ProbDist& p, double V);

/// The four exponents at V: zero/log2-d plateaus on their closed regimes and
/// the Legendre pieces F(a) + (1-a) F'(a), F(a) - a F'(a) elsewhere; closed
/// forms with the argmax/argmin tie counts at the V-endpoints.
ExponentPoint exponents_at(const ProbDist& p, double V);

/// Exponents at a known alpha (V = F'(alpha)); shared backend of
/// exponents_at and exponent_curve.
ExponentPoint exponents_at_alpha(const ProbDist& p, const ExtendedAlpha& alpha);

/// Samples the exponent functions on a tan-transformed alpha grid with
/// 4*resolution interior points, both V-endpoints, and the two regime
/// boundaries (alpha = 0 and alpha = 1) forced in. Sorted by V ascending.
std::vector<ExponentPoint> exponent_curve(const ProbDist& p, int resolution);

}  // namespace majorate
