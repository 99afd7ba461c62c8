#pragma once

#include <cmath>
#include <vector>

#include "varfrac/errors.hpp"
#include "varfrac/geometry.hpp"

namespace varfrac {

// 8-point Gauss-Legendre rule on [-1, 1].
inline constexpr double kGL8Nodes[8] = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
inline constexpr double kGL8Weights[8] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

/// One node of a radial far-field rule: integral of F over {|y| > R} against
/// the kernel envelope is approximated by sum_q w_q * F(t_q).
struct FarNode {
    double t;
    double w;
};

/// Nodes and weights for
///     integral over {y in R^n : |y| > R} of F(|y|) * |y|^{-(n+kappa)} dy
///   = |S^{n-1}| * (R^{-kappa}/kappa) * integral_0^1 F(R * u^{-1/kappa}) du,
/// via the exact substitution u = (R/t)^kappa. Composite Gauss-Legendre on
/// geometrically graded panels toward u = 0 (t = infinity); the truncated
/// mass below u = 2^-40 is ~1e-12 of the envelope integral.
inline std::vector<FarNode> far_field_nodes(int dim, double radius, double kappa) {
    if (!(kappa > 0.0))
        throw DivergenceError("far-field envelope exponent s*p = " + std::to_string(kappa) +
                              " must be positive");
    if (!(radius > 0.0)) throw ConfigError("far-field truncation radius must be positive");
    const double envelope = sphere_measure(dim) * std::pow(radius, -kappa) / kappa;
    std::vector<FarNode> nodes;
    nodes.reserve(40 * 8);
    double hi = 1.0;
    for (int panel = 0; panel < 40; ++panel) {
        const double lo = hi * 0.5;
        const double mid = 0.5 * (lo + hi);
        const double halfw = 0.5 * (hi - lo);
        for (int q = 0; q < 8; ++q) {
            const double u = mid + halfw * kGL8Nodes[q];
            nodes.push_back({radius * std::pow(u, -1.0 / kappa),
                             envelope * halfw * kGL8Weights[q]});
        }
        hi = lo;
    }
    return nodes;
}

/// Closed form of the envelope integral itself (F identically 1).
inline double far_field_envelope(int dim, double radius, double kappa) {
    return sphere_measure(dim) * std::pow(radius, -kappa) / kappa;
}

}  // namespace varfrac
