#pragma once

#include <array>
#include <cmath>

namespace varfrac {

// Points live in at most two dimensions; 1-d points keep the second slot at 0,
// so distances and norms are dimension-agnostic.
using Vec = std::array<double, 2>;

inline Vec vec1(double x) { return {x, 0.0}; }
inline Vec vec2(double x, double y) { return {x, y}; }

inline double dist2(const Vec& a, const Vec& b) {
    const double dx = a[0] - b[0];
    const double dy = a[1] - b[1];
    return dx * dx + dy * dy;
}

inline double dist(const Vec& a, const Vec& b) { return std::sqrt(dist2(a, b)); }

inline double norm(const Vec& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1]); }

/// Axis-aligned box domain.
struct Box {
    int dim = 1;
    Vec lo{0.0, 0.0};
    Vec hi{1.0, 0.0};

    double extent(int k) const { return hi[k] - lo[k]; }

    double diameter() const {
        double d2 = 0.0;
        for (int k = 0; k < dim; ++k) d2 += extent(k) * extent(k);
        return std::sqrt(d2);
    }

    /// Largest distance from the origin to a box corner; the collar ball
    /// |y| <= R_max must contain the whole box.
    double circumradius() const {
        double d2 = 0.0;
        for (int k = 0; k < dim; ++k) {
            const double m = std::max(std::abs(lo[k]), std::abs(hi[k]));
            d2 += m * m;
        }
        return std::sqrt(d2);
    }

    bool contains(const Vec& x, double margin = 0.0) const {
        for (int k = 0; k < dim; ++k)
            if (x[k] < lo[k] + margin || x[k] > hi[k] - margin) return false;
        return true;
    }

    /// True when the whole ball B_r(c) lies inside the box.
    bool contains_ball(const Vec& c, double r) const { return contains(c, r); }
};

/// Surface measure of the unit sphere: 2 for n = 1, 2*pi for n = 2.
inline double sphere_measure(int dim) {
    return dim == 1 ? 2.0 : 2.0 * 3.14159265358979323846;
}

}  // namespace varfrac
