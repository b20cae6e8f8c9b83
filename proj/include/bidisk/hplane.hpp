#pragma once

#include <cmath>
#include <utility>

#include "bidisk/errors.hpp"

// Upper half-plane model of the hyperbolic plane: points, the distance
// formula d(z,w) = 2 artanh(|z-w|/|z-conj(w)|), orientation-preserving
// Moebius isometries, geodesics stored by their ideal endpoints, and the
// normalization that moves a point pair onto the imaginary axis.

namespace bidisk {

struct HPoint {
    double x{0.0};
    double y{1.0};

    HPoint() = default;
    HPoint(double x_, double y_) : x(x_), y(y_) {
        if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0))
            throw GeometryError("HPoint requires finite coordinates with y > 0");
    }
};

inline bool approx_equal(const HPoint& a, const HPoint& b, double tol = 1e-12) {
    return std::abs(a.x - b.x) <= tol * (1.0 + std::abs(a.x) + std::abs(b.x)) &&
           std::abs(a.y - b.y) <= tol * (1.0 + std::abs(a.y) + std::abs(b.y));
}

/// A point of the ideal boundary R ∪ {∞}. The point at infinity is an
/// explicit variant, never a large float.
struct IdealPoint {
    double value{0.0};
    bool infinite{false};

    IdealPoint() = default;
    explicit IdealPoint(double v) : value(v) {
        if (!std::isfinite(v)) throw GeometryError("finite IdealPoint requires a finite value");
    }
    static IdealPoint infinity() {
        IdealPoint p;
        p.infinite = true;
        return p;
    }
};

bool ideal_equal(const IdealPoint& a, const IdealPoint& b, double tol = 1e-12);
// Total order with ∞ greatest; used for the canonical endpoint ordering.
bool ideal_less(const IdealPoint& a, const IdealPoint& b);

enum class IsometryClass { Hyperbolic, Parabolic, Elliptic, Identity };

/// Element of PSL(2,R) acting on the upper half-plane by z -> (az+b)/(cz+d).
/// The constructor rescales to determinant +1; orientation-reversing input
/// (ad-bc <= 0) is rejected.
struct Mobius {
    double a{1.0}, b{0.0}, c{0.0}, d{1.0};

    Mobius() = default;
    Mobius(double a_, double b_, double c_, double d_);

    Mobius inverse() const { return Mobius(d, -b, -c, a); }
    double trace() const { return a + d; }

    static Mobius identity() { return Mobius(); }
    static Mobius translation(double t) { return Mobius(1.0, t, 0.0, 1.0); }
    /// z -> s*z for s > 0.
    static Mobius scaling(double s);
    /// Rotation matrix [[cos t, sin t], [-sin t, cos t]] (elliptic about I).
    static Mobius rotation(double theta) {
        return Mobius(std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta));
    }
};

Mobius operator*(const Mobius& m, const Mobius& n);

HPoint apply(const Mobius& m, const HPoint& z);
IdealPoint apply(const Mobius& m, const IdealPoint& x);

constexpr double kClassifyTol = 1e-10;

/// Trace classification on the determinant-normalized matrix:
/// |tr| > 2+tol hyperbolic, ||tr|-2| <= tol parabolic, |tr| < 2-tol elliptic;
/// matrices within tol of ±Id classify as Identity.
IsometryClass classify(const Mobius& m, double tol = kClassifyTol);

/// Complete geodesic, stored by its two distinct ideal endpoints in
/// canonical order (p < q, with ∞ greatest), so equal geodesics compare equal.
struct Geodesic {
    IdealPoint p, q;

    Geodesic(IdealPoint p_, IdealPoint q_);

    bool vertical() const { return q.infinite; }
    /// Euclidean center on the real axis (semicircle case only).
    double center() const { return 0.5 * (p.value + q.value); }
    double radius() const { return 0.5 * (q.value - p.value); }
    /// x-coordinate of a vertical geodesic.
    double line_x() const { return p.value; }

    /// Topmost point of a semicircle; (x, 1) on a vertical line.
    HPoint apex() const;
    /// Unit-speed parametrization. Base point is apex(), increasing s moves
    /// toward endpoint q.
    HPoint at_arclength(double s) const;
};

bool geodesic_equal(const Geodesic& l1, const Geodesic& l2, double tol = 1e-9);

/// Invariant axis of a hyperbolic isometry: the geodesic through its two
/// real fixed points. Throws NotHyperbolic otherwise.
Geodesic axis(const Mobius& m, double tol = kClassifyTol);

/// The unique geodesic through two distinct points.
Geodesic geodesic_through(const HPoint& z, const HPoint& w);

/// The locus of points equidistant from z and w; a geodesic perpendicular to
/// geodesic_through(z, w).
Geodesic equidistant_line(const HPoint& z, const HPoint& w);

/// Sign convention: for a semicircle with center c and radius r the value is
/// sign((x-c)^2 + y^2 - r^2), so inside = -1; for a vertical line x = v it is
/// sign(x - v), so left = -1. |value| within tol (relative) means "on L" = 0.
int side_of(const Geodesic& l, const HPoint& z, double tol = 1e-10);

/// True iff the endpoint pairs do not strictly interleave on the boundary
/// circle. Shared endpoints (asymptotic geodesics) count as disjoint.
bool geodesics_disjoint(const Geodesic& l1, const Geodesic& l2);

/// Hyperbolic distance d(z,w) = 2 artanh(|z-w|/|z-conj(w)|), evaluated in the
/// equivalent stable form 2 asinh(|z-w| / (2 sqrt(y1 y2))).
inline double dist(const HPoint& z, const HPoint& w) {
    const double dx = z.x - w.x;
    const double dy = z.y - w.y;
    return 2.0 * std::asinh(0.5 * std::sqrt((dx * dx + dy * dy) / (z.y * w.y)));
}

inline double dist2(const HPoint& z, const HPoint& w) {
    const double d = dist(z, w);
    return d * d;
}

/// Distance from a point to a geodesic.
double dist_to_geodesic(const HPoint& z, const Geodesic& l);

struct PairNormalization {
    Mobius g;   // sends z to I and w to exp(d)*I
    double d;   // dist(z, w)
};

/// Moebius normalization of a distinct pair: g maps geodesic_through(z,w) to
/// the imaginary axis with g(z) = I and g(w) = exp(d) I, d = dist(z,w).
PairNormalization normalize_pair(const HPoint& z, const HPoint& w);

}  // namespace bidisk
