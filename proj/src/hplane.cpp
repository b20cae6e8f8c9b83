#include "bidisk/hplane.hpp"

#include <algorithm>
#include <cmath>

namespace bidisk {

bool ideal_equal(const IdealPoint& a, const IdealPoint& b, double tol) {
    if (a.infinite || b.infinite) return a.infinite && b.infinite;
    return std::abs(a.value - b.value) <= tol * (1.0 + std::abs(a.value) + std::abs(b.value));
}

bool ideal_less(const IdealPoint& a, const IdealPoint& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
}

Mobius::Mobius(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
    const double det = a * d - b * c;
    if (!std::isfinite(det) || det <= 0.0)
        throw GeometryError("Mobius requires a positive determinant (orientation-preserving)");
    const double s = 1.0 / std::sqrt(det);
    a *= s;
    b *= s;
    c *= s;
    d *= s;
}

Mobius Mobius::scaling(double s) {
    if (!(s > 0.0)) throw GeometryError("scaling factor must be positive");
    const double r = std::sqrt(s);
    return Mobius(r, 0.0, 0.0, 1.0 / r);
}

Mobius operator*(const Mobius& m, const Mobius& n) {
    return Mobius(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                  m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
}

HPoint apply(const Mobius& m, const HPoint& z) {
    const double u = m.c * z.x + m.d;
    const double v = m.c * z.y;
    const double q = u * u + v * v;
    // Im(g z) = y * det / |cz+d|^2 with det = 1.
    return HPoint(((m.a * z.x + m.b) * u + m.a * z.y * v) / q, z.y / q);
}

IdealPoint apply(const Mobius& m, const IdealPoint& x) {
    if (x.infinite) {
        if (m.c == 0.0) return IdealPoint::infinity();
        return IdealPoint(m.a / m.c);
    }
    const double den = m.c * x.value + m.d;
    // Cancellation below working precision means the preimage of ∞.
    if (std::abs(den) <= 1e-12 * (std::abs(m.c * x.value) + std::abs(m.d)))
        return IdealPoint::infinity();
    return IdealPoint((m.a * x.value + m.b) / den);
}

IsometryClass classify(const Mobius& m, double tol) {
    if (std::abs(m.b) <= tol && std::abs(m.c) <= tol && std::abs(m.a - m.d) <= tol)
        return IsometryClass::Identity;
    const double t = std::abs(m.trace());
    if (t > 2.0 + tol) return IsometryClass::Hyperbolic;
    if (std::abs(t - 2.0) <= tol) return IsometryClass::Parabolic;
    return IsometryClass::Elliptic;
}

Geodesic::Geodesic(IdealPoint p_, IdealPoint q_) : p(p_), q(q_) {
    if (ideal_equal(p, q, 0.0)) throw CoincidentPoints("geodesic endpoints must be distinct");
    if (ideal_less(q, p)) std::swap(p, q);
}

HPoint Geodesic::apex() const {
    if (vertical()) return HPoint(line_x(), 1.0);
    return HPoint(center(), radius());
}

HPoint Geodesic::at_arclength(double s) const {
    if (vertical()) return HPoint(line_x(), std::exp(s));
    // Image of exp(s) I under [[q, p], [1, 1]], which maps (0, ∞) to (p, q)
    // and I to the apex; isometries keep the parametrization unit-speed.
    const double es = std::exp(s);
    const double qv = q.value, pv = p.value;
    const double den = es * es + 1.0;
    return HPoint((qv * es * es + pv) / den, (qv - pv) * es / den);
}

bool geodesic_equal(const Geodesic& l1, const Geodesic& l2, double tol) {
    return ideal_equal(l1.p, l2.p, tol) && ideal_equal(l1.q, l2.q, tol);
}

Geodesic axis(const Mobius& m, double tol) {
    if (classify(m, tol) != IsometryClass::Hyperbolic)
        throw NotHyperbolic("axis requires a hyperbolic isometry");
    if (m.c == 0.0) {
        // Fixed points ∞ and b/(d-a); a != d since |a+d| > 2 with ad = 1.
        return Geodesic(IdealPoint(m.b / (m.d - m.a)), IdealPoint::infinity());
    }
    // c z^2 + (d-a) z - b = 0; discriminant equals tr^2 - 4 when det = 1.
    const double B = m.d - m.a;
    const double disc = m.trace() * m.trace() - 4.0;
    const double sq = std::sqrt(disc);
    if (B == 0.0) {
        const double r = std::sqrt(m.b / m.c);
        return Geodesic(IdealPoint(-r), IdealPoint(r));
    }
    const double qq = -0.5 * (B + std::copysign(sq, B));
    return Geodesic(IdealPoint(qq / m.c), IdealPoint(-m.b / qq));
}

Geodesic geodesic_through(const HPoint& z, const HPoint& w) {
    if (approx_equal(z, w, 0.0))
        throw CoincidentPoints("geodesic_through requires distinct points");
    const double dx = z.x - w.x;
    if (std::abs(dx) <= 1e-14 * (1.0 + std::abs(z.x) + std::abs(w.x)))
        return Geodesic(IdealPoint(0.5 * (z.x + w.x)), IdealPoint::infinity());
    // Center on the real axis from |z-c| = |w-c|.
    const double c = 0.5 * (z.x * z.x + z.y * z.y - w.x * w.x - w.y * w.y) / dx;
    const double r = std::hypot(z.x - c, z.y);
    return Geodesic(IdealPoint(c - r), IdealPoint(c + r));
}

Geodesic equidistant_line(const HPoint& z, const HPoint& w) {
    // Normalize (z, w) to (I, exp(d) I); there the locus is the semicircle of
    // radius exp(d/2) about 0, whose endpoints pull back through g^{-1}.
    const PairNormalization n = normalize_pair(z, w);
    const double r = std::exp(0.5 * n.d);
    const Mobius ginv = n.g.inverse();
    return Geodesic(apply(ginv, IdealPoint(-r)), apply(ginv, IdealPoint(r)));
}

int side_of(const Geodesic& l, const HPoint& z, double tol) {
    double v, scale;
    if (l.vertical()) {
        v = z.x - l.line_x();
        scale = 1.0 + std::abs(z.x) + std::abs(l.line_x());
    } else {
        const double dx = z.x - l.center();
        const double r2 = l.radius() * l.radius();
        v = dx * dx + z.y * z.y - r2;
        scale = dx * dx + z.y * z.y + r2;
    }
    if (std::abs(v) <= tol * scale) return 0;
    return v > 0.0 ? 1 : -1;
}

namespace {

// Robust sign of a difference of boundary coordinates; 0 when within
// roundoff of equal.
int diff_sign(double u, double v) {
    const double d = u - v;
    if (std::abs(d) <= 1e-13 * (1.0 + std::abs(u) + std::abs(v))) return 0;
    return d > 0.0 ? 1 : -1;
}

}  // namespace

bool geodesics_disjoint(const Geodesic& l1, const Geodesic& l2) {
    // Asymptotic geodesics (shared endpoint) are disjoint in H^2.
    if (ideal_equal(l1.p, l2.p) || ideal_equal(l1.p, l2.q) || ideal_equal(l1.q, l2.p) ||
        ideal_equal(l1.q, l2.q))
        return true;
    // The pairs {a,b}, {c,d} separate each other on the circle iff the
    // cross-ratio sign product (a-c)(b-d)(a-d)(b-c) is negative; factors
    // containing ∞ drop out (the limit of the cross-ratio).
    int sign = 1;
    bool crossing_possible = true;
    auto fold = [&](const IdealPoint& u, const IdealPoint& v) {
        if (u.infinite || v.infinite) return;  // dropped factor
        const int s = diff_sign(u.value, v.value);
        if (s == 0) crossing_possible = false;  // touching: not strict interleave
        sign *= s;
    };
    fold(l1.p, l2.p);
    fold(l1.q, l2.q);
    fold(l1.p, l2.q);
    fold(l1.q, l2.p);
    if (!crossing_possible) return true;
    return sign > 0;
}

double dist_to_geodesic(const HPoint& z, const Geodesic& l) {
    if (l.vertical()) return std::asinh(std::abs(z.x - l.line_x()) / z.y);
    // Send l to (0, ∞) with [[1, -p], [-1, q]] and use sinh(d) = |x|/y there.
    const double pv = l.p.value, qv = l.q.value;
    const double nx = z.x - pv, ny = z.y;
    const double dx = qv - z.x, dy = -z.y;
    const double den = dx * dx + dy * dy;
    const double ix = (nx * dx + ny * dy) / den;
    const double iy = (ny * dx - nx * dy) / den;
    return std::asinh(std::abs(ix) / iy);
}

PairNormalization normalize_pair(const HPoint& z, const HPoint& w) {
    if (approx_equal(z, w, 0.0))
        throw CoincidentPoints("normalize_pair requires distinct points");
    const Geodesic l = geodesic_through(z, w);
    Mobius h = l.vertical() ? Mobius::translation(-l.line_x())
                            : Mobius(1.0, -l.p.value, -1.0, l.q.value);
    double alpha = apply(h, z).y;
    double beta = apply(h, w).y;
    if (beta < alpha) {
        h = Mobius(0.0, -1.0, 1.0, 0.0) * h;  // z -> -1/z swaps the axis ends
        alpha = 1.0 / alpha;
        beta = 1.0 / beta;
    }
    const Mobius g = Mobius::scaling(1.0 / alpha) * h;
    return PairNormalization{g, std::log(beta / alpha)};
}

}  // namespace bidisk
