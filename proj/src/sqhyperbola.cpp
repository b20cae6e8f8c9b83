#include "bidisk/sqhyperbola.hpp"

#include <algorithm>
#include <cmath>

namespace bidisk {

namespace {

constexpr double kRadicandClamp = 1e-13;
constexpr double kDomainSlack = 1e-12;
constexpr double kMaxX = 700.0;  // exp(X) must stay finite

// Normalized-coordinate evaluation of the branch parametrization.
//
// With a < b, d = log(b/a), X = sqrt(k) cosh t, delta = X - Y = sqrt(k) e^{-t},
// the circle data c1 = a cosh X, r1 = a sinh X, c2 = b cosh Y, r2 = b sinh Y
// give
//     y(t)   = (b^2 - a^2) / (2 (c2 - c1))
//     x(t)^2 = r1^2 - (y - c1)^2 = (y - a e^{-X}) (a e^{X} - y)
// Evaluated literally these cancel catastrophically near tangency and both
// c's overflow like exp(exp(t)). Rewriting every difference through expm1
// gives an exact, overflow-free form:
//     D    = expm1(d - delta) + e^{-2X} expm1(d + delta)
//     y    = a expm1(2d) / (e^{X} D)
//     x^2  = -a^2 expm1(d+delta) expm1(d-delta)
//            (expm1(d-delta) - expm1(-2X)) expm1(d+delta-2X) / D^2
// On the feasible domain expm1(d-delta) >= 0 and expm1(d+delta-2X) <= 0,
// both vanishing exactly at the tangency parameter t0, which is
// arccosh((d^2+k)/(2 d sqrt(k))).
struct NormalizedPoint {
    double x_abs;
    double y;
};

NormalizedPoint evaluate(const HyperbolaParam& p, double t) {
    const double delta = p.sqrt_k * std::exp(-t);
    const double X = p.sqrt_k * std::cosh(t);
    if (X > kMaxX) throw OutOfDomain("parameter exceeds the numeric range of the curve");
    double e1m = std::expm1(p.d - delta);
    const double e1p = std::expm1(p.d + delta);
    const double em2X = std::exp(-2.0 * X);
    double q = std::expm1(p.d + delta - 2.0 * X);
    // e1m and q are the tangency factors (>= 0 resp. <= 0 on the feasible
    // domain, zero exactly at t0). Roundoff of t0 puts them within ~1e-15 of
    // zero on the wrong side; absorb that here, where it is not yet amplified
    // by 1/D^2.
    const double factor_tol = kRadicandClamp * (1.0 + 2.0 * p.d);
    if (e1m < 0.0 && e1m > -factor_tol) e1m = 0.0;
    if (q > 0.0 && q < factor_tol) q = 0.0;
    const double D = e1m + em2X * e1p;
    const double y = p.a * std::expm1(2.0 * p.d) / (std::exp(X) * D);
    double xsq = -p.a * p.a * e1p * e1m * ((e1m + 1.0) - em2X) * q / (D * D);
    if (xsq < 0.0) {
        if (xsq < -kRadicandClamp * std::max(1.0, p.b * p.b))
            throw NegativeDiscriminant("circle intersection radicand is negative");
        xsq = 0.0;
    }
    return NormalizedPoint{std::sqrt(xsq), y};
}

}  // namespace

HyperbolaParam parametrize(const SquareHyperbola& h) {
    if (h.k == 0.0) throw ZeroK("k = 0 is the equidistant geodesic; use equidistant_line");
    HyperbolaParam p;
    p.swapped = h.k < 0.0;
    p.k = std::abs(h.k);
    const HPoint& z = p.swapped ? h.w : h.z;
    const HPoint& w = p.swapped ? h.z : h.w;
    const PairNormalization n = normalize_pair(z, w);
    p.g = n.g;
    p.g_inv = n.g.inverse();
    p.d = n.d;
    p.a = 1.0;
    p.b = std::exp(n.d);
    p.sqrt_k = std::sqrt(p.k);
    // Internal tangency of C1(t), C2(t); >= 1 by AM-GM, with equality (t0 = 0)
    // exactly when k = d^2.
    p.t0 = std::acosh((n.d * n.d + p.k) / (2.0 * n.d * p.sqrt_k));
    return p;
}

HPoint point_at_normalized(const HyperbolaParam& p, double t, Branch br) {
    if (t < p.t0 - kDomainSlack) throw OutOfDomain("t below the tangency parameter t0");
    const NormalizedPoint n = evaluate(p, std::max(t, p.t0));
    return HPoint(br == Branch::Plus ? n.x_abs : -n.x_abs, n.y);
}

HPoint point_at(const HyperbolaParam& p, double t, Branch br) {
    return apply(p.g_inv, point_at_normalized(p, t, br));
}

std::pair<IdealPoint, IdealPoint> endpoints(const SquareHyperbola& h) {
    const Geodesic l = equidistant_line(h.z, h.w);
    return {l.p, l.q};
}

double t_for_height(const HyperbolaParam& p, double y_target) {
    double lo = p.t0;
    double hi = p.t0 + 1.0;
    auto height = [&](double t) { return evaluate(p, t).y; };
    if (height(lo) <= y_target) return lo;
    while (height(hi) > y_target) {
        lo = hi;
        hi = p.t0 + 2.0 * (hi - p.t0);
        if (p.sqrt_k * std::cosh(hi) > kMaxX) {
            hi = std::acosh(kMaxX / p.sqrt_k);
            if (height(hi) > y_target) return hi;  // best reachable
            break;
        }
    }
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (height(mid) > y_target ? lo : hi) = mid;
    }
    return hi;
}

double endpoint_parameter(const HyperbolaParam& p, double eps) {
    const double target = std::sqrt(p.a * p.b);
    const double t_cap = std::acosh(kMaxX / p.sqrt_k);
    double t = std::max(p.t0 + 0.5, 1.0);
    while (true) {
        const NormalizedPoint n = evaluate(p, t);
        if (n.y < eps && std::abs(n.x_abs - target) < eps) return t;
        if (t >= t_cap) throw OutOfDomain("endpoint regime unreachable in double precision");
        t = std::min(t * 1.25, t_cap);
    }
}

std::vector<HPoint> sample(const SquareHyperbola& h, int n, double t_max) {
    if (n < 2) throw GeometryError("sample requires n >= 2");
    std::vector<HPoint> out;
    if (h.k == 0.0) {
        const Geodesic l = equidistant_line(h.z, h.w);
        out.reserve(n);
        for (int i = 0; i < n; ++i) {
            const double s = -t_max + 2.0 * t_max * i / (n - 1);
            out.push_back(l.at_arclength(s));
        }
        return out;
    }
    const HyperbolaParam p = parametrize(h);
    if (!(t_max > p.t0)) throw OutOfDomain("t_max must exceed t0");
    out.reserve(2 * n);
    for (int i = n - 1; i >= 0; --i) {
        const double t = p.t0 + (t_max - p.t0) * i / (n - 1);
        out.push_back(point_at(p, t, Branch::Minus));
    }
    for (int i = 0; i < n; ++i) {
        const double t = p.t0 + (t_max - p.t0) * i / (n - 1);
        out.push_back(point_at(p, t, Branch::Plus));
    }
    return out;
}

std::vector<HPoint> sample(const SquareHyperbola& h, int n) {
    if (h.k == 0.0) return sample(h, n, 5.0);
    const HyperbolaParam p = parametrize(h);
    return sample(h, n, t_for_height(p, 1e-3));
}

int side_sign(const SquareHyperbola& h) {
    if (h.k == 0.0) return 0;
    const Geodesic l = equidistant_line(h.z, h.w);
    int common = 0;
    for (const HPoint& x : sample(h, 25)) {
        const int s = side_of(l, x);
        if (s == 0) throw MixedSides("locus sample landed on the equidistant line");
        if (common == 0) common = s;
        else if (s != common) throw MixedSides("locus samples fall on both sides");
    }
    return common;
}

namespace {

// Bisection on a sign change of f over [lo, hi]; |f| < 1e-12 or 80 iterations.
template <typename F>
double bisect(F&& f, double lo, double hi, double f_lo) {
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (std::abs(fm) < 1e-12) return mid;
        if ((fm > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<RayHit> ray_intersections(const HyperbolaParam& p, double kappa, int scan_samples) {
    const Branch br = kappa > 0.0 ? Branch::Plus : Branch::Minus;
    auto f = [&](double t) {
        const NormalizedPoint n = evaluate(p, t);
        const double x = br == Branch::Plus ? n.x_abs : -n.x_abs;
        return n.y - kappa * x;
    };
    const double t_end = t_for_height(p, 1e-6 * std::sqrt(p.a * p.b) * std::abs(kappa));
    std::vector<RayHit> hits;
    double prev_t = p.t0;
    double prev_f = f(prev_t);
    for (int i = 1; i <= scan_samples; ++i) {
        const double t = p.t0 + (t_end - p.t0) * i / scan_samples;
        const double ft = f(t);
        if (prev_f == 0.0)
            hits.push_back({prev_t, br});
        else if ((ft > 0.0) != (prev_f > 0.0))
            hits.push_back({bisect(f, prev_t, t, prev_f), br});
        prev_t = t;
        prev_f = ft;
    }
    return hits;
}

std::vector<HPoint> ray_curve_hits(const SquareHyperbola& h, double kappa, int scan_samples) {
    const HyperbolaParam p = parametrize(h);
    const double t_end = t_for_height(p, 1e-5);
    std::vector<HPoint> hits;
    for (Branch br : {Branch::Minus, Branch::Plus}) {
        auto f = [&](double t) {
            const HPoint pt = point_at(p, t, br);
            return pt.y - kappa * pt.x;
        };
        double prev_t = p.t0;
        double prev_f = f(prev_t);
        for (int i = 1; i <= scan_samples; ++i) {
            const double t = p.t0 + (t_end - p.t0) * i / scan_samples;
            const double ft = f(t);
            if ((ft > 0.0) != (prev_f > 0.0)) {
                const double root = bisect(f, prev_t, t, prev_f);
                hits.push_back(point_at(p, root, br));
            }
            prev_t = t;
            prev_f = ft;
        }
    }
    return hits;
}

}  // namespace bidisk
