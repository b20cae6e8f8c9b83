#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bidisk/hplane.hpp"

// Square hyperbolae SH^k(z,w) = { x : d^2(x,z) - d^2(x,w) = k }: implicit
// evaluation, the circle-intersection parametrization of each branch,
// ideal endpoints, sampling and ray intersection.

namespace bidisk {

struct SquareHyperbola {
    HPoint z, w;
    double k{0.0};

    SquareHyperbola(HPoint z_, HPoint w_, double k_) : z(z_), w(w_), k(k_) {
        if (approx_equal(z, w, 0.0))
            throw CoincidentPoints("SquareHyperbola requires distinct base points");
    }
};

/// d^2(x,z) - d^2(x,w) - k; zero (within tolerance) iff x is on the locus.
inline double implicit_value(const SquareHyperbola& h, const HPoint& x) {
    return dist2(x, h.z) - dist2(x, h.w) - h.k;
}

/// Branch label: sign of the real part in the normalized coordinates of
/// HyperbolaParam. The normalizing isometry need not preserve left/right in
/// the original coordinates.
enum class Branch { Plus, Minus };

inline const char* branch_name(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

/// Parametrization data in normalized coordinates, where the base points sit
/// at aI and bI (a < b) and the locus is swept by intersecting the circles
///   C1(t) = { d(x, aI) = sqrt(k) cosh t },  C2(t) = { d(x, bI) = sqrt(k) sinh t }
/// for t >= t0, the first parameter at which they meet. A negative input k is
/// first rewritten through SH^k(z,w) = SH^{-k}(w,z) (swapped = true).
struct HyperbolaParam {
    double a{1.0};      // normalized heights: always 1 and exp(d)
    double b{1.0};
    double k{0.0};      // positive after the swap rewrite
    double t0{0.0};
    Mobius g;           // normalizing isometry (applied to the possibly swapped pair)
    Mobius g_inv;
    bool swapped{false};
    double d{0.0};      // log(b/a) = distance between the normalized points
    double sqrt_k{0.0};
};

/// Builds the parametrization; throws ZeroK for k = 0 (the locus is the
/// equidistant geodesic — use equidistant_line).
HyperbolaParam parametrize(const SquareHyperbola& h);

/// Point of the locus in normalized coordinates at parameter t.
HPoint point_at_normalized(const HyperbolaParam& p, double t, Branch br);

/// Point of the locus in the original coordinates (mapped back through the
/// normalizing isometry).
HPoint point_at(const HyperbolaParam& p, double t, Branch br);

/// Ideal endpoints of the locus: those of the equidistant line SH^0(z,w),
/// for every k.
std::pair<IdealPoint, IdealPoint> endpoints(const SquareHyperbola& h);

/// Smallest t >= t0 + step with Im(point) below y_target; exploratory
/// doubling plus bisection. Used as the default curve extent.
double t_for_height(const HyperbolaParam& p, double y_target);

/// Parameter at which both |x -+ sqrt(ab)| and y drop below eps (the
/// endpoint regime of the Lemma). Throws OutOfDomain when eps is not
/// reachable in double precision (y underflows first).
double endpoint_parameter(const HyperbolaParam& p, double eps);

/// n points per branch ordered by t in [t0, t_max], Minus branch reversed
/// then concatenated with Plus so the polyline runs through the apex.
/// For k = 0, n points of the equidistant geodesic at arclengths in
/// [-t_max, t_max].
std::vector<HPoint> sample(const SquareHyperbola& h, int n, double t_max);

/// Default sampling extent: t_for_height(p, 1e-3) for k != 0.
std::vector<HPoint> sample(const SquareHyperbola& h, int n);

/// Common value of side_of(equidistant_line(z,w), x) over the locus:
/// +-1 for k != 0 (the w-side for k > 0), 0 for k = 0. Throws MixedSides if
/// sampled signs disagree.
int side_sign(const SquareHyperbola& h);

struct RayHit {
    double t;
    Branch branch;
};

/// Parameters where the Euclidean ray y = kappa * x meets the given branch
/// in normalized coordinates; kappa > 0 selects Plus, kappa < 0 selects
/// Minus. Sign-change scan plus bisection; increasing t.
std::vector<RayHit> ray_intersections(const HyperbolaParam& p, double kappa,
                                      int scan_samples = 512);

/// Ray crossings in the original coordinates (y = kappa * x against the
/// denormalized curve); used for the off-axis figure.
std::vector<HPoint> ray_curve_hits(const SquareHyperbola& h, double kappa,
                                   int scan_samples = 1024);

}  // namespace bidisk
