#ifndef CURVES_CAYLEY_HPP
#define CURVES_CAYLEY_HPP

#include <limits>
#include <vector>

#include "curves/polyring.hpp"

namespace curves {

struct PointNotOnCurve : std::runtime_error {
    PointNotOnCurve() : std::runtime_error("point does not lie on the curve") {}
};
struct SingularPointError : std::runtime_error {
    SingularPointError() : std::runtime_error("point is singular on the curve") {}
};
struct InflectionPointError : std::runtime_error {
    InflectionPointError() : std::runtime_error("point is an inflection point (h = 0)") {}
};
struct ContactCapExceeded : std::runtime_error {
    explicit ContactCapExceeded(int cap)
        : std::runtime_error("contact order undetermined at series truncation cap " +
                             std::to_string(cap)) {}
};

/// Sentinel for infinite contact order (shared component).
inline constexpr int kContactInfinity = std::numeric_limits<int>::max();

/// det of the 3x3 matrix of gradients of f, g, h.
HomPoly jacobian_det(const HomPoly& f, const HomPoly& g, const HomPoly& h);

/// Classical Hessian determinant, degree 3(d-2).
HomPoly hessian(const HomPoly& f);

/// tr(adj(Hess f) . Hess h): the 6-term pairing of the adjugate-Hessian
/// entries of f with the second partials of h (off-diagonal terms doubled).
HomPoly omega(const HomPoly& f, const HomPoly& h);

/// Minus the determinant of the 4x4 Hessian of f bordered by (0, grad h).
HomPoly psi(const HomPoly& f, const HomPoly& h);

/// Lambda = -3*Omega*h + 4*Psi.
HomPoly lambda(const HomPoly& f);

/// Cayley's second Hessian, degree 12d-27; its intersection with the curve
/// contains all sextactic points.
HomPoly second_hessian(const HomPoly& f);

struct CayleyData {
    HomPoly f, h, omega, psi, lambda;
    static CayleyData compute(const HomPoly& f);
};

/// Local branch of the curve at a smooth point, as a pair of affine
/// coordinate series in a parameter t (exact K coefficients, truncated at
/// `order` terms): the affine chart sets the coordinate with the
/// largest-index nonzero entry of the canonical center to 1.
struct BranchSeries {
    ProjPoint center;
    int chart;                // index of the coordinate set to 1
    std::vector<FieldK> u, v; // the two remaining coordinates as series in t
    int order;                // coefficients are valid for t^0 .. t^(order-1)
};

BranchSeries branch_series(const HomPoly& f, const ProjPoint& p, int order);

/// Order of vanishing of g along the local branch of f at p; the series
/// truncation starts at 8 and doubles up to 64, after which a shared
/// component yields the infinity sentinel and anything else throws.
int contact_order(const HomPoly& f, const HomPoly& g, const ProjPoint& p);

/// The unique conic with contact >= 5 at a smooth non-inflection point,
/// from the closed-form covariants (normalized up to scalar).
HomPoly osculating_conic(const HomPoly& f, const ProjPoint& p);

/// Same conic found independently: expand the branch and solve the five
/// linear contact conditions on the six conic coefficients.
HomPoly osculating_conic_via_series(const HomPoly& f, const ProjPoint& p);

/// All K-rational sextactic points of a reduced cubic.
std::vector<ProjPoint> sextactic_points(const HomPoly& f);

} // namespace curves

#endif
