#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rcb/circle.hpp"

namespace rcb {

// Result of fitting a circle (or line) through a point cloud in R^n.
// The carrier plane is kept so distances to the fitted curve can be
// evaluated at arbitrary points.
struct CircleFit {
    Circle<double> circle;          // tangent unused; center or line marker
    double radius = 0;              // 0 for lines
    Vector<double> plane_origin;    // point on the carrier plane / line
    Vector<double> plane_u, plane_v;  // orthonormal in-plane basis (v empty for lines)
    double residual = 0;            // max distance of the input points to the fit

    bool is_line() const { return circle.is_line(); }
};

// Distance from an arbitrary point to the fitted circle or line.
double distance_to_fit(const CircleFit& fit, const Vector<double>& p);

// Best-fit circle: principal 2-plane of the centered second moments,
// algebraic (Kasa) fit in-plane, then Gauss-Newton refinement of center and
// radius.  Point sets with negligible planar spread, or with fitted
// curvature below 1e-10, are reported as lines.
CircleFit fit_circle(const std::vector<Vector<double>>& points);

struct DirectionReport {
    Vector<double> direction;
    CircleFit fit;
    bool pole = false;
    bool passed = false;
    double residual = 0;
};

struct FitReport {
    std::vector<DirectionReport> directions;
    double max_residual = 0;
    bool pass = false;
};

using PointMap = std::function<Vector<double>(const Vector<double>&)>;

// Samples each line {t d : |t| <= radius} at Chebyshev-spaced parameters,
// applies the map, and fits a circle per direction.  Passes iff every
// per-direction residual is below tol * (fitted radius, or 1 for lines).
FitReport verify_rounds_lines(const PointMap& map, const std::vector<Vector<double>>& directions,
                              double radius, double tol, std::size_t samples_per_line = 24);

}  // namespace rcb
