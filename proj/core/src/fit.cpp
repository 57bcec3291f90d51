#include "rcb/fit.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace rcb {

namespace {

Eigen::VectorXd to_eigen(const Vector<double>& v) {
    Eigen::VectorXd r(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) r(static_cast<Eigen::Index>(i)) = v[i];
    return r;
}

Vector<double> from_eigen(const Eigen::VectorXd& v) {
    Vector<double> r(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) r[static_cast<std::size_t>(i)] = v(i);
    return r;
}

constexpr double kLineCurvature = 1e-10;   // |1/R| below this is a line
constexpr double kCollinearRatio = 1e-26;  // eigenvalue ratio for collinear sets

}  // namespace

double distance_to_fit(const CircleFit& fit, const Vector<double>& p) {
    Eigen::VectorXd u = to_eigen(fit.plane_u);
    if (fit.is_line()) {
        Eigen::VectorXd w = to_eigen(p) - to_eigen(fit.plane_origin);
        Eigen::VectorXd off = w - w.dot(u) * u;
        return off.norm();
    }
    // In-plane radial offset is measured from the circle's center, not from
    // the carrier-plane origin.
    Eigen::VectorXd w = to_eigen(p) - to_eigen(*fit.circle.center);
    Eigen::VectorXd v = to_eigen(fit.plane_v);
    double alpha = w.dot(u), beta = w.dot(v);
    double oop = (w - alpha * u - beta * v).norm();
    double rho = std::hypot(alpha, beta);
    return std::hypot(rho - fit.radius, oop);
}

CircleFit fit_circle(const std::vector<Vector<double>>& points) {
    if (points.size() < 5) throw DomainError("fit_circle: needs at least 5 points");
    const auto k = static_cast<Eigen::Index>(points.size());
    const auto n = static_cast<Eigen::Index>(points[0].size());

    Eigen::MatrixXd pts(k, n);
    for (Eigen::Index i = 0; i < k; ++i) pts.row(i) = to_eigen(points[i]).transpose();
    Eigen::RowVectorXd centroid = pts.colwise().mean();
    Eigen::MatrixXd centered = pts.rowwise() - centroid;
    Eigen::MatrixXd cov = centered.transpose() * centered;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
    if (eig.info() != Eigen::Success) throw Error("fit_circle: eigensolver failure");
    // Ascending eigenvalues; the carrier plane is spanned by the top two.
    double lead = eig.eigenvalues()(n - 1);
    double second = n >= 2 ? eig.eigenvalues()(n - 2) : 0.0;
    if (lead <= 0) throw DomainError("fit_circle: degenerate point set");

    CircleFit fit;
    fit.plane_origin = from_eigen(centroid.transpose());
    Eigen::VectorXd u = eig.eigenvectors().col(n - 1);
    fit.plane_u = from_eigen(u);

    auto finish_line = [&]() {
        fit.circle = Circle<double>{fit.plane_u, std::nullopt};
        fit.plane_v.clear();
        fit.radius = 0;
        double res = 0;
        for (Eigen::Index i = 0; i < k; ++i) {
            Eigen::VectorXd w = centered.row(i).transpose();
            res = std::max(res, (w - w.dot(u) * u).norm());
        }
        fit.residual = res;
        return fit;
    };

    if (second <= kCollinearRatio * lead) return finish_line();

    Eigen::VectorXd v = eig.eigenvectors().col(n - 2);
    fit.plane_v = from_eigen(v);
    Eigen::VectorXd a = centered * u;
    Eigen::VectorXd b = centered * v;
    Eigen::VectorXd oop_sq = centered.rowwise().squaredNorm() - a.cwiseAbs2() - b.cwiseAbs2();

    // Kasa algebraic fit: u^2 + v^2 = 2 cx u + 2 cy v + d.
    Eigen::MatrixXd design(k, 3);
    design.col(0) = 2 * a;
    design.col(1) = 2 * b;
    design.col(2).setOnes();
    Eigen::VectorXd rhs = a.cwiseAbs2() + b.cwiseAbs2();
    Eigen::Matrix3d gram = design.transpose() * design;
    Eigen::FullPivLU<Eigen::Matrix3d> lu(gram);
    // Near-collinear clouds make the algebraic system singular; they are
    // lines, not errors.
    if (!lu.isInvertible()) return finish_line();
    Eigen::Vector3d sol = lu.solve(design.transpose() * rhs);
    double cx = sol(0), cy = sol(1);
    double r = std::sqrt(std::max(0.0, sol(2) + cx * cx + cy * cy));

    // Gauss-Newton on the geometric in-plane distance.
    for (int iter = 0; iter < 40; ++iter) {
        Eigen::MatrixXd jac(k, 3);
        Eigen::VectorXd f(k);
        for (Eigen::Index i = 0; i < k; ++i) {
            double dx = a(i) - cx, dy = b(i) - cy;
            double rho = std::hypot(dx, dy);
            if (rho == 0) rho = 1e-300;
            f(i) = rho - r;
            jac(i, 0) = -dx / rho;
            jac(i, 1) = -dy / rho;
            jac(i, 2) = -1;
        }
        Eigen::Vector3d step =
            (jac.transpose() * jac).ldlt().solve(jac.transpose() * f);
        cx -= step(0);
        cy -= step(1);
        r -= step(2);
        if (step.norm() <= 1e-15 * std::max(1.0, std::abs(r))) break;
    }

    if (!(r > 0) || 1.0 / r < kLineCurvature) return finish_line();

    fit.radius = r;
    Eigen::VectorXd center_ambient = centroid.transpose() + cx * u + cy * v;
    fit.circle = Circle<double>{fit.plane_u, from_eigen(center_ambient)};
    double res = 0;
    for (Eigen::Index i = 0; i < k; ++i) {
        double rho = std::hypot(a(i) - cx, b(i) - cy);
        res = std::max(res, std::hypot(rho - r, std::sqrt(std::max(0.0, oop_sq(i)))));
    }
    fit.residual = res;
    return fit;
}

FitReport verify_rounds_lines(const PointMap& map, const std::vector<Vector<double>>& directions,
                              double radius, double tol, std::size_t samples_per_line) {
    if (samples_per_line < 20)
        throw DomainError("verify_rounds_lines: needs at least 20 samples per line");
    FitReport report;
    report.pass = true;
    for (const auto& dir : directions) {
        DirectionReport dr;
        dr.direction = dir;
        double norm = std::sqrt(dot(dir, dir));
        if (norm == 0) throw DomainError("verify_rounds_lines: zero direction");
        std::vector<Vector<double>> images;
        bool pole = false;
        for (std::size_t m = 0; m < samples_per_line && !pole; ++m) {
            double t = radius * std::cos(M_PI * (2.0 * m + 1.0) / (2.0 * samples_per_line));
            Vector<double> x(dir.size());
            for (std::size_t i = 0; i < dir.size(); ++i) x[i] = dir[i] / norm * t;
            try {
                images.push_back(map(x));
            } catch (const PoleError&) {
                pole = true;
            } catch (const OutOfDomainError&) {
                pole = true;
            }
        }
        if (pole) {
            dr.pole = true;
            dr.passed = false;
            report.pass = false;
        } else {
            dr.fit = fit_circle(images);
            dr.residual = dr.fit.residual;
            double gate = tol * (dr.fit.is_line() ? 1.0 : dr.fit.radius);
            dr.passed = dr.residual < gate;
            report.pass = report.pass && dr.passed;
            report.max_residual = std::max(report.max_residual, dr.residual);
        }
        report.directions.push_back(std::move(dr));
    }
    return report;
}

}  // namespace rcb
