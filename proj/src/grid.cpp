#include "grid.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "errors.hpp"

namespace dcbell {

GridKind grid_kind_from_string(const std::string& s) {
    if (s == "uniform-trapezoid") return GridKind::uniform_trapezoid;
    if (s == "gauss-legendre") return GridKind::gauss_legendre;
    raise(Errc::config, "unknown grid kind '" + s + "'");
}

std::string to_string(GridKind k) {
    return k == GridKind::uniform_trapezoid ? "uniform-trapezoid" : "gauss-legendre";
}

Grid::Grid(GridKind kind, std::vector<double> points, std::vector<double> weights)
    : kind_(kind), points_(std::move(points)), weights_(std::move(weights)) {
    require(points_.size() >= 2, Errc::invalid_argument, "grid needs at least 2 nodes");
    require(points_.size() == weights_.size(), Errc::invalid_argument,
            "grid points/weights length mismatch");
    for (std::size_t k = 0; k < points_.size(); ++k) {
        require(std::isfinite(points_[k]) && std::isfinite(weights_[k]), Errc::invalid_argument,
                "grid entries must be finite");
        require(weights_[k] > 0.0, Errc::invalid_argument, "grid weights must be positive");
        if (k > 0)
            require(points_[k] > points_[k - 1], Errc::invalid_argument,
                    "grid points must be strictly increasing");
    }
}

bool Grid::same_nodes(const Grid& other, double tol) const {
    if (size() != other.size()) return false;
    for (std::size_t k = 0; k < size(); ++k)
        if (std::abs(points_[k] - other.points_[k]) > tol) return false;
    return true;
}

namespace {

// Legendre nodes by Newton iteration on P_n, weights 2/((1-x^2) P_n'(x)^2).
void gauss_legendre_nodes(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
    if (n % 2 == 1) x[n / 2] = 0.0; // symmetric rule, centre node exactly zero
}

} // namespace

GridPtr make_grid(GridKind kind, int n, double range_lo, double range_hi) {
    require(n >= 2, Errc::invalid_argument, "make_grid: n must be >= 2");
    require(std::isfinite(range_lo) && std::isfinite(range_hi) && range_hi > range_lo,
            Errc::invalid_argument, "make_grid: range must be a non-degenerate interval");

    std::vector<double> pts(n), wts(n);
    if (kind == GridKind::uniform_trapezoid) {
        const double h = (range_hi - range_lo) / (n - 1);
        for (int k = 0; k < n; ++k) {
            pts[k] = range_lo + h * k;
            wts[k] = (k == 0 || k == n - 1) ? 0.5 * h : h;
        }
        pts[n - 1] = range_hi;
    } else {
        std::vector<double> x, w;
        gauss_legendre_nodes(n, x, w);
        const double c = 0.5 * (range_hi - range_lo);
        const double mid = 0.5 * (range_hi + range_lo);
        for (int k = 0; k < n; ++k) {
            pts[k] = mid + c * x[k];
            wts[k] = c * w[k];
        }
    }
    return std::make_shared<Grid>(kind, std::move(pts), std::move(wts));
}

} // namespace dcbell
