#ifndef DCBELL_GRID_HPP
#define DCBELL_GRID_HPP

#include <memory>
#include <string>
#include <vector>

namespace dcbell {

enum class GridKind { uniform_trapezoid, gauss_legendre };

GridKind grid_kind_from_string(const std::string& s);
std::string to_string(GridKind k);

/// Quadrature grid for the one-dimensional continuum label q.
/// Integrals over q become weighted sums over the nodes, so every grid is a
/// pair (points, weights) with strictly increasing points and positive weights.
class Grid {
public:
    Grid(GridKind kind, std::vector<double> points, std::vector<double> weights);

    GridKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<double>& points() const noexcept { return points_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    double point(std::size_t k) const { return points_[k]; }
    double weight(std::size_t k) const { return weights_[k]; }
    double min() const { return points_.front(); }
    double max() const { return points_.back(); }

    bool same_nodes(const Grid& other, double tol = 1e-9) const;

private:
    GridKind kind_;
    std::vector<double> points_;
    std::vector<double> weights_;
};

using GridPtr = std::shared_ptr<const Grid>;

/// n >= 2 nodes on [range_lo, range_hi]. Gauss-Legendre weights/nodes are
/// exact for polynomials up to degree 2n-1.
GridPtr make_grid(GridKind kind, int n, double range_lo, double range_hi);

} // namespace dcbell

#endif
