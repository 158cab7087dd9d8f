#ifndef DCBELL_BUNDLE_HPP
#define DCBELL_BUNDLE_HPP

#include <complex>
#include <string>
#include <vector>

#include "grid.hpp"

namespace dcbell {

using cplx = std::complex<double>;

/// A superposition over the continuum basis: one complex amplitude per grid
/// node. Values are immutable after construction; all operations return new
/// bundles.
class Bundle {
public:
    Bundle(GridPtr grid, std::vector<cplx> amplitudes);

    const GridPtr& grid() const noexcept { return grid_; }
    std::size_t size() const noexcept { return amp_.size(); }
    const std::vector<cplx>& amplitudes() const noexcept { return amp_; }
    cplx operator[](std::size_t k) const { return amp_[k]; }

private:
    GridPtr grid_;
    std::vector<cplx> amp_;
};

/// Quadrature inner product sum_k w_k conj(a_k) b_k. Conjugate-symmetric and
/// sesquilinear in the first slot.
cplx inner(const Bundle& a, const Bundle& b);

double norm(const Bundle& b);

/// Scale to unit quadrature norm. Zero-norm input is a degenerate-input error.
Bundle normalize(const Bundle& b);

/// a*x + b*y on a shared grid (no normalization).
Bundle combine(cplx a, const Bundle& x, cplx b, const Bundle& y);

struct GaussianParams {
    double mu = 0.0;
    double sigma = 1.0;
    double chirp = 0.0; // quadratic phase coefficient, exp(i*chirp*(q-mu)^2)
    int order = 0;      // Hermite order; 0 is the plain Gaussian
};

// Normalized members of the built-in amplitude families.
// Envelope convention: |amp|^2 has standard deviation sigma, i.e.
// amp ∝ exp(-(q-mu)^2 / (4 sigma^2)).
Bundle sample_gaussian(const GaussianParams& p, const GridPtr& grid);
Bundle sample_hermite_gaussian(const GaussianParams& p, const GridPtr& grid);

/// Values are taken as amplitudes at the grid nodes, then normalized.
Bundle sample_tabulated(const std::vector<double>& q, const std::vector<cplx>& values,
                        const GridPtr& grid);

/// CSV with a `q,re,im` header; nodes must match the grid within 1e-9.
Bundle load_bundle_csv(const std::string& path, const GridPtr& grid);
void save_bundle_csv(const std::string& path, const Bundle& b);
std::string bundle_csv_string(const Bundle& b);

} // namespace dcbell

#endif
