#ifndef DCBELL_HYBRID_HPP
#define DCBELL_HYBRID_HPP

#include <array>

#include "bundle.hpp"

namespace dcbell {

using Vec2c = std::array<cplx, 2>;

/// 2x2 complex matrix, row-major.
struct Mat2c {
    std::array<cplx, 4> m{};
    cplx& operator()(int r, int c) { return m[2 * r + c]; }
    const cplx& operator()(int r, int c) const { return m[2 * r + c]; }
};

/// The polarization-continuum two-photon state
///   cos(theta) |H>|h>  +  sin(theta) |V>|v>
/// with unit-normalized bundles h, v on a shared grid.
class HybridState {
public:
    HybridState(double theta, Bundle h, Bundle v);

    double theta() const noexcept { return theta_; }
    const Bundle& h() const noexcept { return h_; }
    const Bundle& v() const noexcept { return v_; }
    const GridPtr& grid() const noexcept { return h_.grid(); }

private:
    double theta_;
    Bundle h_;
    Bundle v_;
};

/// Overlap z = <h|v>; |z| <= 1 by Cauchy-Schwarz.
cplx overlap_z(const HybridState& state);

/// Polarization-side reduced density matrix
///   [[cos^2 t, cos t sin t z*], [cos t sin t z, sin^2 t]].
Mat2c reduced_density_A(const HybridState& state);

/// Two-term Schmidt form kappa1 |u1>|f1> + kappa2 |u2>|f2> with
/// kappa1 >= kappa2 >= 0, orthonormal u's and f's.
struct SchmidtForm {
    double kappa1 = 1.0;
    double kappa2 = 0.0;
    Vec2c u1{};
    Vec2c u2{};
    Bundle f1;
    Bundle f2;
    bool degenerate = false;                 // product state: kappa2 ~ 0, f2 is a filler
    bool linear_polarizer_realizable = true; // |Im z| <= 1e-9, u's are linear polarizations

    double kappa_product() const noexcept { return kappa1 * kappa2; }
};

/// Eigenvectors u_i of reduced_density_A (closed-form 2x2 Hermitian solve,
/// phase fixed so the first component above 1e-12 magnitude is real positive),
/// bundles f_i = <u_i|psi>/kappa_i. For kappa2 ~ 0 the plane is completed by
/// Gram-Schmidt of a first-order Hermite-Gaussian against f1 and the form is
/// flagged degenerate.
SchmidtForm schmidt_decompose(const HybridState& state);

} // namespace dcbell

#endif
