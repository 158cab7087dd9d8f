#include "bundle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace dcbell {

Bundle::Bundle(GridPtr grid, std::vector<cplx> amplitudes)
    : grid_(std::move(grid)), amp_(std::move(amplitudes)) {
    require(grid_ != nullptr, Errc::invalid_argument, "bundle needs a grid");
    require(amp_.size() == grid_->size(), Errc::invalid_argument,
            "bundle amplitude count must match grid size");
    for (const cplx& a : amp_)
        require(std::isfinite(a.real()) && std::isfinite(a.imag()), Errc::invalid_argument,
                "bundle amplitudes must be finite");
}

cplx inner(const Bundle& a, const Bundle& b) {
    require(a.grid() == b.grid() || a.grid()->same_nodes(*b.grid()), Errc::invalid_argument,
            "inner: bundles live on different grids");
    const auto& w = a.grid()->weights();
    cplx acc{0.0, 0.0};
    for (std::size_t k = 0; k < a.size(); ++k) acc += w[k] * std::conj(a[k]) * b[k];
    return acc;
}

double norm(const Bundle& b) { return std::sqrt(std::max(0.0, inner(b, b).real())); }

Bundle normalize(const Bundle& b) {
    const double n = norm(b);
    require(n > 0.0, Errc::degenerate_input, "normalize: zero-norm bundle");
    std::vector<cplx> out(b.amplitudes());
    for (cplx& a : out) a /= n;
    return Bundle(b.grid(), std::move(out));
}

Bundle combine(cplx a, const Bundle& x, cplx b, const Bundle& y) {
    require(x.grid() == y.grid() || x.grid()->same_nodes(*y.grid()), Errc::invalid_argument,
            "combine: bundles live on different grids");
    std::vector<cplx> out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = a * x[k] + b * y[k];
    return Bundle(x.grid(), std::move(out));
}

namespace {

double hermite_poly(int n, double y) {
    // Physicists' Hermite polynomials H_n by recurrence.
    double h0 = 1.0;
    if (n == 0) return h0;
    double h1 = 2.0 * y;
    for (int k = 1; k < n; ++k) {
        double h2 = 2.0 * y * h1 - 2.0 * k * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

Bundle sample_family(const GaussianParams& p, const GridPtr& grid) {
    require(p.sigma > 0.0, Errc::invalid_argument, "sample_function: sigma must be > 0");
    require(p.order >= 0, Errc::invalid_argument, "sample_function: order must be >= 0");
    require(std::isfinite(p.mu) && std::isfinite(p.chirp), Errc::invalid_argument,
            "sample_function: parameters must be finite");
    std::vector<cplx> amp(grid->size());
    const double inv4s2 = 1.0 / (4.0 * p.sigma * p.sigma);
    const double invs2 = 1.0 / (p.sigma * std::sqrt(2.0));
    for (std::size_t k = 0; k < grid->size(); ++k) {
        const double x = grid->point(k) - p.mu;
        double env = std::exp(-x * x * inv4s2);
        if (p.order > 0) env *= hermite_poly(p.order, x * invs2);
        amp[k] = env * std::exp(cplx(0.0, p.chirp * x * x));
    }
    return normalize(Bundle(grid, std::move(amp)));
}

} // namespace

Bundle sample_gaussian(const GaussianParams& p, const GridPtr& grid) {
    GaussianParams q = p;
    q.order = 0;
    return sample_family(q, grid);
}

Bundle sample_hermite_gaussian(const GaussianParams& p, const GridPtr& grid) {
    return sample_family(p, grid);
}

Bundle sample_tabulated(const std::vector<double>& q, const std::vector<cplx>& values,
                        const GridPtr& grid) {
    require(q.size() == values.size(), Errc::invalid_argument,
            "tabulated bundle: node/value count mismatch");
    require(q.size() == grid->size(), Errc::invalid_argument,
            "tabulated bundle: data length must match grid size");
    for (std::size_t k = 0; k < q.size(); ++k)
        require(std::abs(q[k] - grid->point(k)) <= 1e-9, Errc::invalid_argument,
                "tabulated bundle: node mismatch against active grid");
    return normalize(Bundle(grid, values));
}

Bundle load_bundle_csv(const std::string& path, const GridPtr& grid) {
    std::ifstream in(path);
    require(in.good(), Errc::io, "cannot open bundle CSV '" + path + "'");
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), Errc::io, "empty bundle CSV '" + path + "'");
    // header row required
    require(line.rfind("q,", 0) == 0, Errc::config,
            "bundle CSV '" + path + "' must start with a q,re,im header");
    std::vector<double> q;
    std::vector<cplx> v;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double qq, re, im;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        require(static_cast<bool>(row >> qq >> re >> im), Errc::config,
                "bad row in bundle CSV '" + path + "'");
        q.push_back(qq);
        v.emplace_back(re, im);
    }
    return sample_tabulated(q, v, grid);
}

std::string bundle_csv_string(const Bundle& b) {
    std::string out = "q,re,im\n";
    char buf[96];
    for (std::size_t k = 0; k < b.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", b.grid()->point(k), b[k].real(),
                      b[k].imag());
        out += buf;
    }
    return out;
}

void save_bundle_csv(const std::string& path, const Bundle& b) {
    std::ofstream out(path);
    require(out.good(), Errc::io, "cannot write bundle CSV '" + path + "'");
    out << bundle_csv_string(b);
}

} // namespace dcbell
