#include "cesaro/errors.hpp"
#include "cesaro/numerics.hpp"

#include <cmath>
#include <numbers>

namespace cesaro {

DiskGrid DiskGrid::uniform(int radial, int angular) {
    if (radial < 1 || angular < 1) throw ParameterError("disk grid: orders must be >= 1");
    const GaussRule& gl = gauss_legendre(radial);
    DiskGrid grid;
    grid.angular = angular;
    // dA = (1/pi) r dr dtheta: radial weight 2 r w_i, angular mean.
    for (int i = 0; i < radial; ++i) {
        grid.radii.push_back(gl.nodes[i]);
        grid.radial_weights.push_back(2.0 * gl.nodes[i] * gl.weights[i]);
    }
    return grid;
}

DiskGrid DiskGrid::weighted(int radial, int angular, double p) {
    if (radial < 1 || angular < 1) throw ParameterError("disk grid: orders must be >= 1");
    if (!(p > -1.0)) throw ParameterError("disk grid: weight exponent must be > -1");
    // With rho = r^2, dA = drho dtheta / (2 pi) and (1 - |z|^2)^p = (1 - rho)^p.
    // gauss_jacobi_left carries u^p; take u = 1 - rho.
    const GaussRule& gj = gauss_jacobi_left(radial, p);
    DiskGrid grid;
    grid.angular = angular;
    grid.weight_exponent = p;
    for (int i = radial - 1; i >= 0; --i) {
        const double rho = 1.0 - gj.nodes[i];
        grid.radii.push_back(std::sqrt(rho));
        grid.radial_weights.push_back(gj.weights[i]);
    }
    return grid;
}

double disk_integral(const std::function<double(complex)>& g, const DiskGrid& grid) {
    const int m = grid.angular;
    std::vector<complex> unit(m);
    for (int k = 0; k < m; ++k) unit[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / m);
    double total = 0.0;
    for (std::size_t i = 0; i < grid.radii.size(); ++i) {
        double ring = 0.0;
        for (int k = 0; k < m; ++k) ring += g(grid.radii[i] * unit[k]);
        total += grid.radial_weights[i] * ring / m;
    }
    return total;
}

}  // namespace cesaro
