#include "rhomin/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "rhomin/families.hpp"

namespace rhomin {

SpectralResult spectral_radius(const Graph& g, double tol, long max_iter) {
    if (!is_connected(g)) throw std::invalid_argument("spectral_radius: graph must be connected");
    int n = g.num_vertices();
    SpectralResult out;
    if (n == 1) {
        out.perron = {1.0};
        return out;
    }
    // Flatten adjacency for the hot loop.
    std::vector<int> offset(static_cast<size_t>(n) + 1, 0);
    std::vector<int> nbr;
    nbr.reserve(2 * static_cast<size_t>(g.num_edges()));
    for (int v = 0; v < n; ++v) {
        for (int w : g.neighbors(v)) nbr.push_back(w);
        offset[static_cast<size_t>(v) + 1] = static_cast<int>(nbr.size());
    }
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    for (long it = 1; it <= max_iter; ++it) {
        // y = (A + I) x
        for (int v = 0; v < n; ++v) {
            double s = x[v];
            for (int k = offset[v]; k < offset[static_cast<size_t>(v) + 1]; ++k) s += x[nbr[k]];
            y[v] = s;
        }
        double rayleigh = 0.0;  // x is unit, so x.y estimates the top eigenvalue of A+I
        for (int v = 0; v < n; ++v) rayleigh += x[v] * y[v];
        double res = 0.0;
        for (int v = 0; v < n; ++v) res = std::max(res, std::abs(y[v] - rayleigh * x[v]));
        if (res <= tol) {
            out.rho = rayleigh - 1.0;
            out.perron = x;
            out.iterations = it;
            out.residual = res;
            return out;
        }
        double norm = 0.0;
        for (int v = 0; v < n; ++v) norm += y[v] * y[v];
        norm = std::sqrt(norm);
        for (int v = 0; v < n; ++v) x[v] = y[v] / norm;
    }
    throw std::runtime_error("spectral_radius: power iteration did not converge");
}

double corona_lift(double sigma) { return (sigma + std::sqrt(sigma * sigma + 4.0)) / 2.0; }

PerronRatioCheck perron_ratio_g2(int a, int n) {
    int b = n - 2 * a - 7;
    if (a < 1 || b < 0) throw std::invalid_argument("perron_ratio_g2: need a >= 1 and n >= 2a+7");
    Graph g = g2(a, b, a);
    SpectralResult s = spectral_radius(g, 1e-13);
    PerronRatioCheck out;
    out.rho = s.rho;
    out.numeric = s.perron[0] / s.perron[1];
    double r = s.rho;
    double num = 0.5 * (r * r - static_cast<double>(b)) * (r + 1.0) - r;
    double den = (r * r - static_cast<double>(a)) * (r + 1.0) - r;
    out.closed_form = num / den;
    return out;
}

}  // namespace rhomin
