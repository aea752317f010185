#ifndef RHOMIN_SPECTRAL_HPP
#define RHOMIN_SPECTRAL_HPP

#include <vector>

#include "rhomin/graph.hpp"

namespace rhomin {

struct SpectralResult {
    double rho = 0.0;                // spectral radius estimate
    std::vector<double> perron;      // positive eigenvector, unit 2-norm
    long iterations = 0;
    double residual = 0.0;           // ||A x - rho x||_inf at exit
};

// Power iteration on A + I (the shift keeps bipartite graphs from cycling),
// started from the all-ones vector.  Converged when the infinity-norm
// residual drops to tol.  Throws on disconnected input or non-convergence.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-12, long max_iter = 1000000);

// Largest eigenvalue of a graph H "decorated" with one pendant per vertex:
// each eigenvalue sigma of H lifts to (sigma + sqrt(sigma^2 + 4)) / 2.
double corona_lift(double sigma);

struct PerronRatioCheck {
    double closed_form;
    double numeric;
    double rho;
};

// Ratio of the Perron weights of the two hub vertices of the double-broom
// family member with parameters (a, n - 2a - 7, a): the closed form against
// the power-iteration value.
PerronRatioCheck perron_ratio_g2(int a, int n);

}  // namespace rhomin

#endif
