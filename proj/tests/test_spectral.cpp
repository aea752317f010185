// Power-iteration spectral radius against closed forms (paths, stars, cycles,
// complete graphs) and, when Eigen is available, against an independent dense
// eigensolver on random graphs.

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "rhomin/families.hpp"
#include "rhomin/graph.hpp"
#include "rhomin/spectral.hpp"

#ifdef RHOMIN_HAVE_EIGEN
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#endif

using namespace rhomin;

namespace {

constexpr double kPi = 3.14159265358979323846;

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return build_graph(n, e);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return build_graph(n, e);
}

Graph random_connected(int n, std::mt19937_64& rng) {
    // Random tree plus a few extra edges keeps the graph connected.
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.push_back({static_cast<int>(rng() % i), i});
    for (int extra = 0; extra < n / 2; ++extra) {
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u != v) e.push_back({std::min(u, v), std::max(u, v)});
    }
    return build_graph(n, e);
}

}  // namespace

TEST_CASE("closed forms: paths, stars, cycles, complete graphs") {
    for (int n = 2; n <= 30; ++n) {
        double want = 2.0 * std::cos(kPi / (n + 1));
        CHECK(std::abs(spectral_radius(path(n)).rho - want) < 1e-10);
    }
    for (int n = 2; n <= 20; ++n)
        CHECK(std::abs(spectral_radius(star(n)).rho - std::sqrt(n - 1.0)) < 1e-10);
    for (int n = 3; n <= 12; ++n)
        CHECK(std::abs(spectral_radius(cycle(n)).rho - 2.0) < 1e-10);
    for (int n = 2; n <= 8; ++n)
        CHECK(std::abs(spectral_radius(complete(n)).rho - (n - 1.0)) < 1e-10);
    CHECK(spectral_radius(path(1)).rho == 0.0);
}

TEST_CASE("Perron vector: positive, unit norm, small residual") {
    Graph g = h_graph(10);
    SpectralResult r = spectral_radius(g, 1e-13);
    REQUIRE(static_cast<int>(r.perron.size()) == g.num_vertices());
    double norm2 = 0.0;
    for (double x : r.perron) {
        CHECK(x > 0.0);
        norm2 += x * x;
    }
    CHECK(std::abs(norm2 - 1.0) < 1e-12);
    // Recompute the residual independently.
    double worst = 0.0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        double ax = 0.0;
        for (int u : g.neighbors(v)) ax += r.perron[u];
        worst = std::max(worst, std::abs(ax - r.rho * r.perron[v]));
    }
    CHECK(worst < 1e-10);
    // Symmetry of the layout: the two end hubs carry equal weight.
    CHECK(std::abs(r.perron[0] - r.perron[3]) < 1e-10);
}

TEST_CASE("disconnected input rejected") {
    CHECK_THROWS_AS(spectral_radius(build_graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

#ifdef RHOMIN_HAVE_EIGEN
TEST_CASE("independent eigensolver oracle on random graphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 15);
        Graph g = random_connected(n, rng);
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
        for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
        double want = es.eigenvalues().maxCoeff();
        CHECK(std::abs(spectral_radius(g, 1e-13).rho - want) < 1e-9);
    }
}
#endif

TEST_CASE("corona lift closed form") {
    CHECK(corona_lift(0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(corona_lift(2.0) == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-14));
    // lift(sigma) solves x^2 - sigma*x - 1 = 0, increasing in sigma.
    for (double s = -3.0; s < 3.0; s += 0.37) {
        double x = corona_lift(s);
        CHECK(std::abs(x * x - s * x - 1.0) < 1e-12);
        CHECK(corona_lift(s + 0.1) > x);
    }
    // A pendant on every vertex of P2 gives P4; sigma1(P2) = 1 lifts to rho(P4).
    double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(corona_lift(1.0) == doctest::Approx(golden).epsilon(1e-13));
    CHECK(spectral_radius(corona(path(2), path(1))).rho ==
          doctest::Approx(golden).epsilon(1e-11));
}

TEST_CASE("hub Perron ratio closed form matches the iterate") {
    for (int n = 11; n <= 20; ++n) {
        for (int a = 1; 2 * a + 7 <= n; ++a) {
            PerronRatioCheck c = perron_ratio_g2(a, n);
            CHECK(std::abs(c.closed_form - c.numeric) < 1e-8);
            CHECK(c.rho == doctest::Approx(spectral_radius(g2(a, n - 2 * a - 7, a)).rho)
                               .epsilon(1e-10));
        }
    }
}
