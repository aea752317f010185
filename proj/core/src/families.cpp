#include "rhomin/families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rhomin {

namespace {

using Edges = std::vector<std::pair<int, int>>;

void add_pendants(Edges& edges, int at, int first_id, int count) {
    for (int i = 0; i < count; ++i) edges.emplace_back(at, first_id + i);
}

}  // namespace

Graph star(int n) {
    if (n < 1) throw std::invalid_argument("star: need n >= 1");
    Edges e;
    add_pendants(e, 0, 1, n - 1);
    return build_graph(n, e);
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    Edges e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

Graph h_graph(int n) {
    if (n < 4) throw std::invalid_argument("h_graph: need n >= 4");
    int p = n / 2 - 2;
    int q = (n + 1) / 2 - 2;
    Edges e{{0, 1}, {1, 2}, {2, 3}};
    add_pendants(e, 0, 4, p);
    add_pendants(e, 3, 4 + p, q);
    return build_graph(n, e);
}

Graph g1(int a, int b, int c) {
    if (a < 1 || c < 1 || b < 0) throw std::invalid_argument("g1: need a,c >= 1 and b >= 0");
    int n = a + b + c + 6;
    Edges e{{0, 3}, {3, 4}, {4, 5}, {5, 2}, {4, 1}};
    int next = 6;
    add_pendants(e, 0, next, a);
    next += a;
    add_pendants(e, 1, next, b);
    next += b;
    add_pendants(e, 2, next, c);
    return build_graph(n, e);
}

Graph g2(int a, int b, int c) {
    if (a < 1 || c < 1 || b < 0) throw std::invalid_argument("g2: need a,c >= 1 and b >= 0");
    int n = a + b + c + 7;
    Edges e{{0, 3}, {3, 4}, {4, 1}, {1, 5}, {5, 6}, {6, 2}};
    int next = 7;
    add_pendants(e, 0, next, a);
    next += a;
    add_pendants(e, 1, next, b);
    next += b;
    add_pendants(e, 2, next, c);
    return build_graph(n, e);
}

Graph w_graph(int n) {
    if (n < 6) throw std::invalid_argument("w_graph: need n >= 6");
    int spine = n - 4;
    Edges e;
    for (int i = 0; i + 1 < spine; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 4);
    e.emplace_back(0, n - 3);
    e.emplace_back(spine - 1, n - 2);
    e.emplace_back(spine - 1, n - 1);
    return build_graph(n, e);
}

Graph corona(const Graph& h1, const Graph& h2) {
    int n1 = h1.num_vertices();
    int n2 = h2.num_vertices();
    Edges e = h1.edges();
    for (int i = 0; i < n1; ++i) {
        int base = n1 + i * n2;
        for (auto [u, v] : h2.edges()) e.emplace_back(base + u, base + v);
        for (int j = 0; j < n2; ++j) e.emplace_back(i, base + j);
    }
    return build_graph(n1 * (1 + n2), e);
}

Graph p_half_corona(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("p_half_corona: need even n >= 2");
    return corona(path(n / 2), build_graph(1, {}));
}

Graph h_prime(int n) {
    if (n < 5 || n % 2 == 0) throw std::invalid_argument("h_prime: need odd n >= 5");
    int k = n / 2;
    // Comb on n-1 vertices: spine 0..k-1, pendant of spine vertex i at k+i.
    // A longest path runs pendant(0), 0, ..., k-1, pendant(k-1); subdividing
    // the pendant edge at the low end keeps ids stable: new vertex n-1.
    Edges e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    for (int i = 1; i < k; ++i) e.emplace_back(i, k + i);
    e.emplace_back(0, n - 1);
    e.emplace_back(n - 1, k);
    return build_graph(n, e);
}

Graph make_family(const std::string& name, const std::vector<int>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("make_family: " + name + " expects " +
                                        std::to_string(k) + " parameter(s)");
    };
    if (name == "star") {
        need(1);
        return star(params[0]);
    }
    if (name == "path") {
        need(1);
        return path(params[0]);
    }
    if (name == "h") {
        need(1);
        return h_graph(params[0]);
    }
    if (name == "g1") {
        need(3);
        return g1(params[0], params[1], params[2]);
    }
    if (name == "g2") {
        need(3);
        return g2(params[0], params[1], params[2]);
    }
    if (name == "w") {
        need(1);
        return w_graph(params[0]);
    }
    if (name == "p_half_corona") {
        need(1);
        return p_half_corona(params[0]);
    }
    if (name == "h_prime") {
        need(1);
        return h_prime(params[0]);
    }
    if (name == "corona")
        throw std::invalid_argument(
            "make_family: corona takes graph arguments; use the corona() API or p_half_corona");
    throw std::invalid_argument("make_family: unknown family '" + name + "'");
}

namespace {

IntPoly quintic_f(int which, long long a, long long nn) {
    // mu-polynomials whose largest roots are the squared spectral radii of
    // the three competing double-broom shapes.
    auto P = [](std::initializer_list<long long> lows) {
        std::vector<mpz_class> c;
        for (long long v : lows) c.emplace_back(static_cast<long>(v));
        return IntPoly(std::move(c));
    };
    if (which == 1) {
        IntPoly quad = P({a, -(2 + a), 1});
        IntPoly cubic = P({7 * a - a * nn + 2 * a * a, 2 * nn - 8 * a + a * nn - 2 * a * a - 12,
                           a - nn + 3, 1});
        return quad * cubic;
    }
    if (which == 2) {
        return P({a * nn - 6 * a - a * a * nn + 4 * a * a + 2 * a * a * a,
                  2 * a * nn - 2 * nn - 9 * a + 2 * a * a * nn - 13 * a * a - 4 * a * a * a + 11,
                  24 * a - nn - 5 * a * nn - a * a * nn + 12 * a * a + 2 * a * a * a + 8,
                  3 * nn - 9 * a + 2 * a * nn - 3 * a * a - 13, 1 - nn, 1});
    }
    if (which == 3) {
        IntPoly quad = P({a - 1, -(a + 1), 1});
        IntPoly cubic = P({(a - 1) * (2 * a - nn + 5), nn - 4 * a + a * nn - 2 * a * a - 6,
                           a - nn + 2, 1});
        return quad * cubic;
    }
    throw std::invalid_argument("f_poly: which must be 1, 2 or 3");
}

std::vector<double> sorted_roots(std::initializer_list<long double> vals) {
    std::vector<double> r;
    for (long double v : vals) r.push_back(static_cast<double>(v));
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace

IntPoly f_poly(int which, int a, int n) {
    if (a < 1) throw std::invalid_argument("f_poly: need a >= 1");
    return quintic_f(which, a, n);
}

DifferencePolynomials difference_polynomials(int a, int n) {
    if (a < 1) throw std::invalid_argument("difference_polynomials: need a >= 1");
    DifferencePolynomials out;
    out.psi[0] = f_poly(2, a, 3 * a + 2) - f_poly(3, a, 3 * a + 2);
    out.psi[1] = f_poly(2, a, 3 * a + 3) - f_poly(3, a, 3 * a + 3);
    out.psi[2] = f_poly(2, a, 3 * a + 4) - f_poly(1, a, 3 * a + 4);
    out.psi[3] = f_poly(2, a, 3 * a + 5) - f_poly(1, a, 3 * a + 5);
    out.phi = f_poly(1, a, n) - f_poly(3, a, n);

    const long double A = a;
    out.psi_roots[0] =
        sorted_roots({1.0L, A / 2 + 0.75L + sqrtl(4 * A * A - 12 * A + 33) / 4,
                      A / 2 + 0.75L - sqrtl(4 * A * A - 12 * A + 33) / 4});
    out.psi_roots[1] = sorted_roots({1.0L, A / 2 + 1 + sqrtl(A * A - 4 * A + 12) / 2,
                                     A / 2 + 1 - sqrtl(A * A - 4 * A + 12) / 2});
    out.psi_roots[2] = sorted_roots({1.0L, A / 2 + 1.5L + sqrtl(A * A - 2 * A + 9) / 2,
                                     A / 2 + 1.5L - sqrtl(A * A - 2 * A + 9) / 2});
    out.psi_roots[3] = sorted_roots({1.0L, A});

    // phi factors as -(mu - 1) times a quadratic whose discriminant is the
    // displayed quartic-in-(a,n) expression; the linear coefficient of the
    // quadratic never vanishes at integer n (2n = 6a + 9 has no solution).
    const long double N = n;
    long double denom = 2 * (6 * A - 2 * N + 9);
    long double num = 18 * A - 3 * N - 2 * A * N + 6 * A * A + 16;
    long double disc = (4 * A * A - 4 * A + 17) * N * N +
                       (-24 * A * A * A - 12 * A * A - 60 * A - 172) * N +
                       36 * A * A * A * A + 72 * A * A * A + 108 * A * A + 408 * A + 436;
    if (disc >= 0) {
        long double s = sqrtl(disc);
        out.phi_roots = sorted_roots({1.0L, (num + s) / denom, (num - s) / denom});
    } else {
        out.phi_roots = {1.0};
    }
    return out;
}

}  // namespace rhomin
