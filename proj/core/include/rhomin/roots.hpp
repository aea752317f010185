#ifndef RHOMIN_ROOTS_HPP
#define RHOMIN_ROOTS_HPP

#include <gmpxx.h>

#include <vector>

#include "rhomin/intpoly.hpp"

namespace rhomin {

enum class Ordering { Less, Equal, Greater };

// Sturm chain of the squarefree part of a polynomial.  count(lo, hi) returns
// the number of distinct real roots in the half-open interval (lo, hi]; the
// sign-variation count at a point skips zero entries, which makes endpoint
// roots land in the interval whose lower end they touch.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& p);

    const IntPoly& squarefree() const { return chain_.front(); }
    int variations(const mpq_class& x) const;
    int count(const mpq_class& lo, const mpq_class& hi) const;
    int count_all() const;  // all real roots
    // 1 + ceil(max |c_i| / |c_lead|): every real root lies in (-bound, bound].
    const mpz_class& root_bound() const { return bound_; }

private:
    std::vector<IntPoly> chain_;
    mpz_class bound_;
};

const mpq_class& default_root_width();  // 10^-12

// Isolating interval for one root: p has exactly one root in (lo, hi], and
// sign(p(lo)) != sign(p(hi)) (the right sign is 0 when hi is the root itself).
struct RootInterval {
    mpq_class lo;
    mpq_class hi;
    IntPoly poly;  // squarefree part the interval certifies against
};

// Isolate the largest real root of p to an interval of width <= width.
// Throws std::invalid_argument if p is zero or has no real roots.
RootInterval isolate_largest_root(const IntPoly& p, const mpq_class& width = default_root_width());

// Shrink an isolating interval (same invariants) until hi - lo <= width.
void refine_root_interval(const SturmChain& chain, RootInterval& iv, const mpq_class& width);

// Exact comparison of the largest real roots of p and q.  Equality is
// certified through the gcd: equal largest roots share a minimal polynomial,
// which must divide gcd(p*, q*) of the squarefree parts.
Ordering compare_largest_roots(const IntPoly& p, const IntPoly& q);


}  // namespace rhomin

#endif
