#include "rhomin/roots.hpp"

#include <stdexcept>
#include <utility>

namespace rhomin {

const mpq_class& default_root_width() {
    static const mpq_class w(1, mpz_class("1000000000000"));
    return w;
}

namespace {

// Next Sturm entry: the negated remainder of a by b, up to a positive factor.
// Pseudo-division multiplies by lc(b) once per reduction step, so the sign of
// lc(b)^steps has to be folded back in before negating.
IntPoly sturm_next(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    const mpz_class& lb = b.leading();
    int steps = 0;
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        mpz_class la = a.leading();
        a *= lb;
        a -= (b * la).times_monomial(shift);
        ++steps;
    }
    if (a.is_zero()) return a;
    bool multiplier_negative = (lb < 0 && steps % 2 == 1);
    IntPoly r = a.primitive_part();
    if (!multiplier_negative) r *= mpz_class(-1);
    return r;
}

}  // namespace

SturmChain::SturmChain(const IntPoly& p) {
    IntPoly sf = squarefree_part(p);
    if (sf.degree() < 1) {
        // Constant: no roots.  Keep a one-element chain so count() works.
        chain_.push_back(sf.is_zero() ? IntPoly::constant(1) : sf);
        bound_ = 1;
        return;
    }
    chain_.push_back(sf);
    chain_.push_back(sf.derivative());
    while (!chain_.back().is_zero() && chain_.back().degree() > 0) {
        IntPoly next = sturm_next(chain_[chain_.size() - 2], chain_.back());
        if (next.is_zero()) break;
        chain_.push_back(std::move(next));
    }
    mpz_class max_abs = 0;
    const mpz_class lead = abs(sf.leading());
    for (int i = 0; i < sf.degree(); ++i) {
        mpz_class a = abs(sf.coeff(i));
        if (a > max_abs) max_abs = a;
    }
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), max_abs.get_mpz_t(), lead.get_mpz_t());
    bound_ = q + 1;
}

int SturmChain::variations(const mpq_class& x) const {
    int var = 0;
    int prev = 0;
    for (const IntPoly& s : chain_) {
        int sg = s.sign_at(x);
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++var;
        prev = sg;
    }
    return var;
}

int SturmChain::count(const mpq_class& lo, const mpq_class& hi) const {
    if (lo > hi) throw std::invalid_argument("SturmChain::count: lo > hi");
    if (chain_.front().degree() < 1) return 0;
    return variations(lo) - variations(hi);
}

int SturmChain::count_all() const {
    if (chain_.front().degree() < 1) return 0;
    mpq_class b(bound_);
    return count(-b, b);
}

void refine_root_interval(const SturmChain& chain, RootInterval& iv, const mpq_class& width) {
    while (iv.hi - iv.lo > width) {
        mpq_class mid = (iv.lo + iv.hi) / 2;
        if (chain.count(mid, iv.hi) >= 1) {
            iv.lo = mid;
        } else {
            iv.hi = mid;  // root is in (lo, mid]; includes the mid == root case
        }
    }
}

RootInterval isolate_largest_root(const IntPoly& p, const mpq_class& width) {
    if (p.is_zero()) throw std::invalid_argument("isolate_largest_root: zero polynomial");
    SturmChain chain(p);
    if (chain.count_all() == 0)
        throw std::invalid_argument("isolate_largest_root: no real roots");
    RootInterval iv;
    iv.lo = mpq_class(-chain.root_bound());
    iv.hi = mpq_class(chain.root_bound());
    iv.poly = chain.squarefree();
    // Invariant: the largest root lies in (lo, hi].  First narrow until the
    // interval holds exactly one root, then continue to the width target.
    while (chain.count(iv.lo, iv.hi) > 1) {
        mpq_class mid = (iv.lo + iv.hi) / 2;
        if (chain.count(mid, iv.hi) >= 1) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    refine_root_interval(chain, iv, width);
    return iv;
}

namespace {

// Shrink an isolating interval for the largest root of g until it isolates a
// single root of both p and q as well (g divides both, so their chains count
// at least the g-root in any interval around it).
RootInterval common_root_window(const SturmChain& gc, const SturmChain& pc, const SturmChain& qc) {
    RootInterval ig;
    ig.lo = mpq_class(-gc.root_bound());
    ig.hi = mpq_class(gc.root_bound());
    ig.poly = gc.squarefree();
    while (gc.count(ig.lo, ig.hi) > 1) {
        mpq_class mid = (ig.lo + ig.hi) / 2;
        if (gc.count(mid, ig.hi) >= 1) {
            ig.lo = mid;
        } else {
            ig.hi = mid;
        }
    }
    while (pc.count(ig.lo, ig.hi) > 1 || qc.count(ig.lo, ig.hi) > 1) {
        mpq_class mid = (ig.lo + ig.hi) / 2;
        if (gc.count(mid, ig.hi) >= 1) {
            ig.lo = mid;
        } else {
            ig.hi = mid;
        }
    }
    return ig;
}

}  // namespace

Ordering compare_largest_roots(const IntPoly& p, const IntPoly& q) {
    SturmChain pc(p);
    SturmChain qc(q);
    if (pc.count_all() == 0 || qc.count_all() == 0)
        throw std::invalid_argument("compare_largest_roots: polynomial has no real roots");
    if (pc.squarefree() == qc.squarefree()) return Ordering::Equal;

    RootInterval ip;
    ip.lo = mpq_class(-pc.root_bound());
    ip.hi = mpq_class(pc.root_bound());
    RootInterval iq;
    iq.lo = mpq_class(-qc.root_bound());
    iq.hi = mpq_class(qc.root_bound());
    auto narrow = [](const SturmChain& c, RootInterval& iv) {
        mpq_class mid = (iv.lo + iv.hi) / 2;
        if (c.count(mid, iv.hi) >= 1) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    };
    // Establish exactly-one-root windows for both largest roots.
    while (pc.count(ip.lo, ip.hi) > 1) narrow(pc, ip);
    while (qc.count(iq.lo, iq.hi) > 1) narrow(qc, iq);

    bool gcd_checked = false;
    while (true) {
        if (ip.lo >= iq.hi) return Ordering::Greater;
        if (iq.lo >= ip.hi) return Ordering::Less;
        if (!gcd_checked) {
            gcd_checked = true;
            IntPoly g = poly_gcd(pc.squarefree(), qc.squarefree());
            if (g.degree() >= 1) {
                SturmChain gc(g);
                if (gc.count_all() >= 1) {
                    RootInterval ig = common_root_window(gc, pc, qc);
                    // The largest shared root t_g sits in ig.  Each largest
                    // root equals t_g exactly when no further roots lie above.
                    bool p_above = pc.count(ig.hi, mpq_class(pc.root_bound())) >= 1;
                    bool q_above = qc.count(ig.hi, mpq_class(qc.root_bound())) >= 1;
                    if (!p_above && !q_above) return Ordering::Equal;
                    if (p_above && !q_above) return Ordering::Greater;
                    if (!p_above && q_above) return Ordering::Less;
                    // Both largest roots exceed t_g; they cannot be equal, or
                    // their minimal polynomial would divide g and contradict
                    // t_g's maximality.  Bisection below must separate them.
                }
            }
        }
        // Distinct reals: halve both windows until they are disjoint.
        for (int i = 0; i < 4; ++i) {
            narrow(pc, ip);
            narrow(qc, iq);
        }
    }
}

}  // namespace rhomin
