#include "rhomin/intpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace rhomin {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::x() { return monomial(1); }

IntPoly IntPoly::constant(const mpz_class& c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(c);
    return p;
}

IntPoly IntPoly::monomial(int k, const mpz_class& coeff) {
    if (k < 0) throw std::invalid_argument("monomial: negative degree");
    IntPoly p;
    if (coeff != 0) {
        p.c_.assign(static_cast<size_t>(k) + 1, kZero);
        p.c_.back() = coeff;
    }
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const mpz_class& IntPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const mpz_class& k) {
    if (k == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= k;
    return *this;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<mpz_class> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(r));
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    mpz_class g = content();
    IntPoly r(*this);
    if (g > 1) {
        for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
    return r;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + mpq_class(c_[i]);
    }
    acc.canonicalize();
    return acc;
}

int IntPoly::sign_at(const mpq_class& x) const {
    if (is_zero()) return 0;
    // p(num/den) has the sign of sum_i c_i num^i den^(d-i); accumulate that
    // integer directly instead of canonicalizing rationals at every step.
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    mpz_class acc = c_.back();
    mpz_class den_pow = 1;
    for (size_t i = c_.size() - 1; i-- > 0;) {
        den_pow *= den;
        acc = acc * num + c_[i] * den_pow;
    }
    return sgn(acc);
}

double IntPoly::eval_double(double x) const {
    double acc = 0.0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].get_d();
    return acc;
}

long double IntPoly::eval_long_double(long double x) const {
    long double acc = 0.0L;
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * x + static_cast<long double>(c_[i].get_d());
    return acc;
}

IntPoly IntPoly::substitute_x_squared() const {
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> r(2 * (c_.size() - 1) + 1, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::times_monomial(int k) const {
    if (k < 0) throw std::invalid_argument("times_monomial: negative shift");
    if (is_zero() || k == 0) return *this;
    std::vector<mpz_class> r(c_.size() + static_cast<size_t>(k), mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + static_cast<size_t>(k)] = c_[i];
    return IntPoly(std::move(r));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const mpz_class& v = c_[i];
        if (v == 0) continue;
        mpz_class av = abs(v);
        if (first) {
            if (v < 0) out << "-";
            first = false;
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        bool unit = (av == 1) && i > 0;
        if (!unit) out << av.get_str();
        if (i > 0) {
            if (!unit) out << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::vector<std::string> IntPoly::coeff_strings() const {
    std::vector<std::string> r;
    r.reserve(c_.size());
    for (const auto& v : c_) r.push_back(v.get_str());
    return r;
}

namespace {

// Pseudo-remainder of a by b together with the sign of the implied multiplier
// lc(b)^k, so callers can recover the sign of the true remainder.
struct Prem {
    IntPoly r;
    int multiplier_sign;  // sign of lc(b)^k for the k reduction steps taken
};

Prem pseudo_rem(IntPoly a, const IntPoly& b) {
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
    int msign = (lb < 0 && (steps % 2 == 1)) ? -1 : 1;
    return {std::move(a), msign};
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.is_zero()) std::swap(a, b);
    if (b.is_zero()) {
        if (!a.is_zero() && a.leading() < 0) a *= mpz_class(-1);
        return a;
    }
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Prem p = pseudo_rem(a, b);
        a = std::move(b);
        b = p.r.primitive_part();
    }
    if (a.leading() < 0) a *= mpz_class(-1);
    return a;
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree())
        throw std::invalid_argument("exact_div: divisor degree exceeds dividend");
    std::vector<mpz_class> rem(a.coeffs());
    std::vector<mpz_class> q(static_cast<size_t>(a.degree() - b.degree()) + 1, mpz_class(0));
    const mpz_class& lb = b.leading();
    for (int k = a.degree(); k >= b.degree(); --k) {
        mpz_class& head = rem[static_cast<size_t>(k)];
        if (head == 0) continue;
        if (!mpz_divisible_p(head.get_mpz_t(), lb.get_mpz_t()))
            throw std::invalid_argument("exact_div: division is not exact");
        mpz_class qk;
        mpz_divexact(qk.get_mpz_t(), head.get_mpz_t(), lb.get_mpz_t());
        int off = k - b.degree();
        q[static_cast<size_t>(off)] = qk;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<size_t>(off + i)] -= qk * b.coeff(i);
    }
    for (const auto& v : rem)
        if (v != 0) throw std::invalid_argument("exact_div: division is not exact");
    return IntPoly(std::move(q));
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    IntPoly pp = p.primitive_part();
    if (pp.degree() == 0) return IntPoly::constant(1);
    IntPoly g = poly_gcd(pp, pp.derivative());
    if (g.degree() == 0) return pp;
    return exact_div(pp, g).primitive_part();
}

}  // namespace rhomin
