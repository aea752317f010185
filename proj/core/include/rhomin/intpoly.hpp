#ifndef RHOMIN_INTPOLY_HPP
#define RHOMIN_INTPOLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace rhomin {

// Dense univariate polynomial over arbitrary-precision integers.
// Coefficients are stored low-to-high with no trailing zero limbs; the zero
// polynomial has an empty coefficient vector and degree() == -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly x();
    static IntPoly constant(const mpz_class& c);
    static IntPoly monomial(int k, const mpz_class& coeff = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpz_class& coeff(int i) const;
    const mpz_class& leading() const;
    const std::vector<mpz_class>& coeffs() const { return c_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator*=(const mpz_class& k);
    friend IntPoly operator*(IntPoly a, const mpz_class& k) { return a *= k; }
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly derivative() const;
    mpz_class content() const;        // >= 0; gcd of coefficients
    IntPoly primitive_part() const;   // sign of leading coefficient preserved
    mpq_class eval(const mpq_class& x) const;
    int sign_at(const mpq_class& x) const;  // integer Horner, no rational blowup
    double eval_double(double x) const;
    long double eval_long_double(long double x) const;

    IntPoly substitute_x_squared() const;   // p(x) -> p(x^2)
    IntPoly times_monomial(int k) const;    // p(x) -> x^k p(x)

    std::string to_string() const;                 // e.g. "x^3 - 3*x - 2"
    std::vector<std::string> coeff_strings() const;  // low-to-high, decimal

private:
    void trim();
    std::vector<mpz_class> c_;
};

// Primitive gcd with positive leading coefficient (pseudo-remainder sequence).
IntPoly poly_gcd(IntPoly a, IntPoly b);

// Exact division; throws std::invalid_argument if b does not divide a over Z.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

// Primitive squarefree part, same real roots with multiplicity one.
IntPoly squarefree_part(const IntPoly& p);

}  // namespace rhomin

#endif
