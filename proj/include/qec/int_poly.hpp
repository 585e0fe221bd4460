#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qec {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, stored in ascending degree order. The representation is
/// canonical: no trailing zero coefficients, so the zero polynomial is the
/// empty vector and has degree -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> ascending);
    explicit IntPoly(std::vector<BigInt> ascending);

    static IntPoly constant(const BigInt& c);
    static IntPoly monomial(const BigInt& c, int degree);
    /// x - r
    static IntPoly linear_root(const BigInt& r);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    BigInt coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : BigInt(0); }
    const BigInt& leading() const { return c_.back(); }

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const BigInt& k);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator-(IntPoly a) { return a *= BigInt(-1); }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const BigInt& k) { return a *= k; }
    friend IntPoly operator*(const BigInt& k, IntPoly a) { return a *= k; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    IntPoly derivative() const;
    /// p(k x)
    IntPoly scale_argument(const BigInt& k) const;

    BigInt operator()(const BigInt& x) const;
    Rational operator()(const Rational& x) const;
    double evaluate(double x) const;
    /// Sign of p(x) computed exactly.
    int sign_at(const Rational& x) const;
    /// Sign of p at +infinity / -infinity.
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    /// gcd of the coefficients (non-negative).
    BigInt content() const;
    /// p / content, normalised to a positive leading coefficient.
    IntPoly primitive_part() const;

    /// Canonical text, descending: "11x^5+27x^4-12x^3-57x^2-15x+11".
    std::string to_string() const;
    /// JSON array of ascending coefficients: "[8,0,-6,2]".
    std::string to_json() const;

private:
    std::vector<BigInt> c_;
    void trim();
};

/// Euclidean division over Q: a = q*b + r with deg r < deg b. Returned
/// polynomials are scaled to integers: (q, r) are multiplied by a common
/// positive factor `scale` so that scale*a = q*b + r.
struct PseudoDivision {
    IntPoly quotient;
    IntPoly remainder;
    BigInt scale;
};
PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b);

/// Exact division in Z[x]. Throws InternalError when b does not divide a
/// with an integer quotient.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

/// True iff b divides a in Q[x].
bool divides(const IntPoly& b, const IntPoly& a);

/// Primitive gcd with positive leading coefficient (gcd(0, 0) = 0).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Yun square-free decomposition of the primitive part:
/// primitive(p) = prod factors[i]^(i+1), factors pairwise coprime and square-free.
std::vector<IntPoly> square_free_decomposition(const IntPoly& p);

/// p / gcd(p, p'), primitive.
IntPoly square_free_part(const IntPoly& p);

/// Removes every root p shares with q: divides p by gcd(p, q) until coprime.
IntPoly deflate_common_roots(IntPoly p, const IntPoly& q);

/// Divides out (x - r) as often as it divides p.
IntPoly deflate_root(IntPoly p, const BigInt& r);

/// Multiplicity of the rational root r in p (0 if not a root).
int root_multiplicity(const IntPoly& p, const BigInt& r);

}  // namespace qec
