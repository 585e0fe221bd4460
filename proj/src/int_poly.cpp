#include "qec/int_poly.hpp"

#include <algorithm>
#include <cmath>

#include "qec/error.hpp"

namespace qec {

IntPoly::IntPoly(std::initializer_list<long> ascending) {
    c_.reserve(ascending.size());
    for (long v : ascending) c_.emplace_back(v);
    trim();
}

IntPoly::IntPoly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, int degree) {
    std::vector<BigInt> v(degree + 1, BigInt(0));
    v[degree] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_root(const BigInt& r) { return IntPoly(std::vector<BigInt>{-r, BigInt(1)}); }

void IntPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& k) {
    for (auto& c : c_) c *= k;
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * static_cast<unsigned long>(k);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::scale_argument(const BigInt& k) const {
    std::vector<BigInt> out(c_);
    BigInt power = 1;
    for (auto& c : out) {
        c *= power;
        power *= k;
    }
    return IntPoly(std::move(out));
}

BigInt IntPoly::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPoly::operator()(const Rational& x) const {
    // Homogenised Horner over the integers: p(a/b) * b^d.
    BigInt num = x.get_num(), den = x.get_den();
    BigInt acc = 0, den_power = 1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * num + *it * den_power;
        den_power *= den;
    }
    // acc = sum c_k num^k den^(d-k); divide by den^d.
    BigInt den_d = den_power;
    if (!c_.empty()) mpz_divexact(den_d.get_mpz_t(), den_power.get_mpz_t(), den.get_mpz_t());
    Rational out(acc, den_d);
    out.canonicalize();
    return out;
}

double IntPoly::evaluate(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

int IntPoly::sign_at(const Rational& x) const {
    const BigInt& num = x.get_num();
    const BigInt& den = x.get_den();
    BigInt acc = 0, den_power = 1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * num + *it * den_power;
        den_power *= den;
    }
    return sgn(acc);
}

int IntPoly::sign_at_pos_inf() const { return c_.empty() ? 0 : sgn(c_.back()); }

int IntPoly::sign_at_neg_inf() const {
    if (c_.empty()) return 0;
    return (degree() % 2 == 0) ? sgn(c_.back()) : -sgn(c_.back());
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (c_.empty()) return {};
    BigInt g = content();
    if (sgn(c_.back()) < 0) g = -g;
    std::vector<BigInt> out(c_);
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = c_[k];
        if (sgn(c) == 0) continue;
        if (sgn(c) < 0) out += '-';
        else if (!out.empty()) out += '+';
        BigInt mag = abs(c);
        if (k == 0 || mag != 1) out += mag.get_str();
        if (k >= 1) out += 'x';
        if (k >= 2) out += '^' + std::to_string(k);
    }
    return out;
}

std::string IntPoly::to_json() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ',';
        out += c_[i].get_str();
    }
    return out + "]";
}

PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
    const int db = b.degree();
    const int dq = a.degree() - db;
    if (dq < 0) return {IntPoly{}, a, BigInt(1)};

    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rational> quot(dq + 1);
    const Rational lead(b.leading());
    for (int k = dq; k >= 0; --k) {
        Rational t = rem[k + db] / lead;
        quot[k] = t;
        if (sgn(t) == 0) continue;
        for (int j = 0; j <= db; ++j) rem[k + j] -= t * b.coeffs()[j];
    }
    rem.resize(db);

    BigInt scale = 1;
    for (const auto& v : quot) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
    for (const auto& v : rem) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
    auto to_int = [&](const std::vector<Rational>& v) {
        std::vector<BigInt> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            Rational s = v[i] * scale;
            out[i] = s.get_num();
        }
        return IntPoly(std::move(out));
    };
    return {to_int(quot), to_int(rem), scale};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw InternalError("exact_div: division by the zero polynomial");
    if (a.is_zero()) return {};
    const int db = b.degree();
    const int dq = a.degree() - db;
    if (dq < 0) throw InternalError("exact_div: " + b.to_string() + " does not divide " + a.to_string());
    std::vector<BigInt> rem(a.coeffs());
    std::vector<BigInt> quot(dq + 1);
    const BigInt& lead = b.leading();
    for (int k = dq; k >= 0; --k) {
        BigInt& top = rem[k + db];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw InternalError("exact_div: " + b.to_string() + " does not divide " + a.to_string() +
                                " over the integers");
        BigInt t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        quot[k] = t;
        for (int j = 0; j <= db; ++j) rem[k + j] -= t * b.coeffs()[j];
    }
    for (int j = 0; j < db; ++j)
        if (sgn(rem[j]) != 0)
            throw InternalError("exact_div: " + b.to_string() + " does not divide " + a.to_string());
    return IntPoly(std::move(quot));
}

bool divides(const IntPoly& b, const IntPoly& a) { return pseudo_divide(a, b).remainder.is_zero(); }

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly x = a.primitive_part();
    IntPoly y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_divide(x, y).remainder;
        x = std::move(y);
        y = r.primitive_part();
    }
    return x;
}

std::vector<IntPoly> square_free_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw InvalidArgument("square-free decomposition of the zero polynomial");
    const IntPoly f = p.primitive_part();
    if (f.degree() < 1) return {};
    const IntPoly df = f.derivative();
    const IntPoly a0 = gcd(f, df);
    IntPoly b = exact_div(f, a0);
    IntPoly c = exact_div(df, a0);
    IntPoly d = c - b.derivative();
    std::vector<IntPoly> factors;
    while (b.degree() >= 1) {
        IntPoly a = gcd(b, d);
        factors.push_back(a);
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - b.derivative();
    }
    while (!factors.empty() && factors.back().degree() < 1) factors.pop_back();
    return factors;
}

IntPoly square_free_part(const IntPoly& p) {
    if (p.is_zero()) throw InvalidArgument("square-free part of the zero polynomial");
    IntPoly f = p.primitive_part();
    if (f.degree() < 1) return f;
    return exact_div(f, gcd(f, f.derivative())).primitive_part();
}

IntPoly deflate_common_roots(IntPoly p, const IntPoly& q) {
    if (p.is_zero()) throw InvalidArgument("deflating the zero polynomial");
    for (;;) {
        IntPoly g = gcd(p, q);
        if (g.degree() < 1) return p;
        p = exact_div(p, g);
    }
}

IntPoly deflate_root(IntPoly p, const BigInt& r) {
    if (p.is_zero()) throw InvalidArgument("deflating the zero polynomial");
    const IntPoly lin = IntPoly::linear_root(r);
    while (p.degree() >= 1 && sgn(p(r)) == 0) p = exact_div(p, lin);
    return p;
}

int root_multiplicity(const IntPoly& p, const BigInt& r) {
    if (p.is_zero()) throw InvalidArgument("root multiplicity in the zero polynomial");
    const IntPoly lin = IntPoly::linear_root(r);
    int k = 0;
    IntPoly q = p;
    while (q.degree() >= 1 && sgn(q(r)) == 0) {
        q = exact_div(q, lin);
        ++k;
    }
    return k;
}

}  // namespace qec
