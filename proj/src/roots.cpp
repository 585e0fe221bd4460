#include "qec/roots.hpp"

#include <algorithm>

#include "qec/error.hpp"

namespace qec {
namespace {

// Divide by the (positive) content without touching the sign.
IntPoly reduce_keep_sign(const IntPoly& p) {
    if (p.is_zero()) return p;
    BigInt g = p.content();
    std::vector<BigInt> c(p.coeffs());
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
}

int count_variations(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

SturmSequence::SturmSequence(const IntPoly& p) {
    if (p.is_zero()) throw InvalidArgument("Sturm sequence of the zero polynomial");
    chain_.push_back(reduce_keep_sign(p));
    if (p.degree() < 1) return;
    chain_.push_back(reduce_keep_sign(p.derivative()));
    for (;;) {
        const auto& a = chain_[chain_.size() - 2];
        const auto& b = chain_.back();
        IntPoly r = pseudo_divide(a, b).remainder;
        if (r.is_zero()) break;
        chain_.push_back(reduce_keep_sign(-r));
    }
}

int SturmSequence::variations_at(const Rational& x) const {
    std::vector<int> s;
    s.reserve(chain_.size());
    for (const auto& q : chain_) s.push_back(q.sign_at(x));
    return count_variations(s);
}

int SturmSequence::variations_at_neg_inf() const {
    std::vector<int> s;
    for (const auto& q : chain_) s.push_back(q.sign_at_neg_inf());
    return count_variations(s);
}

int SturmSequence::variations_at_pos_inf() const {
    std::vector<int> s;
    for (const auto& q : chain_) s.push_back(q.sign_at_pos_inf());
    return count_variations(s);
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const {
    return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

int RootIsolation::with_multiplicity() const noexcept {
    int total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    return total;
}

Rational root_bound(const IntPoly& p) {
    if (p.is_zero()) throw InvalidArgument("root bound of the zero polynomial");
    Rational best = 0;
    const Rational lead = abs(Rational(p.leading()));
    for (int k = 0; k < p.degree(); ++k) {
        Rational ratio = abs(Rational(p.coeffs()[k])) / lead;
        if (ratio > best) best = ratio;
    }
    return best + 1;
}

RootIsolation sturm_isolate(const IntPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw InvalidArgument("sturm_isolate: zero polynomial");
    if (!(lo < hi)) throw InvalidArgument("sturm_isolate: empty interval");

    RootIsolation out;
    out.square_free = square_free_part(p);
    if (out.square_free.degree() < 1) return out;

    const SturmSequence sturm(out.square_free);
    const Rational bound = root_bound(out.square_free);
    Rational a = std::max(lo, Rational(-bound));
    Rational b = std::min(hi, bound);
    if (!(a < b)) return out;

    // Depth-first bisection, left half first so roots come out ascending.
    struct Pending {
        Rational lo, hi;
        int count;
    };
    std::vector<Pending> stack{{a, b, sturm.count(a, b)}};
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        if (cur.count == 0) continue;
        if (cur.count == 1) {
            out.roots.push_back({cur.lo, cur.hi, 1});
            continue;
        }
        Rational mid = (cur.lo + cur.hi) / 2;
        int left = sturm.count(cur.lo, mid);
        stack.push_back({mid, cur.hi, cur.count - left});
        stack.push_back({cur.lo, mid, left});
    }

    // Move the left endpoint off a neighbouring root so that the interval is
    // a proper sign-change bracket.
    const IntPoly& sq = out.square_free;
    for (auto& r : out.roots) {
        if (sq.sign_at(r.hi) == 0) continue;
        while (sq.sign_at(r.lo) == 0) {
            Rational mid = (r.lo + r.hi) / 2;
            if (sq.sign_at(mid) == 0) {
                r.hi = mid;
                break;
            }
            if (sturm.count(r.lo, mid) == 1) r.hi = mid;
            else r.lo = mid;
        }
    }

    const auto factors = square_free_decomposition(p);
    std::vector<SturmSequence> factor_sturm;
    factor_sturm.reserve(factors.size());
    for (const auto& f : factors) factor_sturm.emplace_back(f);
    for (auto& r : out.roots) {
        r.multiplicity = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i].degree() < 1) continue;
            if (factor_sturm[i].count(r.lo, r.hi) == 1) {
                r.multiplicity = static_cast<int>(i) + 1;
                break;
            }
        }
        if (r.multiplicity == 0) throw InternalError("sturm_isolate: root missing from square-free factors");
    }
    return out;
}

RootIsolation sturm_isolate(const IntPoly& p) {
    Rational b = root_bound(p);
    return sturm_isolate(p, Rational(-b), b);
}

IsolatedRoot refine_interval(const IntPoly& p, IsolatedRoot iv, const Rational& tol) {
    const int s_hi = p.sign_at(iv.hi);
    if (s_hi == 0) {
        iv.lo = iv.hi;
        return iv;
    }
    const int s_lo = p.sign_at(iv.lo);
    if (s_lo == 0 || s_lo == s_hi) throw InvalidArgument("refine_root: no sign change over the interval");
    while (iv.hi - iv.lo > tol) {
        Rational mid = (iv.lo + iv.hi) / 2;
        const int s = p.sign_at(mid);
        if (s == 0) {
            iv.lo = iv.hi = mid;
            break;
        }
        if (s == s_lo) iv.lo = mid;
        else iv.hi = mid;
    }
    return iv;
}

double refine_root(const IntPoly& p, const IsolatedRoot& interval, double tol) {
    if (!(tol > 0)) throw InvalidArgument("refine_root: tolerance must be positive");
    IsolatedRoot r = refine_interval(p, interval, Rational(tol));
    Rational mid = (r.lo + r.hi) / 2;
    return mid.get_d();
}

}  // namespace qec
