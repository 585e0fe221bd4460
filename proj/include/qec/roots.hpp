#pragma once

#include <vector>

#include "qec/int_poly.hpp"

namespace qec {

/// Sturm chain p, p', -rem(p, p'), ... with every member reduced to a
/// primitive integer polynomial by positive scaling (signs are preserved).
class SturmSequence {
public:
    explicit SturmSequence(const IntPoly& p);

    /// Sign changes along the chain at x (zeros skipped).
    int variations_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    /// Number of distinct real roots of p in (lo, hi].
    int count(const Rational& lo, const Rational& hi) const;
    int count_all() const;

    const std::vector<IntPoly>& chain() const noexcept { return chain_; }

private:
    std::vector<IntPoly> chain_;
};

/// Half-open interval (lo, hi] holding exactly one distinct real root.
/// Either the root is hi itself, or the square-free part changes sign
/// strictly between lo and hi.
struct IsolatedRoot {
    Rational lo;
    Rational hi;
    int multiplicity = 1;
};

struct RootIsolation {
    std::vector<IsolatedRoot> roots;  // ascending, pairwise disjoint
    IntPoly square_free;              // the polynomial the intervals isolate

    int distinct() const noexcept { return static_cast<int>(roots.size()); }
    int with_multiplicity() const noexcept;
};

/// Cauchy bound: every real root r satisfies |r| < bound.
Rational root_bound(const IntPoly& p);

/// Isolates all real roots of p in (lo, hi], with multiplicities from the
/// square-free decomposition. Throws InvalidArgument for the zero polynomial
/// or lo >= hi.
RootIsolation sturm_isolate(const IntPoly& p, const Rational& lo, const Rational& hi);

/// All real roots.
RootIsolation sturm_isolate(const IntPoly& p);

/// Bisection of an isolating interval down to width <= tol, with exact
/// rational sign evaluation of p. Returns the midpoint of the final
/// interval. Requires p(hi) == 0 or a sign change of p across (lo, hi);
/// throws InvalidArgument otherwise.
double refine_root(const IntPoly& p, const IsolatedRoot& interval, double tol = 1e-12);

/// Same, returning the final rational interval instead of its midpoint.
IsolatedRoot refine_interval(const IntPoly& p, IsolatedRoot interval, const Rational& tol);

}  // namespace qec
