#include "qec/chebyshev.hpp"

#include "qec/error.hpp"

namespace qec {

IntPoly u_tilde(int n) {
    if (n < -1) throw InvalidArgument("u_tilde: n must be >= -1");
    if (n == -1) return {};
    const IntPoly x{0, 1};
    IntPoly prev{}, cur{1};
    for (int k = 0; k < n; ++k) {
        IntPoly next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::pair<IntPoly, IntPoly> partial_chebyshev(int n) {
    if (n < 0) throw InvalidArgument("partial_chebyshev: n must be non-negative");
    const int k = n / 2;
    if (n % 2 == 0) {
        IntPoly uk = u_tilde(k), uk1 = u_tilde(k - 1);
        return {uk + uk1, uk - uk1};
    }
    return {u_tilde(k), u_tilde(k + 1) - u_tilde(k - 1)};
}

IntPoly phi(int n) {
    if (n < 1) throw InvalidArgument("phi: n must be >= 1");
    const BigInt nn = n;
    const IntPoly quad(std::vector<BigInt>{-4 * nn, BigInt(-6), nn + 1});
    const IntPoly two_x_plus_4{4, 2};  // 2(x+2)
    return quad * u_tilde(n) + two_x_plus_4 * u_tilde(n - 1) + two_x_plus_4;
}

IntPoly q_poly(int n) {
    if (n < 1) throw InvalidArgument("q_poly: n must be >= 1");
    return exact_div(phi(n), partial_chebyshev(n).first);
}

IntPoly r_poly(int n) {
    if (n < 1) throw InvalidArgument("r_poly: n must be >= 1");
    static const IntPoly x_minus_2_sq{4, -4, 1};
    return exact_div(q_poly(n), x_minus_2_sq);
}

}  // namespace qec
