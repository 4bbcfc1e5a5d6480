#pragma once

// Elliptic integrals and Jacobi elliptic functions.
//
// Conventions used throughout the library:
//   * the modulus k is the public parameter (m = k^2 appears only internally);
//   * incomplete integrals take the Jacobi argument u rather than the
//     amplitude angle phi = am(u, k):
//       epsilon(u, k) = int_0^u dn^2(w, k) dw          = E(am u, k)
//       Pi(n; u, k)   = int_0^u dw / (1 - n sn^2(w, k)) = Pi(n; am u, k)
//
// Complete K and E use the arithmetic-geometric mean; third-kind and
// incomplete integrals use Carlson's symmetric forms evaluated by the
// duplication theorem; sn, cn, dn use the descending Landen (Bulirsch)
// recursion after reducing u modulo 4K.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sitnikov/error.hpp"

namespace sitnikov::elliptic {

// Elliptic modulus, 0 <= k <= 1. Operations that need k < 1 check it.
struct Modulus {
    double k;
    double m;   // k^2
    double mc;  // 1 - k^2

    Modulus(double modulus)  // NOLINT(google-explicit-constructor): doubles are the natural spelling
        : k(modulus), m(modulus * modulus), mc((1.0 - modulus) * (1.0 + modulus)) {
        if (!(modulus >= 0.0 && modulus <= 1.0)) {
            throw DomainError("elliptic modulus must lie in [0, 1], got " + std::to_string(modulus));
        }
    }
};

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

namespace detail {

inline void require_below_one(const Modulus& mod, const char* fn) {
    if (!(mod.k < 1.0)) {
        throw DomainError(std::string(fn) + ": modulus k must be < 1");
    }
}

inline constexpr double kRelTol = std::numeric_limits<double>::epsilon();

} // namespace detail

// Carlson's R_F(x, y, z); at most one argument may be zero.
inline double carlson_rf(double x, double y, double z) {
    if (x < 0 || y < 0 || z < 0 || (x == 0) + (y == 0) + (z == 0) > 1) {
        throw DomainError("carlson_rf: arguments must be nonnegative with at most one zero");
    }
    const double a0 = (x + y + z) / 3.0;
    double a = a0;
    double q = std::pow(3.0 * detail::kRelTol, -1.0 / 6.0) *
               std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)});
    const double x0 = x, y0 = y;
    double scale = 1.0;
    while (q >= std::abs(a)) {
        const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const double lambda = sx * sy + sx * sz + sy * sz;
        x = (x + lambda) / 4;
        y = (y + lambda) / 4;
        z = (z + lambda) / 4;
        a = (a + lambda) / 4;
        q /= 4;
        scale *= 4;
    }
    const double X = (a0 - x0) / (scale * a);
    const double Y = (a0 - y0) / (scale * a);
    const double Z = -(X + Y);
    const double e2 = X * Y - Z * Z;
    const double e3 = X * Y * Z;
    return (1.0 - e2 / 10 + e3 / 14 + e2 * e2 / 24 - 3 * e2 * e3 / 44) / std::sqrt(a);
}

// Carlson's degenerate R_C(x, y) = R_F(x, y, y), y > 0.
inline double carlson_rc(double x, double y) {
    if (x < 0 || !(y > 0)) {
        throw DomainError("carlson_rc: requires x >= 0 and y > 0");
    }
    const double a0 = (x + 2 * y) / 3.0;
    double a = a0;
    double q = std::pow(3.0 * detail::kRelTol, -1.0 / 8.0) * std::abs(a0 - x);
    const double y0 = y;
    double scale = 1.0;
    while (q >= std::abs(a)) {
        const double lambda = 2 * std::sqrt(x) * std::sqrt(y) + y;
        x = (x + lambda) / 4;
        y = (y + lambda) / 4;
        a = (a + lambda) / 4;
        q /= 4;
        scale *= 4;
    }
    const double s = (y0 - a0) / (scale * a);
    const double s2 = s * s;
    return (1 + s2 * (3.0 / 10) + s * s2 / 7 + s2 * s2 * (3.0 / 8) + s2 * s2 * s * (9.0 / 22) +
            s2 * s2 * s2 * (159.0 / 208) + s2 * s2 * s2 * s * (9.0 / 8)) /
           std::sqrt(a);
}

// Carlson's R_D(x, y, z); x, y >= 0 with at most one zero, z > 0.
inline double carlson_rd(double x, double y, double z) {
    if (x < 0 || y < 0 || !(z > 0) || (x == 0 && y == 0)) {
        throw DomainError("carlson_rd: requires x, y >= 0 (not both zero) and z > 0");
    }
    const double a0 = (x + y + 3 * z) / 5.0;
    double a = a0;
    double q = std::pow(detail::kRelTol / 4.0, -1.0 / 6.0) *
               std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)});
    const double x0 = x, y0 = y;
    double scale = 1.0;
    double sum = 0.0;
    while (q >= std::abs(a)) {
        const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const double lambda = sx * sy + sx * sz + sy * sz;
        sum += 1.0 / (scale * sz * (z + lambda));
        x = (x + lambda) / 4;
        y = (y + lambda) / 4;
        z = (z + lambda) / 4;
        a = (a + lambda) / 4;
        q /= 4;
        scale *= 4;
    }
    const double X = (a0 - x0) / (scale * a);
    const double Y = (a0 - y0) / (scale * a);
    const double Z = -(X + Y) / 3;
    const double xy = X * Y, z2 = Z * Z;
    const double e2 = xy - 6 * z2;
    const double e3 = (3 * xy - 8 * z2) * Z;
    const double e4 = 3 * (xy - z2) * z2;
    const double e5 = xy * z2 * Z;
    const double series = 1 - 3 * e2 / 14 + e3 / 6 + 9 * e2 * e2 / 88 - 3 * e4 / 22 -
                          9 * e2 * e3 / 52 + 3 * e5 / 26;
    return series / (scale * a * std::sqrt(a)) + 3 * sum;
}

// Carlson's R_J(x, y, z, p) for p > 0; x, y, z >= 0 with at most one zero.
inline double carlson_rj(double x, double y, double z, double p) {
    if (x < 0 || y < 0 || z < 0 || (x == 0) + (y == 0) + (z == 0) > 1 || !(p > 0)) {
        throw DomainError("carlson_rj: requires x, y, z >= 0 (at most one zero) and p > 0");
    }
    const double a0 = (x + y + z + 2 * p) / 5.0;
    double a = a0;
    const double delta = (p - x) * (p - y) * (p - z);
    double q = std::pow(detail::kRelTol / 4.0, -1.0 / 6.0) *
               std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z), std::abs(a0 - p)});
    const double x0 = x, y0 = y, z0 = z;
    double scale = 1.0;
    double sum = 0.0;
    while (q >= std::abs(a)) {
        const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z), sp = std::sqrt(p);
        const double lambda = sx * sy + sx * sz + sy * sz;
        const double d = (sp + sx) * (sp + sy) * (sp + sz);
        const double e = delta / (scale * scale * scale * d * d);
        sum += carlson_rc(1.0, 1.0 + e) / (scale * d);
        x = (x + lambda) / 4;
        y = (y + lambda) / 4;
        z = (z + lambda) / 4;
        p = (p + lambda) / 4;
        a = (a + lambda) / 4;
        q /= 4;
        scale *= 4;
    }
    const double X = (a0 - x0) / (scale * a);
    const double Y = (a0 - y0) / (scale * a);
    const double Z = (a0 - z0) / (scale * a);
    const double P = -(X + Y + Z) / 2;
    const double p2 = P * P;
    const double e2 = X * Y + X * Z + Y * Z - 3 * p2;
    const double e3 = X * Y * Z + 2 * e2 * P + 4 * P * p2;
    const double e4 = (2 * X * Y * Z + e2 * P + 3 * P * p2) * P;
    const double e5 = X * Y * Z * p2;
    const double series = 1 - 3 * e2 / 14 + e3 / 6 + 9 * e2 * e2 / 88 - 3 * e4 / 22 -
                          9 * e2 * e3 / 52 + 3 * e5 / 26;
    return series / (scale * a * std::sqrt(a)) + 6 * sum;
}

namespace detail {

struct AgmResult {
    double K;
    double E;
};

// Gauss' AGM for K and E together: K = pi / (2 AGM(1, k')),
// E = K (1 - sum_n 2^(n-1) c_n^2) with c_0 = k.
inline AgmResult agm_complete(const Modulus& mod) {
    double a = 1.0;
    double b = std::sqrt(mod.mc);
    double c = mod.k;
    double weight = 0.5;
    double sum = weight * c * c;
    for (int i = 0; i < 64; ++i) {
        if (std::abs(a - b) <= 2 * kRelTol * a) break;
        const double an = (a + b) / 2;
        const double bn = std::sqrt(a * b);
        c = (a - b) / 2;
        a = an;
        b = bn;
        weight *= 2;
        sum += weight * c * c;
    }
    const double K = std::numbers::pi / (a + b);
    return {K, K * (1.0 - sum)};
}

} // namespace detail

// Complete elliptic integral of the first kind, 0 <= k < 1.
inline double complete_K(Modulus mod) {
    detail::require_below_one(mod, "complete_K");
    return detail::agm_complete(mod).K;
}

// Complete elliptic integral of the second kind, 0 <= k <= 1.
inline double complete_E(Modulus mod) {
    if (mod.k == 1.0) return 1.0;
    return detail::agm_complete(mod).E;
}

// Complete third kind with the complementary characteristic 1 - n passed
// directly, for callers that know it to full relative precision.
inline double complete_Pi_complement(double one_minus_n, Modulus mod) {
    detail::require_below_one(mod, "complete_Pi");
    if (!(one_minus_n > 0)) {
        throw DomainError("complete_Pi: characteristic n must be < 1");
    }
    const double n = 1.0 - one_minus_n;
    return carlson_rf(0.0, mod.mc, 1.0) + n / 3.0 * carlson_rj(0.0, mod.mc, 1.0, one_minus_n);
}

// Complete elliptic integral of the third kind
//   Pi(n, k) = int_0^{pi/2} dtheta / ((1 - n sin^2) sqrt(1 - k^2 sin^2)),  n < 1.
inline double complete_Pi(double n, Modulus mod) {
    if (!(n < 1.0)) {
        throw DomainError("complete_Pi: characteristic n must be < 1");
    }
    return complete_Pi_complement(1.0 - n, mod);
}

namespace detail {

// Bulirsch's descending-Landen sncndn for |u| moderate and 0 < k < 1.
inline JacobiTriple sncndn_landen(double u, const Modulus& mod) {
    constexpr int kMaxDepth = 16;
    std::array<double, kMaxDepth> am{};
    std::array<double, kMaxDepth> bm{};
    double mc = mod.mc;
    double c = 1.0;
    int depth = 0;
    for (double a = 1.0; depth < kMaxDepth; ++depth) {
        am[depth] = a;
        bm[depth] = mc = std::sqrt(mc);
        c = (a + mc) / 2;
        if (!(std::abs(a - mc) > 1e-3 * std::sqrt(kRelTol) * a)) {
            ++depth;
            break;
        }
        mc *= a;
        a = c;
    }
    u *= c;
    double sn = std::sin(u);
    double cn = std::cos(u);
    double dn = 1.0;
    if (sn != 0) {
        double a = cn / sn;
        c *= a;
        while (depth--) {
            const double b = am[depth];
            a *= c;
            c *= dn;
            dn = (bm[depth] + a) / (b + a);
            a = c / b;
        }
        a = 1.0 / std::sqrt(c * c + 1.0);
        sn = sn < 0 ? -a : a;
        cn = c * sn;
    }
    return {sn, cn, dn};
}

// Reduce x to x - period * j with j = round(x / period).
inline double reduce(double x, double period, double& j) {
    j = std::nearbyint(x / period);
    return x - j * period;
}

} // namespace detail

// sn, cn, dn at Jacobi argument u; u is reduced modulo 4K first.
inline JacobiTriple jacobi(double u, Modulus mod) {
    detail::require_below_one(mod, "jacobi");
    if (!std::isfinite(u)) {
        throw DomainError("jacobi: argument must be finite");
    }
    if (mod.k == 0.0) {
        return {std::sin(u), std::cos(u), 1.0};
    }
    const double K = complete_K(mod);
    double j = 0;
    const double ur = detail::reduce(u, 4 * K, j);
    return detail::sncndn_landen(ur, mod);
}

namespace detail {

// Common reduction for the incomplete integrals: u = ur + 2K j with
// ur in [-K, K], where am(ur) lies in [-pi/2, pi/2] and cn(ur) >= 0.
struct ReducedArgument {
    double j;
    double sn;
    double cn;
    double dn;
};

inline ReducedArgument reduce_half_period(double u, const Modulus& mod, double K) {
    double j = 0;
    const double ur = reduce(u, 2 * K, j);
    const JacobiTriple t = mod.k == 0.0 ? JacobiTriple{std::sin(ur), std::cos(ur), 1.0}
                                         : sncndn_landen(ur, mod);
    return {j, t.sn, std::max(t.cn, 0.0), t.dn};
}

} // namespace detail

// Jacobi's epsilon function, the incomplete second-kind integral along the
// Jacobi argument. Satisfies epsilon(u + 2K) = epsilon(u) + 2E.
inline double jacobi_epsilon(double u, Modulus mod) {
    detail::require_below_one(mod, "jacobi_epsilon");
    if (!std::isfinite(u)) {
        throw DomainError("jacobi_epsilon: argument must be finite");
    }
    if (mod.k == 0.0) return u;
    const auto [K, E] = detail::agm_complete(mod);
    const auto r = detail::reduce_half_period(u, mod, K);
    double value = 0.0;
    if (r.sn != 0.0) {
        const double c2 = r.cn * r.cn, d2 = r.dn * r.dn, s3 = r.sn * r.sn * r.sn;
        value = r.sn * carlson_rf(c2, d2, 1.0) - mod.m * s3 / 3.0 * carlson_rd(c2, d2, 1.0);
    }
    return value + 2 * r.j * E;
}

// Incomplete third kind along the Jacobi argument,
//   Pi(n; u, k) = int_0^u dw / (1 - n sn^2(w, k)),  n < 1.
inline double incomplete_Pi(double n, double u, Modulus mod) {
    detail::require_below_one(mod, "incomplete_Pi");
    if (!(n < 1.0)) {
        throw DomainError("incomplete_Pi: characteristic n must be < 1");
    }
    if (!std::isfinite(u)) {
        throw DomainError("incomplete_Pi: argument must be finite");
    }
    const double K = complete_K(mod);
    const auto r = detail::reduce_half_period(u, mod, K);
    double value = 0.0;
    if (r.sn != 0.0) {
        const double c2 = r.cn * r.cn, d2 = r.dn * r.dn, s2 = r.sn * r.sn;
        value = r.sn * carlson_rf(c2, d2, 1.0) +
                n * s2 * r.sn / 3.0 * carlson_rj(c2, d2, 1.0, 1.0 - n * s2);
    }
    if (r.j != 0.0) {
        value += 2 * r.j * complete_Pi(n, mod);
    }
    return value;
}

} // namespace sitnikov::elliptic
