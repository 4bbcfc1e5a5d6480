#pragma once

// Bracketed scalar root finding: safeguarded Newton and plain bisection.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sitnikov/error.hpp"

namespace sitnikov::roots {

struct RootResult {
    double x;
    double fx;
    int iterations;
};

// Newton iteration kept inside the bracket [lo, hi], falling back to
// bisection whenever the Newton step leaves the bracket. f(lo) and f(hi)
// must not share a sign. Stops when |f| <= ftol, the step drops below a few
// ulps, or the bracket collapses.
template <class F, class DF>
RootResult safeguarded_newton(F&& f, DF&& df, double lo, double hi, double guess,
                              double ftol, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0) return {lo, flo, 0};
    if (fhi == 0) return {hi, fhi, 0};
    if ((flo > 0) == (fhi > 0)) {
        throw ConvergenceError("safeguarded_newton: root is not bracketed");
    }
    const bool increasing = flo < 0;
    double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
    for (int it = 1; it <= max_iter; ++it) {
        const double fx = f(x);
        if (std::abs(fx) <= ftol || fx == 0) return {x, fx, it};
        if ((fx < 0) == increasing) {
            lo = x;
        } else {
            hi = x;
        }
        const double dfx = df(x);
        double next = x - fx / dfx;
        if (!(std::isfinite(next) && next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        const double ulps = 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));
        if (std::abs(next - x) <= ulps || hi - lo <= ulps) {
            const double fn = f(next);
            return std::abs(fn) < std::abs(fx) ? RootResult{next, fn, it} : RootResult{x, fx, it};
        }
        x = next;
    }
    throw ConvergenceError("safeguarded_newton: no convergence after " + std::to_string(max_iter) +
                           " iterations");
}

// Bisection on a sign change; runs until |f| <= ftol or the bracket can no
// longer be split, and returns the endpoint-or-midpoint with smallest |f|.
template <class F>
RootResult bisect(F&& f, double lo, double hi, double ftol, int max_iter = 2000) {
    double flo = f(lo);
    double fhi = f(hi);
    if ((flo > 0) == (fhi > 0) && flo != 0 && fhi != 0) {
        throw ConvergenceError("bisect: root is not bracketed");
    }
    RootResult best = std::abs(flo) < std::abs(fhi) ? RootResult{lo, flo, 0} : RootResult{hi, fhi, 0};
    for (int it = 1; it <= max_iter; ++it) {
        if (std::abs(best.fx) <= ftol) return best;
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) return best;
        const double fm = f(mid);
        if (std::abs(fm) < std::abs(best.fx)) best = {mid, fm, it};
        if (fm == 0) return best;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        best.iterations = it;
    }
    return best;
}

} // namespace sitnikov::roots
