#pragma once

// Resonant tori of the decoupled problem. A triplet (p, q, n) of positive
// integers with gcd(p, q, n) = 1 and p > q/(2 sqrt 2), p > n/(2 sqrt 2)
// names the torus on which body 3 has period 2 pi p / q and body 4 has
// period 2 pi p / n, so the pair returns after tau = 2 pi p. The energy
// surface carrying it is h* = T^-1(2 pi p / q) + T^-1(2 pi p / n).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sitnikov/closedform.hpp"
#include "sitnikov/error.hpp"
#include "sitnikov/roots.hpp"

namespace sitnikov::resonance {

using Int = std::int64_t;

inline Int gcd3(Int p, Int q, Int n) {
    if (p <= 0 || q <= 0 || n <= 0) {
        throw DomainError("gcd3: arguments must be positive");
    }
    return std::gcd(std::gcd(p, q), n);
}

// Euler's phi by trial division: phi(p) = p prod_{prime d | p} (1 - 1/d).
inline Int totient(Int p) {
    if (p < 1) {
        throw DomainError("totient: argument must be >= 1");
    }
    Int result = p;
    Int rest = p;
    for (Int d = 2; d * d <= rest; ++d) {
        if (rest % d == 0) {
            while (rest % d == 0) rest /= d;
            result -= result / d;
        }
    }
    if (rest > 1) result -= result / rest;
    return result;
}

struct ResonanceTriplet {
    Int p;
    Int q;
    Int n;

    friend bool operator==(const ResonanceTriplet&, const ResonanceTriplet&) = default;
    friend auto operator<=>(const ResonanceTriplet&, const ResonanceTriplet&) = default;
};

// x < 2 sqrt(2) p  <=>  x^2 < 8 p^2; 8 p^2 is never a square, so no ties.
inline bool below_period_floor(Int x, Int p) { return x * x < 8 * p * p; }

inline bool is_admissible(const ResonanceTriplet& t) {
    if (t.p <= 0 || t.q <= 0 || t.n <= 0) return false;
    return gcd3(t.p, t.q, t.n) == 1 && below_period_floor(t.q, t.p) && below_period_floor(t.n, t.p);
}

// Largest x with x < 2 sqrt(2) p.
inline Int period_floor_limit(Int p) {
    auto x = static_cast<Int>(std::floor(2.0 * std::numbers::sqrt2 * static_cast<double>(p)));
    while (!below_period_floor(x, p)) --x;
    while (below_period_floor(x + 1, p)) ++x;
    return x;
}

// All admissible (p, q, n) with the given p, in lexicographic order.
inline std::vector<ResonanceTriplet> enumerate_triplets(Int p) {
    if (p < 1) {
        throw DomainError("enumerate_triplets: p must be >= 1");
    }
    const Int limit = period_floor_limit(p);
    std::vector<ResonanceTriplet> out;
    for (Int q = 1; q <= limit; ++q) {
        for (Int n = 1; n <= limit; ++n) {
            const ResonanceTriplet t{p, q, n};
            if (is_admissible(t)) out.push_back(t);
        }
    }
    return out;
}

// 8 p phi(p) + sum_{q < 2 sqrt(2) p} phi(q).
inline Int count_bound(Int p) {
    if (p < 1) {
        throw DomainError("count_bound: p must be >= 1");
    }
    Int sum = 0;
    for (Int q = 1; below_period_floor(q, p); ++q) sum += totient(q);
    return 8 * p * totient(p) + sum;
}

// ---------------------------------------------------------------------------
// Period inversion

inline constexpr double kMinPeriod = std::numbers::pi / std::numbers::sqrt2;

// Checks that T is strictly increasing on a uniform grid in (-2, 0).
// Returns the number of violations (0 when monotone).
inline int count_period_monotonicity_violations(int points = 10000) {
    int violations = 0;
    double previous = kMinPeriod;
    for (int i = 1; i < points; ++i) {
        const double h = -2.0 + 2.0 * static_cast<double>(i) / points;
        const double T = closedform::period_T(closedform::modulus_from_energy(h));
        if (!(T > previous)) ++violations;
        previous = T;
    }
    return violations;
}

// Runs the monotonicity check once per process and throws if it fails;
// period inversion relies on it.
inline void ensure_period_monotone() {
    static const int violations = count_period_monotonicity_violations();
    if (violations != 0) {
        throw ConvergenceError("period T(h) is not monotone on the check grid (" +
                               std::to_string(violations) + " violations); inversion is unsafe");
    }
}

inline constexpr double kInversionTolerance = 1e-11;

// Unique h in (-2, 0) with T(h) = T_target, by bisection.
inline double invert_period(double T_target) {
    if (!(T_target > kMinPeriod) || !std::isfinite(T_target)) {
        throw DomainError("invert_period: target period must exceed pi/sqrt(2), got " +
                          std::to_string(T_target));
    }
    auto residual = [&](double h) {
        if (h <= -2.0) return kMinPeriod - T_target;
        return closedform::period_T(closedform::modulus_from_energy(h)) - T_target;
    };
    double hi = -1.0;
    while (residual(hi) < 0.0) {
        hi *= 0.5;
        if (hi > -1e-300) {
            throw ConvergenceError("invert_period: could not bracket the target period");
        }
    }
    const auto root = roots::bisect(residual, -2.0, hi, 0.0);
    if (!(std::abs(root.fx) <= kInversionTolerance) || !(root.x > -2.0)) {
        throw ConvergenceError("invert_period: residual " + std::to_string(std::abs(root.fx)) +
                               " exceeds tolerance for T = " + std::to_string(T_target));
    }
    return root.x;
}

// ---------------------------------------------------------------------------
// Energy surfaces and the catalog

struct CatalogEntry {
    ResonanceTriplet triplet;
    double h1;
    double h2;
    double h_star;
    double tau;
    std::size_t surface = 0;  // index into Catalog::surfaces
};

inline CatalogEntry energy_surface(const ResonanceTriplet& t) {
    if (!is_admissible(t)) {
        throw DomainError("energy_surface: triplet (" + std::to_string(t.p) + "," +
                          std::to_string(t.q) + "," + std::to_string(t.n) + ") is not admissible");
    }
    ensure_period_monotone();
    const double two_pi_p = 2.0 * std::numbers::pi * static_cast<double>(t.p);
    const double h1 = invert_period(two_pi_p / static_cast<double>(t.q));
    const double h2 = t.n == t.q ? h1 : invert_period(two_pi_p / static_cast<double>(t.n));
    return {t, h1, h2, h1 + h2, two_pi_p, 0};
}

// Triplet realizing the rational period point (T1, T2)/2pi = (r/s, u/v):
// (ru, su, rv) / gcd(ru, su, rv).
inline ResonanceTriplet rational_to_triplet(Int r, Int s, Int u, Int v) {
    if (r <= 0 || s <= 0 || u <= 0 || v <= 0) {
        throw DomainError("rational_to_triplet: arguments must be positive");
    }
    if (std::gcd(r, s) != 1 || std::gcd(u, v) != 1) {
        throw DomainError("rational_to_triplet: fractions r/s and u/v must be reduced");
    }
    // r/s > 1/(2 sqrt 2)  <=>  8 r^2 > s^2.
    if (!below_period_floor(s, r) || !below_period_floor(v, u)) {
        throw DomainError("rational_to_triplet: periods must exceed pi/sqrt(2)");
    }
    const Int g = gcd3(r * u, s * u, r * v);
    return {r * u / g, s * u / g, r * v / g};
}

struct Surface {
    double h_low;   // smaller of h1, h2
    double h_high;  // larger of h1, h2
    double h_star;
    std::size_t first_entry;
    std::size_t entry_count;
};

struct Catalog {
    std::vector<CatalogEntry> entries;  // by p, then lexicographic in (q, n)
    std::vector<Surface> surfaces;      // distinct {h1, h2}, in order of first appearance
};

inline constexpr double kSurfaceTolerance = 1e-9;

// Every admissible triplet with p <= p_max together with the distinct energy
// surfaces they lie on. Inversions are shared between triplets with equal
// period ratios p/q.
inline Catalog build_catalog(Int p_max) {
    if (p_max < 1) {
        throw DomainError("build_catalog: p_max must be >= 1");
    }
    ensure_period_monotone();
    std::map<std::pair<Int, Int>, double> inverted;
    auto energy_for = [&](Int p, Int q) {
        const Int g = std::gcd(p, q);
        const auto key = std::make_pair(p / g, q / g);
        auto it = inverted.find(key);
        if (it == inverted.end()) {
            const double T = 2.0 * std::numbers::pi * static_cast<double>(key.first) /
                             static_cast<double>(key.second);
            it = inverted.emplace(key, invert_period(T)).first;
        }
        return it->second;
    };

    Catalog cat;
    // Surfaces indexed by h_low for the tolerance merge.
    std::multimap<double, std::size_t> by_low;
    for (Int p = 1; p <= p_max; ++p) {
        for (const auto& t : enumerate_triplets(p)) {
            CatalogEntry e{t, energy_for(t.p, t.q), energy_for(t.p, t.n), 0.0,
                           2.0 * std::numbers::pi * static_cast<double>(t.p), 0};
            e.h_star = e.h1 + e.h2;
            const double lo = std::min(e.h1, e.h2);
            const double hi = std::max(e.h1, e.h2);
            std::size_t found = cat.surfaces.size();
            for (auto it = by_low.lower_bound(lo - kSurfaceTolerance);
                 it != by_low.end() && it->first <= lo + kSurfaceTolerance; ++it) {
                if (std::abs(cat.surfaces[it->second].h_high - hi) <= kSurfaceTolerance) {
                    found = it->second;
                    break;
                }
            }
            if (found == cat.surfaces.size()) {
                cat.surfaces.push_back({lo, hi, e.h_star, cat.entries.size(), 0});
                by_low.emplace(lo, found);
            }
            cat.surfaces[found].entry_count += 1;
            e.surface = found;
            cat.entries.push_back(e);
        }
    }
    return cat;
}

struct DensityReport {
    std::vector<Int> counts;         // per bin over (-4, 0)
    std::vector<double> values;      // sorted distinct h_star
    double max_gap = 0.0;            // largest gap between adjacent values
    double lower_boundary_gap = 0.0; // min value - (-4)
    double upper_boundary_gap = 0.0; // 0 - max value
};

inline DensityReport density_report(const Catalog& cat, int bins) {
    if (bins < 1) {
        throw DomainError("density_report: bins must be >= 1");
    }
    DensityReport rep;
    rep.counts.assign(static_cast<std::size_t>(bins), 0);
    for (const auto& s : cat.surfaces) rep.values.push_back(s.h_star);
    std::sort(rep.values.begin(), rep.values.end());
    rep.values.erase(std::unique(rep.values.begin(), rep.values.end(),
                                 [](double a, double b) { return std::abs(a - b) <= kSurfaceTolerance; }),
                     rep.values.end());
    for (double v : rep.values) {
        auto bin = static_cast<int>(std::floor((v + 4.0) / 4.0 * bins));
        bin = std::clamp(bin, 0, bins - 1);
        rep.counts[static_cast<std::size_t>(bin)] += 1;
    }
    for (std::size_t i = 1; i < rep.values.size(); ++i) {
        rep.max_gap = std::max(rep.max_gap, rep.values[i] - rep.values[i - 1]);
    }
    if (!rep.values.empty()) {
        rep.lower_boundary_gap = rep.values.front() + 4.0;
        rep.upper_boundary_gap = -rep.values.back();
    }
    return rep;
}

inline DensityReport density_report(Int p_max, int bins) {
    return density_report(build_catalog(p_max), bins);
}

// ---------------------------------------------------------------------------
// Periodicity and minimality

// Orbits of both bodies on the torus of an entry, with chosen phases.
inline std::pair<closedform::SingleOrbit, closedform::SingleOrbit>
torus_orbits(const CatalogEntry& e, double nu0_3 = 0.0, double nu0_4 = 0.0) {
    return {closedform::SingleOrbit::from_energy(e.h1, nu0_3),
            closedform::SingleOrbit::from_energy(e.h2, nu0_4)};
}

inline double max_component_difference(const PhysicalState& a, const PhysicalState& b) {
    return std::max({std::abs(a.q3 - b.q3), std::abs(a.q4 - b.q4), std::abs(a.p3 - b.p3),
                     std::abs(a.p4 - b.p4)});
}

// max |x(t0 + period) - x(t0)| for the closed-form double state on the torus.
inline double periodicity_residual(const CatalogEntry& e, double period, double nu0_3 = 0.0,
                                   double nu0_4 = 0.0, double t0 = 0.0) {
    const auto [o3, o4] = torus_orbits(e, nu0_3, nu0_4);
    return max_component_difference(closedform::eval_double_state(t0 + period, o3, o4),
                                     closedform::eval_double_state(t0, o3, o4));
}

// Exact minimal common period over 2 pi: lcm(p/q, p/n) as a reduced fraction.
inline std::pair<Int, Int> minimal_period_over_2pi(const ResonanceTriplet& t) {
    const Int g1 = std::gcd(t.p, t.q);
    const Int g2 = std::gcd(t.p, t.n);
    const Int a = t.p / g1, b = t.q / g1;
    const Int c = t.p / g2, d = t.n / g2;
    return {std::lcm(a, c), std::gcd(b, d)};
}

struct MinimalityReport {
    double tau;                  // 2 pi p
    double tau_min;              // exact minimal common period
    bool minimal;                // tau_min == tau
    double residual_at_tau_min;  // closed-form check that tau_min is a period
};

inline MinimalityReport minimality_check(const CatalogEntry& e, double nu0_3 = 0.0,
                                         double nu0_4 = 0.0) {
    const auto [num, den] = minimal_period_over_2pi(e.triplet);
    const double tau_min = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {e.tau, tau_min, den == 1 && num == e.triplet.p,
            periodicity_residual(e, tau_min, nu0_3, nu0_4)};
}

} // namespace sitnikov::resonance
