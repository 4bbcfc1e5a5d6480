#pragma once

// Self-verification suites run by `sitnikov verify`. Each check compares the
// library against an independent reference (quadrature, adaptive ODE
// integration, finite differences, brute force) and records the measured
// residual next to its tolerance. Failures are data, not exceptions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "sitnikov/closedform.hpp"
#include "sitnikov/dynamics.hpp"
#include "sitnikov/elliptic.hpp"
#include "sitnikov/oracles.hpp"
#include "sitnikov/resonance.hpp"

namespace sitnikov::verify {

struct CheckResult {
    std::string suite;
    std::string name;
    double measured;
    double tolerance;
    bool passed;
    bool informational = false;  // reported, never counted as a failure
    std::string detail;
};

struct VerifyOptions {
    // Multiplies T(h) inside the ODE-oracle period check; anything other
    // than 1 is a deliberate mutation used to test the harness itself.
    double period_scale = 1.0;
    std::uint64_t seed = 20260415;
};

enum class Suite { Elliptic, Closedform, Dynamics, Resonance, All };

namespace detail {

inline CheckResult at_most(const char* suite, std::string name, double measured, double tol,
                           std::string detail = {}) {
    const bool ok = std::isfinite(measured) && measured <= tol;
    return {suite, std::move(name), measured, tol, ok, false, std::move(detail)};
}

inline CheckResult below(const char* suite, std::string name, double measured, double tol,
                         std::string detail = {}) {
    const bool ok = std::isfinite(measured) && measured < tol;
    return {suite, std::move(name), measured, tol, ok, false, std::move(detail)};
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

} // namespace detail

// ---------------------------------------------------------------------------

inline std::vector<CheckResult> verify_elliptic(const VerifyOptions& = {}) {
    using namespace elliptic;
    constexpr const char* S = "elliptic";
    std::vector<CheckResult> out;

    double identity = 0.0;
    for (double k = 0.0; k <= 0.7 + 1e-12; k += 0.05) {
        const double K = complete_K(k);
        for (int i = 0; i <= 200; ++i) {
            const double u = -4 * K + 8 * K * i / 200.0;
            const auto t = jacobi(u, k);
            identity = std::max({identity, std::abs(t.sn * t.sn + t.cn * t.cn - 1.0),
                                 std::abs(t.dn * t.dn + k * k * t.sn * t.sn - 1.0)});
        }
    }
    out.push_back(detail::at_most(S, "jacobi_identities", identity, 1e-12));

    double legendre = 0.0;
    for (double k = 0.05; k < 0.96; k += 0.05) {
        const double kp = std::sqrt(1.0 - k * k);
        legendre = std::max(legendre, std::abs(complete_E(k) * complete_K(kp) + complete_E(kp) * complete_K(k) -
                                               complete_K(k) * complete_K(kp) - std::numbers::pi / 2));
    }
    out.push_back(detail::at_most(S, "legendre_relation", legendre, 1e-12));

    double quad = 0.0;
    for (double k : {0.1, 0.3, 0.5, 0.7}) {
        quad = std::max({quad, detail::rel(complete_K(k), oracles::K_by_quadrature(k)),
                         detail::rel(complete_E(k), oracles::E_by_quadrature(k))});
        for (double n : {-0.5, 0.2, 0.5, 0.9}) {
            quad = std::max(quad, detail::rel(complete_Pi(n, k), oracles::Pi_by_quadrature(n, k)));
        }
    }
    out.push_back(detail::at_most(S, "complete_integrals_vs_quadrature", quad, 1e-12));

    double deps = 0.0, dpi = 0.0;
    for (double k : {0.2, 0.45, 0.7}) {
        const double K = complete_K(k);
        for (int i = 0; i < 40; ++i) {
            const double u = -3 * K + 6.5 * K * i / 40.0;
            const auto t = jacobi(u, k);
            const double fe = oracles::derivative([&](double x) { return jacobi_epsilon(x, k); }, u, 1e-3);
            deps = std::max(deps, detail::rel(fe, t.dn * t.dn));
            for (double n : {0.3, 0.8}) {
                const double fp = oracles::derivative([&](double x) { return incomplete_Pi(n, x, k); }, u, 1e-3);
                dpi = std::max(dpi, detail::rel(fp, 1.0 / (1.0 - n * t.sn * t.sn)));
            }
        }
    }
    out.push_back(detail::at_most(S, "epsilon_derivative_is_dn2", deps, 1e-8));
    out.push_back(detail::at_most(S, "Pi_derivative_is_integrand", dpi, 1e-8));

    double quarter = 0.0;
    for (double k : {0.1, 0.4, 0.7}) {
        const double K = complete_K(k);
        quarter = std::max({quarter, std::abs(jacobi_epsilon(K, k) - complete_E(k)),
                            std::abs(incomplete_Pi(0.32, K, k) - complete_Pi(0.32, k))});
    }
    out.push_back(detail::at_most(S, "incomplete_at_K_is_complete", quarter, 1e-12));
    return out;
}

// ---------------------------------------------------------------------------

namespace detail {

// max relative mismatch between d(time_of_nu)/dnu (finite differences) and
// sqrt(2)/(4(1 - 2k^2 sn^2)^2) on a k-by-nu grid.
inline double time_derivative_mismatch(int k_points, int nu_points) {
    double worst = 0.0;
    for (int i = 1; i <= k_points; ++i) {
        double k = 0.1 * i;
        if (i == k_points) k *= 0.999;
        const double h = 4.0 * k * k - 2.0;
        const closedform::SingleOrbit orbit = closedform::SingleOrbit::from_energy(h);
        const double K = orbit.K();
        const double step = 1e-3 * std::min(1.0, std::sqrt(-h));
        for (int j = 0; j < nu_points; ++j) {
            const double nu = 4.0 * K * j / nu_points;
            const double fd = oracles::derivative([&](double x) { return closedform::time_of_nu(x, orbit); }, nu, step);
            const double sn = elliptic::jacobi(nu, k).sn;
            const double d = 1.0 - 2.0 * k * k * sn * sn;
            const double exact = std::numbers::sqrt2 / (4.0 * d * d);
            worst = std::max(worst, rel(fd, exact));
        }
    }
    return worst;
}

// max componentwise deviation between the closed form and the adaptive ODE
// reference over `periods` periods at energy h.
inline double closed_form_vs_ode(double h, double nu0, double periods, int samples) {
    const auto orbit = closedform::SingleOrbit::from_energy(h, nu0);
    const double T = orbit.period();
    PhaseState ref = closedform::eval_state(0.0, orbit);
    double worst = 0.0;
    const double dt = periods * T / samples;
    for (int i = 1; i <= samples; ++i) {
        ref = oracles::reference_flow_single(ref, dt);
        const auto cf = closedform::eval_state(i * dt, orbit);
        worst = std::max({worst, std::abs(cf.q - ref.q), std::abs(cf.p - ref.p)});
    }
    return worst;
}

} // namespace detail

inline std::vector<CheckResult> verify_closedform(const VerifyOptions& opt = {}) {
    using namespace closedform;
    constexpr const char* S = "closedform";
    std::vector<CheckResult> out;

    out.push_back(detail::at_most(S, "harmonic_limit_period",
                                  std::abs(period_T(modulus_from_energy(-2.0 + 1e-6)) - resonance::kMinPeriod), 1e-3));
    out.push_back(detail::below(S, "action_vanishes_at_rest", std::abs(action_J(modulus_from_energy(-2.0 + 1e-8))), 1e-4));

    double period_err = 0.0;
    for (double h : {-1.5, -1.0, -0.5}) {
        const double T = period_T(modulus_from_energy(h)) * opt.period_scale;
        period_err = std::max(period_err, detail::rel(T, oracles::reference_period(h)));
    }
    out.push_back(detail::at_most(S, "period_vs_ode_oracle", period_err, 1e-9));

    double action_err = 0.0;
    for (double h : {-1.5, -1.0, -0.5}) {
        action_err = std::max(action_err, detail::rel(action_J(modulus_from_energy(h)), oracles::action_by_quadrature(h)));
    }
    out.push_back(detail::at_most(S, "action_vs_quadrature", action_err, 1e-9));

    const double dJ = oracles::derivative([](double h) { return action_J(modulus_from_energy(h)); }, -1.0, 1e-3);
    out.push_back(detail::at_most(S, "dJ_dh_is_T_over_2pi",
                                  detail::rel(dJ, period_T(modulus_from_energy(-1.0)) / (2 * std::numbers::pi)), 1e-7));

    out.push_back(detail::at_most(S, "time_function_derivative", detail::time_derivative_mismatch(7, 64), 1e-8));

    std::mt19937_64 rng(opt.seed);
    double round_trip = 0.0;
    {
        const auto orbit = SingleOrbit::from_energy(-1.0, 0.4);
        const double fourK = 4.0 * orbit.K();
        std::uniform_real_distribution<double> dist(-3 * fourK, 3 * fourK);
        for (int i = 0; i < 1000; ++i) {
            const double nu = dist(rng);
            const double back = nu_of_time(time_of_nu(nu, orbit), orbit);
            const double diff = std::remainder(back - nu, fourK);
            round_trip = std::max(round_trip, std::abs(diff));
        }
    }
    out.push_back(detail::at_most(S, "nu_time_round_trip", round_trip, 1e-11));

    double periodic = 0.0;
    for (double h : {-1.5, -1.0, -0.3}) {
        const auto orbit = SingleOrbit::from_energy(h, 0.25);
        for (double t0 : {0.0, 0.7, 3.1}) {
            const auto a = eval_state(t0, orbit);
            const auto b = eval_state(t0 + orbit.period(), orbit);
            periodic = std::max({periodic, std::abs(a.q - b.q), std::abs(a.p - b.p)});
        }
    }
    out.push_back(detail::at_most(S, "state_periodicity", periodic, 1e-10));

    double conservation = 0.0;
    {
        const auto orbit = SingleOrbit::from_energy(-0.5, 0.0);
        for (int i = 0; i <= 400; ++i) {
            const auto s = eval_state(orbit.period() * i / 400.0, orbit);
            conservation = std::max(conservation, std::abs(partial_energy(s.q, s.p) + 0.5));
        }
    }
    out.push_back(detail::at_most(S, "energy_conservation", conservation, 1e-10));

    int violations = 0;
    {
        double prev_T = resonance::kMinPeriod, prev_J = 0.0;
        for (int i = 1; i < 2000; ++i) {
            const auto em = modulus_from_energy(-2.0 + 2.0 * i / 2000.0);
            const double T = period_T(em), J = action_J(em);
            if (!(T > prev_T)) ++violations;
            if (!(J > prev_J)) ++violations;
            prev_T = T;
            prev_J = J;
        }
    }
    out.push_back(detail::at_most(S, "period_and_action_monotone", violations, 0.0));

    out.push_back(detail::at_most(S, "closed_form_vs_ode_3_periods", detail::closed_form_vs_ode(-1.0, 0.0, 3.0, 300), 1e-8));
    return out;
}

// ---------------------------------------------------------------------------

namespace detail {

struct RegularizedCrossing {
    double max_abs_L;
    double physical_mismatch;
    bool crossed;
};

// Approaching pair with attraction: the regularized flow carries it through
// Q3 = 0; segments away from contact are re-integrated directly.
inline RegularizedCrossing regularized_crossing(double alpha, double mu) {
    const auto m = dynamics::MassParams::from_alpha(alpha, mu);
    const PhysicalState s0{0.5, -0.3, -0.2, 0.1};
    const auto [r0, h] = dynamics::regularize(s0, m);
    dynamics::RegularizedOptions ropt;
    ropt.dtau = 0.01;
    const auto traj = dynamics::integrate_regularized(r0, m, h, 12.0, ropt);
    RegularizedCrossing res{traj.max_abs_L, 0.0, false};

    const auto H = dynamics::SeparableHamiltonian::full(m);
    const double far = 0.05;  // minimum separation for direct comparison
    std::size_t contact = traj.samples.size();
    for (std::size_t i = 1; i < traj.samples.size(); ++i) {
        if ((traj.samples[i - 1].Q3 > 0) != (traj.samples[i].Q3 > 0)) {
            res.crossed = true;
            contact = i;
            break;
        }
    }
    auto compare_from = [&](std::size_t start, std::size_t end) {
        const PhysicalState origin = dynamics::rho_map(traj.samples[start], m);
        const double t_origin = traj.samples[start].t;
        for (std::size_t i = start + 1; i < end; i += 5) {
            const PhysicalState reg = dynamics::rho_map(traj.samples[i], m);
            if (reg.q3 - reg.q4 < far) break;
            const PhysicalState direct = oracles::reference_flow(H, origin, traj.samples[i].t - t_origin);
            res.physical_mismatch = std::max({res.physical_mismatch, std::abs(reg.q3 - direct.q3),
                                              std::abs(reg.q4 - direct.q4)});
        }
    };
    compare_from(0, contact);
    // After contact: start from the first sample that is far enough apart again.
    for (std::size_t i = contact; i < traj.samples.size(); ++i) {
        const auto s = dynamics::rho_map(traj.samples[i], m);
        if (s.q3 - s.q4 >= 2 * far) {
            compare_from(i, traj.samples.size());
            break;
        }
    }
    return res;
}

} // namespace detail

inline std::vector<CheckResult> verify_dynamics(const VerifyOptions& opt = {}) {
    using namespace dynamics;
    constexpr const char* S = "dynamics";
    std::vector<CheckResult> out;
    std::mt19937_64 rng(opt.seed + 1);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    double grad = 0.0;
    for (double alpha : {0.5, 0.6}) {
        for (double mu : {0.0, 0.1}) {
            const auto m = MassParams::from_alpha(alpha, mu);
            for (int i = 0; i < 50; ++i) {
                PhysicalState s{0.6 + 0.3 * unit(rng), -0.6 + 0.3 * unit(rng), unit(rng), unit(rng)};
                const auto f = vector_field(s, m);
                auto H = [&](int idx, double v) {
                    PhysicalState x = s;
                    double* fields[] = {&x.q3, &x.q4, &x.p3, &x.p4};
                    *fields[idx] = v;
                    return hamiltonian_full(x, m);
                };
                const double dHdq3 = oracles::derivative([&](double v) { return H(0, v); }, s.q3, 1e-4);
                const double dHdq4 = oracles::derivative([&](double v) { return H(1, v); }, s.q4, 1e-4);
                const double dHdp3 = oracles::derivative([&](double v) { return H(2, v); }, s.p3, 1e-4);
                const double dHdp4 = oracles::derivative([&](double v) { return H(3, v); }, s.p4, 1e-4);
                const double scale = std::max({std::abs(dHdq3), std::abs(dHdq4), std::abs(dHdp3), std::abs(dHdp4), 1e-12});
                grad = std::max({grad, std::abs(f[0] - dHdp3) / scale, std::abs(f[1] - dHdp4) / scale,
                                 std::abs(f[2] + dHdq3) / scale, std::abs(f[3] + dHdq4) / scale});
            }
        }
    }
    out.push_back(detail::at_most(S, "vector_field_is_hamiltonian_gradient", grad, 1e-7));

    double sympl = 0.0;
    for (double alpha : {0.5, 0.6, 0.9}) {
        const auto m = MassParams::from_alpha(alpha, 0.0);
        for (int i = 0; i < 100; ++i) {
            RegularizedState r;
            r.Q3 = 1.15 + 0.85 * unit(rng);
            r.Q4 = unit(rng);
            r.P3 = unit(rng);
            r.P4 = unit(rng);
            sympl = std::max(sympl, oracles::rho_symplecticity_residual(r, m));
        }
    }
    out.push_back(detail::at_most(S, "rho_is_symplectic", sympl, 1e-9));

    double round = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto m = MassParams::from_alpha(0.5 + 0.45 * (0.5 + 0.5 * unit(rng)), 0.0);
        RegularizedState r;
        r.Q3 = 1.1 + 0.9 * unit(rng);
        r.Q4 = unit(rng);
        r.P3 = unit(rng);
        r.P4 = unit(rng);
        const auto back = rho_inverse(rho_map(r, m), m);
        round = std::max({round, std::abs(back.Q3 - r.Q3), std::abs(back.Q4 - r.Q4), std::abs(back.P3 - r.P3),
                          std::abs(back.P4 - r.P4)});
    }
    out.push_back(detail::at_most(S, "rho_round_trip", round, 1e-12));

    double identity = 0.0;
    for (double alpha : {0.5, 0.6}) {
        for (double mu : {0.0, 0.1}) {
            const auto m = MassParams::from_alpha(alpha, mu);
            for (int i = 0; i < 250; ++i) {
                RegularizedState r;
                r.Q3 = 1.05 + 0.95 * unit(rng);
                r.Q4 = unit(rng);
                r.P3 = unit(rng);
                r.P4 = unit(rng);
                const double h = -1.0 + 0.5 * unit(rng);
                const double L = regularized_L(r, m, h);
                const double composed = alpha * m.beta() * r.Q3 * r.Q3 * (hamiltonian_full(rho_map(r, m), m) - h);
                identity = std::max(identity, std::abs(L - composed) / std::max({std::abs(L), std::abs(composed), 1.0}));
            }
        }
    }
    out.push_back(detail::at_most(S, "regularized_L_composition", identity, 1e-10));

    const auto crossing = detail::regularized_crossing(0.6, 0.1);
    out.push_back(detail::at_most(S, "regularized_level_set", crossing.max_abs_L, 1e-8,
                                  crossing.crossed ? "trajectory crosses Q3 = 0" : "no crossing found"));
    out.push_back(detail::at_most(S, "regularized_matches_direct", crossing.crossed ? crossing.physical_mismatch : INFINITY,
                                  1e-7));

    {
        const PhysicalState s0{0.3, -0.1, 0.9, -1.2};
        const auto bt = extend_with_bounce(s0, 40.0, 1e-3);
        double exact = 0.0, multiset = 0.0;
        for (const auto& ev : bt.events) {
            exact = std::max({exact, std::abs(hamiltonian_limit(ev.after) - hamiltonian_limit(ev.before)),
                              std::abs((ev.after.p3 + ev.after.p4) - (ev.before.p3 + ev.before.p4))});
            const double a3 = closedform::partial_energy(ev.before.q3, ev.before.p3);
            const double a4 = closedform::partial_energy(ev.before.q4, ev.before.p4);
            const double b3 = closedform::partial_energy(ev.after.q3, ev.after.p3);
            const double b4 = closedform::partial_energy(ev.after.q4, ev.after.p4);
            multiset = std::max(multiset, std::max(std::abs(std::min(a3, a4) - std::min(b3, b4)),
                                                   std::abs(std::max(a3, a4) - std::max(b3, b4))));
        }
        out.push_back(detail::at_most(S, "bounce_conservation_exact", exact, 0.0,
                                      std::to_string(bt.events.size()) + " bounces"));
        out.push_back(detail::at_most(S, "bounce_partial_energy_multiset", multiset, 0.0));
        out.push_back(detail::at_most(S, "bounce_events_present", bt.events.empty() ? 1.0 : 0.0, 0.0));
    }

    {
        const PhysicalState s0{0.0, 0.0, std::numbers::sqrt2, -std::numbers::sqrt2};
        const auto H = SeparableHamiltonian::limit();
        const auto traj = integrate_physical(s0, H, 50.0, 1e-3);
        const double H0 = H.energy(s0);
        double drift = 0.0;
        for (const auto& s : traj.states) drift = std::max(drift, std::abs(H.energy(s) - H0));
        out.push_back(detail::at_most(S, "limit_energy_drift", drift, 1e-9));

        const auto back = integrate_physical(traj.states.back(), H, -50.0, 1e-3);
        out.push_back(detail::at_most(S, "reversibility", resonance::max_component_difference(back.states.back(), s0), 1e-8));
    }

    {
        const auto o = closedform::SingleOrbit::from_energy(-1.0, 0.0);
        const auto s0 = closedform::eval_double_state(0.0, o, o);
        const auto traj = integrate_physical(s0, SeparableHamiltonian::limit(), 3.0 * o.period(), 1e-3);
        double worst = 0.0;
        for (std::size_t i = 0; i < traj.t.size(); i += 10) {
            worst = std::max(worst, resonance::max_component_difference(
                                        traj.states[i], closedform::eval_double_state(traj.t[i], o, o)));
        }
        out.push_back(detail::at_most(S, "splitting_vs_closed_form", worst, 1e-8));
    }
    return out;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckResult> verify_resonance(const VerifyOptions& opt = {}) {
    using namespace resonance;
    constexpr const char* S = "resonance";
    std::vector<CheckResult> out;

    std::string violating;
    int violations = 0;
    for (Int p = 1; p <= 50; ++p) {
        const auto count = static_cast<Int>(enumerate_triplets(p).size());
        if (!(count < count_bound(p))) {
            ++violations;
            violating += (violating.empty() ? "p=" : " p=") + std::to_string(p) + "(" + std::to_string(count) +
                         ">=" + std::to_string(count_bound(p)) + ")";
        }
    }
    out.push_back(detail::at_most(S, "triplet_count_below_totient_bound", violations, 0.0, violating));

    const auto catalog = build_catalog(12);
    double outside = 0.0;
    for (const auto& e : catalog.entries) {
        if (!(e.h_star > -4.0 && e.h_star < 0.0) || !(e.h1 > -2.0 && e.h1 < 0.0) || !(e.h2 > -2.0 && e.h2 < 0.0)) {
            outside += 1.0;
        }
    }
    out.push_back(detail::at_most(S, "catalog_energies_in_range", outside, 0.0));

    std::mt19937_64 rng(opt.seed + 2);
    std::uniform_int_distribution<std::size_t> pick(0, catalog.entries.size() - 1);
    std::uniform_real_distribution<double> phase(-3.0, 3.0);
    double periodic = 0.0;
    for (int i = 0; i < 10; ++i) {
        const auto& e = catalog.entries[pick(rng)];
        periodic = std::max(periodic, periodicity_residual(e, e.tau, phase(rng), phase(rng)));
    }
    out.push_back(detail::at_most(S, "catalog_periodicity", periodic, 1e-8));

    double swap = 0.0;
    for (Int p = 1; p <= 6; ++p) {
        for (const auto& t : enumerate_triplets(p)) {
            swap = std::max(swap, std::abs(energy_surface(t).h_star - energy_surface({t.p, t.n, t.q}).h_star));
        }
    }
    out.push_back(detail::at_most(S, "swap_symmetry", swap, 1e-12));

    const double gap5 = density_report(build_catalog(5), 40).max_gap;
    const double gap30 = density_report(build_catalog(30), 40).max_gap;
    out.push_back(detail::below(S, "max_gap_shrinks_5_to_30", gap30, gap5));

    double inversion = 0.0;
    for (double h : {-1.5, -1.0, -0.5, -0.1}) {
        inversion = std::max(inversion, std::abs(invert_period(closedform::period_T(closedform::modulus_from_energy(h))) - h));
    }
    out.push_back(detail::at_most(S, "invert_period_round_trip", inversion, 1e-9));

    std::size_t non_minimal = 0;
    double worst_min = 0.0;
    for (const auto& e : catalog.entries) {
        const auto [num, den] = minimal_period_over_2pi(e.triplet);
        if (!(den == 1 && num == e.triplet.p)) ++non_minimal;
    }
    for (std::size_t i = 0; i < catalog.entries.size(); i += 211) {
        worst_min = std::max(worst_min, minimality_check(catalog.entries[i]).residual_at_tau_min);
    }
    CheckResult minimal{S, "minimal_period_report", static_cast<double>(non_minimal), 0.0, true, true,
                        std::to_string(non_minimal) + " of " + std::to_string(catalog.entries.size()) +
                            " entries have a common period shorter than 2 pi p; residual at that period " +
                            std::to_string(worst_min)};
    out.push_back(minimal);
    return out;
}

inline std::vector<CheckResult> run(Suite suite, const VerifyOptions& opt = {}) {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> part) { out.insert(out.end(), part.begin(), part.end()); };
    if (suite == Suite::Elliptic || suite == Suite::All) append(verify_elliptic(opt));
    if (suite == Suite::Closedform || suite == Suite::All) append(verify_closedform(opt));
    if (suite == Suite::Dynamics || suite == Suite::All) append(verify_dynamics(opt));
    if (suite == Suite::Resonance || suite == Suite::All) append(verify_resonance(opt));
    return out;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed || r.informational; });
}

} // namespace sitnikov::verify
