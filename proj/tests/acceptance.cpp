// Acceptance criteria. Prints one PASS/FAIL line per criterion with the
// measured quantity, its threshold and the wall time, and exits nonzero if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "sitnikov/closedform.hpp"
#include "sitnikov/dynamics.hpp"
#include "sitnikov/oracles.hpp"
#include "sitnikov/resonance.hpp"
#include "sitnikov/verify.hpp"

using namespace sitnikov;

namespace {

struct Outcome {
    bool passed;
    std::string measured;  // human-readable measured value(s) vs. threshold
};

using Clock = std::chrono::steady_clock;

std::string fmt(const char* f, double a) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), f, a);
    return buf;
}

std::string fmt(const char* f, double a, double b) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), f, a, b);
    return buf;
}

// Runs one criterion; a time budget of 0 means unlimited.
bool run(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome out{false, ""};
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    bool ok = out.passed;
    std::string timing = fmt("%.3gs", elapsed);
    if (budget_s > 0.0) {
        timing += fmt(" (budget %.3gs)", budget_s);
        if (elapsed >= budget_s) ok = false;
    }
    std::printf("AC%-2d %s  %-46s %s  [%s]\n", id, ok ? "PASS" : "FAIL", title, out.measured.c_str(), timing.c_str());
    std::fflush(stdout);
    return ok;
}

double T_of(double h) { return closedform::period_T(closedform::modulus_from_energy(h)); }

} // namespace

int main() {
    int failures = 0;
    auto tally = [&](bool ok) { failures += ok ? 0 : 1; };

    tally(run(1, "harmonic limit of the period", 1e-3, [] {
        const double err = std::abs(T_of(-2.0 + 1e-6) - std::numbers::pi / std::numbers::sqrt2);
        return Outcome{err <= 1e-3, fmt("|T - pi/sqrt2| = %.3e <= 1e-3", err)};
    }));

    tally(run(2, "action vanishes at the rest energy", 0.0, [] {
        const double J = std::abs(closedform::action_J(closedform::modulus_from_energy(-2.0 + 1e-8)));
        return Outcome{J < 1e-4, fmt("|J(-2+1e-8)| = %.3e < 1e-4", J)};
    }));

    tally(run(3, "time function derivative (7x64 grid)", 0.0, [] {
        const double worst = verify::detail::time_derivative_mismatch(7, 64);
        return Outcome{worst <= 1e-8, fmt("max rel err = %.3e <= 1e-8", worst)};
    }));

    tally(run(4, "closed form vs ODE oracle, 3 periods", 1.0, [] {
        const double worst = verify::detail::closed_form_vs_ode(-1.0, 0.0, 3.0, 300);
        return Outcome{worst <= 1e-8, fmt("max |dev| = %.3e <= 1e-8", worst)};
    }));

    tally(run(5, "periodicity of the closed form", 0.0, [] {
        double worst = 0.0;
        for (double h : {-1.5, -1.0, -0.3}) {
            const auto o = closedform::SingleOrbit::from_energy(h);
            const auto a = closedform::eval_state(0.0, o);
            const auto b = closedform::eval_state(o.period(), o);
            worst = std::max({worst, std::abs(a.q - b.q), std::abs(a.p - b.p)});
        }
        return Outcome{worst <= 1e-10, fmt("max |x(T) - x(0)| = %.3e <= 1e-10", worst)};
    }));

    tally(run(6, "symplecticity of the regularizing map", 0.0, [] {
        std::mt19937_64 rng(6);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        double worst = 0.0;
        for (double alpha : {0.5, 0.6, 0.9}) {
            const auto m = dynamics::MassParams::from_alpha(alpha, 0.0);
            for (int i = 0; i < 100; ++i) {
                RegularizedState r;
                r.Q3 = 1.15 + 0.85 * u(rng);
                r.Q4 = u(rng);
                r.P3 = u(rng);
                r.P4 = u(rng);
                worst = std::max(worst, oracles::rho_symplecticity_residual(r, m));
            }
        }
        return Outcome{worst <= 1e-9, fmt("max |D^T J D - J| = %.3e <= 1e-9", worst)};
    }));

    tally(run(7, "regularized flow on L = 0 through collision", 0.0, [] {
        double L = 0.0, mismatch = 0.0;
        bool crossed = true;
        for (auto [alpha, mu] : {std::pair{0.6, 0.1}, std::pair{0.5, 0.2}}) {
            const auto c = verify::detail::regularized_crossing(alpha, mu);
            L = std::max(L, c.max_abs_L);
            mismatch = std::max(mismatch, c.physical_mismatch);
            crossed = crossed && c.crossed;
        }
        const bool ok = crossed && L <= 1e-8 && mismatch <= 1e-7;
        return Outcome{ok, fmt("max|L| = %.3e <= 1e-8, position mismatch = %.3e <= 1e-7", L, mismatch) +
                               (crossed ? "" : " (no crossing)")};
    }));

    tally(run(8, "bounce extension conserves invariants", 0.0, [] {
        double exact = 0.0, multiset = 0.0, jump = 0.0;
        std::size_t events = 0;
        for (const PhysicalState& s0 : {PhysicalState{0.3, -0.1, 0.9, -1.2}, PhysicalState{0.0, 0.5, 1.3, 0.2},
                                        PhysicalState{-0.4, 0.6, 0.1, -0.3}}) {
            const double dt = 1e-3;
            const auto bt = dynamics::extend_with_bounce(s0, 40.0, dt);
            events += bt.events.size();
            for (const auto& ev : bt.events) {
                exact = std::max({exact, std::abs(dynamics::hamiltonian_limit(ev.after) -
                                                  dynamics::hamiltonian_limit(ev.before)),
                                  std::abs((ev.after.p3 + ev.after.p4) - (ev.before.p3 + ev.before.p4)),
                                  std::abs(ev.after.q3 - ev.before.q3), std::abs(ev.after.q4 - ev.before.q4)});
                const double a3 = closedform::partial_energy(ev.before.q3, ev.before.p3);
                const double a4 = closedform::partial_energy(ev.before.q4, ev.before.p4);
                const double b3 = closedform::partial_energy(ev.after.q3, ev.after.p3);
                const double b4 = closedform::partial_energy(ev.after.q4, ev.after.p4);
                multiset = std::max({multiset, std::abs(std::min(a3, a4) - std::min(b3, b4)),
                                     std::abs(std::max(a3, a4) - std::max(b3, b4))});
            }
            // Position continuity: consecutive samples move by at most |p| dt
            // (|p| <= 2 sqrt(2) on these energy levels) plus slack.
            const auto& st = bt.trajectory.states;
            for (std::size_t i = 1; i < st.size(); ++i) {
                jump = std::max({jump, std::abs(st[i].q3 - st[i - 1].q3), std::abs(st[i].q4 - st[i - 1].q4)});
            }
        }
        const bool ok = events > 0 && exact == 0.0 && multiset == 0.0 && jump <= 3.0 * 1e-3;
        return Outcome{ok, fmt("%g bounces, max invariant change = %.3e (exact 0)", static_cast<double>(events), exact) +
                               fmt(", {h3,h4} change = %.3e, max position step = %.3e", multiset, jump)};
    }));

    tally(run(9, "triplet count below totient bound, p<=50", 10.0, [] {
        int violations = 0;
        std::string first;
        for (resonance::Int p = 1; p <= 50; ++p) {
            const auto count = static_cast<resonance::Int>(resonance::enumerate_triplets(p).size());
            const auto bound = resonance::count_bound(p);
            if (!(count < bound)) {
                if (violations++ == 0) {
                    first = " first at p=" + std::to_string(p) + ": " + std::to_string(count) + " >= " +
                            std::to_string(bound);
                }
            }
        }
        return Outcome{violations == 0, fmt("%g of 50 values of p violate", violations) + first};
    }));

    tally(run(10, "catalog soundness, p_max = 12", 0.0, [] {
        const auto cat = resonance::build_catalog(12);
        std::size_t outside = 0;
        for (const auto& e : cat.entries) {
            if (!(e.h_star > -4.0 && e.h_star < 0.0)) ++outside;
        }
        std::mt19937_64 rng(10);
        std::uniform_int_distribution<std::size_t> pick(0, cat.entries.size() - 1);
        std::uniform_real_distribution<double> phase(-3.0, 3.0);
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            const auto& e = cat.entries[pick(rng)];
            worst = std::max(worst, resonance::periodicity_residual(e, e.tau, phase(rng), phase(rng)));
        }
        return Outcome{outside == 0 && worst <= 1e-8,
                       fmt("%g h_star outside (-4,0); max 2 pi p residual = %.3e <= 1e-8",
                           static_cast<double>(outside), worst)};
    }));

    tally(run(11, "max gap of h_star shrinks 5 -> 30", 0.0, [] {
        const double g5 = resonance::density_report(5, 40).max_gap;
        const double g30 = resonance::density_report(30, 40).max_gap;
        return Outcome{g30 < g5, fmt("gap(5) = %.4f, gap(30) = %.4f", g5, g30)};
    }));

    tally(run(12, "round trips (period inversion, rho)", 0.0, [] {
        double inv = 0.0;
        for (double h : {-1.5, -1.0, -0.5, -0.1}) inv = std::max(inv, std::abs(resonance::invert_period(T_of(h)) - h));
        std::mt19937_64 rng(12);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        double rho = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const auto m = dynamics::MassParams::from_alpha(0.5 + 0.49 * std::abs(u(rng)), 0.0);
            RegularizedState r;
            r.Q3 = 1.1 + 0.9 * u(rng);
            r.Q4 = u(rng);
            r.P3 = u(rng);
            r.P4 = u(rng);
            const auto b = dynamics::rho_inverse(dynamics::rho_map(r, m), m);
            rho = std::max({rho, std::abs(b.Q3 - r.Q3), std::abs(b.Q4 - r.Q4), std::abs(b.P3 - r.P3),
                            std::abs(b.P4 - r.P4)});
        }
        return Outcome{inv <= 1e-9 && rho <= 1e-12, fmt("inversion %.3e <= 1e-9, rho %.3e <= 1e-12", inv, rho)};
    }));

    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
