#pragma once

// Hamiltonian dynamics of the two secondaries: the full two-parameter
// Hamiltonian, its decoupled equal-mass limit, the collision-regularizing
// canonical map rho with its regularized Hamiltonian L, and integrators for
// the physical flow, the regularized flow, and the elastic-bounce extension.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "sitnikov/error.hpp"
#include "sitnikov/roots.hpp"
#include "sitnikov/state.hpp"

namespace sitnikov::dynamics {

// Mass parameters: the secondary masses are mu and nu = c mu, with
// alpha = 1/(1+c) and beta = 1 - alpha. Equal masses means c = 1.
class MassParams {
public:
    static MassParams from_ratio(double c, double mu) {
        if (!(c > 0.0 && c <= 1.0)) {
            throw DomainError("mass ratio c must lie in (0, 1], got " + std::to_string(c));
        }
        return MassParams(1.0 / (1.0 + c), c, mu);
    }

    // alpha in [1/2, 1) is equivalent to c = 1/alpha - 1 in (0, 1].
    static MassParams from_alpha(double alpha, double mu) {
        if (!(alpha >= 0.5 && alpha < 1.0)) {
            throw DomainError("alpha must lie in [1/2, 1), got " + std::to_string(alpha));
        }
        return MassParams(alpha, 1.0 / alpha - 1.0, mu);
    }

    static MassParams equal(double mu = 0.0) { return MassParams(0.5, 1.0, mu); }

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double mu() const { return mu_; }
    double c() const { return c_; }

private:
    MassParams(double alpha, double c, double mu) : alpha_(alpha), beta_(1.0 - alpha), mu_(mu), c_(c) {
        if (!(mu >= 0.0) || !std::isfinite(mu)) {
            throw DomainError("mu must be finite and >= 0, got " + std::to_string(mu));
        }
    }

    double alpha_;
    double beta_;
    double mu_;
    double c_;
};

// H = a3 p3^2/2 + a4 p4^2/2 - w3/sqrt(q3^2+1/4) - w4/sqrt(q4^2+1/4) - g/(q3-q4).
// Kinetic plus potential, so it admits explicit splitting schemes.
struct SeparableHamiltonian {
    double inv_mass3;
    double inv_mass4;
    double weight3;
    double weight4;
    double coupling;

    // Full Hamiltonian with M = diag(alpha, beta) and interaction mu beta / (q3 - q4).
    static SeparableHamiltonian full(const MassParams& m) {
        return {1.0 / m.alpha(), 1.0 / m.beta(), m.alpha(), m.beta(), m.mu() * m.beta()};
    }

    // Decoupled limit H = |p|^2/2 - 1/sqrt(q3^2+1/4) - 1/sqrt(q4^2+1/4).
    static SeparableHamiltonian limit() { return {1.0, 1.0, 1.0, 1.0, 0.0}; }

    bool coupled() const { return coupling != 0.0; }

    double kinetic(const PhysicalState& s) const {
        return 0.5 * inv_mass3 * s.p3 * s.p3 + 0.5 * inv_mass4 * s.p4 * s.p4;
    }

    double potential(const PhysicalState& s) const {
        double v = -weight3 / std::sqrt(s.q3 * s.q3 + 0.25) - weight4 / std::sqrt(s.q4 * s.q4 + 0.25);
        if (coupled()) {
            if (!(s.q3 > s.q4)) {
                throw SingularityError("hamiltonian: q3 must exceed q4 when mu > 0");
            }
            v -= coupling / (s.q3 - s.q4);
        }
        return v;
    }

    double energy(const PhysicalState& s) const { return kinetic(s) + potential(s); }

    // (dV/dq3, dV/dq4).
    std::array<double, 2> potential_gradient(double q3, double q4) const {
        const double r3 = q3 * q3 + 0.25;
        const double r4 = q4 * q4 + 0.25;
        std::array<double, 2> g{weight3 * q3 / (r3 * std::sqrt(r3)), weight4 * q4 / (r4 * std::sqrt(r4))};
        if (coupled()) {
            const double d = q3 - q4;
            if (!(d > 0.0)) {
                throw SingularityError("vector field: collision q3 = q4 with mu > 0");
            }
            const double f = coupling / (d * d);
            g[0] += f;
            g[1] -= f;
        }
        return g;
    }

    // (dq3/dt, dq4/dt, dp3/dt, dp4/dt).
    std::array<double, 4> vector_field(const PhysicalState& s) const {
        const auto g = potential_gradient(s.q3, s.q4);
        return {inv_mass3 * s.p3, inv_mass4 * s.p4, -g[0], -g[1]};
    }
};

inline double hamiltonian_full(const PhysicalState& s, const MassParams& m) {
    return SeparableHamiltonian::full(m).energy(s);
}

inline double hamiltonian_limit(const PhysicalState& s) {
    return SeparableHamiltonian::limit().energy(s);
}

inline std::array<double, 4> vector_field(const PhysicalState& s, const MassParams& m) {
    return SeparableHamiltonian::full(m).vector_field(s);
}

inline std::array<double, 4> limit_vector_field(const PhysicalState& s) {
    return SeparableHamiltonian::limit().vector_field(s);
}

// ---------------------------------------------------------------------------
// Regularizing map. The type-2 generating function
//   W(Q, p) = p3 (Q4 + beta Q3^2/2) + p4 (Q4 - alpha Q3^2/2)
// gives q = dW/dp and P = dW/dQ:
//   q3 = Q4 + beta Q3^2/2,  q4 = Q4 - alpha Q3^2/2,
//   P3 = Q3 (beta p3 - alpha p4),  P4 = p3 + p4,
// so q3 - q4 = Q3^2/2 and Q4 is the centre of mass.

// Momenta are singular on Q3 = 0 (they carry a 1/Q3); positions are not.
inline PhysicalState rho_map(const RegularizedState& r, const MassParams& m) {
    const double a = m.alpha(), b = m.beta();
    const double half_sq = 0.5 * r.Q3 * r.Q3;
    const double relative = r.P3 / r.Q3;
    return {r.Q4 + b * half_sq, r.Q4 - a * half_sq, a * r.P4 + relative, b * r.P4 - relative};
}

// Inverse of rho on the Q3 >= 0 branch.
inline RegularizedState rho_inverse(const PhysicalState& s, const MassParams& m) {
    if (!(s.q3 >= s.q4)) {
        throw DomainError("rho_inverse: requires q3 >= q4");
    }
    const double a = m.alpha(), b = m.beta();
    const double Q3 = std::sqrt(2.0 * (s.q3 - s.q4));
    RegularizedState r;
    r.Q3 = Q3;
    r.Q4 = a * s.q3 + b * s.q4;
    r.P3 = Q3 * (b * s.p3 - a * s.p4);
    r.P4 = s.p3 + s.p4;
    return r;
}

// L = alpha beta Q3^2 (H - h) o rho, written out so that it is regular on Q3 = 0:
//   L = (alpha beta P4^2 Q3^2 + P3^2)/2 - 2 alpha beta^2 mu
//       - alpha beta Q3^2 [2 alpha / sqrt(A^2 + 1) + 2 beta / sqrt(B^2 + 1) + h],
// with A = 2 Q4 + beta Q3^2 and B = 2 Q4 - alpha Q3^2.
inline double regularized_L(const RegularizedState& r, const MassParams& m, double h) {
    const double a = m.alpha(), b = m.beta();
    const double q3sq = r.Q3 * r.Q3;
    const double A = 2.0 * r.Q4 + b * q3sq;
    const double B = 2.0 * r.Q4 - a * q3sq;
    const double bracket = 2.0 * a / std::sqrt(A * A + 1.0) + 2.0 * b / std::sqrt(B * B + 1.0) + h;
    return 0.5 * (a * b * r.P4 * r.P4 * q3sq + r.P3 * r.P3) - 2.0 * a * b * b * m.mu() -
           a * b * q3sq * bracket;
}

// Hamiltonian vector field of L in fictitious time:
// (dQ3, dQ4, dP3, dP4)/dtau, plus dt/dtau = alpha beta Q3^2 as the fifth entry.
inline std::array<double, 5> regularized_field(const RegularizedState& r, const MassParams& m, double h) {
    const double a = m.alpha(), b = m.beta(), ab = a * b;
    const double Q3 = r.Q3;
    const double q3sq = Q3 * Q3;
    const double A = 2.0 * r.Q4 + b * q3sq;
    const double B = 2.0 * r.Q4 - a * q3sq;
    const double ra = A * A + 1.0, rb = B * B + 1.0;
    const double sa = std::sqrt(ra), sb = std::sqrt(rb);
    const double ga = A / (ra * sa);  // -d/dA of 1/sqrt(A^2+1)
    const double gb = B / (rb * sb);
    const double bracket = 2.0 * a / sa + 2.0 * b / sb + h;
    const double dL_dQ3 = ab * r.P4 * r.P4 * Q3 - 2.0 * ab * Q3 * bracket +
                          4.0 * ab * ab * q3sq * Q3 * (ga - gb);
    const double dL_dQ4 = 4.0 * ab * q3sq * (a * ga + b * gb);
    return {r.P3, ab * r.P4 * q3sq, -dL_dQ3, -dL_dQ4, ab * q3sq};
}

// ---------------------------------------------------------------------------
// Integrators

struct Trajectory {
    std::vector<double> t;
    std::vector<PhysicalState> states;
};

struct PhysicalOptions {
    // Direct integration with mu > 0 aborts when q3 - q4 drops below this.
    double collision_threshold = 1e-6;
};

namespace detail {

// Yoshida's sixth-order composition (solution A) of the Stormer-Verlet step.
inline constexpr std::array<double, 7> kYoshida6 = [] {
    constexpr double w1 = -1.17767998417887;
    constexpr double w2 = 0.235573213359357;
    constexpr double w3 = 0.784513610477560;
    constexpr double w0 = 1.0 - 2.0 * (w1 + w2 + w3);
    return std::array<double, 7>{w3, w2, w1, w0, w1, w2, w3};
}();

class SplittingStepper {
public:
    SplittingStepper(const SeparableHamiltonian& H, const PhysicalOptions& opt) : H_(H), opt_(opt) {}

    PhysicalState step(PhysicalState s, double dt) const {
        for (double w : kYoshida6) {
            verlet(s, w * dt);
        }
        return s;
    }

private:
    void verlet(PhysicalState& s, double h) const {
        s.q3 += 0.5 * h * H_.inv_mass3 * s.p3;
        s.q4 += 0.5 * h * H_.inv_mass4 * s.p4;
        guard(s);
        const auto g = H_.potential_gradient(s.q3, s.q4);
        s.p3 -= h * g[0];
        s.p4 -= h * g[1];
        s.q3 += 0.5 * h * H_.inv_mass3 * s.p3;
        s.q4 += 0.5 * h * H_.inv_mass4 * s.p4;
    }

    void guard(const PhysicalState& s) const {
        if (H_.coupled() && !(s.q3 - s.q4 >= opt_.collision_threshold)) {
            throw CollisionApproachError(
                "direct integration reached q3 - q4 < " + std::to_string(opt_.collision_threshold) +
                "; integrate in the regularized chart instead");
        }
    }

    SeparableHamiltonian H_;
    PhysicalOptions opt_;
};

// Step sizes covering [0, t_end] in multiples of dt plus a final remainder.
inline std::vector<double> step_schedule(double t_end, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt) || !std::isfinite(t_end)) {
        throw DomainError("integration needs finite t_end and dt > 0");
    }
    const double span = std::abs(t_end);
    const double sign = t_end < 0 ? -1.0 : 1.0;
    const auto full = static_cast<long>(std::floor(span / dt + 1e-9));
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(full) + 2);
    for (long i = 1; i <= full; ++i) {
        times.push_back(sign * std::min(span, static_cast<double>(i) * dt));
    }
    if (span - static_cast<double>(full) * dt > 1e-12 * dt) {
        times.push_back(t_end);
    }
    return times;
}

} // namespace detail

// Fixed-step sixth-order symplectic integration of a separable Hamiltonian.
// Samples are taken at every step, i.e. at multiples of dt (negative t_end
// integrates backward).
inline Trajectory integrate_physical(const PhysicalState& s0, const SeparableHamiltonian& H,
                                     double t_end, double dt, const PhysicalOptions& opt = {}) {
    const detail::SplittingStepper stepper(H, opt);
    if (H.coupled() && !(s0.q3 - s0.q4 >= opt.collision_threshold)) {
        throw CollisionApproachError("initial state is at or beyond the collision threshold");
    }
    Trajectory traj;
    traj.t.push_back(0.0);
    traj.states.push_back(s0);
    PhysicalState s = s0;
    double t = 0.0;
    for (double next : detail::step_schedule(t_end, dt)) {
        s = stepper.step(s, next - t);
        t = next;
        traj.t.push_back(t);
        traj.states.push_back(s);
    }
    return traj;
}

inline Trajectory integrate_physical(const PhysicalState& s0, const MassParams& m, double t_end,
                                     double dt, const PhysicalOptions& opt = {}) {
    return integrate_physical(s0, SeparableHamiltonian::full(m), t_end, dt, opt);
}

struct RegularizedOptions {
    double dtau = 0.0;  // sample spacing; 0 means tau_end / 1000
    double abs_tol = 1e-13;
    double rel_tol = 1e-13;
    double level_tol = 1e-8;
};

struct RegularizedTrajectory {
    std::vector<RegularizedState> samples;
    double max_abs_L = 0.0;
};

// Regularized state and energy level h = H(s) for a physical state with q3 > q4.
inline std::pair<RegularizedState, double> regularize(const PhysicalState& s, const MassParams& m) {
    return {rho_inverse(s, m), hamiltonian_full(s, m)};
}

// Adaptive Runge-Kutta-Fehlberg 7(8) integration of the flow of L in
// fictitious time, accumulating t(tau) = int alpha beta Q3^2 dtau.
// The initial state must lie on L = 0.
inline RegularizedTrajectory integrate_regularized(const RegularizedState& r0, const MassParams& m,
                                                   double h, double tau_end,
                                                   const RegularizedOptions& opt = {}) {
    namespace odeint = boost::numeric::odeint;
    using State = std::array<double, 5>;

    const double L0 = regularized_L(r0, m, h);
    if (!(std::abs(L0) <= opt.level_tol)) {
        throw LevelSetError("integrate_regularized: |L(r0)| = " + std::to_string(std::abs(L0)) +
                            " exceeds level tolerance; h is inconsistent with r0");
    }
    if (!(tau_end > 0.0) || !std::isfinite(tau_end)) {
        throw DomainError("integrate_regularized: tau_end must be positive");
    }
    const double spacing = opt.dtau > 0.0 ? opt.dtau : tau_end / 1000.0;
    const auto n = static_cast<std::size_t>(std::ceil(tau_end / spacing - 1e-9));
    const double dtau = tau_end / static_cast<double>(n);

    auto rhs = [&](const State& x, State& dx, double /*tau*/) {
        const RegularizedState r{x[0], x[1], x[2], x[3], 0.0, x[4]};
        dx = regularized_field(r, m, h);
    };
    RegularizedTrajectory out;
    out.samples.reserve(n + 1);
    auto observe = [&](const State& x, double tau) {
        const RegularizedState r{x[0], x[1], x[2], x[3], tau, x[4]};
        out.max_abs_L = std::max(out.max_abs_L, std::abs(regularized_L(r, m, h)));
        out.samples.push_back(r);
    };
    State x{r0.Q3, r0.Q4, r0.P3, r0.P4, r0.t};
    auto stepper = odeint::make_controlled(opt.abs_tol, opt.rel_tol,
                                           odeint::runge_kutta_fehlberg78<State>());
    odeint::integrate_n_steps(stepper, rhs, x, r0.tau, dtau, n, observe);
    return out;
}

// ---------------------------------------------------------------------------
// Elastic-bounce extension of the decoupled equal-mass limit.

struct BounceEvent {
    double t;
    double q;              // common position at contact
    PhysicalState before;  // at contact, incoming momenta
    PhysicalState after;   // at contact, exchanged momenta
};

struct BounceTrajectory {
    Trajectory trajectory;
    std::vector<BounceEvent> events;
};

// Integrates the decoupled limit flow and, whenever q3 - q4 changes sign,
// localizes the contact time, places both bodies at their common position
// and exchanges p3 <-> p4. For equal masses this is the elastic collision,
// conserving energy and p3 + p4 exactly.
inline BounceTrajectory extend_with_bounce(const PhysicalState& s0, double t_end, double dt,
                                           double event_tol = 1e-10) {
    const SeparableHamiltonian H = SeparableHamiltonian::limit();
    const detail::SplittingStepper stepper(H, {});
    BounceTrajectory out;
    out.trajectory.t.push_back(0.0);
    out.trajectory.states.push_back(s0);

    auto crosses = [](double g0, double g1) { return (g0 > 0 && g1 <= 0) || (g0 < 0 && g1 >= 0); };

    PhysicalState s = s0;
    double t = 0.0;
    for (double next : detail::step_schedule(t_end, dt)) {
        PhysicalState cur = s;
        double t_cur = t;
        double remaining = next - t;
        for (int guard = 0; guard < 64; ++guard) {
            const PhysicalState trial = stepper.step(cur, remaining);
            const double g0 = cur.q3 - cur.q4;
            const double g1 = trial.q3 - trial.q4;
            if (!crosses(g0, g1)) {
                cur = trial;
                break;
            }
            auto gap = [&](double sub) {
                const auto x = stepper.step(cur, sub);
                return x.q3 - x.q4;
            };
            auto gap_rate = [&](double sub) {
                const auto x = stepper.step(cur, sub);
                return x.p3 - x.p4;
            };
            double lo = 0.0, hi = remaining;
            if (hi < lo) std::swap(lo, hi);
            double contact = remaining;
            if (g1 != 0.0) {
                const auto root = roots::safeguarded_newton(gap, gap_rate, lo, hi, 0.5 * (lo + hi), 0.0);
                contact = root.x;
                const double rate = std::abs(gap_rate(contact));
                if (!(std::abs(root.fx) <= event_tol * std::max(rate, 1e-300))) {
                    throw ConvergenceError("extend_with_bounce: crossing near t = " +
                                           std::to_string(t_cur + contact) +
                                           " not localized to the event tolerance");
                }
            }
            const PhysicalState at = stepper.step(cur, contact);
            const double qc = 0.5 * (at.q3 + at.q4);
            BounceEvent ev;
            ev.t = t_cur + contact;
            ev.q = qc;
            ev.before = {qc, qc, at.p3, at.p4};
            ev.after = {qc, qc, at.p4, at.p3};
            out.events.push_back(ev);
            cur = ev.after;
            t_cur = ev.t;
            remaining = next - t_cur;
            if (remaining == 0.0) break;
        }
        s = cur;
        t = next;
        out.trajectory.t.push_back(t);
        out.trajectory.states.push_back(s);
    }
    return out;
}

} // namespace sitnikov::dynamics
