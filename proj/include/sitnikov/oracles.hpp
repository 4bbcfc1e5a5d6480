#pragma once

// Independent numerical references used by the verification suites: direct
// quadrature and high-order adaptive ODE integration. None of these touch
// elliptic functions, so they check the closed forms from the outside.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/numeric/odeint.hpp>

#include "sitnikov/dynamics.hpp"
#include "sitnikov/roots.hpp"
#include "sitnikov/state.hpp"

namespace sitnikov::oracles {

// Adaptive Gauss-Kronrod quadrature of a smooth integrand on [a, b].
template <class F>
double quadrature(F&& f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-15);
}

// K(k) = int_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2)
inline double K_by_quadrature(double k) {
    return quadrature([k](double th) { const double s = std::sin(th); return 1.0 / std::sqrt(1.0 - k * k * s * s); },
                      0.0, std::numbers::pi / 2);
}

inline double E_by_quadrature(double k) {
    return quadrature([k](double th) { const double s = std::sin(th); return std::sqrt(1.0 - k * k * s * s); },
                      0.0, std::numbers::pi / 2);
}

inline double Pi_by_quadrature(double n, double k) {
    return quadrature(
        [n, k](double th) {
            const double s2 = std::sin(th) * std::sin(th);
            return 1.0 / ((1.0 - n * s2) * std::sqrt(1.0 - k * k * s2));
        },
        0.0, std::numbers::pi / 2);
}

// (1/2 pi) \oint p dq for the one-body oscillation at energy h in (-2, 0):
// (2/pi) int_0^{q_max} sqrt(2 (h + 1/sqrt(q^2 + 1/4))) dq.
inline double action_by_quadrature(double h) {
    const double q_max = std::sqrt(1.0 / (h * h) - 0.25);
    boost::math::quadrature::tanh_sinh<double> integrator;
    const double integral = integrator.integrate(
        [h](double q) { return std::sqrt(std::max(0.0, 2.0 * (h + 1.0 / std::sqrt(q * q + 0.25)))); }, 0.0,
        q_max);
    return 2.0 / std::numbers::pi * integral;
}

// Five-point central difference.
template <class F>
double derivative(F&& f, double x, double step) {
    return (-f(x + 2 * step) + 8 * f(x + step) - 8 * f(x - step) + f(x - 2 * step)) / (12 * step);
}

// max |D^T J D - J| for the finite-difference Jacobian D of
// (Q3, Q4, P3, P4) -> (q3, q4, p3, p4), with J the canonical matrix in the
// ordering (positions, momenta).
inline double rho_symplecticity_residual(const RegularizedState& r, const dynamics::MassParams& m,
                                         double step = 1e-4) {
    using Vec = std::array<double, 4>;
    auto map = [&](const Vec& z) {
        RegularizedState x;
        x.Q3 = z[0];
        x.Q4 = z[1];
        x.P3 = z[2];
        x.P4 = z[3];
        const auto s = dynamics::rho_map(x, m);
        return Vec{s.q3, s.q4, s.p3, s.p4};
    };
    const Vec z0{r.Q3, r.Q4, r.P3, r.P4};
    std::array<Vec, 4> D{};  // D[i][j] = d out_i / d in_j
    for (int j = 0; j < 4; ++j) {
        auto component = [&](int i) {
            return derivative(
                [&](double v) {
                    Vec z = z0;
                    z[j] = v;
                    return map(z)[i];
                },
                z0[j], step);
        };
        for (int i = 0; i < 4; ++i) D[i][j] = component(i);
    }
    const std::array<Vec, 4> J{Vec{0, 0, 1, 0}, Vec{0, 0, 0, 1}, Vec{-1, 0, 0, 0}, Vec{0, -1, 0, 0}};
    double worst = 0.0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            double sum = 0.0;
            for (int i = 0; i < 4; ++i) {
                for (int k = 0; k < 4; ++k) sum += D[i][a] * J[i][k] * D[k][b];
            }
            worst = std::max(worst, std::abs(sum - J[a][b]));
        }
    }
    return worst;
}

namespace detail {
inline constexpr double kOdeTol = 1e-14;
}

// Flow of a separable Hamiltonian for time t by adaptive Runge-Kutta-Fehlberg 7(8).
inline PhysicalState reference_flow(const dynamics::SeparableHamiltonian& H, const PhysicalState& s,
                                    double t, double tol = detail::kOdeTol) {
    namespace odeint = boost::numeric::odeint;
    using State = std::array<double, 4>;
    State x{s.q3, s.q4, s.p3, s.p4};
    if (t == 0.0) return s;
    auto rhs = [&H](const State& y, State& dy, double) {
        dy = H.vector_field({y[0], y[1], y[2], y[3]});
    };
    auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_fehlberg78<State>());
    odeint::integrate_adaptive(stepper, rhs, x, 0.0, t, t / 64.0);
    return {x[0], x[1], x[2], x[3]};
}

// Single secondary in the decoupled limit.
inline PhaseState reference_flow_single(const PhaseState& s, double t, double tol = detail::kOdeTol) {
    const auto out = reference_flow(dynamics::SeparableHamiltonian::limit(), {s.q, 0.0, s.p, 0.0}, t, tol);
    return {out.q3, out.p3};
}

// Return period of the one-body oscillation at energy h, measured from the
// ODE: start at q = 0 moving upward and find the next upward zero of q.
inline double reference_period(double h) {
    const PhaseState start{0.0, std::sqrt(2.0 * (h + 2.0))};
    const double coarse = 0.05;
    PhaseState prev = start;
    double t = 0.0;
    bool went_negative = false;
    for (int i = 0; i < 1000000; ++i) {
        const PhaseState next = reference_flow_single(prev, coarse);
        if (next.q < 0.0) went_negative = true;
        if (went_negative && prev.q < 0.0 && next.q >= 0.0) {
            const auto root = roots::safeguarded_newton(
                [&](double s) { return reference_flow_single(prev, s).q; },
                [&](double s) { return reference_flow_single(prev, s).p; }, 0.0, coarse, 0.5 * coarse, 0.0);
            return t + root.x;
        }
        prev = next;
        t += coarse;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

} // namespace sitnikov::oracles
