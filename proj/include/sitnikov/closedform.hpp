#pragma once

// Analytic solution of one secondary in the decoupled limit
//   h = p^2/2 - 1/sqrt(q^2 + 1/4),   h in (-2, 0),
// parameterized by the elliptic modulus k = sqrt(2 + h)/2 and the Jacobi
// argument nu:
//   q = k sn dn / (1 - 2k^2 sn^2),   p = 2 sqrt(2) k cn,
//   dt/dnu = sqrt(2) / (4 (1 - 2k^2 sn^2)^2).

#include <cmath>
#include <numbers>
#include <string>

#include "sitnikov/elliptic.hpp"
#include "sitnikov/error.hpp"
#include "sitnikov/roots.hpp"
#include "sitnikov/state.hpp"

namespace sitnikov::closedform {

// Partial energy h paired with its modulus k = sqrt(2 + h)/2.
class EnergyModulus {
public:
    static EnergyModulus from_energy(double h) {
        if (!(h >= -2.0 && h < 0.0)) {
            throw DomainError("partial energy h must lie in [-2, 0), got " + std::to_string(h));
        }
        return EnergyModulus(h);
    }

    double h() const { return h_; }
    double k() const { return k_; }
    double m() const { return k_ * k_; }
    // 1 - 2k^2, computed as -h/2 so it keeps full relative precision near escape.
    double one_minus_2m() const { return -0.5 * h_; }

private:
    explicit EnergyModulus(double h) : h_(h), k_(std::sqrt(2.0 + h) / 2.0) {}

    double h_;
    double k_;
};

inline EnergyModulus modulus_from_energy(double h) { return EnergyModulus::from_energy(h); }

namespace detail {

struct CompleteIntegrals {
    double K;
    double E;
    double Pi;  // Pi(2k^2, k)
};

inline CompleteIntegrals complete_integrals(const EnergyModulus& em) {
    const elliptic::Modulus mod(em.k());
    return {elliptic::complete_K(mod), elliptic::complete_E(mod),
            elliptic::complete_Pi_complement(em.one_minus_2m(), mod)};
}

inline double period_from(const EnergyModulus& em, const CompleteIntegrals& ci) {
    return std::numbers::sqrt2 / (2.0 * em.one_minus_2m()) * (2.0 * ci.E - ci.K + ci.Pi);
}

inline void require_oscillatory(const EnergyModulus& em, const char* fn) {
    if (!(em.h() > -2.0)) {
        throw DomainError(std::string(fn) + ": h = -2 is the rest equilibrium, need h in (-2, 0)");
    }
}

} // namespace detail

// Return period T(h) = sqrt(2)/(2(1-2k^2)) (2E - K + Pi(2k^2, k)).
// T -> pi/sqrt(2) as h -> -2 and T -> infinity as h -> 0.
inline double period_T(const EnergyModulus& em) {
    detail::require_oscillatory(em, "period_T");
    return detail::period_from(em, detail::complete_integrals(em));
}

// Omega = T / (2 pi); the angle variable advances by t / Omega.
inline double omega(const EnergyModulus& em) { return period_T(em) / (2.0 * std::numbers::pi); }

// Action (1/2pi) \oint p dq = sqrt(2)/pi (K + Pi(2k^2, k) - 2E); zero at h = -2.
inline double action_J(const EnergyModulus& em) {
    const auto ci = detail::complete_integrals(em);
    return std::numbers::sqrt2 / std::numbers::pi * (ci.K + ci.Pi - 2.0 * ci.E);
}

struct ActionAngle {
    double J;
    double Omega;
    double theta0;
};

// One oscillatory orbit fixed by its energy and the Jacobi phase nu0 at t = 0.
// Immutable after construction; caches the complete integrals.
class SingleOrbit {
public:
    SingleOrbit(EnergyModulus em, double nu0) : em_(em), nu0_(nu0) {
        detail::require_oscillatory(em_, "SingleOrbit");
        if (!std::isfinite(nu0)) {
            throw DomainError("SingleOrbit: nu0 must be finite");
        }
        ci_ = detail::complete_integrals(em_);
        period_ = detail::period_from(em_, ci_);
        prefactor_ = std::numbers::sqrt2 / (8.0 * em_.one_minus_2m());
        C_ = -antiderivative(nu0_);
    }

    static SingleOrbit from_energy(double h, double nu0 = 0.0) {
        return SingleOrbit(EnergyModulus::from_energy(h), nu0);
    }

    const EnergyModulus& energy() const { return em_; }
    double nu0() const { return nu0_; }
    // Integration constant fixing time_of_nu(nu0) = 0.
    double C() const { return C_; }
    double K() const { return ci_.K; }
    double E() const { return ci_.E; }
    double Pi() const { return ci_.Pi; }
    double period() const { return period_; }

    // 1 - 2k^2 sn^2, in the form c^2 + s^2 (1 - 2k^2) that stays accurate as 2k^2 -> 1.
    double denominator(double sn, double cn) const {
        return cn * cn + sn * sn * em_.one_minus_2m();
    }

    // dt/dnu.
    double time_derivative(double nu) const {
        const auto t = elliptic::jacobi(nu, em_.k());
        const double d = denominator(t.sn, t.cn);
        return std::numbers::sqrt2 / (4.0 * d * d);
    }

    // Antiderivative of dt/dnu vanishing at nu = 0, quasi-periodic with
    // increment T per 4K:
    //   F(nu) = sqrt(2)/(8(1-2k^2)) [2 eps(nu) - nu + Pi(2k^2; nu) - 4k^2 sn cn dn / (1 - 2k^2 sn^2)].
    double antiderivative(double nu) const {
        const double quarter = 4.0 * ci_.K;
        const double j = std::nearbyint(nu / quarter);
        const double r = nu - j * quarter;
        return reduced_antiderivative(r) + j * period_;
    }

    // F restricted to one argument period around zero; valid (and used) for
    // |r| slightly beyond 2K as well.
    double reduced_antiderivative(double r) const {
        const elliptic::Modulus mod(em_.k());
        const auto t = elliptic::jacobi(r, mod);
        const double n = 2.0 * em_.m();
        const double eps = elliptic::jacobi_epsilon(r, mod);
        const double pi3 = elliptic::incomplete_Pi(n, r, mod);
        const double d = denominator(t.sn, t.cn);
        return prefactor_ * (2.0 * eps - r + pi3 - 2.0 * n * t.sn * t.cn * t.dn / d);
    }

    PhaseState state_at_nu(double nu) const {
        const auto t = elliptic::jacobi(nu, em_.k());
        const double k = em_.k();
        return {k * t.sn * t.dn / denominator(t.sn, t.cn), 2.0 * std::numbers::sqrt2 * k * t.cn};
    }

private:
    EnergyModulus em_;
    double nu0_;
    detail::CompleteIntegrals ci_{};
    double period_ = 0.0;
    double prefactor_ = 0.0;
    double C_ = 0.0;
};

// Physical time at Jacobi argument nu; strictly increasing, zero at nu0.
inline double time_of_nu(double nu, const SingleOrbit& orbit) {
    return orbit.antiderivative(nu) + orbit.C();
}

// Inverse of time_of_nu: t is reduced modulo T, then the reduced equation is
// solved on one argument period by safeguarded Newton.
inline double nu_of_time(double t, const SingleOrbit& orbit) {
    if (!std::isfinite(t)) {
        throw DomainError("nu_of_time: t must be finite");
    }
    const double T = orbit.period();
    const double y = t - orbit.C();
    const double j = std::nearbyint(y / T);
    const double target = y - j * T;
    const double half = 2.0 * orbit.K();
    const double lo = -1.01 * half;
    const double hi = 1.01 * half;
    const auto res = roots::safeguarded_newton(
        [&](double r) { return orbit.reduced_antiderivative(r) - target; },
        [&](double r) { return orbit.time_derivative(r); }, lo, hi, target / T * 2.0 * half, 0.0);
    const double nu = res.x + j * 2.0 * half;
    const double residual = std::abs(time_of_nu(nu, orbit) - t);
    if (!(residual <= 1e-12 * std::max(1.0, std::abs(t)))) {
        throw ConvergenceError("nu_of_time: residual " + std::to_string(residual) +
                               " exceeds tolerance at t = " + std::to_string(t));
    }
    return nu;
}

inline PhaseState eval_state(double t, const SingleOrbit& orbit) {
    return orbit.state_at_nu(nu_of_time(t, orbit));
}

// Both secondaries evolve independently in the decoupled limit.
inline PhysicalState eval_double_state(double t, const SingleOrbit& orbit3,
                                       const SingleOrbit& orbit4) {
    const auto s3 = eval_state(t, orbit3);
    const auto s4 = eval_state(t, orbit4);
    return {s3.q, s4.q, s3.p, s4.p};
}

// Partial energy p^2/2 - 1/sqrt(q^2 + 1/4) of one secondary.
inline double partial_energy(double q, double p) {
    return 0.5 * p * p - 1.0 / std::sqrt(q * q + 0.25);
}

// Action-angle data; the angle is zero where nu = 0.
inline ActionAngle action_angle(const SingleOrbit& orbit) {
    const double Omega = orbit.period() / (2.0 * std::numbers::pi);
    return {action_J(orbit.energy()), Omega, -time_of_nu(0.0, orbit) / Omega};
}

inline double angle_at(double t, const SingleOrbit& orbit) {
    const auto aa = action_angle(orbit);
    return t / aa.Omega + aa.theta0;
}

} // namespace sitnikov::closedform
