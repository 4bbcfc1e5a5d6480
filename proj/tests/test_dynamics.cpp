// Hamiltonians, the regularizing map, the regularized flow, the symplectic
// splitting integrator and the bounce extension.

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "sitnikov/closedform.hpp"
#include "sitnikov/dynamics.hpp"
#include "sitnikov/oracles.hpp"

using namespace sitnikov;
using namespace sitnikov::dynamics;

namespace {

RegularizedState make_reg(double Q3, double Q4, double P3, double P4) {
    RegularizedState r;
    r.Q3 = Q3;
    r.Q4 = Q4;
    r.P3 = P3;
    r.P4 = P4;
    return r;
}

double max_diff(const PhysicalState& a, const PhysicalState& b) {
    return std::max({std::abs(a.q3 - b.q3), std::abs(a.q4 - b.q4), std::abs(a.p3 - b.p3), std::abs(a.p4 - b.p4)});
}

} // namespace

TEST(MassParams, Construction) {
    const auto eq = MassParams::equal(0.2);
    EXPECT_DOUBLE_EQ(eq.alpha(), 0.5);
    EXPECT_DOUBLE_EQ(eq.beta(), 0.5);
    EXPECT_DOUBLE_EQ(eq.c(), 1.0);
    const auto m = MassParams::from_ratio(0.25, 0.1);
    EXPECT_DOUBLE_EQ(m.alpha(), 0.8);
    EXPECT_NEAR(m.beta(), 0.2, 1e-16);
    EXPECT_NEAR(MassParams::from_alpha(0.8, 0.1).c(), 0.25, 1e-15);
    EXPECT_THROW(MassParams::from_ratio(0.0, 0.1), DomainError);
    EXPECT_THROW(MassParams::from_ratio(1.5, 0.1), DomainError);
    EXPECT_THROW(MassParams::from_alpha(0.4, 0.1), DomainError);
    EXPECT_THROW(MassParams::from_alpha(1.0, 0.1), DomainError);
    EXPECT_THROW(MassParams::equal(-0.1), DomainError);
}

TEST(Hamiltonian, EqualMassFullIsRescaledLimit) {
    // alpha = beta = 1/2, mu = 0: H_full(q, p) = H_limit(q, 2p) / 2.
    const auto m = MassParams::equal(0.0);
    const PhysicalState s{0.3, -0.7, 0.4, -0.9};
    const PhysicalState doubled{s.q3, s.q4, 2 * s.p3, 2 * s.p4};
    EXPECT_NEAR(hamiltonian_full(s, m), 0.5 * hamiltonian_limit(doubled), 1e-15);
    EXPECT_NEAR(hamiltonian_limit(s), closedform::partial_energy(s.q3, s.p3) + closedform::partial_energy(s.q4, s.p4),
                1e-15);
}

TEST(Hamiltonian, GradientMatchesFiniteDifferences) {
    const auto m = MassParams::from_alpha(0.7, 0.2);
    const PhysicalState s{0.8, -0.4, 0.3, -0.6};
    const auto f = vector_field(s, m);
    auto H = [&](double dq3, double dq4, double dp3, double dp4) {
        return hamiltonian_full({s.q3 + dq3, s.q4 + dq4, s.p3 + dp3, s.p4 + dp4}, m);
    };
    EXPECT_NEAR(f[0], oracles::derivative([&](double x) { return H(0, 0, x, 0); }, 0.0, 1e-4), 1e-10);
    EXPECT_NEAR(f[1], oracles::derivative([&](double x) { return H(0, 0, 0, x); }, 0.0, 1e-4), 1e-10);
    EXPECT_NEAR(f[2], -oracles::derivative([&](double x) { return H(x, 0, 0, 0); }, 0.0, 1e-4), 1e-10);
    EXPECT_NEAR(f[3], -oracles::derivative([&](double x) { return H(0, x, 0, 0); }, 0.0, 1e-4), 1e-10);
}

TEST(Hamiltonian, CollisionIsSingularWhenCoupled) {
    const auto m = MassParams::equal(0.1);
    EXPECT_THROW(vector_field({0.2, 0.2, 0.0, 0.0}, m), SingularityError);
    EXPECT_THROW(vector_field({0.1, 0.2, 0.0, 0.0}, m), SingularityError);
    // Uncoupled limit has no collision singularity.
    EXPECT_NO_THROW(limit_vector_field({0.2, 0.2, 0.0, 0.0}));
}

TEST(Rho, PositionsAndMomentaFormulas) {
    const auto m = MassParams::from_alpha(0.6, 0.0);
    const auto s = rho_map(make_reg(1.2, 0.1, 0.3, -0.5), m);
    EXPECT_NEAR(s.q3 - s.q4, 0.5 * 1.2 * 1.2, 1e-15);
    EXPECT_NEAR(0.6 * s.q3 + 0.4 * s.q4, 0.1, 1e-15);  // centre of mass
    EXPECT_NEAR(s.p3 + s.p4, -0.5, 1e-15);
}

TEST(Rho, RoundTripAndBranch) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const auto m = MassParams::from_alpha(0.75, 0.0);
    for (int i = 0; i < 500; ++i) {
        const auto r = make_reg(1.0 + 0.95 * u(rng), u(rng), u(rng), u(rng));
        const auto back = rho_inverse(rho_map(r, m), m);
        EXPECT_NEAR(back.Q3, r.Q3, 1e-13);
        EXPECT_NEAR(back.Q4, r.Q4, 1e-13);
        EXPECT_NEAR(back.P3, r.P3, 1e-13);
        EXPECT_NEAR(back.P4, r.P4, 1e-13);
    }
    // (Q3, P3) and (-Q3, -P3) describe the same physical state.
    const auto a = rho_map(make_reg(0.8, 0.2, 0.3, 0.4), m);
    const auto b = rho_map(make_reg(-0.8, 0.2, -0.3, 0.4), m);
    EXPECT_LT(max_diff(a, b), 1e-15);
    EXPECT_THROW(rho_inverse({-0.1, 0.1, 0.0, 0.0}, m), DomainError);
}

TEST(Rho, IsSymplectic) {
    for (double alpha : {0.5, 0.6, 0.9}) {
        const auto m = MassParams::from_alpha(alpha, 0.0);
        EXPECT_LT(oracles::rho_symplecticity_residual(make_reg(0.9, -0.3, 0.4, 0.7), m), 1e-10) << alpha;
    }
}

TEST(Regularized, LIsScaledEnergyCondition) {
    const auto m = MassParams::from_alpha(0.65, 0.15);
    const auto r = make_reg(0.9, 0.2, -0.3, 0.6);
    const double h = -1.1;
    const double direct = m.alpha() * m.beta() * r.Q3 * r.Q3 * (hamiltonian_full(rho_map(r, m), m) - h);
    EXPECT_NEAR(regularized_L(r, m, h), direct, 1e-14);
    // Regular on Q3 = 0, where only the coupling and kinetic terms survive.
    const auto c = make_reg(0.0, 0.2, 0.5, 0.6);
    EXPECT_NEAR(regularized_L(c, m, h), 0.125 - 2.0 * m.alpha() * m.beta() * m.beta() * m.mu(), 1e-15);
}

TEST(Regularized, FieldIsHamiltonianGradientOfL) {
    const auto m = MassParams::from_alpha(0.55, 0.1);
    const double h = -0.8;
    for (const auto& r : {make_reg(0.7, 0.1, 0.2, -0.4), make_reg(-1.3, -0.5, 0.9, 0.3), make_reg(0.0, 0.4, 0.6, 1.0)}) {
        const auto f = regularized_field(r, m, h);
        auto L = [&](int idx, double v) {
            RegularizedState x = r;
            double* fields[] = {&x.Q3, &x.Q4, &x.P3, &x.P4};
            *fields[idx] = v;
            return regularized_L(x, m, h);
        };
        EXPECT_NEAR(f[0], oracles::derivative([&](double v) { return L(2, v); }, r.P3, 1e-3), 1e-10);
        EXPECT_NEAR(f[1], oracles::derivative([&](double v) { return L(3, v); }, r.P4, 1e-3), 1e-10);
        EXPECT_NEAR(f[2], -oracles::derivative([&](double v) { return L(0, v); }, r.Q3, 1e-3), 1e-10);
        EXPECT_NEAR(f[3], -oracles::derivative([&](double v) { return L(1, v); }, r.Q4, 1e-3), 1e-10);
        EXPECT_NEAR(f[4], m.alpha() * m.beta() * r.Q3 * r.Q3, 1e-16);
    }
}

TEST(Regularized, PassesThroughCollisionOnLevelSet) {
    const auto m = MassParams::from_alpha(0.6, 0.1);
    const auto [r0, h] = regularize({0.5, -0.3, -0.2, 0.1}, m);
    EXPECT_NEAR(regularized_L(r0, m, h), 0.0, 1e-15);
    const auto traj = integrate_regularized(r0, m, h, 12.0);
    EXPECT_LT(traj.max_abs_L, 1e-8);
    bool crossed = false;
    for (std::size_t i = 1; i < traj.samples.size(); ++i) {
        crossed |= (traj.samples[i - 1].Q3 > 0) != (traj.samples[i].Q3 > 0);
        EXPECT_GT(traj.samples[i].t, traj.samples[i - 1].t);  // physical time keeps advancing
    }
    EXPECT_TRUE(crossed);
    EXPECT_EQ(traj.samples.size(), 1001u);
}

TEST(Regularized, RejectsOffLevelStart) {
    const auto m = MassParams::from_alpha(0.6, 0.1);
    const auto [r0, h] = regularize({0.5, -0.3, -0.2, 0.1}, m);
    EXPECT_THROW(integrate_regularized(r0, m, h + 0.1, 1.0), LevelSetError);
    EXPECT_THROW(integrate_regularized(r0, m, h, -1.0), DomainError);
}

TEST(Splitting, SixthOrderConvergence) {
    const auto H = SeparableHamiltonian::limit();
    const PhysicalState s0{0.1, -0.2, 1.0, 0.7};
    const PhysicalState ref = oracles::reference_flow(H, s0, 2.0);
    const double e1 = max_diff(integrate_physical(s0, H, 2.0, 0.1).states.back(), ref);
    const double e2 = max_diff(integrate_physical(s0, H, 2.0, 0.05).states.back(), ref);
    const double order = std::log2(e1 / e2);
    EXPECT_GT(order, 5.5);
    EXPECT_LT(order, 6.8);
}

TEST(Splitting, SamplesOnRequestedGrid) {
    const auto traj = integrate_physical({0.1, -0.1, 0.0, 0.0}, SeparableHamiltonian::limit(), 1.05, 0.1);
    ASSERT_EQ(traj.t.size(), 12u);
    EXPECT_DOUBLE_EQ(traj.t[10], 1.0);
    EXPECT_DOUBLE_EQ(traj.t.back(), 1.05);
    EXPECT_THROW(integrate_physical({0.1, -0.1, 0.0, 0.0}, SeparableHamiltonian::limit(), 1.0, 0.0), DomainError);
}

TEST(Splitting, CoupledFlowStopsBeforeCollision) {
    const auto m = MassParams::equal(0.3);
    // Bodies fall into each other.
    EXPECT_THROW(integrate_physical({0.05, -0.05, -1.0, 1.0}, m, 5.0, 1e-3), CollisionApproachError);
    EXPECT_THROW(integrate_physical({0.0, 0.0, 0.0, 0.0}, m, 1.0, 1e-3), CollisionApproachError);
}

TEST(Splitting, FullFlowConservesEnergy) {
    const auto m = MassParams::from_alpha(0.6, 0.05);
    const PhysicalState s0{0.9, -0.5, 0.1, 0.2};
    // Short span on which the bodies stay well apart (q3 - q4 > 0.9).
    const auto traj = integrate_physical(s0, m, 0.5, 1e-3);
    const double h0 = hamiltonian_full(s0, m);
    for (const auto& s : traj.states) EXPECT_NEAR(hamiltonian_full(s, m), h0, 1e-12);
}

TEST(Bounce, ExchangesMomentaAtContact) {
    const PhysicalState s0{0.3, -0.1, 0.9, -1.2};
    const auto bt = extend_with_bounce(s0, 20.0, 1e-3);
    ASSERT_FALSE(bt.events.empty());
    for (const auto& ev : bt.events) {
        EXPECT_EQ(ev.before.q3, ev.before.q4);
        EXPECT_EQ(ev.after.q3, ev.q);
        EXPECT_EQ(ev.after.p3, ev.before.p4);
        EXPECT_EQ(ev.after.p4, ev.before.p3);
        EXPECT_EQ(hamiltonian_limit(ev.after), hamiltonian_limit(ev.before));
    }
    // The ordering q3 >= q4 is preserved at every sample.
    for (const auto& s : bt.trajectory.states) EXPECT_GE(s.q3 - s.q4, -1e-12);
    const double H0 = hamiltonian_limit(s0);
    for (const auto& s : bt.trajectory.states) EXPECT_NEAR(hamiltonian_limit(s), H0, 1e-9);
}

TEST(Bounce, NoEventsWithoutContact) {
    // Body 4 released far below takes much longer than t_end to reach body 3,
    // which oscillates near the origin.
    const auto bt = extend_with_bounce({0.3, -10.0, 0.0, 0.0}, 5.0, 1e-2);
    EXPECT_TRUE(bt.events.empty());
    EXPECT_EQ(bt.trajectory.states.size(), 501u);
}
