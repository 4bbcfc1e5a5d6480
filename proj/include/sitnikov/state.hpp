#pragma once

namespace sitnikov {

// Phase point of the two secondaries on the vertical axis.
struct PhysicalState {
    double q3 = 0.0;
    double q4 = 0.0;
    double p3 = 0.0;
    double p4 = 0.0;

    friend bool operator==(const PhysicalState&, const PhysicalState&) = default;
};

// Phase point (Q3, Q4, P3, P4) in the regularized chart, with the fictitious
// time tau and the reconstructed physical time t.
struct RegularizedState {
    double Q3 = 0.0;
    double Q4 = 0.0;
    double P3 = 0.0;
    double P4 = 0.0;
    double tau = 0.0;
    double t = 0.0;
};

// Phase point of a single secondary.
struct PhaseState {
    double q = 0.0;
    double p = 0.0;
};

} // namespace sitnikov
