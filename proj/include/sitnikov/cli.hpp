#pragma once

// Command implementations behind the `sitnikov` executable. Each command
// validates its whole configuration up front, then builds an io::Document;
// argument parsing and file handling live in tools/sitnikov.cpp.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "sitnikov/closedform.hpp"
#include "sitnikov/dynamics.hpp"
#include "sitnikov/error.hpp"
#include "sitnikov/io.hpp"
#include "sitnikov/resonance.hpp"
#include "sitnikov/verify.hpp"

namespace sitnikov::cli {

enum ExitCode : int { kSuccess = 0, kArgumentError = 2, kVerifyFailure = 3, kConvergenceFailure = 4 };

enum class OrbitMode { ClosedForm, Integrate, Bounce };

struct OrbitConfig {
    double h3 = -1.0;
    double h4 = -1.0;
    double nu0_3 = 0.0;
    double nu0_4 = 0.0;
    double t_end = 10.0;
    double dt = 0.01;
    OrbitMode mode = OrbitMode::ClosedForm;
    // Largest integration step in integrate/bounce modes; output rows are
    // still written every dt.
    double max_step = 0.01;
};

struct PeriodTableConfig {
    double h_min = -1.99;
    double h_max = -0.01;
    int steps = 100;
};

struct CatalogConfig {
    std::int64_t p_max = 5;
};

struct InvertConfig {
    double period = 2.0 * std::numbers::pi;
};

struct VerifyConfig {
    verify::Suite suite = verify::Suite::All;
    verify::VerifyOptions options;
};

inline const char* mode_name(OrbitMode m) {
    switch (m) {
    case OrbitMode::ClosedForm: return "closed-form";
    case OrbitMode::Integrate: return "integrate";
    case OrbitMode::Bounce: return "bounce";
    }
    return "?";
}

inline const char* suite_name(verify::Suite s) {
    switch (s) {
    case verify::Suite::Elliptic: return "elliptic";
    case verify::Suite::Closedform: return "closedform";
    case verify::Suite::Dynamics: return "dynamics";
    case verify::Suite::Resonance: return "resonance";
    case verify::Suite::All: return "all";
    }
    return "?";
}

namespace detail {

inline void require_energy(const char* flag, double h) {
    if (!(h > -2.0 && h < 0.0)) {
        throw DomainError(std::string(flag) + " must lie in (-2, 0), got " + io::format_real(h));
    }
}

inline void require_finite(const char* flag, double x) {
    if (!std::isfinite(x)) throw DomainError(std::string(flag) + " must be finite");
}

} // namespace detail

inline void validate(const OrbitConfig& c) {
    detail::require_energy("--h3", c.h3);
    detail::require_energy("--h4", c.h4);
    detail::require_finite("--nu0-3", c.nu0_3);
    detail::require_finite("--nu0-4", c.nu0_4);
    if (!(c.t_end >= 0.0) || !std::isfinite(c.t_end)) throw DomainError("--t-end must be finite and >= 0");
    if (!(c.dt > 0.0) || !std::isfinite(c.dt)) throw DomainError("--dt must be finite and > 0");
    if (c.t_end / c.dt > 5e7) throw DomainError("--t-end / --dt exceeds 5e7 output rows");
    if (!(c.max_step > 0.0) || !std::isfinite(c.max_step)) throw DomainError("integration step must be > 0");
}

inline void validate(const PeriodTableConfig& c) {
    detail::require_energy("--h-min", c.h_min);
    detail::require_energy("--h-max", c.h_max);
    if (!(c.h_min < c.h_max)) throw DomainError("--h-min must be smaller than --h-max");
    if (c.steps < 2) throw DomainError("--steps must be >= 2");
}

inline void validate(const CatalogConfig& c) {
    if (c.p_max < 1) throw DomainError("--p-max must be >= 1");
    if (c.p_max > 200) throw DomainError("--p-max above 200 is not supported");
}

inline void validate(const InvertConfig& c) {
    if (!(c.period > resonance::kMinPeriod) || !std::isfinite(c.period)) {
        throw DomainError("--period must be finite and exceed pi/sqrt(2)");
    }
}

// ---------------------------------------------------------------------------

namespace detail {

inline io::Table orbit_table() { return {"rows", {"t", "q3", "p3", "q4", "p4", "H"}, {}}; }

inline void add_state_row(io::Table& t, double time, const PhysicalState& s) {
    t.add_row({time, s.q3, s.p3, s.q4, s.p4, dynamics::hamiltonian_limit(s)});
}

// Equal substeps of at most max_step covering one output interval.
inline double substep(double span, double max_step) {
    return span / std::ceil(span / max_step - 1e-9);
}

} // namespace detail

inline io::Document run_orbit(const OrbitConfig& c) {
    validate(c);
    io::Document doc;
    doc.meta = {{"command", std::string("orbit")}, {"mode", std::string(mode_name(c.mode))},
                {"h3", c.h3},   {"h4", c.h4}, {"nu0_3", c.nu0_3}, {"nu0_4", c.nu0_4},
                {"t_end", c.t_end}, {"dt", c.dt}};
    doc.rows = detail::orbit_table();

    const auto o3 = closedform::SingleOrbit::from_energy(c.h3, c.nu0_3);
    const auto o4 = closedform::SingleOrbit::from_energy(c.h4, c.nu0_4);
    const PhysicalState s0 = closedform::eval_double_state(0.0, o3, o4);

    switch (c.mode) {
    case OrbitMode::ClosedForm: {
        detail::add_state_row(doc.rows, 0.0, s0);
        if (c.t_end > 0.0) {
            for (double t : dynamics::detail::step_schedule(c.t_end, c.dt)) {
                detail::add_state_row(doc.rows, t, closedform::eval_double_state(t, o3, o4));
            }
        }
        break;
    }
    case OrbitMode::Integrate: {
        const auto H = dynamics::SeparableHamiltonian::limit();
        PhysicalState s = s0;
        double t = 0.0;
        detail::add_state_row(doc.rows, t, s);
        if (c.t_end > 0.0) {
            for (double next : dynamics::detail::step_schedule(c.t_end, c.dt)) {
                const double span = next - t;
                s = dynamics::integrate_physical(s, H, span, detail::substep(span, c.max_step)).states.back();
                t = next;
                detail::add_state_row(doc.rows, t, s);
            }
        }
        break;
    }
    case OrbitMode::Bounce: {
        io::Table events{"bounces", {"t_bounce", "q_at_bounce"}, {}};
        PhysicalState s = s0;
        double t = 0.0;
        detail::add_state_row(doc.rows, t, s);
        if (c.t_end > 0.0) {
            for (double next : dynamics::detail::step_schedule(c.t_end, c.dt)) {
                const double span = next - t;
                const auto bt = dynamics::extend_with_bounce(s, span, detail::substep(span, c.max_step));
                for (const auto& ev : bt.events) events.add_row({t + ev.t, ev.q});
                s = bt.trajectory.states.back();
                t = next;
                detail::add_state_row(doc.rows, t, s);
            }
        }
        doc.extra.push_back(std::move(events));
        break;
    }
    }
    return doc;
}

inline io::Document run_period_table(const PeriodTableConfig& c) {
    validate(c);
    io::Document doc;
    doc.meta = {{"command", std::string("period-table")}, {"h_min", c.h_min}, {"h_max", c.h_max},
                {"steps", static_cast<std::int64_t>(c.steps)}};
    doc.rows = {"rows", {"h", "k", "T", "J", "Omega"}, {}};
    for (int i = 0; i < c.steps; ++i) {
        const double h = i + 1 == c.steps ? c.h_max : c.h_min + (c.h_max - c.h_min) * i / (c.steps - 1);
        const auto em = closedform::modulus_from_energy(h);
        doc.rows.add_row({h, em.k(), closedform::period_T(em), closedform::action_J(em), closedform::omega(em)});
    }
    return doc;
}

inline io::Document run_catalog(const CatalogConfig& c) {
    validate(c);
    const auto cat = resonance::build_catalog(c.p_max);
    io::Document doc;
    doc.meta = {{"command", std::string("catalog")}, {"p_max", c.p_max},
                {"entries", static_cast<std::int64_t>(cat.entries.size())},
                {"surfaces", static_cast<std::int64_t>(cat.surfaces.size())}};
    doc.rows = {"rows", {"p", "q", "n", "h1", "h2", "h_star", "tau"}, {}};
    for (const auto& e : cat.entries) {
        doc.rows.add_row({e.triplet.p, e.triplet.q, e.triplet.n, e.h1, e.h2, e.h_star, e.tau});
    }
    io::Table summary{"summary", {"p", "count", "bound", "below_bound"}, {}};
    std::vector<std::int64_t> counts(static_cast<std::size_t>(c.p_max) + 1, 0);
    for (const auto& e : cat.entries) ++counts[static_cast<std::size_t>(e.triplet.p)];
    for (std::int64_t p = 1; p <= c.p_max; ++p) {
        const auto bound = resonance::count_bound(p);
        const auto count = counts[static_cast<std::size_t>(p)];
        summary.add_row({p, count, bound, count < bound});
    }
    doc.extra.push_back(std::move(summary));
    return doc;
}

inline io::Document run_invert(const InvertConfig& c) {
    validate(c);
    const double h = resonance::invert_period(c.period);
    const auto em = closedform::modulus_from_energy(h);
    io::Document doc;
    doc.meta = {{"command", std::string("invert")}, {"period", c.period}};
    doc.rows = {"rows", {"T", "h", "k", "residual"}, {}};
    doc.rows.add_row({c.period, h, em.k(), closedform::period_T(em) - c.period});
    return doc;
}

struct VerifyOutcome {
    io::Document document;
    bool passed;
};

inline VerifyOutcome run_verify(const VerifyConfig& c) {
    const auto results = verify::run(c.suite, c.options);
    VerifyOutcome out{{}, verify::all_passed(results)};
    auto& doc = out.document;
    doc.meta = {{"command", std::string("verify")}, {"suite", std::string(suite_name(c.suite))},
                {"passed", out.passed}};
    if (c.options.period_scale != 1.0) doc.meta.emplace_back("period_scale", c.options.period_scale);
    doc.rows = {"rows", {"suite", "check", "measured", "tolerance", "passed", "informational", "detail"}, {}};
    for (const auto& r : results) {
        doc.rows.add_row({r.suite, r.name, r.measured, r.tolerance, r.passed, r.informational, r.detail});
    }
    return out;
}

} // namespace sitnikov::cli
