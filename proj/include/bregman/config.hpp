#pragma once

#include <limits>

namespace bregman {

// Thresholds of the circumball solver. Defaults are the project-wide numeric
// contract; tests pin their tolerances against these values.
struct SolverConfig {
    // Chart-gradient infinity-norm below which the maximizer is accepted.
    double gradient_tolerance = 1e-10;
    // Hard cap; exceeding it is an error, not a silent acceptance.
    int max_iterations = 200;
    double armijo_slope = 1e-4;
    double backtrack_factor = 0.5;
    // Pivot-ratio estimate above which the Newton system is considered
    // ill-conditioned and the solver falls back to gradient ascent.
    double hessian_condition_limit = 1e12;
    // Rank threshold for affine-dependence detection, relative to the
    // largest singular value of the direction matrix.
    double rank_threshold = 1e-10;
    // Strict-interior margin the line search enforces on the center.
    double feasibility_margin = 1e-12;
};

// Parameters of a filtration build.
struct BuildConfig {
    int max_dim = 2;
    double cutoff = std::numeric_limits<double>::infinity();
    // Distance from a circumball boundary below which a point of the cloud
    // triggers a general-position error.
    double general_position_tolerance = 1e-10;
    // Circumball solves within one dimension level run in parallel when > 1.
    // Results are independent of this setting.
    int threads = 1;
    SolverConfig solver;
};

struct PersistenceConfig {
    // Twist/clearing optimization; identical output either way.
    bool twist = true;
};

} // namespace bregman
