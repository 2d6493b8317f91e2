#pragma once

#include <span>

#include "bregman/config.hpp"
#include "bregman/generator.hpp"

namespace bregman {

// Affine-coordinate chart over the lifted simplex points (a_i, F(a_i)).
// A chart point lambda corresponds to the center q(lambda) = base + D*lambda
// and the plane height psi(lambda) = lifted_base + <lifted_directions, lambda>.
// The smallest dual circumball center is the unique in-chart maximizer of
// g(lambda) = psi(lambda) - F(q(lambda)), and the radius is the maximum value.
struct AffinePlaneChart {
    Eigen::VectorXd base;              // a_0
    Eigen::MatrixXd directions;        // n x k, column i holds a_i - a_0
    double lifted_base = 0.0;          // F(a_0)
    Eigen::VectorXd lifted_directions; // F(a_i) - F(a_0)

    // Throws Degenerate when the directions are not linearly independent
    // (smallest singular value below rank_threshold times the largest).
    static AffinePlaneChart build(const Generator& gen,
                                  std::span<const Eigen::VectorXd> points,
                                  double rank_threshold);

    int chart_dim() const { return static_cast<int>(directions.cols()); }
    Eigen::VectorXd point_at(const Eigen::VectorXd& lambda) const;
    double plane_height_at(const Eigen::VectorXd& lambda) const;

    double objective(const Generator& gen, const Eigen::VectorXd& lambda) const;
    // dg/dlambda_i = (F(a_i) - F(a_0)) - <grad F(q), a_i - a_0>
    Eigen::VectorXd objective_gradient(const Generator& gen,
                                       const Eigen::VectorXd& lambda) const;
    // Negated chart Hessian D^T W D, positive definite for independent columns.
    Eigen::MatrixXd objective_hessian_neg(const Generator& gen,
                                          const Eigen::VectorXd& lambda) const;
};

struct CircumballResult {
    DualBall ball;
    Eigen::VectorXd barycentric; // chart coordinates of the center
    int iterations = 0;
    bool converged = false;
    long function_evals = 0;
};

// Smallest dual circumball of an affinely independent simplex: damped Newton
// on the chart with a feasibility-then-Armijo backtracking line search,
// falling back to gradient ascent when the Newton system is ill-conditioned.
// All simplex points end up on the returned ball boundary.
CircumballResult smallest_circumball(const Generator& gen,
                                     std::span<const Eigen::VectorXd> points,
                                     const SolverConfig& cfg = {});

// Brute-force smallest including dual ball: enumerate the nonempty faces,
// keep circumballs that include every vertex (membership_tol), return the
// smallest. Exponential in the vertex count; testing use only (<= 12 vertices).
DualBall smallest_including_ball_oracle(const Generator& gen,
                                        std::span<const Eigen::VectorXd> points,
                                        const SolverConfig& cfg = {},
                                        double membership_tol = 1e-9);

bool ball_contains(const Generator& gen, const DualBall& ball,
                   const Eigen::VectorXd& x, double tol = 1e-12);

} // namespace bregman
