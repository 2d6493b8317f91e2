#include "bregman/circumball.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "bregman/errors.hpp"

namespace bregman {

AffinePlaneChart AffinePlaneChart::build(const Generator& gen,
                                         std::span<const Eigen::VectorXd> points,
                                         double rank_threshold) {
    const int n = gen.dimension();
    const int k = static_cast<int>(points.size()) - 1;
    AffinePlaneChart chart;
    chart.base = points[0];
    chart.lifted_base = gen.value(points[0]);
    chart.directions.resize(n, k);
    chart.lifted_directions.resize(k);
    for (int i = 0; i < k; ++i) {
        chart.directions.col(i) = points[i + 1] - points[0];
        chart.lifted_directions[i] = gen.value(points[i + 1]) - chart.lifted_base;
    }
    if (k > n) throw Degenerate("more than n+1 simplex vertices are affinely dependent");
    if (k > 0) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(chart.directions);
        const auto& sv = svd.singularValues();
        if (sv[0] <= 0.0 || sv[k - 1] < rank_threshold * sv[0])
            throw Degenerate("simplex vertices are affinely dependent");
    }
    return chart;
}

Eigen::VectorXd AffinePlaneChart::point_at(const Eigen::VectorXd& lambda) const {
    return base + directions * lambda;
}

double AffinePlaneChart::plane_height_at(const Eigen::VectorXd& lambda) const {
    return lifted_base + lifted_directions.dot(lambda);
}

double AffinePlaneChart::objective(const Generator& gen,
                                   const Eigen::VectorXd& lambda) const {
    return plane_height_at(lambda) - gen.value(point_at(lambda));
}

Eigen::VectorXd AffinePlaneChart::objective_gradient(const Generator& gen,
                                                     const Eigen::VectorXd& lambda) const {
    return lifted_directions - directions.transpose() * gen.gradient(point_at(lambda));
}

Eigen::MatrixXd AffinePlaneChart::objective_hessian_neg(const Generator& gen,
                                                        const Eigen::VectorXd& lambda) const {
    const Eigen::VectorXd w = gen.hessian_diagonal(point_at(lambda));
    return directions.transpose() * w.asDiagonal() * directions;
}

namespace {

bool strictly_inside(const Generator& gen, const Eigen::VectorXd& q, double margin) {
    for (int i = 0; i < q.size(); ++i) {
        if (!std::isfinite(q[i])) return false;
        switch (gen.domain().constraint) {
        case DomainConstraint::All: break;
        case DomainConstraint::PositiveOrthant:
            if (!(q[i] > margin)) return false;
            break;
        case DomainConstraint::NegativeOrthant:
            if (!(q[i] < -margin)) return false;
            break;
        }
    }
    return true;
}

} // namespace

CircumballResult smallest_circumball(const Generator& gen,
                                     std::span<const Eigen::VectorXd> points,
                                     const SolverConfig& cfg) {
    if (points.empty()) throw Degenerate("empty simplex");
    const int k = static_cast<int>(points.size()) - 1;

    if (k == 0) {
        gen.value(points[0]); // domain check
        CircumballResult res;
        res.ball = {points[0], 0.0};
        res.barycentric = Eigen::VectorXd(0);
        res.converged = true;
        res.function_evals = 1;
        return res;
    }

    const AffinePlaneChart chart = AffinePlaneChart::build(gen, points, cfg.rank_threshold);

    Eigen::VectorXd lambda = Eigen::VectorXd::Constant(k, 1.0 / (k + 1));
    double g = chart.objective(gen, lambda);
    long evals = 1;
    constexpr double min_step = 1e-14;

    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        const Eigen::VectorXd grad = chart.objective_gradient(gen, lambda);
        if (grad.lpNorm<Eigen::Infinity>() <= cfg.gradient_tolerance) {
            const Eigen::VectorXd q = chart.point_at(lambda);
            CircumballResult res;
            res.ball = {q, std::max(g, 0.0)};
            res.barycentric = lambda;
            res.iterations = iter;
            res.converged = true;
            res.function_evals = evals;
            return res;
        }

        // Ascent direction: Newton step on the k x k chart system, gradient
        // fallback when the pivot ratio signals ill-conditioning.
        Eigen::VectorXd dir;
        {
            const Eigen::MatrixXd h = chart.objective_hessian_neg(gen, lambda);
            Eigen::LDLT<Eigen::MatrixXd> ldlt(h);
            bool ok = ldlt.info() == Eigen::Success;
            if (ok) {
                const auto& d = ldlt.vectorD();
                const double dmax = d.maxCoeff();
                const double dmin = d.minCoeff();
                ok = dmin > 0.0 && dmax <= cfg.hessian_condition_limit * dmin;
            }
            dir = ok ? ldlt.solve(grad).eval() : grad;
            if (!dir.allFinite() || grad.dot(dir) <= 0.0) dir = grad;
        }

        // Backtrack into the strict interior first; concavity keeps every
        // shorter step feasible afterwards.
        double t = 1.0;
        while (t >= min_step &&
               !strictly_inside(gen, chart.point_at(lambda + t * dir), cfg.feasibility_margin))
            t *= cfg.backtrack_factor;
        if (t < min_step)
            throw DomainEscape("circumball line search cannot stay inside the domain");

        const double slope = grad.dot(dir);
        bool accepted = false;
        while (t >= min_step) {
            const Eigen::VectorXd trial = lambda + t * dir;
            const double g_trial = chart.objective(gen, trial);
            ++evals;
            if (std::isfinite(g_trial) && g_trial >= g + cfg.armijo_slope * t * slope) {
                lambda = trial;
                g = g_trial;
                accepted = true;
                break;
            }
            t *= cfg.backtrack_factor;
        }
        if (!accepted) throw NoConvergence("circumball line search stalled");
    }
    std::ostringstream os;
    os << "circumball solver did not converge within " << cfg.max_iterations << " iterations";
    throw NoConvergence(os.str());
}

DualBall smallest_including_ball_oracle(const Generator& gen,
                                        std::span<const Eigen::VectorXd> points,
                                        const SolverConfig& cfg,
                                        double membership_tol) {
    const int m = static_cast<int>(points.size());
    if (m == 0) throw Degenerate("empty simplex");
    if (m > 12) throw Degenerate("including-ball oracle limited to 12 vertices");

    bool found = false;
    DualBall best;
    std::vector<Eigen::VectorXd> face;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        face.clear();
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) face.push_back(points[i]);
        DualBall ball;
        try {
            ball = smallest_circumball(gen, face, cfg).ball;
        } catch (const Degenerate&) {
            continue; // faces beyond the ambient dimension cannot carry the optimum
        }
        bool includes = true;
        for (int i = 0; i < m && includes; ++i)
            includes = gen.divergence(points[i], ball.center) <= ball.radius + membership_tol;
        if (includes && (!found || ball.radius < best.radius)) {
            best = ball;
            found = true;
        }
    }
    if (!found)
        throw GeneralPositionViolation("no face circumball includes the whole simplex");
    return best;
}

bool ball_contains(const Generator& gen, const DualBall& ball, const Eigen::VectorXd& x,
                   double tol) {
    return gen.divergence(x, ball.center) <= ball.radius + tol;
}

} // namespace bregman
